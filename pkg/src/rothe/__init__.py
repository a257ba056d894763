"""Rothe diagrams, standard and balanced Rothe tableaux, jeu de taquin,
promotion reading words, the lifting injection, and exact counting, with an
exhaustive verification CLI."""

__version__ = "0.1.0"

from .diagram import (
    Diagram,
    connected_components,
    hook,
    is_young_diagram,
    rothe_diagram,
    staircase,
    staircase_envelope,
    transpose_diagram,
    update_after_right_mult,
    young_diagram,
)
from .eg import gamma, gamma_star, omega, pack_plus, zeta
from .errors import (
    ContractViolationError,
    InvalidInputError,
    NotApplicableError,
    ResourceCapError,
    RotheError,
)
from .jdt import dual_promotion, inward_slide, outward_slide, promotion
from .lifting import LiftStep, LiftTrace, inject_to_reduced_word, lift_full, lift_once
from .counting import (
    Classification,
    classify,
    count_avoiders,
    gf_coefficients,
    srt_count_formula,
)
from .perms import (
    Permutation,
    contains_pattern,
    count_reduced_words,
    direct_sum,
    direct_sum_decompose,
    dominant_from_partition,
    enumerate_reduced_words,
    evaluate_word,
    first_ascent,
    is_equality_class,
    lehmer_code,
    length,
    multiply,
)
from .tableau import (
    Tableau,
    count_brt,
    count_srt,
    enumerate_brt,
    enumerate_srt,
    hook_length_count,
    is_balanced,
    is_standard,
    standard_young_tableaux,
    tableau_from_wire,
    tableau_to_wire,
    transpose_tableau,
)

__all__ = [name for name in dir() if not name.startswith("_")]
