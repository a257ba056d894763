"""Packing and the word maps between tableaux and reduced words.

gamma reads a staircase tableau into a reduced word of the longest element
by iterated promotion; gamma_star does the same with dual promotion and is
its letter-reverse.  omega packs a Young tableau into a staircase, applies
gamma, and keeps the tail of the word: that tail is a reduced word for the
permutation whose Rothe diagram is the tableau's shape.  zeta strips a known
suffix from a reduced word.
"""

from __future__ import annotations

from .diagram import Cell, Diagram, is_young_diagram, staircase, staircase_envelope
from .errors import ContractViolationError, InvalidInputError
from .jdt import dual_promotion, promotion
from .perms import Permutation, evaluate_word, length, multiply
from .tableau import Tableau


def pack_plus(T: Tableau) -> tuple[Tableau, Diagram]:
    """Embed a Young tableau into the smallest containing staircase.

    The skew cells are filled with the next integers in row-major order.
    Returns the packed tableau and the set of added cells.
    """
    shape = is_young_diagram(T.shape)
    if shape is None:
        raise InvalidInputError("packing requires a Young-diagram shape")
    envelope = staircase_envelope(shape)
    ambient = max([T.n] + [envelope[0] if envelope else 0, len(envelope)])
    labels = dict(T.labels)
    added = []
    next_label = T.size + 1
    for i, row_len in enumerate(envelope, start=1):
        have = shape[i - 1] if i <= len(shape) else 0
        for j in range(have + 1, row_len + 1):
            labels[(i, j)] = next_label
            added.append((i, j))
            next_label += 1
    return Tableau.from_labels(ambient, labels), Diagram(frozenset(added), ambient)


def _require_staircase(T: Tableau) -> int:
    shape = is_young_diagram(T.shape)
    if shape is None or shape != staircase(len(shape)):
        raise InvalidInputError("expected a staircase-shaped standard tableau")
    return len(shape)


def gamma_with_cells(T: Tableau) -> tuple[tuple[int, ...], tuple[Cell, ...]]:
    """Promotion reading word of a staircase tableau, plus the deleted cells.

    Letter k is the column of the cell holding the maximum at step k; the
    deleted-cell sequence is kept for tracing and golden tests.
    """
    _require_staircase(T)
    word = []
    cells = []
    current = T
    for _ in range(T.size):
        current, deleted = promotion(current)
        word.append(deleted[1])
        cells.append(deleted)
    return tuple(word), tuple(cells)


def gamma(T: Tableau) -> tuple[int, ...]:
    return gamma_with_cells(T)[0]


def gamma_star_with_cells(T: Tableau) -> tuple[tuple[int, ...], tuple[Cell, ...]]:
    """Dual-promotion reading word: letter k is the row where the k-th inward
    slide path ends."""
    _require_staircase(T)
    word = []
    cells = []
    current = T
    for _ in range(T.size):
        current, last = dual_promotion(current)
        word.append(last[0])
        cells.append(last)
    return tuple(word), tuple(cells)


def gamma_star(T: Tableau) -> tuple[int, ...]:
    return gamma_star_with_cells(T)[0]


def omega(T: Tableau) -> tuple[tuple[int, ...], Permutation]:
    """Reduced word for the permutation whose Rothe diagram matches T's shape.

    The ambient symmetric group is fixed by the packed staircase: a packing
    with m columns lives in S_{m+1}, and the returned permutation keeps any
    trailing fixed points of that ambient size.
    """
    if is_young_diagram(T.shape) is None:
        raise InvalidInputError("expected a Young-diagram shape")
    packed, _ = pack_plus(T)
    word = gamma(packed)
    tail = word[len(word) - T.size :]
    prefix = word[: len(word) - T.size]
    rows = packed.size and max(r for r, _, _ in packed.cells)
    ambient = rows + 1
    w = Permutation(tuple(range(ambient, 0, -1)))
    for a in prefix:
        w = multiply(w, "left", a)
    return tail, w


def zeta(word, suffix, w: Permutation) -> tuple[int, ...]:
    """Strip a trailing generator block from a reduced word.

    The prefix must itself be a reduced word for w; anything else means the
    caller broke the contract.
    """
    word = tuple(word)
    suffix = tuple(suffix)
    if suffix and word[-len(suffix) :] != suffix:
        raise ContractViolationError(
            f"word {word} does not end with suffix {suffix}"
        )
    prefix = word[: len(word) - len(suffix)]
    if any(not 1 <= a <= w.n - 1 for a in prefix):
        raise ContractViolationError(
            f"stripped word {prefix} does not evaluate in S_{w.n}"
        )
    if len(prefix) != length(w) or evaluate_word(prefix, w.n) != w:
        raise ContractViolationError(
            f"stripped word {prefix} is not a reduced word for {w}"
        )
    return prefix
