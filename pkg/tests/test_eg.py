import pytest

from rothe.diagram import staircase
from rothe.eg import (
    gamma,
    gamma_star,
    gamma_star_with_cells,
    gamma_with_cells,
    omega,
    pack_plus,
    zeta,
)
from rothe.errors import ContractViolationError, InvalidInputError
from rothe.perms import (
    Permutation,
    count_reduced_words,
    evaluate_word,
    is_reduced_word,
    multiply,
)
from rothe.tableau import Tableau, hook_length_count, standard_young_tableaux

STAIRCASE_T = Tableau.from_rows([[1, 3, 5, 6], [2, 4, 10], [7, 8], [9]])
PACK_T = Tableau.from_rows([[1, 2, 5, 6, 9], [3, 4], [7], [8]])


def test_pack_plus_golden():
    packed, added = pack_plus(PACK_T)
    expected = {
        (2, 3): 10,
        (2, 4): 11,
        (3, 2): 12,
        (3, 3): 13,
        (4, 2): 14,
        (5, 1): 15,
    }
    assert set(added.cells) == set(expected)
    for cell, value in expected.items():
        assert packed.labels[cell] == value
    assert packed.size == 15


def test_pack_plus_staircase_is_identity():
    T = Tableau.from_rows([[1, 3], [2]])
    packed, added = pack_plus(T)
    assert packed.labels == T.labels
    assert len(added.cells) == 0


def test_pack_plus_rejects_gapped_shapes():
    with pytest.raises(InvalidInputError):
        pack_plus(Tableau.from_rows([[1, None, 2]]))


def test_gamma_trivial():
    assert gamma(Tableau.from_rows([[1]])) == (1,)


def test_gamma_golden_word_and_cells():
    word, cells = gamma_with_cells(STAIRCASE_T)
    assert word == (3, 1, 2, 1, 4, 3, 2, 4, 1, 3)
    assert cells == (
        (2, 3), (4, 1), (3, 2), (4, 1), (1, 4),
        (2, 3), (3, 2), (1, 4), (4, 1), (2, 3),
    )
    assert evaluate_word(word, 5) == Permutation.from_text("54321")


def test_gamma_star_golden():
    word, cells = gamma_star_with_cells(STAIRCASE_T)
    assert word == (3, 1, 4, 2, 3, 4, 1, 2, 1, 3)
    assert cells == (
        (3, 2), (1, 4), (4, 1), (2, 3), (3, 2),
        (4, 1), (1, 4), (2, 3), (1, 4), (3, 2),
    )
    assert word == tuple(reversed(gamma(STAIRCASE_T)))


def test_gamma_rejects_non_staircase():
    with pytest.raises(InvalidInputError):
        gamma(PACK_T)


def test_gamma_reversal_exhaustive_small():
    for n in (3, 4):
        for T in standard_young_tableaux(staircase(n - 1)):
            assert gamma_star(T) == tuple(reversed(gamma(T)))


def test_gamma_bijection_small():
    for n in (3, 4):
        w0 = Permutation(tuple(range(n, 0, -1)))
        tabs = standard_young_tableaux(staircase(n - 1))
        words = {gamma(T) for T in tabs}
        assert len(words) == len(tabs) == hook_length_count(staircase(n - 1))
        assert len(words) == count_reduced_words(w0)
        assert all(is_reduced_word(word, w0) for word in words)


def test_gamma_packed_golden():
    packed, _ = pack_plus(PACK_T)
    assert gamma(packed) == (1, 2, 3, 2, 4, 3, 5, 1, 2, 4, 3, 2, 1, 4, 2)


def test_packed_prefix_reads_added_columns():
    # The added entries keep their columns while promotions run (rows may
    # drift), and the first deleted cells carry them off largest-first, so
    # the word prefix reads the added columns in decreasing label order.
    packed, added = pack_plus(PACK_T)
    word, cells = gamma_with_cells(packed)
    by_label = sorted(
        ((packed.labels[c], c) for c in added.cells), reverse=True
    )
    k = len(by_label)
    assert tuple(c[1] for c in cells[:k]) == tuple(c[1] for _, c in by_label)
    assert word[:k] == (1, 2, 3, 2, 4, 3)


def test_added_cells_invariant_small_shapes():
    for rows in ([[1, 2], [3]], [[1, 3], [2], [4]], [[1, 2, 3]]):
        T = Tableau.from_rows(rows)
        packed, added = pack_plus(T)
        _, cells = gamma_with_cells(packed)
        by_label = sorted(
            ((packed.labels[c], c) for c in added.cells), reverse=True
        )
        k = len(by_label)
        assert tuple(c[1] for c in cells[:k]) == tuple(c[1] for _, c in by_label)


def test_omega_trivial():
    word, w = omega(Tableau.from_rows([[1]]))
    assert word == (1,)
    assert w == Permutation.from_text("21")


def test_omega_golden():
    word, w = omega(PACK_T)
    assert word == (5, 1, 2, 4, 3, 2, 1, 4, 2)
    assert w == Permutation.from_text("632415")
    assert is_reduced_word(word, w)


def test_omega_bijection_on_dominant_classes():
    import itertools

    from rothe.diagram import is_young_diagram, rothe_diagram
    from rothe.perms import length, trim_fixed_points
    from rothe.tableau import enumerate_srt

    for n in (3, 4):
        for wword in itertools.permutations(range(1, n + 1)):
            w = Permutation(wword)
            if is_young_diagram(rothe_diagram(w)) is None:
                continue
            tabs = enumerate_srt(w)
            seen = set()
            for T in tabs:
                word, ambient = omega(T)
                assert trim_fixed_points(ambient) == trim_fixed_points(w)
                assert len(word) == length(w)
                assert evaluate_word(word, n) == w
                seen.add(word)
            assert len(seen) == len(tabs) == count_reduced_words(w)


def test_zeta():
    w = Permutation.from_text("632415")
    word = (5, 1, 2, 4, 3, 2, 1, 4, 2)
    assert zeta(word, (), w) == word
    target = multiply(multiply(w, "right", 2), "right", 4)
    assert zeta(word, (4, 2), target) == (5, 1, 2, 4, 3, 2, 1)
    with pytest.raises(ContractViolationError):
        zeta(word, (1, 1), target)
    with pytest.raises(ContractViolationError):
        zeta(word, (4, 2), w)  # prefix does not evaluate to w
