import random

import pytest

from rothe.diagram import is_young_diagram, staircase
from rothe.errors import InvalidInputError
from rothe.jdt import dual_promotion, inward_slide, outward_slide, promotion, slide
from rothe.tableau import Tableau, is_standard, standard_young_tableaux

PROMO_IN = Tableau.from_rows([[1, 3, 4], [2, 5, 9], [6, 8, 10], [7]])
PROMO_OUT = Tableau.from_rows([[1, 2, 5], [3, 4, 6], [7, 9, 10], [8]])


def test_outward_slide_single_cell():
    T = Tableau.from_rows([[1]])
    result, path = outward_slide(T, (1, 2))
    assert result.labels == {(1, 2): 1}
    assert path == ((1, 2), (1, 1))


def test_outward_slide_golden_path():
    labels = dict(PROMO_IN.labels)
    del labels[(3, 3)]  # remove the maximum
    T = Tableau.from_labels(4, labels)
    result, path = outward_slide(T, (3, 3))
    assert path == ((3, 3), (2, 3), (2, 2), (1, 2), (1, 1))
    assert (1, 1) not in result.labels and result.labels[(3, 3)] == 9


def test_inward_slide_golden_path():
    labels = dict(PROMO_OUT.labels)
    del labels[(1, 1)]  # remove the minimum
    T = Tableau.from_labels(4, labels)
    result, path = inward_slide(T, (1, 1))
    assert path == ((1, 1), (1, 2), (2, 2), (2, 3), (3, 3))
    assert (3, 3) not in result.labels and result.labels[(1, 1)] == 2


def test_slides_are_mutually_inverse_on_golden():
    labels = dict(PROMO_IN.labels)
    del labels[(3, 3)]
    T = Tableau.from_labels(4, labels)
    out, path = outward_slide(T, (3, 3))
    back, back_path = inward_slide(out, path[-1])
    assert back.labels == T.labels
    assert back_path == tuple(reversed(path))


def test_slide_rejects_bad_start():
    T = Tableau.from_rows([[1, 2], [3]])
    with pytest.raises(InvalidInputError):
        outward_slide(T, (1, 1))  # occupied
    with pytest.raises(InvalidInputError):
        outward_slide(T, (5, 5))  # not adjacent


def test_promotion_golden():
    result, deleted = promotion(PROMO_IN)
    assert result.labels == PROMO_OUT.labels
    assert deleted == (3, 3)
    single = Tableau.from_rows([[1]])
    result, deleted = promotion(single)
    assert result.labels == {(1, 1): 1} and deleted == (1, 1)


def test_dual_promotion_golden():
    result, last = dual_promotion(PROMO_OUT)
    assert result.labels == PROMO_IN.labels
    assert last == (3, 3)
    single = Tableau.from_rows([[1]])
    result, last = dual_promotion(single)
    assert result.labels == {(1, 1): 1} and last == (1, 1)


def test_promotion_requires_young_shape():
    gapped = Tableau.from_rows([[1, None, 2]])
    with pytest.raises(InvalidInputError):
        promotion(gapped)
    with pytest.raises(InvalidInputError):
        dual_promotion(gapped)


def _partitions(n, max_part=None):
    if n == 0:
        yield ()
        return
    for p in range(min(n, max_part or n), 0, -1):
        for rest in _partitions(n - p, p):
            yield (p,) + rest


def test_promotion_dual_promotion_inverse_exhaustive():
    for total in range(1, 8):
        for shape in _partitions(total):
            for T in standard_young_tableaux(shape):
                fwd, _ = promotion(T)
                back, _ = dual_promotion(fwd)
                assert back.labels == T.labels
                bwd, _ = dual_promotion(T)
                fwd2, _ = promotion(bwd)
                assert fwd2.labels == T.labels


def test_promotion_dual_promotion_inverse_sampled_larger_shapes():
    rng = random.Random(11)
    for total in (9, 10):
        for shape in _partitions(total):
            tabs = standard_young_tableaux(shape)
            for T in rng.sample(tabs, min(5, len(tabs))):
                fwd, _ = promotion(T)
                back, _ = dual_promotion(fwd)
                assert back.labels == T.labels


@st.composite
def _random_syt(draw):
    total = draw(st.integers(1, 7))
    shapes = list(_partitions(total))
    shape = draw(st.sampled_from(shapes))
    tabs = _syt_cached(shape)
    return draw(st.sampled_from(tabs))


@lru_cache(maxsize=None)
def _syt_cached(shape):
    return tuple(standard_young_tableaux(shape))


@given(_random_syt())
def test_promotion_roundtrip_property(T):
    fwd, deleted = promotion(T)
    back, landed = dual_promotion(fwd)
    assert back.labels == T.labels
    assert landed == deleted
    assert fwd.shape.cells == T.shape.cells


def test_staircase_power_is_transpose():
    for n in (3, 4):
        power = n * (n - 1) // 2
        for T in standard_young_tableaux(staircase(n - 1)):
            cur = T
            for _ in range(power):
                cur, _ = promotion(cur)
            assert cur.labels == T.transpose().labels
            cur = T
            for _ in range(power):
                cur, _ = dual_promotion(cur)
            assert cur.labels == T.transpose().labels


def _stepwise_slide_states(T, start, inward):
    """Replicate one slide move at a time, yielding each intermediate filling."""
    labels = dict(T.labels)
    empty = start
    while True:
        i, j = empty
        nbrs = ((i, j + 1), (i + 1, j)) if inward else ((i, j - 1), (i - 1, j))
        present = [c for c in nbrs if c in labels]
        if not present:
            return
        if len(present) == 1:
            src = present[0]
        elif inward:
            src = min(present, key=labels.__getitem__)
        else:
            src = max(present, key=labels.__getitem__)
        labels[empty] = labels.pop(src)
        empty = src
        yield dict(labels)


def test_intermediate_fillings_stay_standard():
    labels = dict(PROMO_IN.labels)
    del labels[(3, 3)]
    T = Tableau.from_labels(4, labels)
    for state in _stepwise_slide_states(T, (3, 3), inward=False):
        assert is_standard(_renumber(state))
    labels = dict(PROMO_OUT.labels)
    del labels[(1, 1)]
    T = Tableau.from_labels(4, labels)
    for state in _stepwise_slide_states(T, (1, 1), inward=True):
        assert is_standard(_renumber(state))


def _renumber(labels):
    # Skew intermediates have a hole in 1..N; compress to 1..k for is_standard.
    order = sorted(labels.values())
    rank = {v: k + 1 for k, v in enumerate(order)}
    return Tableau.from_labels(0, {c: rank[v] for c, v in labels.items()})


def test_path_monotonicity_randomized():
    rng = random.Random(7)
    shapes = [shape for total in range(2, 9) for shape in _partitions(total)]
    for _ in range(200):
        shape = rng.choice(shapes)
        tabs = standard_young_tableaux(shape)
        T = rng.choice(tabs)
        fwd, _ = promotion(T)
        labels = dict(T.labels)
        deleted = max(labels, key=labels.__getitem__)
        del labels[deleted]
        path = slide(labels, deleted, inward=False)
        assert all(
            (b[0] == a[0] and b[1] == a[1] - 1) or (b[0] == a[0] - 1 and b[1] == a[1])
            for a, b in zip(path, path[1:])
        )
        labels = dict(T.labels)
        deleted = min(labels, key=labels.__getitem__)
        del labels[deleted]
        path = slide(labels, deleted, inward=True)
        assert all(
            (b[0] == a[0] and b[1] == a[1] + 1) or (b[0] == a[0] + 1 and b[1] == a[1])
            for a, b in zip(path, path[1:])
        )
    assert is_young_diagram(fwd.shape) is not None
