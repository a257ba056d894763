import itertools

import pytest
from hypothesis import given, strategies as st

from rothe.errors import InvalidInputError, ResourceCapError
from rothe.perms import (
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
    is_reduced_word,
    lehmer_code,
    length,
    multiply,
    trim_fixed_points,
)


def perms(n):
    for word in itertools.permutations(range(1, n + 1)):
        yield Permutation(word)


def test_validation_rejects_non_permutations():
    with pytest.raises(InvalidInputError):
        Permutation((1, 1, 2))
    with pytest.raises(InvalidInputError):
        Permutation(())
    with pytest.raises(InvalidInputError):
        Permutation((0, 1))


def test_text_forms():
    assert Permutation.from_text("426315").word == (4, 2, 6, 3, 1, 5)
    assert Permutation.from_text("4,2,6,3,1,5").word == (4, 2, 6, 3, 1, 5)
    big = Permutation(tuple(range(1, 12)))
    assert Permutation.from_text(big.to_text()) == big
    with pytest.raises(InvalidInputError):
        Permutation.from_text("abc")


def test_evaluate_word():
    assert evaluate_word([], 4) == Permutation.from_text("1234")
    assert evaluate_word([5, 1, 2, 4, 3, 2, 1, 4, 2], 6) == Permutation.from_text(
        "632415"
    )
    assert evaluate_word([1, 3], 4) == Permutation.from_text("2143")
    with pytest.raises(InvalidInputError):
        evaluate_word([4], 4)


def test_length():
    assert length(Permutation.from_text("1234")) == 0
    assert length(Permutation.from_text("54321")) == 10
    assert length(Permutation.from_text("426315")) == 8


def test_lehmer_code():
    assert lehmer_code(Permutation.from_text("1234")) == (0, 0, 0, 0)
    assert lehmer_code(Permutation.from_text("426315")) == (3, 1, 3, 1, 0, 0)
    assert lehmer_code(Permutation.from_text("4231")) == (3, 1, 1, 0)


def test_contains_pattern():
    p132 = Permutation.from_text("132")
    assert not contains_pattern(Permutation.from_text("1234"), p132)
    assert contains_pattern(
        Permutation.from_text("426315"), Permutation.from_text("2413")
    )
    assert not contains_pattern(Permutation.from_text("4231"), p132)


def test_is_equality_class():
    assert is_equality_class(Permutation.from_text("1234"))
    assert not is_equality_class(Permutation.from_text("2413"))
    assert is_equality_class(Permutation.from_text("312486759"))


def test_direct_sum_decompose():
    blocks = direct_sum_decompose(Permutation.from_text("312486759"))
    assert [str(b) for b in blocks] == ["312", "1", "4231", "1"]
    assert [str(b) for b in direct_sum_decompose(Permutation.from_text("123"))] == [
        "1",
        "1",
        "1",
    ]
    assert [str(b) for b in direct_sum_decompose(Permutation.from_text("2143"))] == [
        "21",
        "21",
    ]


def test_direct_sum_roundtrip_exhaustive():
    for n in range(1, 8):
        for w in perms(n):
            assert direct_sum(direct_sum_decompose(w)) == w


def test_first_ascent():
    assert first_ascent(Permutation.from_text("54321")) is None
    assert first_ascent(Permutation.from_text("426315")) == 2
    assert first_ascent(Permutation.from_text("246153")) == 1


def test_multiply():
    assert multiply(Permutation.from_text("426315"), "right", 2) == Permutation.from_text(
        "462315"
    )
    assert multiply(Permutation.from_text("654321"), "left", 1) == Permutation.from_text(
        "654312"
    )
    w = Permutation.from_text("654321")
    for a in (1, 2, 3, 2, 4, 3):  # right-to-left reading of the product chain
        w = multiply(w, "left", a)
    assert w == Permutation.from_text("632415")
    with pytest.raises(InvalidInputError):
        multiply(Permutation.from_text("123"), "right", 3)
    with pytest.raises(InvalidInputError):
        multiply(Permutation.from_text("123"), "middle", 1)


def test_reduced_words_small():
    ident = Permutation.from_text("1234")
    assert count_reduced_words(ident) == 1
    assert enumerate_reduced_words(ident) == [()]
    assert enumerate_reduced_words(Permutation.from_text("2143")) == [(1, 3), (3, 1)]
    assert count_reduced_words(Permutation.from_text("2143")) == 2


def test_reduced_word_count_hook_length_oracle():
    # Independent oracle: the staircase hook-length product 6!/(5*3*1*3*1*1).
    from math import factorial

    expected = factorial(6) // (5 * 3 * 1 * 3 * 1 * 1)
    assert expected == 16
    assert count_reduced_words(Permutation.from_text("4321")) == expected


def test_enumerate_matches_count_and_evaluates():
    cases = [w for w in perms(4)] + [w for w in perms(5) if length(w) <= 8]
    cases += [
        Permutation.from_text(t) for t in ("214365", "321654", "261345", "641235")
    ]  # some S_6 members with length <= 8
    for w in cases:
        words = enumerate_reduced_words(w)
        assert len(words) == count_reduced_words(w)
        assert sorted(words) == words  # lexicographic
        for word in words:
            assert len(word) == length(w)
            assert evaluate_word(word, w.n) == w


def test_enumerate_cap():
    with pytest.raises(ResourceCapError):
        enumerate_reduced_words(Permutation.from_text("54321"), cap=10)


def test_dominant_from_partition():
    assert dominant_from_partition((), 3) == Permutation.from_text("123")
    assert dominant_from_partition((5, 3, 1, 1), 6) == Permutation.from_text("642315")
    assert dominant_from_partition((3, 2, 1), 4) == Permutation.from_text("4321")
    with pytest.raises(InvalidInputError):
        dominant_from_partition((4,), 4)
    with pytest.raises(InvalidInputError):
        dominant_from_partition((1, 2), 4)


def test_dominant_roundtrip_exhaustive():
    p132 = Permutation.from_text("132")
    for n in range(1, 7):
        for w in perms(n):
            if contains_pattern(w, p132):
                continue
            code = tuple(c for c in lehmer_code(w) if c > 0)
            assert dominant_from_partition(code, n) == w


def test_dominant_iff_code_weakly_decreasing_exhaustive():
    # Both sides computed independently: pattern scan vs code monotonicity.
    p132 = Permutation.from_text("132")
    for n in range(1, 8):
        for w in perms(n):
            code = lehmer_code(w)
            decreasing = all(code[i] >= code[i + 1] for i in range(n - 1))
            assert decreasing == (not contains_pattern(w, p132))


def test_length_equals_code_sum_exhaustive():
    for n in range(1, 7):
        for w in perms(n):
            assert length(w) == sum(lehmer_code(w))


@given(st.integers(2, 7).flatmap(lambda n: st.permutations(range(1, n + 1))))
def test_inverse_and_padding_properties(word):
    w = Permutation(tuple(word))
    assert w.inverse().inverse() == w
    assert length(w.inverse()) == length(w)
    padded = Permutation(w.word + (w.n + 1,))
    assert trim_fixed_points(padded).word == trim_fixed_points(w).word


@given(st.integers(2, 6).flatmap(lambda n: st.permutations(range(1, n + 1))))
def test_reduced_word_roundtrip_property(word):
    w = Permutation(tuple(word))
    words = enumerate_reduced_words(w)
    assert all(is_reduced_word(r, w) for r in words)
    assert count_reduced_words(w) == len(words)
