"""Permutations of {1..n}, reduced words, Lehmer codes, and pattern tests.

One-line notation throughout: the permutation sending i to w_i is stored as
the tuple (w_1, ..., w_n).  The generator s_i is the adjacent transposition
of i and i+1.  A word [a_1, ..., a_k] is evaluated from the identity by
successive right multiplications, so s_i acts on positions; left
multiplication by s_i acts on values instead.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .errors import InvalidInputError, ResourceCapError

# Patterns whose absence characterises the tableau-count equality class.
FORBIDDEN_PATTERNS = ((2, 4, 1, 3), (2, 4, 3, 1), (3, 1, 4, 2), (4, 1, 3, 2))

DEFAULT_WORD_CAP = 1_000_000


@dataclass(frozen=True)
class Permutation:
    """A permutation of {1..n} in one-line notation.

    >>> Permutation.from_text("426315").word
    (4, 2, 6, 3, 1, 5)
    >>> str(Permutation((2, 1, 4, 3)))
    '2143'
    """

    word: tuple[int, ...]

    def __post_init__(self):
        word = tuple(self.word)
        object.__setattr__(self, "word", word)
        n = len(word)
        if n < 1 or sorted(word) != list(range(1, n + 1)):
            raise InvalidInputError(f"not a permutation of 1..{n}: {word!r}")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_text(cls, text: str) -> "Permutation":
        """Parse "426315" (one digit per value, n <= 9) or "4,2,6,3,1,5"."""
        text = text.strip()
        if not text:
            raise InvalidInputError("empty permutation text")
        if "," in text:
            parts = [p.strip() for p in text.split(",")]
        else:
            parts = list(text)
        try:
            values = tuple(int(p) for p in parts)
        except ValueError:
            raise InvalidInputError(f"cannot parse permutation from {text!r}") from None
        return cls(values)

    @property
    def n(self) -> int:
        return len(self.word)

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for pos, value in enumerate(self.word, start=1):
            inv[value - 1] = pos
        return Permutation(tuple(inv))

    def to_text(self) -> str:
        if self.n <= 9:
            return "".join(str(v) for v in self.word)
        return ",".join(str(v) for v in self.word)

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"Permutation({self.to_text()!r})"


def evaluate_word(letters, n: int) -> Permutation:
    """Evaluate s_{a_1}...s_{a_k} in S_n by right multiplications.

    >>> evaluate_word([1, 3], 4).to_text()
    '2143'
    >>> evaluate_word([], 4).to_text()
    '1234'
    """
    word = list(range(1, n + 1))
    for a in letters:
        if not 1 <= a <= n - 1:
            raise InvalidInputError(f"generator index {a} out of range 1..{n - 1}")
        word[a - 1], word[a] = word[a], word[a - 1]
    return Permutation(tuple(word))


def length(w: Permutation) -> int:
    """Number of inversions of w."""
    word = w.word
    return sum(
        1 for i, j in itertools.combinations(range(w.n), 2) if word[i] > word[j]
    )


def lehmer_code(w: Permutation) -> tuple[int, ...]:
    """c_i = #{j > i : w_j < w_i}; the row lengths of the Rothe diagram."""
    word = w.word
    return tuple(
        sum(1 for j in range(i + 1, w.n) if word[j] < word[i]) for i in range(w.n)
    )


def permutation_from_lehmer_code(code) -> Permutation:
    """Inverse of :func:`lehmer_code` on arbitrary valid codes."""
    code = tuple(code)
    n = len(code)
    remaining = list(range(1, n + 1))
    word = []
    for i, c in enumerate(code):
        if not 0 <= c <= n - 1 - i:
            raise InvalidInputError(f"code entry {c} at position {i + 1} out of range")
        word.append(remaining.pop(c))
    return Permutation(tuple(word))


def dominant_from_partition(partition, n: int) -> Permutation:
    """The unique permutation in S_n whose Lehmer code is the given partition.

    The result is 132-avoiding and its Rothe diagram is the Young diagram of
    the partition.
    """
    parts = tuple(partition)
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)) or any(
        p < 0 for p in parts
    ):
        raise InvalidInputError(f"not a partition: {parts!r}")
    if len(parts) > n or any(parts[i] > n - 1 - i for i in range(len(parts))):
        raise InvalidInputError(f"partition {parts!r} does not fit in S_{n}")
    code = parts + (0,) * (n - len(parts))
    return permutation_from_lehmer_code(code)


def standardize(values) -> tuple[int, ...]:
    """Relative-order pattern of a sequence of distinct values."""
    order = sorted(values)
    return tuple(order.index(v) + 1 for v in values)


def contains_pattern(w: Permutation, p: Permutation) -> bool:
    """True iff some subsequence of w is order-isomorphic to p."""
    if p.n > w.n:
        return False
    target = p.word
    for combo in itertools.combinations(w.word, p.n):
        if standardize(combo) == target:
            return True
    return False


def find_forbidden_pattern(w: Permutation):
    """First forbidden-pattern occurrence, as (pattern, 1-based positions).

    Scans 4-element position sets in lexicographic order and returns None
    when w avoids all four patterns.
    """
    if w.n < 4:
        return None
    word = w.word
    forbidden = set(FORBIDDEN_PATTERNS)
    for positions in itertools.combinations(range(w.n), 4):
        pattern = standardize(tuple(word[i] for i in positions))
        if pattern in forbidden:
            return Permutation(pattern), tuple(i + 1 for i in positions)
    return None


def is_equality_class(w: Permutation) -> bool:
    """True iff w avoids 2413, 2431, 3142 and 4132."""
    return find_forbidden_pattern(w) is None


def direct_sum(parts) -> Permutation:
    """Block concatenation u + v + ... with each block shifted past the last."""
    word = []
    offset = 0
    for p in parts:
        word.extend(v + offset for v in p.word)
        offset += p.n
    return Permutation(tuple(word))


def direct_sum_decompose(w: Permutation) -> list[Permutation]:
    """Unique decomposition of w into indecomposable blocks.

    >>> [str(p) for p in direct_sum_decompose(Permutation.from_text("312486759"))]
    ['312', '1', '4231', '1']
    """
    blocks = []
    start = 0
    prefix_max = 0
    for i, value in enumerate(w.word, start=1):
        prefix_max = max(prefix_max, value)
        if prefix_max == i:
            blocks.append(Permutation(tuple(v - start for v in w.word[start:i])))
            start = i
    return blocks


def first_ascent(w: Permutation):
    """Smallest i with w_i < w_{i+1}, or None for the longest element."""
    for i in range(w.n - 1):
        if w.word[i] < w.word[i + 1]:
            return i + 1
    return None


def multiply(w: Permutation, side: str, i: int) -> Permutation:
    """Multiply by s_i: on the right swap positions i, i+1; on the left swap
    the values i and i+1."""
    if not 1 <= i <= w.n - 1:
        raise InvalidInputError(f"generator index {i} out of range 1..{w.n - 1}")
    word = list(w.word)
    if side == "right":
        word[i - 1], word[i] = word[i], word[i - 1]
    elif side == "left":
        a, b = word.index(i), word.index(i + 1)
        word[a], word[b] = word[b], word[a]
    else:
        raise InvalidInputError(f"side must be 'left' or 'right', got {side!r}")
    return Permutation(tuple(word))


@lru_cache(maxsize=None)
def _count_words(word: tuple[int, ...]) -> int:
    # Descent recursion on the last letter of a reduced word.  The shared
    # lru_cache is safe under the GIL; callers observe a pure function.
    descents = [i for i in range(len(word) - 1) if word[i] > word[i + 1]]
    if not descents:
        return 1
    total = 0
    for i in descents:
        shorter = list(word)
        shorter[i], shorter[i + 1] = shorter[i + 1], shorter[i]
        total += _count_words(tuple(shorter))
    return total


def count_reduced_words(w: Permutation) -> int:
    """|R(w)|, via the memoized descent recursion."""
    return _count_words(w.word)


def enumerate_reduced_words(w: Permutation, cap: int = DEFAULT_WORD_CAP):
    """All reduced words of w, in lexicographic order.

    The recursion peels the first letter, which must be a left descent, so
    the words come out sorted without a final sort.
    """
    words: list[tuple[int, ...]] = []

    def descend(word, prefix):
        if all(word[i] == i + 1 for i in range(len(word))):
            if cap is not None and len(words) >= cap:
                raise ResourceCapError(
                    f"more than {cap} reduced words; raise the cap to enumerate"
                )
            words.append(prefix)
            return
        position = {value: idx for idx, value in enumerate(word)}
        for a in range(1, len(word)):
            if position[a + 1] < position[a]:
                shorter = list(word)
                shorter[position[a]], shorter[position[a + 1]] = a + 1, a
                descend(tuple(shorter), prefix + (a,))

    descend(w.word, ())
    return words


def is_reduced_word(letters, w: Permutation) -> bool:
    """True iff the word evaluates to w using exactly length(w) letters."""
    letters = tuple(letters)
    if len(letters) != length(w):
        return False
    if any(not 1 <= a <= w.n - 1 for a in letters):
        return False
    return evaluate_word(letters, w.n) == w


def pad_to(w: Permutation, n: int) -> Permutation:
    """Embed w in S_n by appending fixed points."""
    if n < w.n:
        raise InvalidInputError(f"cannot pad S_{w.n} permutation down to S_{n}")
    return Permutation(w.word + tuple(range(w.n + 1, n + 1)))


def trim_fixed_points(w: Permutation) -> Permutation:
    """Drop trailing fixed points, keeping at least one position."""
    n = w.n
    while n > 1 and w.word[n - 1] == n:
        n -= 1
    return Permutation(w.word[:n])
