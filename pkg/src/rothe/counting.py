"""Closed-form tableau counts, pattern-avoider counts, and the series check.

Everything here is exact integer or rational arithmetic; series coefficients
are computed with Fraction and must reduce to nonnegative integers.
"""

from __future__ import annotations

import enum
import itertools
from fractions import Fraction
from math import comb, factorial, prod

from .errors import (
    ContractViolationError,
    InvalidInputError,
    NotApplicableError,
    ResourceCapError,
)
from .perms import (
    FORBIDDEN_PATTERNS,
    Permutation,
    direct_sum_decompose,
    find_forbidden_pattern,
    is_equality_class,
    lehmer_code,
    length,
    standardize,
)
from .tableau import hook_length_count

DEFAULT_AVOIDER_CAP = 10


class Classification(enum.Enum):
    EQUALITY = "equality"
    STRICT = "strict"


def classify(w: Permutation) -> Classification:
    """EQUALITY when w avoids 2413, 2431, 3142 and 4132, else STRICT."""
    return Classification.EQUALITY if is_equality_class(w) else Classification.STRICT


def multinomial(total: int, parts) -> int:
    parts = tuple(parts)
    if sum(parts) != total or any(p < 0 for p in parts):
        raise InvalidInputError(f"blocks {parts} do not sum to {total}")
    return factorial(total) // prod(factorial(p) for p in parts)


def srt_count_formula(w: Permutation) -> int:
    """Closed-form count of standard Rothe tableaux in the equality class.

    Decomposes w into indecomposable blocks; each block's Lehmer code is a
    partition, and the count is the multinomial over block sizes times the
    product of hook-length counts.  Trivial blocks contribute an empty
    partition and a factor of one.
    """
    witness = find_forbidden_pattern(w)
    if witness is not None:
        pattern, positions = witness
        raise NotApplicableError(
            f"contains {pattern} at positions {','.join(map(str, positions))}",
            pattern=pattern,
            positions=positions,
        )
    blocks = direct_sum_decompose(w)
    shapes = []
    for block in blocks:
        code = lehmer_code(block)
        shape = tuple(c for c in code if c > 0)
        if any(code[k] < code[k + 1] for k in range(len(code) - 1) if code[k + 1] > 0):
            raise ContractViolationError(
                f"block {block} of {w} has non-partition code {code}"
            )
        shapes.append(shape)
    weights = [sum(s) for s in shapes]
    return multinomial(length(w), weights) * prod(
        hook_length_count(s) for s in shapes
    )


def _avoids_all(word) -> bool:
    forbidden = FORBIDDEN_PATTERNS
    for combo in itertools.combinations(word, 4):
        if standardize(combo) in forbidden:
            return False
    return True


def _count_avoiders_with_first(n: int, first: int) -> int:
    rest = [v for v in range(1, n + 1) if v != first]
    return sum(
        1 for tail in itertools.permutations(rest) if _avoids_all((first,) + tail)
    )


def count_avoiders(n: int, cap: int = DEFAULT_AVOIDER_CAP, workers: int = 1) -> int:
    """Number of permutations in S_n avoiding all four forbidden patterns,
    by exhaustive scan.  Chunks by first value across a process pool when
    workers > 1; the total is order-independent either way."""
    if n < 1:
        raise InvalidInputError("n must be at least 1")
    if cap is not None and n > cap:
        raise ResourceCapError(f"n={n} exceeds the avoider-scan cap {cap}")
    if n < 4:
        return factorial(n)
    if workers > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks = pool.map(
                _count_avoiders_with_first, [n] * n, range(1, n + 1)
            )
            return sum(chunks)
    return sum(_count_avoiders_with_first(n, first) for first in range(1, n + 1))


def catalan(k: int) -> int:
    return comb(2 * k, k) // (k + 1)


def _series_mul(a, b, order):
    out = [Fraction(0)] * (order + 1)
    for i, ai in enumerate(a):
        if ai == 0 or i > order:
            continue
        for j, bj in enumerate(b):
            if i + j > order:
                break
            out[i + j] += ai * bj
    return out


def _series_div(num, den, order):
    if den[0] == 0:
        raise InvalidInputError("division by a series with zero constant term")
    out = [Fraction(0)] * (order + 1)
    for k in range(order + 1):
        acc = num[k] if k < len(num) else Fraction(0)
        for j in range(1, k + 1):
            if j < len(den):
                acc -= den[j] * out[k - j]
        out[k] = acc / den[0]
    return out


def gf_coefficients(count: int) -> tuple[int, ...]:
    """First `count` power-series coefficients of the avoider counting series.

    The square root of 1-4x expands with coefficient -2*catalan(k-1) at x^k;
    the quotient -2x / (1 - 5x + 2x^2 - (1-x)*sqrt(1-4x)) then has constant
    term 1, and its coefficients at x^1..x^count are the avoider counts.
    Numerator and denominator share a factor of x that is cancelled before
    dividing.  Every returned coefficient must reduce to a nonnegative
    integer.
    """
    if count < 1:
        raise InvalidInputError("count must be at least 1")
    order = count + 1
    root = [Fraction(1)] + [Fraction(-2 * catalan(k - 1)) for k in range(1, order + 1)]
    one_minus_x = [Fraction(1), Fraction(-1)]
    shifted = _series_mul(one_minus_x, root, order)
    poly = [Fraction(1), Fraction(-5), Fraction(2)] + [Fraction(0)] * (order - 2)
    den = [poly[k] - shifted[k] for k in range(order + 1)]
    if den[0] != 0 or den[1] == 0:
        raise ContractViolationError("denominator lost its expected x factor")
    num_reduced = [Fraction(-2)] + [Fraction(0)] * order
    den_reduced = den[1:] + [Fraction(0)]
    quotient = _series_div(num_reduced, den_reduced, count)
    coeffs = []
    for k in range(1, count + 1):
        value = quotient[k]
        if value.denominator != 1 or value < 0:
            raise ContractViolationError(
                f"series coefficient at x^{k} is not a nonnegative integer: {value}"
            )
        coeffs.append(int(value))
    return tuple(coeffs)
