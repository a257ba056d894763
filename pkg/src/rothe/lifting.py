"""The lifting operation and the injection into reduced words.

A lift acts at the first ascent i of w: slide outward from the vacancy at
(i, w_i) (the vacancy must surface at (1,1)), refill (1,1) with a new
minimum, then shift the row-(i+1) cells right of column w_i up one row.
Iterating lifts at first ascents turns any standard Rothe tableau into a
standard Young tableau of a dominant permutation; composing with omega and
stripping the recorded suffix lands back in the reduced words of w.
"""

from __future__ import annotations

from dataclasses import dataclass

from .diagram import Cell, rothe_diagram
from .eg import omega, zeta
from .errors import ContractViolationError, InvalidInputError
from .jdt import slide
from .perms import (
    Permutation,
    first_ascent,
    lehmer_code,
    multiply,
    pad_to,
)
from .tableau import Tableau


@dataclass(frozen=True)
class LiftStep:
    ascent: int
    added_cell: Cell
    path: tuple[Cell, ...]
    result: Permutation


@dataclass(frozen=True)
class LiftTrace:
    steps: tuple[LiftStep, ...]
    target: Permutation

    @property
    def suffix(self) -> tuple[int, ...]:
        """Generator indices in application order."""
        return tuple(step.ascent for step in self.steps)


def lift_once(w: Permutation, T: Tableau) -> tuple[Permutation, Tableau, LiftStep]:
    """One lift of a standard Rothe tableau of w at the first ascent."""
    i = first_ascent(w)
    if i is None:
        raise InvalidInputError(f"{w} has no ascent")
    wi = w.word[i - 1]
    start = (i, wi)
    labels = dict(T.labels)
    if start in labels:
        raise ContractViolationError(
            f"cell {start} is occupied; the filling does not match {w}"
        )
    path = slide(labels, start, inward=False)
    if path[-1] != (1, 1):
        raise ContractViolationError(
            f"lift slide ended at {path[-1]}, expected (1, 1)"
        )
    labels[(1, 1)] = 0
    moved = {}
    for (r, c), v in labels.items():
        cell = (i, c) if r == i + 1 and c > wi else (r, c)
        moved[cell] = v + 1
    result = multiply(w, "right", i)
    lifted = Tableau.from_labels(max(T.n, w.n), moved)
    if lifted.shape.cells != rothe_diagram(result).cells:
        raise ContractViolationError(
            f"lift of {w} did not produce the diagram of {result}"
        )
    step = LiftStep(ascent=i, added_cell=start, path=path, result=result)
    return result, lifted, step


def _weakly_decreasing(seq) -> bool:
    return all(seq[k] >= seq[k + 1] for k in range(len(seq) - 1))


def lift_full(w: Permutation, T: Tableau) -> tuple[LiftTrace, Tableau]:
    """Lift repeatedly until the Lehmer code is weakly decreasing.

    A weakly decreasing code is exactly dominance (132-avoidance), and each
    lift raises the length by one, so the loop is bounded.
    """
    steps: list[LiftStep] = []
    current_w, current_T = w, T
    bound = w.n * (w.n - 1) // 2
    while not _weakly_decreasing(lehmer_code(current_w)):
        current_w, current_T, step = lift_once(current_w, current_T)
        steps.append(step)
        if len(steps) > bound:
            raise ContractViolationError("lifting failed to terminate")
    return LiftTrace(tuple(steps), current_w), current_T


def inject_to_reduced_word(w: Permutation, T: Tableau) -> tuple[int, ...]:
    """The injection SRT(w) -> R(w): lift, read the word, strip the suffix.

    The word of the lifted tableau must end with the recorded lift suffix;
    a mismatch is a contract violation, not a recoverable condition.
    """
    trace, lifted = lift_full(w, T)
    word, target = omega(lifted)
    if target.n > w.n or pad_to(target, w.n) != trace.target:
        raise ContractViolationError(
            f"lifted word evaluates to {target}, expected {trace.target}"
        )
    return zeta(word, trace.suffix, w)
