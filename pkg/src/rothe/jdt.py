"""Jeu de taquin slides and the promotion / dual-promotion operators.

Slides work on arbitrary cell sets: a neighbour is a cell actually present
in the current shape, so gapped rows behave correctly and the lifting
operation can slide inside raw Rothe diagrams.  Only the two-neighbour case
needs the size comparison; a lone neighbour always slides.
"""

from __future__ import annotations

from .diagram import Cell, is_young_diagram
from .errors import ContractViolationError, InvalidInputError
from .tableau import Tableau, _require_standard_labels


def slide(labels: dict, start, *, inward: bool) -> tuple[Cell, ...]:
    """Run one slide in place on a cell->label dict; returns the empty-cell path.

    Outward slides pull the larger of the left/above neighbours into the
    vacancy, so the vacancy travels up-left; inward slides pull the smaller
    of the right/below neighbours, and the vacancy travels down-right.
    """
    start = tuple(start)
    if start in labels:
        raise InvalidInputError(f"cell {start} is not empty")
    path = [start]
    empty = start
    while True:
        i, j = empty
        if inward:
            nbrs = ((i, j + 1), (i + 1, j))
        else:
            nbrs = ((i, j - 1), (i - 1, j))
        present = [c for c in nbrs if c in labels]
        if not present:
            break
        if len(present) == 1:
            src = present[0]
        elif inward:
            src = min(present, key=labels.__getitem__)
        else:
            src = max(present, key=labels.__getitem__)
        labels[empty] = labels.pop(src)
        empty = src
        path.append(src)
    return tuple(path)


def _check_adjacent(T: Tableau, cell) -> None:
    if tuple(cell) in T.labels:
        raise InvalidInputError(f"cell {cell} is already in the shape")
    if not T.cells:
        return
    i, j = cell
    nbrs = ((i - 1, j), (i + 1, j), (i, j - 1), (i, j + 1))
    if not any(c in T.labels for c in nbrs):
        raise InvalidInputError(f"cell {cell} is not adjacent to the shape")


def outward_slide(T: Tableau, cell) -> tuple[Tableau, tuple[Cell, ...]]:
    """Outward slide into the empty cell; returns the new filling and path."""
    _check_adjacent(T, cell)
    labels = dict(T.labels)
    path = slide(labels, cell, inward=False)
    n = max(T.n, cell[0], cell[1])
    return Tableau.from_labels(n, labels), path


def inward_slide(T: Tableau, cell) -> tuple[Tableau, tuple[Cell, ...]]:
    """Inward slide into the empty cell; returns the new filling and path."""
    _check_adjacent(T, cell)
    labels = dict(T.labels)
    path = slide(labels, cell, inward=True)
    n = max(T.n, cell[0], cell[1])
    return Tableau.from_labels(n, labels), path


def promotion(T: Tableau) -> tuple[Tableau, Cell]:
    """Delete the maximum, slide outward to vacate (1,1), refill with 0 and
    shift all labels up by one.  Returns the new tableau and the deleted cell.
    """
    if is_young_diagram(T.shape) is None:
        raise InvalidInputError("promotion requires a Young-diagram shape")
    _require_standard_labels(T)
    if T.size == 0:
        raise InvalidInputError("promotion of an empty tableau is undefined")
    labels = dict(T.labels)
    deleted = max(labels, key=labels.__getitem__)
    del labels[deleted]
    path = slide(labels, deleted, inward=False)
    if path[-1] != (1, 1):
        raise ContractViolationError(
            f"outward slide ended at {path[-1]}, expected (1, 1)"
        )
    labels[(1, 1)] = 0
    labels = {c: v + 1 for c, v in labels.items()}
    return Tableau.from_labels(T.n, labels), deleted


def dual_promotion(T: Tableau) -> tuple[Tableau, Cell]:
    """Delete the minimum, slide inward, refill the final vacancy with N+1 and
    shift all labels down by one.  Returns the new tableau and the last path
    cell (where the new maximum lands)."""
    if is_young_diagram(T.shape) is None:
        raise InvalidInputError("dual promotion requires a Young-diagram shape")
    _require_standard_labels(T)
    if T.size == 0:
        raise InvalidInputError("dual promotion of an empty tableau is undefined")
    labels = dict(T.labels)
    deleted = min(labels, key=labels.__getitem__)
    del labels[deleted]
    path = slide(labels, deleted, inward=True)
    last = path[-1]
    labels[last] = T.size + 1
    labels = {c: v - 1 for c, v in labels.items()}
    return Tableau.from_labels(T.n, labels), last
