"""Cell-set geometry: Rothe diagrams, Young shapes, hooks, and components.

Cells are 1-based (row, col) pairs in matrix convention, row 1 at the top.
A Diagram keeps its ambient grid size n explicitly, so empty rows and
columns stay meaningful when the diagram came from a permutation.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidInputError
from .perms import Permutation

Cell = tuple[int, int]


@dataclass(frozen=True)
class Diagram:
    """A finite set of grid cells inside an n-by-n ambient grid."""

    cells: frozenset
    n: int

    def __post_init__(self):
        cells = frozenset((int(r), int(c)) for r, c in self.cells)
        object.__setattr__(self, "cells", cells)
        if self.n < 0:
            raise InvalidInputError("ambient size must be nonnegative")
        for r, c in cells:
            if not (1 <= r <= self.n and 1 <= c <= self.n):
                raise InvalidInputError(
                    f"cell {(r, c)} outside the {self.n}x{self.n} grid"
                )

    def __len__(self) -> int:
        return len(self.cells)

    def __contains__(self, cell) -> bool:
        return tuple(cell) in self.cells

    def sorted_cells(self) -> list[Cell]:
        return sorted(self.cells)


def is_partition(parts) -> bool:
    parts = tuple(parts)
    return all(p >= 0 for p in parts) and all(
        parts[i] >= parts[i + 1] for i in range(len(parts) - 1)
    )


def staircase(k: int) -> tuple[int, ...]:
    """The staircase partition (k, k-1, ..., 1)."""
    return tuple(range(k, 0, -1))


def young_diagram(partition, n: int | None = None) -> Diagram:
    """Left-justified diagram of a partition (trailing zeros allowed)."""
    parts = tuple(partition)
    if not is_partition(parts):
        raise InvalidInputError(f"not a partition: {parts!r}")
    cells = {(i + 1, j + 1) for i, p in enumerate(parts) for j in range(p)}
    ambient = max([len(parts)] + [p for p in parts] + [n or 0, 0])
    return Diagram(frozenset(cells), ambient)


def rothe_diagram(w: Permutation) -> Diagram:
    """Cells (i, j) with a dot strictly to the right and strictly below.

    Dots sit at (i, w_i); the cell count equals the number of inversions.
    """
    inv = w.inverse().word
    cells = {
        (i, j)
        for i in range(1, w.n + 1)
        for j in range(1, w.word[i - 1])
        if inv[j - 1] > i
    }
    return Diagram(frozenset(cells), w.n)


def is_young_diagram(D: Diagram):
    """The partition of D when it is a left-justified Young diagram, else None."""
    if not D.cells:
        return ()
    row_cells: dict[int, set[int]] = {}
    for r, c in D.cells:
        row_cells.setdefault(r, set()).add(c)
    max_row = max(row_cells)
    lengths = []
    for r in range(1, max_row + 1):
        cols = row_cells.get(r, set())
        if cols != set(range(1, len(cols) + 1)) or not cols:
            return None
        lengths.append(len(cols))
    if any(lengths[i] < lengths[i + 1] for i in range(len(lengths) - 1)):
        return None
    return tuple(lengths)


def hook(D: Diagram, cell) -> list[Cell]:
    """The hook of a cell, in reading order.

    Row cells strictly to the right come first (right to left, so the given
    cell closes the row segment), then the cells strictly below in the same
    column, top to bottom.  Cells absent from D are skipped.
    """
    cell = tuple(cell)
    if cell not in D.cells:
        raise InvalidInputError(f"cell {cell} not in the diagram")
    i, j = cell
    row = sorted((c for (r, c) in D.cells if r == i and c > j), reverse=True)
    col = sorted(r for (r, c) in D.cells if c == j and r > i)
    return [(i, c) for c in row] + [cell] + [(r, j) for r in col]


def connected_components(D: Diagram) -> list[Diagram]:
    """Edge-adjacency components, in row-major order of their minimal cell."""
    remaining = set(D.cells)
    components = []
    while remaining:
        seed = min(remaining)
        stack = [seed]
        found = {seed}
        remaining.discard(seed)
        while stack:
            r, c = stack.pop()
            for nbr in ((r - 1, c), (r + 1, c), (r, c - 1), (r, c + 1)):
                if nbr in remaining:
                    remaining.discard(nbr)
                    found.add(nbr)
                    stack.append(nbr)
        components.append(Diagram(frozenset(found), D.n))
    components.sort(key=lambda comp: min(comp.cells))
    return components


def staircase_envelope(partition) -> tuple[int, ...]:
    """Smallest staircase (m, m-1, ..., 1) containing the partition."""
    parts = tuple(p for p in partition if p > 0)
    if not is_partition(parts):
        raise InvalidInputError(f"not a partition: {partition!r}")
    if not parts:
        return ()
    m = max(p + i for i, p in enumerate(parts))
    return staircase(m)


def update_after_right_mult(D: Diagram, w: Permutation, i: int) -> Diagram:
    """Diagram of w*s_i from the diagram of w, for an ascent i.

    Adds the cell (i, w_i) and moves every cell of row i+1 that lies to the
    right of column w_i up to row i.
    """
    if not 1 <= i <= w.n - 1 or w.word[i - 1] >= w.word[i]:
        raise InvalidInputError(f"{i} is not an ascent of {w}")
    wi = w.word[i - 1]
    cells = {(i, wi)}
    for r, c in D.cells:
        if r == i + 1 and c > wi:
            cells.add((i, c))
        else:
            cells.add((r, c))
    result = Diagram(frozenset(cells), D.n)
    return result


def transpose_diagram(D: Diagram) -> Diagram:
    return Diagram(frozenset((c, r) for r, c in D.cells), D.n)


def dots_of(w: Permutation) -> frozenset:
    """Permutation-matrix dots (i, w_i), for rendering."""
    return frozenset((i, w.word[i - 1]) for i in range(1, w.n + 1))
