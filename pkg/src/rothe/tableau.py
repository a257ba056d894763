"""Fillings of diagrams: standardness, balancedness, enumeration, counting.

A tableau is a labelling of the cells of a diagram.  Standard and balanced
fillings use the labels 1..N bijectively; jeu de taquin intermediates may
briefly hold 0 or N+1, so the container itself only requires distinct cells.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from functools import cached_property
from math import factorial, prod

from .diagram import Diagram, hook, is_partition, rothe_diagram, young_diagram
from .errors import InvalidInputError, ResourceCapError
from .perms import Permutation

DEFAULT_ENUM_CAP = 1_000_000
DEFAULT_BRT_CAP = 10


@dataclass(frozen=True)
class Tableau:
    """An integer labelling of grid cells, stored as sorted (row, col, label)."""

    n: int
    cells: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        triples = tuple(sorted((int(r), int(c), int(v)) for r, c, v in self.cells))
        object.__setattr__(self, "cells", triples)
        seen = set()
        for r, c, _ in triples:
            if (r, c) in seen:
                raise InvalidInputError(f"duplicate cell {(r, c)}")
            seen.add((r, c))
        ambient = max([self.n] + [max(r, c) for r, c, _ in triples] + [0])
        object.__setattr__(self, "n", ambient)

    @classmethod
    def from_labels(cls, n: int, labels) -> "Tableau":
        return cls(n, tuple((r, c, v) for (r, c), v in labels.items()))

    @classmethod
    def from_rows(cls, rows, n: int | None = None) -> "Tableau":
        """Build from row lists; None entries leave a gap in the row."""
        triples = []
        for r, row in enumerate(rows, start=1):
            for c, value in enumerate(row, start=1):
                if value is not None:
                    triples.append((r, c, value))
        ambient = n if n is not None else 0
        return cls(ambient, tuple(triples))

    @cached_property
    def labels(self) -> dict:
        return {(r, c): v for r, c, v in self.cells}

    @property
    def shape(self) -> Diagram:
        return Diagram(frozenset((r, c) for r, c, _ in self.cells), self.n)

    @property
    def size(self) -> int:
        return len(self.cells)

    def transpose(self) -> "Tableau":
        return Tableau(self.n, tuple((c, r, v) for r, c, v in self.cells))


def transpose_tableau(T: Tableau) -> Tableau:
    return T.transpose()


def _require_standard_labels(T: Tableau) -> None:
    values = sorted(v for _, _, v in T.cells)
    if values != list(range(1, T.size + 1)):
        raise InvalidInputError(
            f"labels must be a bijection onto 1..{T.size}, got {values}"
        )


def is_standard(T: Tableau) -> bool:
    """True iff labels increase along every row and every column of the shape.

    Comparisons skip absent cells, so a gapped row only constrains the cells
    that are actually present.
    """
    _require_standard_labels(T)
    rows: dict[int, list[tuple[int, int]]] = {}
    cols: dict[int, list[tuple[int, int]]] = {}
    for r, c, v in T.cells:
        rows.setdefault(r, []).append((c, v))
        cols.setdefault(c, []).append((r, v))
    for line in itertools.chain(rows.values(), cols.values()):
        line.sort()
        if any(line[i][1] > line[i + 1][1] for i in range(len(line) - 1)):
            return False
    return True


def is_balanced(T: Tableau) -> bool:
    """True iff every label is the (a+1)-th smallest in its hook, where a is
    the number of hook cells strictly to its right.

    Equivalent to the re-sorting description of balancedness: sorting the
    hook labels increasingly along the hook reading order fixes the corner.
    """
    _require_standard_labels(T)
    labels = T.labels
    shape = T.shape
    for cell in labels:
        members = hook(shape, cell)
        arm = members.index(cell)
        value = labels[cell]
        smaller = sum(1 for m in members if labels[m] < value)
        if smaller != arm:
            return False
    return True


# ---------------------------------------------------------------------------
# Standard fillings: enumeration and counting
# ---------------------------------------------------------------------------


def _immediate_predecessors(D: Diagram) -> dict:
    """Nearest present cell to the left and above, per cell."""
    rows: dict[int, list[int]] = {}
    cols: dict[int, list[int]] = {}
    for r, c in D.cells:
        rows.setdefault(r, []).append(c)
        cols.setdefault(c, []).append(r)
    for line in rows.values():
        line.sort()
    for line in cols.values():
        line.sort()
    preds = {}
    for r, c in D.cells:
        ps = []
        row = rows[r]
        k = row.index(c)
        if k > 0:
            ps.append((r, row[k - 1]))
        col = cols[c]
        k = col.index(r)
        if k > 0:
            ps.append((col[k - 1], c))
        preds[(r, c)] = ps
    return preds


def enumerate_standard(D: Diagram, cap: int = DEFAULT_ENUM_CAP) -> list[Tableau]:
    """All standard fillings of D, in deterministic row-major backtracking order.

    Labels are assigned in increasing order; a cell may receive the next
    label once its left and upper neighbours in the diagram are labelled.
    """
    cells = D.sorted_cells()
    preds = _immediate_predecessors(D)
    results: list[Tableau] = []
    assignment: dict = {}

    def backtrack(next_label: int):
        if next_label > len(cells):
            if cap is not None and len(results) >= cap:
                raise ResourceCapError(
                    f"more than {cap} standard fillings; raise the cap to enumerate"
                )
            results.append(Tableau.from_labels(D.n, dict(assignment)))
            return
        for cell in cells:
            if cell not in assignment and all(
                p in assignment for p in preds[cell]
            ):
                assignment[cell] = next_label
                backtrack(next_label + 1)
                del assignment[cell]

    backtrack(1)
    return results


def count_standard(D: Diagram) -> int:
    """Number of standard fillings of D, by dynamic programming over the
    lattice of order ideals of the cell poset (bitmask states)."""
    cells = D.sorted_cells()
    k = len(cells)
    if k == 0:
        return 1
    index = {cell: i for i, cell in enumerate(cells)}
    preds = _immediate_predecessors(D)
    pred_masks = [0] * k
    for cell, ps in preds.items():
        mask = 0
        for p in ps:
            mask |= 1 << index[p]
        pred_masks[index[cell]] = mask
    counts = {0: 1}
    for _ in range(k):
        nxt: dict[int, int] = {}
        for mask, cnt in counts.items():
            for i in range(k):
                bit = 1 << i
                if mask & bit:
                    continue
                if mask & pred_masks[i] == pred_masks[i]:
                    nm = mask | bit
                    nxt[nm] = nxt.get(nm, 0) + cnt
        counts = nxt
    return counts[(1 << k) - 1]


def enumerate_srt(w: Permutation, cap: int = DEFAULT_ENUM_CAP) -> list[Tableau]:
    """All standard Rothe tableaux of w."""
    return enumerate_standard(rothe_diagram(w), cap=cap)


def count_srt(w: Permutation) -> int:
    return count_standard(rothe_diagram(w))


def standard_young_tableaux(partition, cap: int = DEFAULT_ENUM_CAP) -> list[Tableau]:
    """All standard Young tableaux of a partition shape."""
    return enumerate_standard(young_diagram(partition), cap=cap)


# ---------------------------------------------------------------------------
# Balanced fillings
# ---------------------------------------------------------------------------


def _balance_tables(D: Diagram):
    """Per-cell hook member indices and arm lengths, plus a check order that
    tries large hooks first (they reject random fillings fastest)."""
    cells = D.sorted_cells()
    index = {cell: i for i, cell in enumerate(cells)}
    members = []
    arms = []
    for cell in cells:
        hk = hook(D, cell)
        members.append(tuple(index[m] for m in hk))
        arms.append(hk.index(cell))
    order = sorted(range(len(cells)), key=lambda i: -len(members[i]))
    return cells, members, arms, order


def _iter_balanced_fillings(w: Permutation, cap_length: int):
    from .perms import length as perm_length

    ell = perm_length(w)
    if cap_length is not None and ell > cap_length:
        raise ResourceCapError(
            f"length {ell} exceeds the balanced-filling cap {cap_length}"
        )
    D = rothe_diagram(w)
    cells, members, arms, order = _balance_tables(D)
    k = len(cells)
    for filling in itertools.permutations(range(1, k + 1)):
        for i in order:
            value = filling[i]
            smaller = 0
            for m in members[i]:
                if filling[m] < value:
                    smaller += 1
            if smaller != arms[i]:
                break
        else:
            yield cells, filling


def enumerate_brt(w: Permutation, cap_length: int = DEFAULT_BRT_CAP) -> list[Tableau]:
    """All balanced Rothe tableaux of w, by brute force over fillings.

    Balance is a global hook condition with no sound partial pruning, so the
    search simply tests each bijective filling; the length cap keeps this at
    desk scale.
    """
    results = []
    for cells, filling in _iter_balanced_fillings(w, cap_length):
        labels = dict(zip(cells, filling))
        results.append(Tableau.from_labels(w.n, labels))
    return results


def count_brt(w: Permutation, cap_length: int = DEFAULT_BRT_CAP) -> int:
    return sum(1 for _ in _iter_balanced_fillings(w, cap_length))


def hook_length_count(partition) -> int:
    """Number of standard Young tableaux of a partition shape."""
    parts = tuple(p for p in partition if p > 0)
    if not is_partition(parts):
        raise InvalidInputError(f"not a partition: {partition!r}")
    total = sum(parts)
    hooks = []
    for i, p in enumerate(parts):
        for j in range(1, p + 1):
            arm = p - j
            leg = sum(1 for q in parts[i + 1 :] if q >= j)
            hooks.append(arm + leg + 1)
    return factorial(total) // prod(hooks)


# ---------------------------------------------------------------------------
# Wire format
# ---------------------------------------------------------------------------


def tableau_to_wire(T: Tableau, perm: Permutation | None = None) -> str:
    """Canonical single-line JSON document: fields n, cells, optional perm."""
    doc = {"n": T.n, "cells": [[r, c, v] for r, c, v in T.cells]}
    if perm is not None:
        doc["perm"] = list(perm.word)
    return json.dumps(doc, sort_keys=True)


def tableau_from_wire(text: str):
    """Parse the wire format; returns (tableau, permutation-or-None)."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidInputError(f"bad tableau document: {exc}") from None
    if not isinstance(doc, dict) or "cells" not in doc:
        raise InvalidInputError("tableau document must be an object with 'cells'")
    try:
        n = int(doc.get("n", 0))
        triples = tuple((int(r), int(c), int(v)) for r, c, v in doc["cells"])
    except (TypeError, ValueError) as exc:
        raise InvalidInputError(f"bad tableau document: {exc}") from None
    perm = None
    if doc.get("perm") is not None:
        perm = Permutation(tuple(int(v) for v in doc["perm"]))
    return Tableau(n, triples), perm
