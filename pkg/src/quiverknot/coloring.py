"""Quandle colorings and shadow colorings of a diagram.

An X-coloring labels every arc with a quandle element so that
``c(under_in) * c(over) == c(under_out)`` holds at each crossing.  A
shadow coloring additionally labels every region so that crossing an
edge from its right side to its left side acts by the edge's arc label:
``c(left) == c(right) * c(arc)``.

Enumeration is a depth-first search over arcs with unit propagation;
counting over dihedral quandles goes through the integer Smith normal
form of the linearized crossing relations (x + z - 2y = 0 over Z_n).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .diagram import Diagram
from .quandle import FiniteQuandle, InvalidParameterError, QuandleMap
from .snf import smith_normal_form, solution_count_mod


class ShadowConflictError(RuntimeError):
    """Region propagation reached contradictory values.

    This signals a diagram or sidedness bug (or a coloring theory in
    which region labels are not globally consistent), not bad user input.
    """


@dataclass(frozen=True)
class Coloring:
    """An arc coloring in canonical vector form, indexed by arc id."""

    values: tuple[int, ...]

    def __getitem__(self, arc: int) -> int:
        return self.values[arc]

    def is_trivial(self) -> bool:
        return len(set(self.values)) <= 1

    def to_json(self) -> list[int]:
        return list(self.values)


@dataclass(frozen=True)
class ShadowColoring:
    """An arc coloring together with region values indexed by region id."""

    arc_values: Coloring
    region_values: tuple[int, ...]

    def to_json(self) -> dict:
        return {
            "arcs": list(self.arc_values.values),
            "regions": {str(i): v for i, v in enumerate(self.region_values)},
        }


@dataclass(frozen=True)
class ColoringMatrix:
    """Linearized crossing relations over the arcs, one row per crossing,
    with the elementary divisors of the integer matrix."""

    rows: tuple[tuple[int, ...], ...]
    n_arcs: int
    elementary_divisors: tuple[int, ...]


def is_valid_coloring(d: Diagram, X: FiniteQuandle, values) -> bool:
    """Check the crossing condition directly; independent of the enumerator."""
    if len(values) != d.n_arcs:
        return False
    if any(not 0 <= v < X.order for v in values):
        return False
    for cr in d.crossings:
        if X.op[values[cr.under_in_arc]][values[cr.over_arc]] != values[cr.under_out_arc]:
            return False
    return True


def enumerate_colorings(d: Diagram, X: FiniteQuandle) -> list[Coloring]:
    """All X-colorings, sorted by value vector.

    Depth-first assignment over arcs in index order; a crossing with its
    under-in and over arcs known forces the under-out arc via ``op``, and
    with under-out and over known forces under-in via ``inv_op``.
    """
    m = d.n_arcs
    rels = [(cr.under_in_arc, cr.over_arc, cr.under_out_arc) for cr in d.crossings]
    touching: list[list[int]] = [[] for _ in range(m)]
    for idx, rel in enumerate(rels):
        for arc in set(rel):
            touching[arc].append(idx)

    values = [-1] * m
    out: list[tuple[int, ...]] = []

    def assign(arc: int, val: int, trail: list[int], queue: list[int]) -> bool:
        if values[arc] >= 0:
            return values[arc] == val
        values[arc] = val
        trail.append(arc)
        queue.extend(touching[arc])
        return True

    def propagate(queue: list[int], trail: list[int]) -> bool:
        while queue:
            i, j, k = rels[queue.pop()]
            vi, vj, vk = values[i], values[j], values[k]
            if vi >= 0 and vj >= 0:
                if not assign(k, X.op[vi][vj], trail, queue):
                    return False
            elif vk >= 0 and vj >= 0:
                if not assign(i, X.inv_op[vk][vj], trail, queue):
                    return False
            # under_in and under_out known but over unknown: nothing is
            # forced through the tables; checked once the over arc is set.
        return True

    def dfs(start: int) -> None:
        arc = start
        while arc < m and values[arc] >= 0:
            arc += 1
        if arc == m:
            out.append(tuple(values))
            return
        for v in range(X.order):
            trail: list[int] = []
            queue: list[int] = []
            assign(arc, v, trail, queue)
            if propagate(queue, trail):
                dfs(arc + 1)
            for a in trail:
                values[a] = -1

    dfs(0)
    out.sort()
    return [Coloring(v) for v in out]


def coloring_matrix(d: Diagram) -> ColoringMatrix:
    """Rows encode under_in - 2*over + under_out = 0; coincident arcs sum."""
    rows = []
    for cr in d.crossings:
        row = [0] * d.n_arcs
        row[cr.under_in_arc] += 1
        row[cr.over_arc] -= 2
        row[cr.under_out_arc] += 1
        rows.append(tuple(row))
    divisors = smith_normal_form(rows, d.n_arcs)
    return ColoringMatrix(tuple(rows), d.n_arcs, tuple(divisors))


def count_colorings_dihedral(d: Diagram, n: int) -> int:
    """|Col_{R_n}(D)| via the Smith normal form of the coloring matrix."""
    if n < 1:
        raise InvalidParameterError(f"order must be >= 1, got {n}")
    mat = coloring_matrix(d)
    return solution_count_mod(mat.elementary_divisors, mat.n_arcs, n)


def apply_endo(f: QuandleMap, c: Coloring) -> Coloring:
    """Post-compose a coloring with an endomorphism (arcwise image)."""
    return Coloring(tuple(f.image[v] for v in c.values))


def extend_shadow(
    d: Diagram, X: FiniteQuandle, c: Coloring, base: int, traversal: str = "bfs"
) -> ShadowColoring:
    """The unique shadow coloring extending c with the unbounded region
    labeled ``base``.

    Region values propagate across edges from the unbounded region using
    ``c(left) = c(right) * c(arc)``; every relation is re-verified after
    propagation, and any conflict raises ShadowConflictError.
    ``traversal`` ("bfs" or "dfs") selects the spanning tree used for
    propagation; the result must not depend on it.
    """
    if not 0 <= base < X.order:
        raise InvalidParameterError(f"base label {base} out of range")
    region_vals: list[Optional[int]] = [None] * d.n_regions
    region_vals[d.r_infinity] = base

    by_region: list[list[tuple[int, int, int]]] = [[] for _ in range(d.n_regions)]
    relations = []
    for label in sorted(d.edge_sides):
        left, right = d.edge_sides[label]
        arc = d.arc_of_edge[label]
        relations.append((left, right, arc))
        by_region[left].append((left, right, arc))
        by_region[right].append((left, right, arc))

    pending = [d.r_infinity]
    while pending:
        region = pending.pop(0 if traversal == "bfs" else -1)
        val = region_vals[region]
        for left, right, arc in by_region[region]:
            x = c.values[arc]
            if region_vals[left] is None:
                region_vals[left] = X.op[val][x]
                pending.append(left)
            elif region_vals[right] is None:
                region_vals[right] = X.inv_op[val][x]
                pending.append(right)

    if any(v is None for v in region_vals):
        raise ShadowConflictError("region adjacency graph did not cover all regions")
    for left, right, arc in relations:
        if X.op[region_vals[right]][c.values[arc]] != region_vals[left]:
            raise ShadowConflictError(
                f"inconsistent region values across an edge of arc {arc}"
            )
    return ShadowColoring(c, tuple(region_vals))
