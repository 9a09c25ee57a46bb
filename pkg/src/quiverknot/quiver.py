"""Coloring quivers, shadow cocycle quivers and their invariants.

Given a diagram D, a finite quandle X and a set S of endomorphisms, the
coloring quiver has one vertex per X-coloring and, for every vertex v
and every f in S, one edge v -> f o v (parallel edges and loops kept).
The shadow cocycle quiver weights each vertex with the cocycle weight
sum of its unique shadow extension for a fixed base label; summing
``s^weight(v) t^weight(w)`` over all edges (v, w) gives the quiver
polynomial.

Quiver isomorphism is directed-multigraph isomorphism, ignoring the
endomorphism labels on edges and optionally requiring vertex weights to
match.  It is decided by joint color refinement followed by a
backtracking search; a returned witness is always re-verified edge by
edge.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Optional, Sequence

from .cocycle import Cocycle3, weight_sum
from .coloring import Coloring, apply_endo, enumerate_colorings, extend_shadow
from .diagram import Diagram
from .quandle import FiniteQuandle, InvalidParameterError, QuandleMap, is_homomorphism


@dataclass(frozen=True)
class WeightedQuiver:
    """Directed multigraph on colorings.

    ``edges`` holds (source vertex, target vertex, index into endos).
    ``weights`` is parallel to ``vertices`` when present, with values in
    Z_weight_modulus.  Vertex order is the coloring enumeration order,
    so construction is reproducible.
    """

    vertices: tuple[Coloring, ...]
    edges: tuple[tuple[int, int, int], ...]
    endos: tuple[QuandleMap, ...]
    weights: Optional[tuple[int, ...]] = None
    weight_modulus: Optional[int] = None

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    @property
    def n_edges(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class Polynomial2:
    """A two-variable polynomial sum(coeff * s^i t^j) with exponents in
    Z_modulus and non-negative integer coefficients."""

    modulus: int
    coeffs: tuple[tuple[tuple[int, int], int], ...]

    def coefficient(self, i: int, j: int) -> int:
        return dict(self.coeffs).get((i, j), 0)

    def total(self) -> int:
        return sum(c for _, c in self.coeffs)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for (i, j), coeff in self.coeffs:
            svar = "" if i == 0 else ("s" if i == 1 else f"s^{i}")
            tvar = "" if j == 0 else ("t" if j == 1 else f"t^{j}")
            if not svar and not tvar:
                terms.append(str(coeff))
            else:
                prefix = "" if coeff == 1 else str(coeff)
                terms.append(f"{prefix}{svar}{tvar}")
        return " + ".join(terms)


def _check_endos(X: FiniteQuandle, endos: Sequence[QuandleMap]) -> tuple[QuandleMap, ...]:
    for f in endos:
        if not is_homomorphism(f, X, X):
            raise InvalidParameterError(f"{f!r} is not an endomorphism of {X!r}")
    return tuple(endos)


def coloring_quiver(
    d: Diagram, X: FiniteQuandle, endos: Sequence[QuandleMap]
) -> WeightedQuiver:
    """The coloring quiver of D over X with edge set S = endos."""
    S = _check_endos(X, endos)
    vertices = tuple(enumerate_colorings(d, X))
    index = {c.values: i for i, c in enumerate(vertices)}
    edges = []
    for vi, c in enumerate(vertices):
        for fi, f in enumerate(S):
            target = apply_endo(f, c)
            edges.append((vi, index[target.values], fi))
    return WeightedQuiver(vertices, tuple(edges), S)


def shadow_cocycle_quiver(
    d: Diagram,
    X: FiniteQuandle,
    endos: Sequence[QuandleMap],
    base: int,
    theta: Cocycle3,
) -> WeightedQuiver:
    """The coloring quiver with each vertex weighted by the cocycle
    weight sum of its unique shadow extension over ``base``.

    Vertices correspond to the shadow colorings with the given base
    label via the unique-extension bijection, so the underlying quiver
    equals the unweighted coloring quiver.
    """
    if theta.quandle_order != X.order:
        raise InvalidParameterError(
            f"cocycle order {theta.quandle_order} != quandle order {X.order}"
        )
    q = coloring_quiver(d, X, endos)
    weights = tuple(
        weight_sum(d, extend_shadow(d, X, c, base), theta) for c in q.vertices
    )
    return WeightedQuiver(q.vertices, q.edges, q.endos, weights, theta.modulus)


def _adjacency(q: WeightedQuiver):
    out_adj = [Counter() for _ in range(q.n_vertices)]
    in_adj = [Counter() for _ in range(q.n_vertices)]
    for src, dst, _ in q.edges:
        out_adj[src][dst] += 1
        in_adj[dst][src] += 1
    return out_adj, in_adj


def _joint_refine(q1: WeightedQuiver, q2: WeightedQuiver, respect_weights: bool):
    """Iterated neighborhood refinement run jointly so color ids are
    comparable across the two quivers.  Returns (colors1, colors2) or
    None when the color histograms separate the quivers."""
    n = q1.n_vertices
    out1, in1 = _adjacency(q1)
    out2, in2 = _adjacency(q2)

    if respect_weights:
        colors1 = list(q1.weights)
        colors2 = list(q2.weights)
    else:
        colors1 = [0] * n
        colors2 = [0] * n
    if Counter(colors1) != Counter(colors2):
        return None

    for _ in range(n):
        palette: dict = {}

        def recolor(colors, out_adj, in_adj):
            new = []
            for v in range(n):
                sig = (
                    colors[v],
                    tuple(sorted((colors[u], m) for u, m in out_adj[v].items())),
                    tuple(sorted((colors[u], m) for u, m in in_adj[v].items())),
                )
                new.append(palette.setdefault(sig, len(palette)))
            return new

        new1 = recolor(colors1, out1, in1)
        new2 = recolor(colors2, out2, in2)
        if Counter(new1) != Counter(new2):
            return None
        # Refinement only splits classes, so an unchanged class count
        # means the partition is stable.
        stable = len(set(new1)) == len(set(colors1))
        colors1, colors2 = new1, new2
        if stable:
            break
    return colors1, colors2, out1, in1, out2, in2


def quiver_isomorphic(
    q1: WeightedQuiver, q2: WeightedQuiver, respect_weights: bool = False
) -> tuple[bool, Optional[tuple[int, ...]]]:
    """Decide directed-multigraph isomorphism, ignoring edge labels.

    With ``respect_weights`` the vertex weights must be preserved
    exactly.  Returns (True, mapping) with mapping[v1] = v2 on success,
    (False, None) otherwise.  The witness is verified edge by edge
    before being returned.
    """
    if q1.n_vertices != q2.n_vertices or q1.n_edges != q2.n_edges:
        return (False, None)
    if respect_weights:
        if q1.weights is None or q2.weights is None:
            raise InvalidParameterError("both quivers need weights to compare them")
        if q1.weight_modulus != q2.weight_modulus:
            return (False, None)
        if Counter(q1.weights) != Counter(q2.weights):
            return (False, None)
    n = q1.n_vertices
    if n == 0:
        return (True, ())

    refined = _joint_refine(q1, q2, respect_weights)
    if refined is None:
        return (False, None)
    colors1, colors2, out1, in1, out2, in2 = refined

    by_color: dict[int, list[int]] = {}
    for w, col in enumerate(colors2):
        by_color.setdefault(col, []).append(w)

    mapping = [-1] * n
    inverse = [-1] * n

    def compatible(v: int, w: int) -> bool:
        if out1[v][v] != out2[w][w]:
            return False
        for u, mult in out1[v].items():
            img = mapping[u]
            if img >= 0 and out2[w].get(img, 0) != mult:
                return False
        for u, mult in in1[v].items():
            img = mapping[u]
            if img >= 0 and in2[w].get(img, 0) != mult:
                return False
        for u2, mult in out2[w].items():
            pre = inverse[u2]
            if pre >= 0 and out1[v].get(pre, 0) != mult:
                return False
        for u2, mult in in2[w].items():
            pre = inverse[u2]
            if pre >= 0 and in1[v].get(pre, 0) != mult:
                return False
        return True

    def candidates(v: int) -> list[int]:
        return [
            w for w in by_color[colors1[v]] if inverse[w] < 0 and compatible(v, w)
        ]

    def search() -> bool:
        best_v = -1
        best: Optional[list[int]] = None
        for v in range(n):
            if mapping[v] >= 0:
                continue
            cand = candidates(v)
            if best is None or len(cand) < len(best):
                best_v, best = v, cand
                if not cand:
                    return False
                if len(cand) == 1:
                    break
        if best is None:
            return True
        for w in best:
            mapping[best_v] = w
            inverse[w] = best_v
            if search():
                return True
            mapping[best_v] = -1
            inverse[w] = -1
        return False

    if not search():
        return (False, None)

    witness = tuple(mapping)
    if not _verify_witness(q1, q2, witness, respect_weights):
        raise AssertionError("isomorphism search returned an invalid witness")
    return (True, witness)


def _verify_witness(
    q1: WeightedQuiver, q2: WeightedQuiver, mapping: tuple[int, ...], respect_weights: bool
) -> bool:
    n = q1.n_vertices
    if sorted(mapping) != list(range(n)):
        return False
    if respect_weights:
        for v in range(n):
            if q1.weights[v] != q2.weights[mapping[v]]:
                return False
    edges1 = Counter((mapping[s], mapping[t]) for s, t, _ in q1.edges)
    edges2 = Counter((s, t) for s, t, _ in q2.edges)
    return edges1 == edges2


def cocycle_polynomial(q: WeightedQuiver) -> Polynomial2:
    """Sum of s^weight(source) t^weight(target) over the quiver's edges."""
    if q.weights is None:
        raise InvalidParameterError("quiver has no vertex weights")
    counts: Counter = Counter()
    for src, dst, _ in q.edges:
        counts[(q.weights[src], q.weights[dst])] += 1
    return Polynomial2(q.weight_modulus, tuple(sorted(counts.items())))


def to_dot(q: WeightedQuiver, collapse_parallel: bool = False) -> str:
    """Deterministic DOT text; parallel edges are emitted individually.

    ``collapse_parallel`` merges parallel edges into one line with a
    multiplicity label.  Display convenience only: isomorphism tests and
    polynomials always see the full multigraph.
    """
    if q.n_vertices == 0:
        return "digraph { }"
    lines = ["digraph {"]
    for i in range(q.n_vertices):
        if q.weights is not None:
            lines.append(f'  v{i} [label="{i} (w={q.weights[i]})"];')
        else:
            lines.append(f'  v{i} [label="{i}"];')
    if collapse_parallel:
        mult: Counter = Counter((src, dst) for src, dst, _ in q.edges)
        for (src, dst), count in sorted(mult.items()):
            label = f"x{count}" if count > 1 else ""
            attr = f' [label="{label}"]' if label else ""
            lines.append(f"  v{src} -> v{dst}{attr};")
    else:
        for src, dst, endo in q.edges:
            lines.append(f'  v{src} -> v{dst} [label="f{endo}"];')
    lines.append("}")
    return "\n".join(lines)


def quiver_to_json(q: WeightedQuiver) -> dict:
    vertices = []
    for i in range(q.n_vertices):
        entry: dict = {"id": i}
        if q.weights is not None:
            entry["weight"] = q.weights[i]
        vertices.append(entry)
    return {
        "vertices": vertices,
        "edges": [list(e) for e in q.edges],
        "endos": [list(f.image) for f in q.endos],
    }
