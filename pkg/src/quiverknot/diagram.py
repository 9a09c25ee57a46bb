"""Oriented link diagrams built from planar diagram (PD) codes.

A PD code gives one quadruple of edge labels per crossing, read
counterclockwise starting at the incoming under-strand edge; edges are
numbered consecutively along each component, wrapping cyclically.  From
that single convention the builder recovers:

* the over-strand direction at each crossing (the over-out edge is the
  cyclic successor of the over-in edge),
* the crossing sign (+1 when the over-strand crosses left to right as
  seen along the under-strand direction),
* the faces of the underlying 4-valent plane graph, by following the
  corner permutation of the rotation system,
* which face lies to the left and to the right of every directed edge.

Terminology: an *edge* is a segment between two crossing passages (2c of
them for a c-crossing knot); an *arc* is a maximal over-path, i.e. edges
merged across over-passages (these are what quandle colorings label).

Slot layout at a crossing (a, b, c, d), under-strand drawn pointing
north: slot 0 = a = south (under-in), slot 1 = b = east, slot 2 = c =
north (under-out), slot 3 = d = west.  Corner q is the quadrant between
slots q and q+1, so corner 0 = SE, 1 = NE, 2 = NW, 3 = SW.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, replace
from typing import Optional, Sequence


class ParseError(ValueError):
    """Malformed PD text.  ``position`` is a character offset when known."""

    def __init__(self, message: str, position: Optional[int] = None):
        self.position = position
        if position is not None:
            message = f"{message} (at offset {position})"
        super().__init__(message)


class StructuralError(ValueError):
    """Well-formed text that does not describe a valid planar diagram."""


class UnsupportedDiagramError(StructuralError):
    """Valid diagram outside the supported class (e.g. a split link)."""


@dataclass(frozen=True)
class PDCode:
    """A validated PD code.

    ``components`` partitions the edge labels into link components; each
    component is a consecutive integer range stored as a sorted tuple.
    """

    crossings: tuple[tuple[int, int, int, int], ...]
    components: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class Crossing:
    """One crossing of a built diagram.

    ``corner_regions[q]`` is the region id of corner q.  The *_arc
    fields index into Diagram.arcs; the *_edge fields are PD labels.
    """

    pd: tuple[int, int, int, int]
    sign: int
    under_in_arc: int
    over_arc: int
    under_out_arc: int
    under_in_edge: int
    under_out_edge: int
    over_in_edge: int
    over_out_edge: int
    corner_regions: tuple[int, int, int, int]


@dataclass(frozen=True)
class Diagram:
    """A built diagram: arcs, signed crossings, regions and incidence.

    ``arcs[i]`` is the sorted tuple of edge labels forming arc i.
    ``edge_sides[label]`` is (left region, right region) relative to the
    edge's direction along the strand orientation.  ``region_corners``
    lists, per region, its (crossing index, corner) pairs.  Immutable
    after construction and safe to share between threads.
    """

    pd: PDCode
    arcs: tuple[tuple[int, ...], ...]
    arc_of_edge: dict
    crossings: tuple[Crossing, ...]
    n_regions: int
    r_infinity: int
    region_corners: tuple[tuple[tuple[int, int], ...], ...]
    edge_sides: dict

    @property
    def n_crossings(self) -> int:
        return len(self.crossings)

    @property
    def n_arcs(self) -> int:
        return len(self.arcs)

    @property
    def writhe(self) -> int:
        return sum(cr.sign for cr in self.crossings)

    def edges(self) -> tuple[int, ...]:
        return tuple(sorted(self.arc_of_edge))

    def with_r_infinity(self, region: int) -> "Diagram":
        """The same diagram with a different face designated unbounded."""
        if not 0 <= region < self.n_regions:
            raise StructuralError(f"no region {region} in this diagram")
        return replace(self, r_infinity=region)


_TERM_RE = re.compile(r"X\(\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\)\Z")


def parse_pd(text: str) -> PDCode:
    """Parse PD text: whitespace-separated ``X(a,b,c,d)`` terms or the
    bracket form ``[[a,b,c,d],...]``."""
    stripped = text.strip()
    if not stripped:
        raise ParseError("no crossings in PD text", position=0)
    if stripped.startswith("["):
        try:
            data = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise ParseError(f"bad bracket form: {exc.msg}", position=exc.pos) from None
        if not isinstance(data, list) or not data:
            raise ParseError("bracket form must be a non-empty list of quadruples")
        quads = []
        for i, item in enumerate(data):
            if (
                not isinstance(item, list)
                or len(item) != 4
                or not all(isinstance(v, int) for v in item)
            ):
                raise ParseError(f"crossing {i} is not a quadruple of integers")
            quads.append(tuple(item))
        return pd_from_quadruples(quads)
    quads = []
    for match in re.finditer(r"\S+", text):
        term = match.group(0)
        m = _TERM_RE.match(term)
        if not m:
            raise ParseError(f"bad crossing term {term!r}", position=match.start())
        quads.append(tuple(int(g) for g in m.groups()))
    return pd_from_quadruples(quads)


def pd_from_quadruples(quads: Sequence[tuple[int, int, int, int]]) -> PDCode:
    """Validate quadruples: labels occur exactly twice and components are
    consecutively numbered.  Components are recovered by merging the two
    labels of each strand passage (a with c, b with d)."""
    if not quads:
        raise ParseError("no crossings in PD code")
    counts: dict[int, int] = {}
    for quad in quads:
        for label in quad:
            if label < 0:
                raise StructuralError(f"negative edge label {label}")
            counts[label] = counts.get(label, 0) + 1
    bad = sorted(l for l, c in counts.items() if c != 2)
    if bad:
        raise StructuralError(
            f"edge labels must appear exactly twice; offending labels {bad}"
        )

    parent = {l: l for l in counts}

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x: int, y: int) -> None:
        parent[find(x)] = find(y)

    for a, b, c, d in quads:
        union(a, c)
        union(b, d)
    groups: dict[int, list[int]] = {}
    for label in counts:
        groups.setdefault(find(label), []).append(label)
    components = []
    for labels in groups.values():
        labels.sort()
        lo, hi = labels[0], labels[-1]
        if labels != list(range(lo, hi + 1)):
            raise StructuralError(
                f"component labels {labels} are not consecutive integers"
            )
        components.append(tuple(labels))
    components.sort()
    return PDCode(tuple(tuple(q) for q in quads), tuple(components))


def _successor_map(pd: PDCode) -> dict:
    nxt = {}
    for comp in pd.components:
        lo, hi = comp[0], comp[-1]
        for label in comp:
            nxt[label] = lo if label == hi else label + 1
    return nxt


def build_diagram(pd: PDCode, r_infinity_corner: Optional[tuple[int, int]] = None) -> Diagram:
    """Build the full diagram structure from a validated PD code.

    ``r_infinity_corner`` optionally names the unbounded face as a
    (crossing index, corner) pair; by default the face with the most
    corners is chosen.  Raises StructuralError when the rotation system
    is not planar (face count differs from crossings + 2) or the
    orientation conventions cannot be satisfied, and
    UnsupportedDiagramError for disconnected diagrams.
    """
    quads = pd.crossings
    c = len(quads)
    if c == 0:
        raise StructuralError("PD code with no crossings; use unknot_diagram()")
    nxt = _successor_map(pd)

    # Possible signs per crossing.  Consecutive numbering usually pins
    # the over direction; on a two-edge component both readings are
    # cyclically consecutive and the head/tail consistency search below
    # decides (positive preferred when both work).
    options: list[tuple[int, ...]] = []
    for i, (a, b, cc, d) in enumerate(quads):
        if nxt[a] != cc:
            raise StructuralError(
                f"crossing {i}: under-out edge {cc} is not the successor of {a}"
            )
        pos = nxt[d] == b
        neg = nxt[b] == d
        if pos and neg:
            options.append((1, -1))
        elif pos:
            options.append((1,))
        elif neg:
            options.append((-1,))
        else:
            raise StructuralError(
                f"crossing {i}: over-strand edges {b},{d} are not consecutive"
            )

    slots: dict[int, list[tuple[int, int]]] = {}
    for i, quad in enumerate(quads):
        for p, label in enumerate(quad):
            slots.setdefault(label, []).append((i, p))

    # Assign each edge one head (arrival slot) and one tail; signs with
    # more than one numbering-consistent reading are searched.
    head: dict[int, tuple[int, int]] = {}
    tail: dict[int, tuple[int, int]] = {}
    signs = [0] * c

    def placements(i: int, sign: int):
        a, b, cc, d = quads[i]
        ends = [(head, a, (i, 0)), (tail, cc, (i, 2))]
        if sign > 0:
            ends += [(head, d, (i, 3)), (tail, b, (i, 1))]
        else:
            ends += [(head, b, (i, 1)), (tail, d, (i, 3))]
        return ends

    def orient(i: int) -> bool:
        if i == c:
            return True
        for sign in options[i]:
            placed = []
            ok = True
            for store, label, slot in placements(i, sign):
                if label in store:
                    ok = False
                    break
                store[label] = slot
                placed.append((store, label))
            if ok:
                signs[i] = sign
                if orient(i + 1):
                    return True
            for store, label in placed:
                del store[label]
        return False

    if not orient(0):
        raise StructuralError(
            "no consistent strand orientation exists for this PD code"
        )
    for label in slots:
        if label not in head or label not in tail:
            raise StructuralError(f"edge {label} lacks a consistent direction")

    # Dart involution: the two slots of each label are the ends of the edge.
    mate: dict[tuple[int, int], tuple[int, int]] = {}
    for label, pair in slots.items():
        s1, s2 = pair
        mate[s1] = s2
        mate[s2] = s1

    # Connectivity of the underlying 4-valent graph, checked before the
    # Euler count so split links get the specific error.
    cparent = list(range(c))

    def cfind(x: int) -> int:
        while cparent[x] != x:
            cparent[x] = cparent[cparent[x]]
            x = cparent[x]
        return x

    for pair in slots.values():
        (i1, _), (i2, _) = pair
        cparent[cfind(i1)] = cfind(i2)
    if len({cfind(i) for i in range(c)}) != 1:
        raise UnsupportedDiagramError("disconnected (split) diagrams are not supported")

    # Faces: orbits of dart -> rotate(mate(dart)); the orbit through dart
    # (v, p) carries corner (v, p-1).
    face_of_corner: dict[tuple[int, int], int] = {}
    region_corners: list[tuple[tuple[int, int], ...]] = []
    seen_darts = set()
    for i in range(c):
        for p in range(4):
            start = (i, p)
            if start in seen_darts:
                continue
            face_id = len(region_corners)
            corners = []
            dart = start
            while True:
                seen_darts.add(dart)
                v, q = dart
                corners.append((v, (q - 1) % 4))
                mv, mq = mate[dart]
                dart = (mv, (mq + 1) % 4)
                if dart == start:
                    break
            for corner in corners:
                face_of_corner[corner] = face_id
            region_corners.append(tuple(corners))
    if len(region_corners) != c + 2:
        raise StructuralError(
            f"face tracing produced {len(region_corners)} regions, expected "
            f"{c + 2}; the PD code does not describe a planar diagram"
        )

    # Unbounded region.
    if r_infinity_corner is not None:
        ci, q = r_infinity_corner
        if not (0 <= ci < c and 0 <= q < 4):
            raise StructuralError(f"bad unbounded-face corner {r_infinity_corner}")
        r_infinity = face_of_corner[(ci, q)]
    else:
        r_infinity = max(
            range(len(region_corners)),
            key=lambda f: (len(region_corners[f]), -f),
        )

    # Side incidence per directed edge; the head-side formulas must agree.
    edge_sides: dict[int, tuple[int, int]] = {}
    for label in sorted(slots):
        tv, tp = tail[label]
        hv, hp = head[label]
        left = face_of_corner[(tv, tp)]
        right = face_of_corner[(tv, (tp - 1) % 4)]
        if left != face_of_corner[(hv, (hp - 1) % 4)] or right != face_of_corner[(hv, hp)]:
            raise StructuralError(f"edge {label}: face tracing is inconsistent")
        edge_sides[label] = (left, right)

    # Arcs: merge the over edges at every crossing.
    aparent = {l: l for l in slots}

    def afind(x: int) -> int:
        while aparent[x] != x:
            aparent[x] = aparent[aparent[x]]
            x = aparent[x]
        return x

    for a, b, cc, d in quads:
        aparent[afind(b)] = afind(d)
    arc_groups: dict[int, list[int]] = {}
    for label in slots:
        arc_groups.setdefault(afind(label), []).append(label)
    arcs = tuple(sorted(tuple(sorted(g)) for g in arc_groups.values()))
    arc_of_edge = {label: i for i, arc in enumerate(arcs) for label in arc}

    crossings = []
    for i, (a, b, cc, d) in enumerate(quads):
        over_in, over_out = (d, b) if signs[i] > 0 else (b, d)
        crossings.append(
            Crossing(
                pd=(a, b, cc, d),
                sign=signs[i],
                under_in_arc=arc_of_edge[a],
                over_arc=arc_of_edge[b],
                under_out_arc=arc_of_edge[cc],
                under_in_edge=a,
                under_out_edge=cc,
                over_in_edge=over_in,
                over_out_edge=over_out,
                corner_regions=tuple(face_of_corner[(i, q)] for q in range(4)),
            )
        )

    return Diagram(
        pd=pd,
        arcs=arcs,
        arc_of_edge=arc_of_edge,
        crossings=tuple(crossings),
        n_regions=len(region_corners),
        r_infinity=r_infinity,
        region_corners=tuple(region_corners),
        edge_sides=edge_sides,
    )


def unknot_diagram() -> Diagram:
    """The 0-crossing unknot: one closed arc, a bounded region on its
    left (region 0) and the unbounded region on its right (region 1)."""
    pd = PDCode(crossings=(), components=((1,),))
    return Diagram(
        pd=pd,
        arcs=((1,),),
        arc_of_edge={1: 0},
        crossings=(),
        n_regions=2,
        r_infinity=1,
        region_corners=((), ()),
        edge_sides={1: (0, 1)},
    )


def emit_pd(d: Diagram) -> str:
    """Serialize back to PD text; the 0-crossing unknot emits ``unknot``."""
    if not d.crossings:
        return "unknot"
    return " ".join("X({},{},{},{})".format(*cr.pd) for cr in d.crossings)


def crossing_relation(d: Diagram, k: int) -> tuple[int, int, int]:
    """Arc ids (under_in, over, under_out) at crossing k: every coloring
    satisfies c(under_in) * c(over) == c(under_out)."""
    cr = d.crossings[k]
    return (cr.under_in_arc, cr.over_arc, cr.under_out_arc)
