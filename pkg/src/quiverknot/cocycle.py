"""Quandle 3-cocycles, crossing weights and the weight-sum invariant.

A 3-cocycle on a quandle X with values in Z_m is a table theta(x, y, z)
that vanishes when x == y or y == z and satisfies the 4-variable cocycle
identity.  Each crossing of a shadow-colored diagram contributes the
weight ``sign * theta(region, under_in, over)`` where the region is the
crossing's source corner, the one both strand orientations point away
from.  Summing over all crossings gives an element of Z_m, and the
multiset of these sums over all shadow colorings is a link invariant.

2-cocycle (non-shadow) weights are deliberately not implemented: over a
prime-order dihedral quandle every 2-cocycle is a coboundary, so the
vertex weights they induce vanish identically and add nothing to the
coloring quiver.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Optional

from .coloring import ShadowColoring, enumerate_colorings, extend_shadow
from .diagram import Diagram
from .quandle import FiniteQuandle, InvalidParameterError

# Corner index of the source region (both orientations point away from
# it) and of the sink region (both point toward it), by crossing sign.
_SOURCE_CORNER = {1: 3, -1: 0}
_SINK_CORNER = {1: 1, -1: 2}


@dataclass(frozen=True)
class Cocycle3:
    """A 3-cocycle table: ``table[x][y][z]`` in Z_modulus."""

    quandle_order: int
    modulus: int
    table: tuple[tuple[tuple[int, ...], ...], ...]

    def __call__(self, x: int, y: int, z: int) -> int:
        return self.table[x][y][z]


def zero_cocycle(n: int, modulus: int) -> Cocycle3:
    zeros = tuple(tuple(tuple([0] * n) for _ in range(n)) for _ in range(n))
    return Cocycle3(n, modulus, zeros)


def _is_odd_prime(p: int) -> bool:
    if p < 3 or p % 2 == 0:
        return False
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


def mochizuki(p: int) -> Cocycle3:
    """Mochizuki's 3-cocycle on the dihedral quandle R_p, values in Z_p.

    theta(x, y, z) = (x - y) * ((2z - y)^p + y^p - 2 z^p) / (2p)  mod p.

    The bracket is divisible by p as a polynomial identity and is always
    even, so the quotient is exact for any integer representatives.
    Inputs are reduced to 0..p-1 and 2z - y is reduced mod p before
    exponentiation; powers are taken mod p^2, which leaves the quotient
    mod p unchanged.  The normalization (the 2 in the denominator) is
    pinned by the reference quiver polynomials of the figure-eight and
    cinquefoil knots in the acceptance suite; dividing by p alone yields
    the same cocycle scaled by 2, which lands the nontrivial weights in
    the opposite square class mod 5.
    """
    if not _is_odd_prime(p):
        raise InvalidParameterError(f"{p} is not an odd prime")
    p2 = p * p
    inv2 = (p + 1) // 2
    table = []
    for x in range(p):
        plane = []
        for y in range(p):
            row = []
            for z in range(p):
                w = (2 * z - y) % p
                num = (pow(w, p, p2) + pow(y, p, p2) - 2 * pow(z, p, p2)) % p2
                if num % p:
                    raise AssertionError("cocycle numerator not divisible by p")
                q = num // p
                row.append(((x - y) * q * inv2) % p)
            plane.append(tuple(row))
        table.append(tuple(plane))
    return Cocycle3(p, p, tuple(table))


def verify_cocycle(theta: Cocycle3, X: FiniteQuandle) -> Optional[tuple]:
    """Exhaustive check of the degeneracy and 3-cocycle conditions.

    Returns None when theta is a valid 3-cocycle over X, otherwise the
    first violating tuple: ("degeneracy", x, y) or ("cocycle", x, y, z, w).
    """
    if theta.quandle_order != X.order:
        raise InvalidParameterError(
            f"cocycle is over order {theta.quandle_order}, quandle has {X.order}"
        )
    n = X.order
    m = theta.modulus
    t = theta.table
    for x in range(n):
        for y in range(n):
            if t[x][x][y] % m or t[x][y][y] % m:
                return ("degeneracy", x, y)
    op = X.op
    for x in range(n):
        for y in range(n):
            for z in range(n):
                lhs_a = t[x][y][z]
                for w in range(n):
                    lhs = lhs_a + t[op[x][z]][op[y][z]][w] + t[x][z][w]
                    rhs = t[op[x][y]][z][w] + t[x][y][w] + t[op[x][w]][op[y][w]][op[z][w]]
                    if (lhs - rhs) % m:
                        return ("cocycle", x, y, z, w)
    return None


def weight_sum(
    d: Diagram, s: ShadowColoring, theta: Cocycle3, region_convention: str = "source"
) -> int:
    """The signed sum of crossing weights, reduced to 0..modulus-1.

    Each crossing contributes sign * theta(region, under_in, over).  The
    default "source" region convention is pinned by reproducing the
    reference polynomials of the acceptance suite; "sink" exists only to
    document what the opposite choice computes.
    """
    corner_of = {"source": _SOURCE_CORNER, "sink": _SINK_CORNER}[region_convention]
    total = 0
    for cr in d.crossings:
        region = cr.corner_regions[corner_of[cr.sign]]
        x = s.region_values[region]
        y = s.arc_values.values[cr.under_in_arc]
        z = s.arc_values.values[cr.over_arc]
        total += cr.sign * theta.table[x][y][z]
    return total % theta.modulus


def invariant_multiset(
    d: Diagram, X: FiniteQuandle, theta: Cocycle3, base: Optional[int] = None
) -> Counter:
    """The multiset of weight sums over shadow colorings.

    With ``base`` fixed, ranges over the shadow colorings whose unbounded
    region carries ``base`` (one per arc coloring); otherwise over all
    shadow colorings (every arc coloring with every base label).
    """
    bases = range(X.order) if base is None else [base]
    counter: Counter = Counter()
    for c in enumerate_colorings(d, X):
        for a in bases:
            s = extend_shadow(d, X, c, a)
            counter[weight_sum(d, s, theta)] += 1
    return counter


def multiset_to_json(counter: Counter) -> list[list[int]]:
    """Sorted [value, multiplicity] pairs, the serialized multiset form."""
    return [[v, counter[v]] for v in sorted(counter)]


def parse_cocycle_table_text(text: str) -> Cocycle3:
    """Parse the cocycle file format: header ``n m``, then n^2 lines of n
    integers, x-major then y, each line listing values over z."""
    tokens = text.split()
    if len(tokens) < 2:
        raise InvalidParameterError("cocycle table needs an 'n m' header")
    try:
        values = [int(tok) for tok in tokens]
    except ValueError as exc:
        raise InvalidParameterError(f"non-integer token in cocycle table: {exc}") from None
    n, m = values[0], values[1]
    if n < 1 or m < 1 or len(values) != 2 + n * n * n:
        raise InvalidParameterError(
            f"expected {n}^3 entries after the header, got {len(values) - 2}"
        )
    body = values[2:]
    table = []
    for x in range(n):
        plane = []
        for y in range(n):
            start = (x * n + y) * n
            plane.append(tuple(v % m for v in body[start : start + n]))
        table.append(tuple(plane))
    return Cocycle3(n, m, tuple(table))


def cocycle_table_text(theta: Cocycle3) -> str:
    lines = [f"{theta.quandle_order} {theta.modulus}"]
    for x in range(theta.quandle_order):
        for y in range(theta.quandle_order):
            lines.append(" ".join(str(v) for v in theta.table[x][y]))
    return "\n".join(lines) + "\n"
