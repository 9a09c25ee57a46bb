"""Finite quandles and their homomorphisms.

A quandle is a set with a binary operation ``*`` such that ``x*x == x``
(Q1), every right translation ``x -> x*y`` is a bijection (Q2), and the
operation is right self-distributive, ``(x*y)*z == (x*z)*(y*z)`` (Q3).

Elements are always the integers ``0..n-1`` and the operation is stored
as a full table, so every axiom and every claimed homomorphism can be
checked exhaustively.  The dihedral quandle of order n is Z_n with
``x*y = 2y - x``; the Alexander quandle with unit t is Z_n with
``x*y = t*x + (1-t)*y``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence


class InvalidParameterError(ValueError):
    """A constructor or operation received unusable parameters."""


class QuandleAxiomError(ValueError):
    """An operation table violates a quandle axiom.

    ``witness`` is ("Q1", x), ("Q2", y) or ("Q3", x, y, z), naming the
    first tuple at which the axiom fails.
    """

    def __init__(self, witness: tuple):
        self.witness = witness
        super().__init__(f"axiom {witness[0]} fails at {witness[1:]}")


@dataclass(frozen=True)
class FiniteQuandle:
    """Order-n quandle backed by an n x n operation table.

    ``op[x][y]`` is x*y and ``inv_op[z][y]`` is the unique x with
    x*y == z (the inverse of the Q2 column bijection).  ``kind`` tags
    the construction: ("dihedral", n), ("alexander", n, t) or ("table",).
    Instances are immutable and safe to share between threads.
    """

    order: int
    op: tuple[tuple[int, ...], ...]
    inv_op: tuple[tuple[int, ...], ...]
    kind: tuple = ("table",)

    def mul(self, x: int, y: int) -> int:
        return self.op[x][y]

    def unmul(self, z: int, y: int) -> int:
        """The unique x with x*y == z."""
        return self.inv_op[z][y]

    @property
    def is_dihedral(self) -> bool:
        return self.kind[0] == "dihedral"

    def elements(self) -> range:
        return range(self.order)

    def __repr__(self) -> str:
        return f"FiniteQuandle({'/'.join(map(str, self.kind))}, order={self.order})"


def _checked_tables(rows: Sequence[Sequence[int]]):
    """Validate Q1-Q3 for an operation table and build the inverse table."""
    n = len(rows)
    if n == 0:
        raise InvalidParameterError("empty operation table")
    op = tuple(tuple(int(v) for v in row) for row in rows)
    for x, row in enumerate(op):
        if len(row) != n:
            raise InvalidParameterError(f"row {x} has length {len(row)}, expected {n}")
        for v in row:
            if not 0 <= v < n:
                raise InvalidParameterError(f"entry {v} out of range 0..{n - 1}")
    for x in range(n):
        if op[x][x] != x:
            raise QuandleAxiomError(("Q1", x))
    inv = [[-1] * n for _ in range(n)]
    for y in range(n):
        seen = [False] * n
        for x in range(n):
            z = op[x][y]
            if seen[z]:
                raise QuandleAxiomError(("Q2", y))
            seen[z] = True
            inv[z][y] = x
    for x in range(n):
        for y in range(n):
            xy = op[x][y]
            for z in range(n):
                if op[xy][z] != op[op[x][z]][op[y][z]]:
                    raise QuandleAxiomError(("Q3", x, y, z))
    return op, tuple(tuple(r) for r in inv)


def make_dihedral(n: int) -> FiniteQuandle:
    """The dihedral quandle R_n: Z_n with x*y = 2y - x."""
    if n < 1:
        raise InvalidParameterError(f"order must be >= 1, got {n}")
    rows = [[(2 * y - x) % n for y in range(n)] for x in range(n)]
    op, inv = _checked_tables(rows)
    return FiniteQuandle(n, op, inv, kind=("dihedral", n))


def make_alexander(n: int, t: int) -> FiniteQuandle:
    """The Alexander quandle on Z_n with x*y = t*x + (1-t)*y.

    Requires gcd(t, n) == 1, otherwise right translations are not
    bijections and Q2 fails.  t = n-1 reproduces the dihedral table.
    """
    if n < 1:
        raise InvalidParameterError(f"order must be >= 1, got {n}")
    if math.gcd(t, n) != 1:
        raise InvalidParameterError(f"t={t} is not a unit mod {n}")
    t %= n
    rows = [[(t * x + (1 - t) * y) % n for y in range(n)] for x in range(n)]
    op, inv = _checked_tables(rows)
    return FiniteQuandle(n, op, inv, kind=("alexander", n, t))


def from_table(rows: Sequence[Sequence[int]]) -> FiniteQuandle:
    """Build a quandle from an explicit table, validating all three axioms."""
    op, inv = _checked_tables(rows)
    return FiniteQuandle(len(op), op, inv, kind=("table",))


def parse_table_text(text: str) -> FiniteQuandle:
    """Parse the table file format: first line n, then n rows of n integers."""
    tokens = text.split()
    if not tokens:
        raise InvalidParameterError("empty quandle table text")
    try:
        values = [int(tok) for tok in tokens]
    except ValueError as exc:
        raise InvalidParameterError(f"non-integer token in quandle table: {exc}") from None
    n = values[0]
    if n < 1 or len(values) != 1 + n * n:
        raise InvalidParameterError(
            f"expected {n}x{n} entries after the header, got {len(values) - 1}"
        )
    rows = [values[1 + i * n : 1 + (i + 1) * n] for i in range(n)]
    return from_table(rows)


def table_text(q: FiniteQuandle) -> str:
    """Serialize a quandle in the table file format."""
    lines = [str(q.order)]
    lines += [" ".join(str(v) for v in row) for row in q.op]
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class QuandleMap:
    """A map between quandles, stored as its image vector.

    ``affine_form`` is the pair (a, b) with image[x] == (a*x + b) mod n;
    it is present exactly when both source and target are dihedral of
    the same order, where every endomorphism has this shape.
    """

    source_order: int
    target_order: int
    image: tuple[int, ...]
    affine_form: Optional[tuple[int, int]] = None

    def __call__(self, x: int) -> int:
        return self.image[x]

    def is_bijection(self) -> bool:
        return len(set(self.image)) == self.source_order

    def __repr__(self) -> str:
        if self.affine_form is not None:
            a, b = self.affine_form
            return f"QuandleMap(x -> {a}x+{b} mod {self.target_order})"
        return f"QuandleMap(image={self.image})"


def is_homomorphism(f: QuandleMap, X: FiniteQuandle, Y: FiniteQuandle) -> bool:
    """Exhaustive check of f(x*y) == f(x)*f(y)."""
    if f.source_order != X.order or f.target_order != Y.order:
        return False
    img = f.image
    for x in range(X.order):
        for y in range(X.order):
            if img[X.op[x][y]] != Y.op[img[x]][img[y]]:
                return False
    return True


def _image_is_hom(img: Sequence[int], Xop, Yop) -> bool:
    n = len(img)
    for x in range(n):
        row = Xop[x]
        fx = img[x]
        for y in range(n):
            if img[row[y]] != Yop[fx][img[y]]:
                return False
    return True


def _enumerate_dihedral_endos(n: int) -> list[QuandleMap]:
    """Affine fast path for End(R_n): candidates f(x) = a*x + b.

    Every candidate is still verified against the table; the affine
    shape is a search-space reduction, not a trusted fact.
    """
    op = make_dihedral(n).op
    found: dict[tuple[int, ...], tuple[int, int]] = {}
    for a in range(n):
        for b in range(n):
            img = tuple((a * x + b) % n for x in range(n))
            if img in found:
                continue
            if _image_is_hom(img, op, op):
                found[img] = (a, b)
    return [
        QuandleMap(n, n, img, affine_form=found[img]) for img in sorted(found)
    ]


def _enumerate_homs_backtracking(X: FiniteQuandle, Y: FiniteQuandle) -> list[QuandleMap]:
    """All homomorphisms X -> Y by image assignment with early pruning."""
    n, m = X.order, Y.order
    img = [-1] * n
    out: list[tuple[int, ...]] = []

    def consistent(k: int) -> bool:
        # every constraint whose three participants are all assigned,
        # restricted to pairs involving only 0..k
        for x in range(k + 1):
            for y in range(k + 1):
                t = X.op[x][y]
                if t <= k and img[t] != Y.op[img[x]][img[y]]:
                    return False
        return True

    def dfs(k: int) -> None:
        if k == n:
            out.append(tuple(img))
            return
        for v in range(m):
            img[k] = v
            if consistent(k):
                dfs(k + 1)
        img[k] = -1

    dfs(0)
    out.sort()
    return [QuandleMap(n, m, image) for image in out]


def enumerate_homs(X: FiniteQuandle, Y: FiniteQuandle) -> list[QuandleMap]:
    """All quandle homomorphisms X -> Y, sorted by image vector.

    When X and Y are dihedral of the same order the affine candidates
    f(x) = a*x + b are generated and filtered; otherwise a backtracking
    search over image vectors is used.
    """
    if X.is_dihedral and Y.is_dihedral and X.order == Y.order:
        return _enumerate_dihedral_endos(X.order)
    return _enumerate_homs_backtracking(X, Y)


def enumerate_autos(X: FiniteQuandle) -> list[QuandleMap]:
    """All quandle automorphisms of X (bijective endomorphisms)."""
    return [f for f in enumerate_homs(X, X) if f.is_bijection()]


def identity_map(X: FiniteQuandle) -> QuandleMap:
    affine = (1 % X.order, 0) if X.is_dihedral else None
    return QuandleMap(X.order, X.order, tuple(range(X.order)), affine_form=affine)


def constant_map(X: FiniteQuandle, value: int) -> QuandleMap:
    if not 0 <= value < X.order:
        raise InvalidParameterError(f"constant {value} out of range")
    affine = (0, value) if X.is_dihedral else None
    return QuandleMap(X.order, X.order, (value,) * X.order, affine_form=affine)


def compose(f: QuandleMap, g: QuandleMap) -> QuandleMap:
    """The composite f(g(x)).  Requires g's target to be f's source."""
    if g.target_order != f.source_order:
        raise InvalidParameterError(
            f"cannot compose: g maps into order {g.target_order}, "
            f"f maps from order {f.source_order}"
        )
    image = tuple(f.image[g.image[x]] for x in range(g.source_order))
    affine = None
    if f.affine_form is not None and g.affine_form is not None:
        n = f.target_order
        a1, b1 = f.affine_form
        a2, b2 = g.affine_form
        affine = ((a1 * a2) % n, (a1 * b2 + b1) % n)
    return QuandleMap(g.source_order, f.target_order, image, affine_form=affine)
