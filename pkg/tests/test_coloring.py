"""Coloring enumeration, SNF counting and shadow extension."""

import math
import random
from itertools import product

import pytest

from quiverknot.catalog import load_catalog
from quiverknot.coloring import (
    Coloring,
    apply_endo,
    coloring_matrix,
    count_colorings_dihedral,
    enumerate_colorings,
    extend_shadow,
    is_valid_coloring,
)
from quiverknot.diagram import build_diagram, parse_pd, unknot_diagram
from quiverknot.quandle import (
    constant_map,
    enumerate_homs,
    identity_map,
    make_alexander,
    make_dihedral,
)
from quiverknot.snf import smith_normal_form, solution_count_mod

TREFOIL = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)"


@pytest.fixture(scope="module")
def catalog():
    return load_catalog()


def brute_force_colorings(d, X):
    out = []
    rels = [(cr.under_in_arc, cr.over_arc, cr.under_out_arc) for cr in d.crossings]
    for values in product(range(X.order), repeat=d.n_arcs):
        if all(X.op[values[i]][values[j]] == values[k] for i, j, k in rels):
            out.append(values)
    return out


def test_reference_coloring_counts(catalog):
    R5 = make_dihedral(5)
    assert len(enumerate_colorings(catalog.diagram("4_1"), R5)) == 25
    assert len(enumerate_colorings(catalog.diagram("5_1"), R5)) == 25
    assert count_colorings_dihedral(catalog.diagram("8_10"), 9) == 81
    assert count_colorings_dihedral(catalog.diagram("8_18"), 9) == 81


def test_trefoil_enumeration_vs_brute_force():
    d = build_diagram(parse_pd(TREFOIL))
    R3 = make_dihedral(3)
    cols = enumerate_colorings(d, R3)
    assert len(cols) == 9
    assert [c.values for c in cols] == sorted(brute_force_colorings(d, R3))


def test_enumeration_vs_brute_force_more(catalog):
    cases = [
        (catalog.diagram("4_1"), make_dihedral(4)),
        (catalog.diagram("5_2"), make_dihedral(3)),
        (build_diagram(parse_pd("X(1,2,2,1)")), make_dihedral(5)),
        (catalog.diagram("4_1"), make_alexander(5, 2)),
    ]
    for d, X in cases:
        got = [c.values for c in enumerate_colorings(d, X)]
        assert got == sorted(brute_force_colorings(d, X))


def test_unknot_colorings():
    u = unknot_diagram()
    for X in (make_dihedral(7), make_alexander(5, 2)):
        cols = enumerate_colorings(u, X)
        assert len(cols) == X.order
        assert all(c.is_trivial() for c in cols)


def test_colorings_satisfy_relations_independently(catalog):
    R5 = make_dihedral(5)
    for name in ("3_1", "4_1", "6_2"):
        d = catalog.diagram(name)
        for c in enumerate_colorings(d, R5):
            assert is_valid_coloring(d, R5, c.values)
            for cr in d.crossings:
                x = c.values[cr.under_in_arc]
                y = c.values[cr.over_arc]
                z = c.values[cr.under_out_arc]
                assert (2 * y - x - z) % 5 == 0


def test_trivial_colorings_always_present(catalog):
    X = make_dihedral(6)
    for name in ("3_1", "6_1"):
        values = {c.values for c in enumerate_colorings(catalog.diagram(name), X)}
        for k in range(6):
            assert (k,) * catalog.diagram(name).n_arcs in values


def test_closure_under_endomorphisms(catalog):
    d = catalog.diagram("4_1")
    R5 = make_dihedral(5)
    cols = enumerate_colorings(d, R5)
    index = {c.values for c in cols}
    for f in enumerate_homs(R5, R5):
        for c in cols:
            assert apply_endo(f, c).values in index


def test_apply_endo_examples():
    c = Coloring((1, 1, 1))
    R5 = make_dihedral(5)
    assert apply_endo(identity_map(R5), c) == c
    assert apply_endo(constant_map(R5, 3), c).values == (3, 3, 3)
    from quiverknot.quandle import QuandleMap

    plus2 = QuandleMap(5, 5, tuple((x + 2) % 5 for x in range(5)), affine_form=(1, 2))
    assert apply_endo(plus2, c).values == (3, 3, 3)


def test_snf_known_values():
    assert smith_normal_form([[2, 0], [0, 3]], 2) == [1, 6]
    assert smith_normal_form([[0, 0], [0, 0]], 2) == [0, 0]
    assert smith_normal_form([], 3) == []
    assert smith_normal_form([[6, 4], [4, 6]], 2) == [2, 10]
    divs = smith_normal_form([[1, 0, -1], [0, 2, -2]], 3)
    assert divs == [1, 2]


def test_snf_divisibility_chain_random():
    rng = random.Random(20260810)
    for _ in range(60):
        rows = rng.randrange(1, 5)
        cols = rng.randrange(1, 5)
        mat = [[rng.randrange(-3, 4) for _ in range(cols)] for _ in range(rows)]
        divs = smith_normal_form(mat, cols)
        for a, b in zip(divs, divs[1:]):
            if a == 0:
                assert b == 0
            else:
                assert b % a == 0


def test_snf_solution_count_vs_brute_force():
    rng = random.Random(977)
    for _ in range(40):
        rows = rng.randrange(1, 4)
        cols = rng.randrange(1, 4)
        mat = [[rng.randrange(-3, 4) for _ in range(cols)] for _ in range(rows)]
        divs = smith_normal_form(mat, cols)
        for n in (2, 3, 4, 5, 6):
            brute = 0
            for v in product(range(n), repeat=cols):
                if all(
                    sum(row[j] * v[j] for j in range(cols)) % n == 0 for row in mat
                ):
                    brute += 1
            assert solution_count_mod(divs, cols, n) == brute


def test_coloring_matrix_shape(catalog):
    d = catalog.diagram("3_1")
    mat = coloring_matrix(d)
    for row in mat.rows:
        assert sum(row) == 0
        assert sum(1 for v in row if v) <= 3
    # a kink yields an all-zero row (all three arcs coincide)
    k = build_diagram(parse_pd("X(1,2,2,1)"))
    assert coloring_matrix(k).rows == ((0,),)


def test_snf_count_equals_enumeration(catalog):
    for name in ("unknot", "3_1", "3_1_kinked", "4_1", "5_2"):
        d = catalog.diagram(name)
        for n in range(2, 7):
            assert count_colorings_dihedral(d, n) == len(
                enumerate_colorings(d, make_dihedral(n))
            )


def test_crt_factorization(catalog):
    for name in ("3_1", "4_1", "6_1", "8_18"):
        d = catalog.diagram(name)
        for m, n in ((2, 3), (3, 5), (2, 5), (4, 9)):
            assert math.gcd(m, n) == 1
            assert count_colorings_dihedral(d, m * n) == count_colorings_dihedral(
                d, m
            ) * count_colorings_dihedral(d, n)


def test_coloring_space_is_linear_mod_p(catalog):
    for p in (3, 5):
        Rp = make_dihedral(p)
        d = catalog.diagram("3_1" if p == 3 else "4_1")
        cols = [c.values for c in enumerate_colorings(d, Rp)]
        values = set(cols)
        for a in range(p):
            for b in range(p):
                for c in cols:
                    combo = tuple((a * v + b) % p for v in c)
                    assert combo in values


def test_extension_exists_and_unique_brute_force(catalog):
    # brute-force all region assignments: exactly one extension per
    # (coloring, base) pair
    R3 = make_dihedral(3)
    d = catalog.diagram("3_1")
    for c in enumerate_colorings(d, R3):
        for base in range(3):
            count = 0
            for regions in product(range(3), repeat=d.n_regions):
                if regions[d.r_infinity] != base:
                    continue
                ok = True
                for label, (left, right) in d.edge_sides.items():
                    arc = d.arc_of_edge[label]
                    if R3.op[regions[right]][c.values[arc]] != regions[left]:
                        ok = False
                        break
                if ok:
                    count += 1
            assert count == 1
            s = extend_shadow(d, R3, c, base)
            assert s.region_values[d.r_infinity] == base


def test_shadow_count_matches_coloring_count(catalog):
    for name in ("4_1", "5_2", "unknot"):
        d = catalog.diagram(name)
        for X in (make_dihedral(3), make_dihedral(5)):
            cols = enumerate_colorings(d, X)
            for a in range(X.order):
                shadows = {extend_shadow(d, X, c, a) for c in cols}
                assert len(shadows) == len(cols)


def test_unknot_shadow_rule():
    u = unknot_diagram()
    R5 = make_dihedral(5)
    s = extend_shadow(u, R5, Coloring((1,)), 3)
    assert s.region_values[u.r_infinity] == 3
    assert s.region_values[0] == R5.mul(3, 1)


def test_trefoil_trivial_shadow_all_zero():
    d = build_diagram(parse_pd(TREFOIL))
    R3 = make_dihedral(3)
    s = extend_shadow(d, R3, Coloring((0, 0, 0)), 0)
    assert set(s.region_values) == {0}


def test_shadow_propagation_order_independent(catalog):
    R5 = make_dihedral(5)
    for name in ("4_1", "6_3", "8_18"):
        d = catalog.diagram(name)
        for c in enumerate_colorings(d, R5):
            assert extend_shadow(d, R5, c, 2, traversal="bfs") == extend_shadow(
                d, R5, c, 2, traversal="dfs"
            )


def test_shadow_serialization():
    u = unknot_diagram()
    R3 = make_dihedral(3)
    s = extend_shadow(u, R3, Coloring((2,)), 1)
    blob = s.to_json()
    assert blob["arcs"] == [2]
    assert set(blob["regions"]) == {"0", "1"}
