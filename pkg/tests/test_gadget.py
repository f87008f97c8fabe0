import random
from fractions import Fraction

import pytest

from normmax.errors import KTooLarge, NotInConvexPosition, OddN, ParseError
from normmax.gadget import (
    Graph,
    blocks,
    build_gadget,
    clique_oracle,
    complete_graph,
    decide_clique_via_normmax,
    dual_normals,
    gadget_U,
    gadget_normmax,
    nearest_vertex_index,
    no_threshold,
    parse_dimacs,
    polygon_hrep,
    serialize_dimacs,
    sphere_points,
    verify_gadget_bounds,
    yes_threshold,
)
from normmax.instances import random_graph
from normmax.rational import dot, pnorm_pow

K3 = Graph(3, frozenset({(1, 2), (2, 3), (1, 3)}))
P3 = Graph(3, frozenset({(1, 2), (2, 3)}))


def test_sphere_point_examples():
    U = gadget_U(4, 2, 2)
    assert U == Fraction(1, 1024)
    pts = sphere_points(4, 2, U)
    assert pts[0] == (1, 0)
    assert pts[2] == (0, 1)
    x, y = pts[1]
    assert x == y and abs(x - Fraction(70711, 100000)) < Fraction(1, 100)
    # on the grid (U/2)Z^2
    assert (x / (U / 2)).denominator == 1
    assert pts[4:] == [tuple(-c for c in v) for v in pts[:4]]


def test_sphere_points_need_even_n():
    with pytest.raises(OddN):
        sphere_points(5, 2, Fraction(1, 100))


def test_polygon_examples():
    square = [(1, 0), (0, 1), (-1, 0), (0, -1)]
    square = [tuple(Fraction(c) for c in v) for v in square]
    H = polygon_hrep(square)
    assert len(H) == 4 and H.is_symmetric()
    assert all(abs(a[0]) == abs(a[1]) == b for a, b in H.rows)
    pts = sphere_points(4, 2, gadget_U(4, 2, 2))
    H = polygon_hrep(pts, dual_normals(pts, 2))
    assert len(H) == 8
    for a, b in H.rows:
        vals = [dot(a, v) for v in pts]
        assert all(x <= b for x in vals) and sum(x == b for x in vals) == 2
    collinear = [(Fraction(1), Fraction(0)), (Fraction(1), Fraction(1, 2)), (Fraction(1), Fraction(1))]
    collinear += [tuple(-c for c in v) for v in collinear]
    with pytest.raises(NotInConvexPosition):
        polygon_hrep(collinear)


def test_thresholds():
    U = gadget_U(4, 2, 2)
    assert yes_threshold(2, 2, U) == 2 * (1 - U) ** 2
    assert no_threshold(2, 2, U, 4) == (1 + U) ** 2 + 1 - Fraction(1, 2) / (2 * 16)


def test_dimacs():
    G = parse_dimacs("c triangle\np edge 3 3\ne 1 2\ne 2 3\n# last\ne 3 1\n")
    assert G == K3
    assert parse_dimacs(serialize_dimacs(G)) == G
    for bad, line in (("e 1 2\n", 1), ("p edge 2 1\ne 1 3\n", 2), ("p edge 2 2\ne 1 2\n", 1)):
        with pytest.raises(ParseError) as err:
            parse_dimacs(bad)
        assert err.value.line == line


def test_clique_oracle():
    assert clique_oracle(K3, 3)
    assert not clique_oracle(P3, 3)
    assert clique_oracle(Graph(1), 1)
    assert clique_oracle(complete_graph(5), 5) and not clique_oracle(complete_graph(5), 6)


def test_nearest_vertex_index():
    inst = build_gadget(K3, 2, 2)
    pts, qs = inst.vertices_bar, inst.normals_bar
    n = inst.n_padded
    assert nearest_vertex_index(pts[0], qs) == 1
    assert nearest_vertex_index(pts[n], qs) == n + 1
    assert nearest_vertex_index((Fraction(0), Fraction(0)), qs) == 1


@pytest.mark.parametrize("p", [2, 3])
def test_gadget_examples(p):
    inst = build_gadget(K3, 3, p)
    assert inst.n_padded == 4 and inst.dim == 6
    assert inst.no_threshold < inst.yes_threshold and inst.eps_bar > 0
    assert inst.polytope.is_symmetric()
    assert decide_clique_via_normmax(inst)
    empty = build_gadget(Graph(4), 2, p)
    assert not decide_clique_via_normmax(empty)
    assert decide_clique_via_normmax(build_gadget(complete_graph(4), 2, p))


def test_k_too_large():
    with pytest.raises(KTooLarge):
        build_gadget(Graph(2), 5, 2)


def test_cells_match_direct_enumeration():
    rng = random.Random(11)
    graphs = [K3, P3, Graph(4), complete_graph(4)] + [random_graph(rng, 5) for _ in range(2)]
    for G in graphs:
        for p in (2, 3):
            inst = build_gadget(G, 2, p)
            cells = gadget_normmax(inst, method="cells")
            direct = gadget_normmax(inst, method="direct")
            assert cells == direct.__class__(direct.value, direct.witness, cells.method)


def test_yes_witness_is_a_clique():
    for G, k in ((K3, 3), (complete_graph(4), 2), (Graph(5, frozenset({(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)})), 2)):
        for p in (2, 3):
            inst = build_gadget(G, k, p)
            r = gadget_normmax(inst)
            assert r.value >= inst.yes_threshold
            n = inst.n_padded
            labels = []
            for blk in blocks(r.witness, k):
                assert blk in inst.vertices_bar
                v = inst.vertices_bar.index(blk) + 1
                assert nearest_vertex_index(blk, inst.normals_bar) == v
                labels.append((v - 1) % n + 1)
            G2 = G.padded(n)
            assert len(set(labels)) == k
            assert all(G2.adjacent(u, w) for i, u in enumerate(labels) for w in labels[i + 1 :])


def test_bounds_report_examples():
    rep = verify_gadget_bounds(8, 2)
    assert rep.ok, rep.checks
    assert rep.eps_bar >= Fraction(2, 2 * 64) - 6 * rep.U
    for n, p in ((4, 2), (6, 3), (12, 4)):
        assert verify_gadget_bounds(n, p).ok


def test_rounded_norms():
    inst = build_gadget(P3, 2, 3)
    U, p = inst.U, inst.p
    for v in inst.vertices_bar:
        assert (1 - U) ** p <= pnorm_pow(v, p) <= (1 + U) ** p
        assert dot(v, tuple(c**2 if c >= 0 else -(c**2) for c in v)) == pnorm_pow(v, 3)
