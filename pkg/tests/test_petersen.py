import itertools
from fractions import Fraction

import networkx as nx
import pytest

from nga.algebra import graphical_automorphism, is_homomorphism, multiply, square
from nga.graphs import automorphism_group, cycle_graph, is_isomorphic
from nga.petersen import (
    build_petersen,
    build_t,
    cycle_to_dict,
    duad_syntheme,
    edge_pair_orbits,
    families_F,
    fingerprint,
    h_sets,
    is_one_factor,
    is_outer,
    low_weight_absence,
    named_action,
    pentagon_pairs,
    perm_cycles,
    span_label,
    sym5_automorphism,
    sym6_actions,
    uniqueness_census,
    verify,
    weight3_spans,
)
from nga.shortweight import support_profile
from nga.structure import induced_map, square_support_solutions

# 2u_i over the vertex order 12 13 14 15 23 24 25 34 35 45
TWO_U = {
    1: (-1, -1, -1, -1, 1, 1, 1, 1, 1, 1),
    2: (-1, 1, 1, 1, -1, -1, -1, 1, 1, 1),
    3: (1, -1, 1, 1, -1, 1, 1, -1, -1, 1),
    4: (1, 1, -1, 1, 1, -1, 1, -1, 1, -1),
    5: (1, 1, 1, -1, 1, 1, -1, 1, -1, -1),
}

H_ROWS = {
    1: "123456 132546 143526 152436 162345",
    2: "123546 132456 142536 153426 162345",
    3: "124536 132546 142356 153426 162435",
    4: "124536 132456 143526 152346 162534",
    5: "123456 134526 142536 152346 162435",
    6: "123546 134526 142356 152436 162534",
}


@pytest.fixture(scope="module")
def M():
    return build_petersen()


@pytest.fixture(scope="module")
def fams(M):
    return families_F(M).families


@pytest.fixture(scope="module")
def hs(M):
    return h_sets(M)


def test_graph_against_networkx(M):
    assert nx.is_isomorphic(nx.Graph(list(M.graph.edges)), nx.petersen_graph())
    assert all(d == 3 for d in M.graph.degrees())
    assert len(automorphism_group(M.graph)) == 120


def test_adjacency_rule(M):
    G = M.graph
    assert G.has_edge(M.vertex("14"), M.vertex("35"))
    assert not G.has_edge(M.vertex("14"), M.vertex("13"))


def test_label_tables(M):
    assert M.vertex_labels == ("12", "13", "14", "15", "23", "24", "25", "34", "35", "45")
    assert len(set(M.enhanced_edge_labels)) == 15
    for k, (a, b) in enumerate(M.graph.edges):
        sym = M.enhanced_edge_labels[k]
        pairs = {sym[i:i + 2] for i in (0, 2, 4)}
        missing = (set("12345") - set(M.vertex_labels[a]) - set(M.vertex_labels[b])).pop()
        assert {"".join(sorted(p)) for p in pairs} == {M.vertex_labels[a], M.vertex_labels[b], missing + "6"}


@pytest.mark.parametrize("a, b", [("123456", "436512"), ("123456", "214365"), ("1234", "3412"), ("162345", "2345")])
def test_equivalent_edge_symbols(M, a, b):
    assert M.edge(a) == M.edge(b)


def test_weight3_spans(M):
    spans = weight3_spans(M)
    assert len(spans) == 15
    labels = {span_label(M, s) for s in spans}
    assert labels == set(M.vertex_labels) | {f"{i}6" for i in range(1, 6)}
    for i, row in TWO_U.items():
        assert tuple(2 * x for x in M.u_vector(i)) == row
    # the -1 entries of 2u_i sit at the vertices showing i
    for i, row in TWO_U.items():
        assert {l for l, x in zip(M.vertex_labels, row) if x == -1} == {l for l in M.vertex_labels if str(i) in l}


def test_u_products(M):
    A = M.algebra
    u = {i: A.u(M.u_vector(i)) for i in range(1, 6)}
    prof = support_profile(A, square(A, u[1]))
    assert {M.edge_labels[k] for k in prof.support} == {"2345", "2435", "2534"}
    assert all(c == 1 for c in square(A, u[1]).z_part if c)
    for i, j in itertools.combinations(range(1, 6), 2):
        assert multiply(A, u[i], u[j]).is_zero()
    for l in ("12", "13", "14", "15"):
        assert multiply(A, u[1], A.basis_u(M.vertex(l))).is_zero()


def test_low_weight_absence(M):
    assert low_weight_absence(M)
    assert square_support_solutions(M.graph, [M.edge("123456")]) == []
    assert square_support_solutions(M.graph, [M.edge("123456"), M.edge("132456")]) == []


def test_families(M, fams):
    assert len(fams) == 6
    for i in range(1, 7):
        assert fams[i] == {"".join(sorted(f"{i}{j}")) for j in range(1, 7) if j != i}
    assert fams[6] == {"16", "26", "36", "46", "56"}
    for i, j in itertools.combinations(range(1, 7), 2):
        assert fams[i] & fams[j] == {f"{i}{j}"}


def test_t(M, fams):
    t = build_t(M)
    assert is_homomorphism(t) and t.is_invertible()
    assert t.compose(t).u_block.is_diagonal()
    assert induced_map(M.graph, t.u_block, M.algebra).z_block == t.z_block
    img = t.z_block.col(M.edge("123456"))
    assert M.enhanced_edge_labels[next(j for j, c in enumerate(img) if c)] == "153426"
    k = M.edge("162345")
    assert t.z_block.col(k) == tuple(Fraction(int(j == k)) for j in range(15))
    # t fixes the span of 16 (= u_1)
    assert t.u_block @ M.u_vector(1) == M.u_vector(1)
    from nga.petersen import action_on_families

    assert perm_cycles(action_on_families(M, t, fams)) == "(16)"


def test_edge_pair_orbits(M):
    orbs = edge_pair_orbits(M)
    assert sorted(len(o) for o in orbs) == [15, 30, 60]
    reps = [frozenset((M.edge(a), M.edge(b))) for a, b in (("1435", "2435"), ("1435", "1524"), ("1435", "1534"))]
    assert len({next(i for i, o in enumerate(orbs) if r in o) for r in reps}) == 3


def test_pentagon_pairs(M):
    pairs = pentagon_pairs(M)
    assert len(pairs) == 6
    for A, B in pairs:
        assert len(A) == len(B) == 5 and not A & B


def test_h_sets(M, hs):
    assert set(hs) == set(range(1, 7))
    for i, row in H_ROWS.items():
        assert hs[i] == {M.edge(s) for s in row.split()}
        assert is_one_factor(M.graph, hs[i])


def test_h_sets_cycled_by_five_cycle(M, fams, hs):
    f, h = named_action(M, [(1, 2, 3, 4, 5)], fams, hs)
    assert f == "(12345)"
    assert "6" not in h and len(h) == 7


@pytest.mark.parametrize("cycles, f_expected, h_expected", [
    ([(1, 2)], "(12)", "(15)(26)(34)"),
    ([(1, 2, 3)], "(123)", "(164)(253)"),
])
def test_named_actions(M, fams, hs, cycles, f_expected, h_expected):
    assert named_action(M, cycles, fams, hs) == (f_expected, h_expected)


def test_sym6(M, fams, hs):
    corr = sym6_actions(M, fams, hs)
    assert (corr.order_F, corr.order_H, corr.order_pairs) == (720, 720, 720)
    assert is_outer(corr)
    assert len(corr.induced_map) == 720
    # inner automorphisms keep cycle type; this one swaps 2-cycles with triple transpositions
    assert corr.induced_map["(12)(34)(56)"].count("(") == 1


def test_duad_syntheme(M, hs):
    ds = duad_syntheme(M, hs)
    assert ds[M.edge("162345")] == {1, 2}
    assert ds[M.edge("142356")] == {3, 6}
    assert set(ds.values()) == {frozenset(p) for p in itertools.combinations(range(1, 7), 2)}


def test_sym5_automorphisms_are_graphical(M):
    for cycles in ([(1, 2)], [(1, 2, 3, 4, 5)], [(1, 3), (2, 5)]):
        perm = sym5_automorphism(M, cycle_to_dict(*cycles))
        assert is_homomorphism(graphical_automorphism(M.graph, perm, M.algebra))


def test_perm_cycles():
    assert perm_cycles((1, 2, 3)) == "()"
    assert perm_cycles((2, 1, 4, 3)) == "(12)(34)"
    assert perm_cycles((2, 3, 1)) == "(123)"


def test_fingerprint_examples(M):
    assert fingerprint(M.graph) == (0, 10, 0)
    assert fingerprint(cycle_graph(4)) == (1, 0, 4)


def test_uniqueness_census():
    rows = uniqueness_census()
    fps = [fp for _, fp in rows]
    assert len(fps) == 19 and len(set(fps)) == 19
    assert sorted(fp[2] for fp in fps if fp[:2] == (2, 8)) == [7, 8]
    assert sorted(fp[2] for fp in fps if fp[:2] == (3, 7)) == [9, 11]
    (P,) = [G for G, fp in rows if fp == (0, 10, 0)]
    assert is_isomorphic(P, build_petersen().graph)


def test_uniqueness_census_rejects_wrong_size():
    from nga.algebra import InvariantViolation

    with pytest.raises(InvariantViolation):
        uniqueness_census([cycle_graph(10)])


def test_fingerprints_against_networkx_cycle_counts():
    for G, fp in uniqueness_census():
        H = nx.Graph(list(G.edges))
        cyc = list(nx.simple_cycles(H, length_bound=6))
        assert sum(len(c) == 4 for c in cyc) == fp[0]
        assert sum(len(c) == 6 for c in cyc) == fp[1]


def test_verify_report(M):
    report = verify(M, include_census=False)
    assert [r["name"] for r in report] == [
        "petersen_graph", "weight3_spans", "no_weight_1_or_2_squares", "families_F", "automorphism_t",
        "hexagon_edge_pair_orbits", "h_sets", "sym6_actions", "duad_syntheme",
    ]
    assert all(r["status"] == "pass" for r in report)
