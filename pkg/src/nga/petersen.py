"""The Petersen graph as a case study.

Vertices are the 2-subsets ij of {1..5} in lexicographic order, adjacent
when disjoint.  Edge ij-kl is written "ijkl".  Appending the pair k6, where
k is the index missing from ijkl, gives a six-index symbol; the symbols are
exactly the partitions of {1..6} into three pairs.  The five extra weight-3
elements u_i are written "i6", so every weight-3 span carries a pair from
{1..6}.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .algebra import (
    GradedMap,
    InvariantViolation,
    NormalAlgebra,
    graph_algebra,
    graphical_automorphism,
    is_homomorphism,
)
from .canon import group_closure
from .exactlin import RatMatrix, normalize
from .graphs import (
    Graph,
    automorphism_generators,
    automorphism_group,
    census,
    cycle_edges,
    enumerate_cycles,
    from_edges,
    girth,
)
from .shortweight import lambda_values
from .structure import (
    classify_minimal_coherent,
    induced_map,
    minimal_coherent_subgraphs,
    square_support_solutions,
)

DUADS5 = tuple("".join(map(str, c)) for c in combinations(range(1, 6), 2))

# 2u_i for i = 1..5 over the vertex order 12,13,14,15,23,24,25,34,35,45
U_TABLE = {
    1: (-1, -1, -1, -1, 1, 1, 1, 1, 1, 1),
    2: (-1, 1, 1, 1, -1, -1, -1, 1, 1, 1),
    3: (1, -1, 1, 1, -1, 1, 1, -1, -1, 1),
    4: (1, 1, -1, 1, 1, -1, 1, -1, 1, -1),
    5: (1, 1, 1, -1, 1, 1, -1, 1, -1, -1),
}

F_TABLE = {
    1: ("12", "13", "14", "15", "16"),
    2: ("12", "23", "24", "25", "26"),
    3: ("13", "23", "34", "35", "36"),
    4: ("14", "24", "34", "45", "46"),
    5: ("15", "25", "35", "45", "56"),
    6: ("16", "26", "36", "46", "56"),
}

H_TABLE = {
    1: ("123456", "132546", "143526", "152436", "162345"),
    2: ("123546", "132456", "142536", "153426", "162345"),
    3: ("124536", "132546", "142356", "153426", "162435"),
    4: ("124536", "132456", "143526", "152346", "162534"),
    5: ("123456", "134526", "142536", "152346", "162435"),
    6: ("123546", "134526", "142356", "152436", "162534"),
}


def _pairs_of(symbol: str) -> frozenset:
    if len(symbol) % 2 or not symbol.isdigit():
        raise ValueError(f"bad symbol {symbol!r}")
    return frozenset(frozenset(symbol[i:i + 2]) for i in range(0, len(symbol), 2))


def display_syntheme(pairs: frozenset) -> str:
    """Six-index symbol with the pair holding 1 first and the pair holding 6
    last (the remaining two pairs in order when 1 and 6 are paired)."""
    ps = sorted("".join(sorted(p)) for p in pairs)
    first = next(p for p in ps if "1" in p)
    rest = [p for p in ps if p != first]
    if first != "16":
        rest.sort(key=lambda p: "6" in p)
    return first + "".join(rest)


@dataclass
class PetersenModel:
    graph: Graph
    vertex_labels: tuple
    edge_labels: tuple
    enhanced_edge_labels: tuple
    algebra: NormalAlgebra = field(repr=False)

    def vertex(self, label: str) -> int:
        key = frozenset(label)
        for i, l in enumerate(self.vertex_labels):
            if frozenset(l) == key:
                return i
        raise KeyError(label)

    def edge(self, symbol: str) -> int:
        """Index of an edge given as "ijkl" or a six-index symbol, in any
        pair order and with either order inside a pair."""
        pairs = [p for p in _pairs_of(symbol) if "6" not in p]
        if len(pairs) != 2:
            raise KeyError(symbol)
        a, b = (self.vertex("".join(sorted(p))) for p in pairs)
        return self.graph.index_of((a, b))

    def syntheme(self, k: int) -> frozenset:
        return _pairs_of(self.enhanced_edge_labels[k])

    def u_vector(self, i: int) -> tuple:
        return tuple(Fraction(x, 2) for x in U_TABLE[i])

    def span_of(self, label: str) -> tuple:
        """Normalized U-vector of "ij" (a vertex) or "i6" (u_i)."""
        if "6" in label:
            i = int(label.replace("6", "", 1))
            return normalize(self.u_vector(i))
        v = [0] * 10
        v[self.vertex(label)] = 1
        return normalize(v)


def build_petersen() -> PetersenModel:
    labs = DUADS5
    edges = [(a, b) for a in range(10) for b in range(a + 1, 10) if not set(labs[a]) & set(labs[b])]
    G = from_edges(10, edges, labels=labs)
    elabs = tuple(labs[a] + labs[b] for a, b in G.edges)
    enh = []
    for a, b in G.edges:
        k = (set("12345") - set(labs[a]) - set(labs[b])).pop()
        enh.append(display_syntheme(frozenset([frozenset(labs[a]), frozenset(labs[b]), frozenset(k + "6")])))
    M = PetersenModel(G, labs, elabs, tuple(enh), graph_algebra(G))
    if G.q != 15 or any(d != 3 for d in G.degrees()) or girth(G) != 5:
        raise InvariantViolation("build_petersen", "not a cubic graph of girth 5 on 15 edges")
    return M


def sym5_automorphism(M: PetersenModel, sigma: dict) -> tuple:
    """Vertex permutation induced by a permutation of {1..5} (dict on digits)."""
    perm = []
    for l in M.vertex_labels:
        perm.append(M.vertex("".join(str(sigma.get(int(c), int(c))) for c in l)))
    return tuple(perm)


def cycle_to_dict(*cycles: Sequence[int]) -> dict:
    d = {}
    for c in cycles:
        for x, y in zip(c, c[1:] + c[:1]):
            d[x] = y
    return d


# -- weight-3 spans and low weights --------------------------------------------

def weight3_spans(M: PetersenModel) -> list[tuple]:
    """Every span <u> with wt(u^2) = 3, by square-support search over all
    3-subsets of edges."""
    found = []
    for S in combinations(range(M.graph.q), 3):
        sols = square_support_solutions(M.graph, S)
        if not sols:
            continue
        if len(sols) > 1:
            raise InvariantViolation("weight3_spans", f"a whole plane squares onto support {S}")
        if sols[0] not in found:
            found.append(sols[0])
    return sorted(found, reverse=True)


def low_weight_absence(M: PetersenModel) -> bool:
    q = M.graph.q
    subsets = [(k,) for k in range(q)] + list(combinations(range(q), 2))
    return not any(square_support_solutions(M.graph, S) for S in subsets)


def span_label(M: PetersenModel, span: Sequence) -> str:
    for l in M.vertex_labels:
        if M.span_of(l) == tuple(span):
            return l
    for i in range(1, 6):
        if M.span_of(f"{i}6") == tuple(span):
            return f"{i}6"
    raise KeyError("not a weight-3 span")


# -- families F ----------------------------------------------------------------

def _products_vanish(M: PetersenModel, u, v) -> bool:
    lu, lv = lambda_values(M.graph, u), lambda_values(M.graph, v)
    return not any(a and b for a, b in zip(lu, lv))


@dataclass
class FamilySet:
    families: dict  # index -> frozenset of span labels
    h_sets: dict = field(default_factory=dict)  # index -> frozenset of edge indices


def families_F(M: PetersenModel, spans: Sequence[tuple] | None = None) -> FamilySet:
    """All 5-sets of weight-3 spans with pairwise zero products, indexed by
    matching them against the family table."""
    spans = list(spans) if spans is not None else weight3_spans(M)
    n = len(spans)
    zero = [[i != j and _products_vanish(M, spans[i], spans[j]) for j in range(n)] for i in range(n)]
    fams = []
    for S in combinations(range(n), 5):
        if all(zero[a][b] for a, b in combinations(S, 2)):
            fams.append(frozenset(span_label(M, spans[i]) for i in S))
    if len(fams) != 6:
        raise InvariantViolation("families_F", f"{len(fams)} families instead of 6")
    table = {i: frozenset(v) for i, v in F_TABLE.items()}
    indexed = {}
    for f in fams:
        hits = [i for i, t in table.items() if t == f]
        if len(hits) != 1:
            raise InvariantViolation("families_F", f"family {sorted(f)} not in the table")
        indexed[hits[0]] = f
    for i, j in combinations(range(1, 7), 2):
        common = indexed[i] & indexed[j]
        if common != {f"{i}{j}"}:
            raise InvariantViolation("families_F", f"F{i} and F{j} meet in {sorted(common)}")
    return FamilySet(indexed)


def act_on_spans(M: PetersenModel, g: GradedMap, labels) -> frozenset:
    out = set()
    for l in labels:
        img = normalize(g.u_block @ M.span_of(l))
        out.add(span_label(M, img))
    return frozenset(out)


def action_on_families(M: PetersenModel, g: GradedMap, fams: dict) -> tuple:
    """perm[i-1] = j when g(F_i) = F_j."""
    perm = []
    for i in range(1, 7):
        img = act_on_spans(M, g, fams[i])
        hits = [j for j, f in fams.items() if f == img]
        if len(hits) != 1:
            raise InvariantViolation("action_on_families", "image is not a family")
        perm.append(hits[0])
    return tuple(perm)


# -- t -------------------------------------------------------------------------

def _swap16(pairs: frozenset) -> frozenset:
    sw = {"1": "6", "6": "1"}
    return frozenset(frozenset(sw.get(c, c) for c in p) for p in pairs)


def build_t(M: PetersenModel) -> GradedMap:
    """1k -> u_k (2 <= k <= 5), ij -> ij (2 <= i < j <= 5); on edges the
    six-index symbol has 1 and 6 exchanged."""
    cols = []
    for l in M.vertex_labels:
        if l[0] == "1":
            cols.append(M.u_vector(int(l[1])))
        else:
            v = [0] * 10
            v[M.vertex(l)] = 1
            cols.append(v)
    U = RatMatrix.from_columns(cols, rows=10)
    zcols = []
    for k in range(M.graph.q):
        target = _swap16(M.syntheme(k))
        j = next(j for j in range(M.graph.q) if M.syntheme(j) == target)
        zcols.append([int(i == j) for i in range(M.graph.q)])
    Z = RatMatrix.from_columns(zcols, rows=M.graph.q)
    t = GradedMap(M.algebra, M.algebra, U, Z)
    if not is_homomorphism(t):
        raise InvariantViolation("build_t", "t is not a homomorphism")
    if induced_map(M.graph, U, M.algebra).z_block != Z:
        raise InvariantViolation("build_t", "edge rule disagrees with products of vertex images")
    if t.compose(t).u_block != RatMatrix.identity(10) or t.compose(t).z_block != RatMatrix.identity(15):
        raise InvariantViolation("build_t", "t is not an involution")
    return t


# -- H-sets and Sym(6) ----------------------------------------------------------

def pentagon_pairs(M: PetersenModel) -> list[tuple[frozenset, frozenset]]:
    pents = [cycle_edges(M.graph, c) for c in enumerate_cycles(M.graph, 5) if len(c) == 5]
    pv = [set(c) for c in enumerate_cycles(M.graph, 5) if len(c) == 5]
    pairs = [(pents[i], pents[j]) for i, j in combinations(range(len(pents)), 2) if not pv[i] & pv[j]]
    return pairs


def h_sets(M: PetersenModel, circuits: Sequence[frozenset] | None = None) -> dict:
    """Eleventh edges of the size-11 circuits through each disjoint pentagon
    pair, indexed by matching against the H table."""
    if circuits is None:
        circuits = minimal_coherent_subgraphs(M.graph, 11)
    big = [c for c in circuits if len(c) == 11]
    pairs = pentagon_pairs(M)
    if len(pairs) != 6:
        raise InvariantViolation("h_sets", f"{len(pairs)} disjoint pentagon pairs")
    found = []
    for A, B in pairs:
        through = [c for c in big if A | B <= c]
        if len(through) != 5:
            raise InvariantViolation("h_sets", f"{len(through)} size-11 circuits through a pentagon pair")
        for c in through:
            shape = classify_minimal_coherent(M.graph, c)
            if (shape.m, shape.n, shape.path_len) != (5, 5, 1):
                raise InvariantViolation("h_sets", "size-11 circuit is not two pentagons and a bridge")
        found.append(frozenset(next(iter(c - A - B)) for c in through))
    table = {i: frozenset(M.edge(s) for s in v) for i, v in H_TABLE.items()}
    indexed = {}
    for h in found:
        hits = [i for i, t in table.items() if t == h]
        if len(hits) != 1:
            raise InvariantViolation("h_sets", "an H-set is not in the table")
        indexed[hits[0]] = h
    if len(indexed) != 6:
        raise InvariantViolation("h_sets", "H-sets do not match the table rows")
    return indexed


def is_one_factor(G: Graph, ks) -> bool:
    seen = []
    for k in ks:
        seen.extend(G.edges[k])
    return sorted(seen) == list(range(G.p))


def action_on_h(M: PetersenModel, g: GradedMap, hs: dict) -> tuple:
    perm = []
    for i in range(1, 7):
        img = set()
        for k in hs[i]:
            col = g.z_block.col(k)
            nz = [j for j, c in enumerate(col) if c]
            if len(nz) != 1:
                raise InvariantViolation("action_on_h", "map does not send edges to edge spans")
            img.add(nz[0])
        hits = [j for j, h in hs.items() if h == img]
        if len(hits) != 1:
            raise InvariantViolation("action_on_h", "image is not an H-set")
        perm.append(hits[0])
    return tuple(perm)


def perm_cycles(perm: Sequence[int]) -> str:
    """Cycle notation of a permutation of 1..n given as perm[i-1] = image."""
    seen = set()
    out = []
    for s in range(1, len(perm) + 1):
        if s in seen or perm[s - 1] == s:
            continue
        c = [s]
        seen.add(s)
        x = perm[s - 1]
        while x != s:
            c.append(x)
            seen.add(x)
            x = perm[x - 1]
        out.append("(" + "".join(map(str, c)) + ")")
    return "".join(out) or "()"


def _to0(perm):
    return tuple(x - 1 for x in perm)


@dataclass
class Sym6Correspondence:
    action_on_F: dict
    action_on_H: dict
    induced_map: dict  # F-permutation (cycle string) -> H-permutation, whole group
    order_F: int
    order_H: int
    order_pairs: int


def generator_maps(M: PetersenModel) -> dict:
    """Automorphisms generating <aut P, t>: graph automorphism generators from
    the canonical labeler, plus t."""
    out = {}
    for n, perm in enumerate(automorphism_generators(M.graph)):
        out[f"aut{n}"] = graphical_automorphism(M.graph, perm, M.algebra)
    out["t"] = build_t(M)
    return out


def sym6_actions(M: PetersenModel, fams: dict | None = None, hs: dict | None = None) -> Sym6Correspondence:
    fams = fams if fams is not None else families_F(M).families
    hs = hs if hs is not None else h_sets(M)
    gens = generator_maps(M)
    aF = {n: action_on_families(M, g, fams) for n, g in gens.items()}
    aH = {n: action_on_h(M, g, hs) for n, g in gens.items()}
    gF = group_closure([_to0(p) for p in aF.values()], 6)
    gH = group_closure([_to0(p) for p in aH.values()], 6)
    # pairs (F-action, H-action) of the same automorphisms
    both = group_closure([_to0(aF[n]) + tuple(x + 6 for x in _to0(aH[n])) for n in gens], 12)
    if len(gF) != 720 or len(gH) != 720:
        raise InvariantViolation("sym6_actions", f"group orders {len(gF)}, {len(gH)} instead of 720")
    if len(both) != 720:
        raise InvariantViolation("sym6_actions", "the two actions do not define a bijection")
    induced = {}
    for g in both:
        f = tuple(x + 1 for x in g[:6])
        h = tuple(x - 5 for x in g[6:])
        induced[perm_cycles(f)] = perm_cycles(h)
    return Sym6Correspondence(aF, aH, induced, len(gF), len(gH), len(both))


def is_outer(corr: Sym6Correspondence) -> bool:
    """Every transposition goes to a product of three disjoint transpositions."""
    trans = [f"({i}{j})" for i, j in combinations(range(1, 7), 2)]
    return all(
        corr.induced_map[t].count("(") == 3 and len(corr.induced_map[t]) == 12
        for t in trans
    )


def named_action(M: PetersenModel, cycles: Sequence[Sequence[int]], fams: dict, hs: dict) -> tuple[str, str]:
    """(F-action, H-action) of the graph automorphism given by a permutation of {1..5}."""
    perm = sym5_automorphism(M, cycle_to_dict(*cycles))
    g = graphical_automorphism(M.graph, perm, M.algebra)
    return perm_cycles(action_on_families(M, g, fams)), perm_cycles(action_on_h(M, g, hs))


def duad_syntheme(M: PetersenModel, hs: dict) -> dict:
    """Edge index -> the pair of H rows containing it."""
    out = {}
    for k in range(M.graph.q):
        rows = frozenset(i for i, h in hs.items() if k in h)
        if len(rows) != 2:
            raise InvariantViolation("duad_syntheme", f"edge {M.enhanced_edge_labels[k]} lies in {len(rows)} rows")
        out[k] = rows
    if len(set(out.values())) != 15:
        raise InvariantViolation("duad_syntheme", "two edges share a pair of rows")
    return out


# -- edge-pair orbits --------------------------------------------------------------

def edge_pair_orbits(M: PetersenModel) -> list[set]:
    """Orbits of aut P on unordered pairs of distinct edges."""
    group = automorphism_group(M.graph)
    G = M.graph
    left = {frozenset(p) for p in combinations(range(G.q), 2)}
    orbits = []
    while left:
        a, b = sorted(next(iter(sorted(left, key=sorted))))
        orb = set()
        for g in group:
            ea = G.index_of((g[G.edges[a][0]], g[G.edges[a][1]]))
            eb = G.index_of((g[G.edges[b][0]], g[G.edges[b][1]]))
            orb.add(frozenset((ea, eb)))
        orbits.append(orb)
        left -= orb
    return orbits


# -- uniqueness among cubic graphs of order 10 -------------------------------------

def fingerprint(G: Graph) -> tuple[int, int, int]:
    """(4-cycles, 6-cycles, edges on some 4-cycle)."""
    cyc = enumerate_cycles(G, 6)
    fours = [c for c in cyc if len(c) == 4]
    sixes = [c for c in cyc if len(c) == 6]
    covered = set()
    for c in fours:
        covered |= cycle_edges(G, c)
    return (len(fours), len(sixes), len(covered))


def uniqueness_census(graphs: Sequence[Graph] | None = None) -> list[tuple[Graph, tuple]]:
    if graphs is None:
        graphs = census(10, connected=True, regular_degree=3)
    if len(graphs) != 19:
        raise InvariantViolation("uniqueness_census", f"{len(graphs)} connected cubic graphs of order 10")
    return [(G, fingerprint(G)) for G in graphs]


# -- report ------------------------------------------------------------------------

def verify(M: PetersenModel | None = None, include_census: bool = True) -> list[dict]:
    """Run every check; a list of {name, status, witness}."""
    M = M if M is not None else build_petersen()
    report: list[dict] = []

    def check(name, fn):
        try:
            ok, witness = fn()
        except InvariantViolation as exc:
            ok, witness = False, str(exc)
        report.append({"name": name, "status": "pass" if ok else "fail", "witness": witness})
        return ok

    state: dict = {}

    def graph_check():
        return (M.graph.q == 15 and len(automorphism_group(M.graph)) == 120,
                {"p": M.graph.p, "q": M.graph.q, "aut_order": len(automorphism_group(M.graph))})

    def spans_check():
        spans = weight3_spans(M)
        state["spans"] = spans
        expected = {M.span_of(l) for l in M.vertex_labels} | {normalize(U_TABLE[i]) for i in U_TABLE}
        return set(spans) == expected and len(spans) == 15, sorted(span_label(M, s) for s in spans)

    def low_check():
        return low_weight_absence(M), {"singletons": 15, "pairs": 105}

    def families_check():
        fs = families_F(M, state.get("spans"))
        state["fams"] = fs.families
        return True, {i: sorted(f) for i, f in sorted(fs.families.items())}

    def t_check():
        t = build_t(M)
        state["t"] = t
        fixes_u1 = t.u_block @ M.u_vector(1) == M.u_vector(1)
        img = t.z_block.col(M.edge("123456"))
        img_sym = M.enhanced_edge_labels[next(j for j, c in enumerate(img) if c)]
        swap = perm_cycles(action_on_families(M, t, state["fams"]))
        ok = fixes_u1 and img_sym == "153426" and swap == "(16)"
        return ok, {"t(123456)": img_sym, "F_action": swap, "fixes_16": fixes_u1}

    def orbit_check():
        orbs = edge_pair_orbits(M)
        reps = [frozenset((M.edge(a), M.edge(b))) for a, b in (("1435", "2435"), ("1435", "1524"), ("1435", "1534"))]
        where = [next(i for i, o in enumerate(orbs) if r in o) for r in reps]
        return len(orbs) == 3 and len(set(where)) == 3, {"orbit_sizes": sorted(len(o) for o in orbs)}

    def h_check():
        hs = h_sets(M)
        state["hs"] = hs
        ok = all(is_one_factor(M.graph, h) for h in hs.values())
        return ok, {i: sorted(M.enhanced_edge_labels[k] for k in h) for i, h in sorted(hs.items())}

    def sym6_check():
        corr = sym6_actions(M, state["fams"], state["hs"])
        state["corr"] = corr
        a12 = named_action(M, [(1, 2)], state["fams"], state["hs"])
        a123 = named_action(M, [(1, 2, 3)], state["fams"], state["hs"])
        ok = (a12 == ("(12)", "(15)(26)(34)") and a123 == ("(123)", "(164)(253)")
              and is_outer(corr) and corr.induced_map["(12)"] == "(15)(26)(34)")
        return ok, {"order_F": corr.order_F, "order_H": corr.order_H,
                    "(12)": a12[1], "(123)": a123[1], "outer": is_outer(corr)}

    def duad_check():
        ds = duad_syntheme(M, state["hs"])
        ex1 = ds[M.edge("162345")] == {1, 2}
        ex2 = ds[M.edge("142356")] == {3, 6}
        return ex1 and ex2, {M.enhanced_edge_labels[k]: "".join(map(str, sorted(r))) for k, r in ds.items()}

    def census_check():
        fps = [fp for _, fp in uniqueness_census()]
        ok = len(set(fps)) == 19 and fps.count((0, 10, 0)) == 1
        p28 = sorted(fp[2] for fp in fps if fp[:2] == (2, 8))
        p37 = sorted(fp[2] for fp in fps if fp[:2] == (3, 7))
        ok = ok and p28 == [7, 8] and p37 == [9, 11]
        return ok, {"fingerprints": sorted(fps)}

    check("petersen_graph", graph_check)
    check("weight3_spans", spans_check)
    check("no_weight_1_or_2_squares", low_check)
    if check("families_F", families_check):
        check("automorphism_t", t_check)
    check("hexagon_edge_pair_orbits", orbit_check)
    if check("h_sets", h_check) and "fams" in state:
        if check("sym6_actions", sym6_check):
            pass
        check("duad_syntheme", duad_check)
    if include_census:
        check("uniqueness_census", census_check)
    return report


def report_json(report: list[dict]) -> str:
    return json.dumps(report, indent=2, default=str)
