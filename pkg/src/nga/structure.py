"""Square supports, edge-square and pair-square classification, edge
coherence and circuits of the incidence matroid."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .algebra import (
    GradedMap,
    InvariantViolation,
    NormalAlgebra,
    build_canonical,
    direct_sum,
    edge_scaling_data,
    graph_algebra,
    is_homomorphism,
    map_to_dict,
    multiply,
    zero_algebra,
)
from .exactlin import (
    IncrementalBasis,
    RatMatrix,
    inverse,
    is_invertible,
    kernel_basis,
    normalize,
    rank,
    vec,
)
from .graphs import Graph, bipartite_structure, components, is_bipartite, is_connected, is_tree
from .shortweight import annihilator_basis, lambda_matrix, lambda_values

TAGS = ("Tree_F0_Op", "OddUnicyclic_Op", "EvenCycle_F0_Tp", "DoublyOddPaddle_Tp", "Unclassified")


def _edge_indices(G: Graph, S: Iterable) -> list[int]:
    out = []
    for e in S:
        if isinstance(e, int):
            if not 0 <= e < G.q:
                raise ValueError(f"edge index {e} out of range")
            out.append(e)
        else:
            out.append(G.index_of(e))
    if len(set(out)) != len(out):
        raise ValueError("repeated edge")
    return out


# -- square supports -----------------------------------------------------------

@dataclass(frozen=True)
class SquareWitness:
    u: tuple
    target_support: frozenset

    def check(self, G: Graph) -> bool:
        return {k for k, c in enumerate(lambda_values(G, self.u)) if c} == set(self.target_support)


def square_support_solutions(G: Graph, S: Iterable) -> list[tuple]:
    """Elements u with supp(u^2) exactly S, as a basis of their linear span.

    The u with lambda_f(u) = 0 for every edge f outside S form the kernel of
    the off-S lambda matrix; a solution must also have lambda_e(u) != 0 for
    every e in S.  Returns [] when no such u exists.  Otherwise the first
    vector returned is a solution and the remaining ones complete a basis
    of the kernel (all normalized, first nonzero entry 1).
    """
    ks = set(_edge_indices(G, S))
    off = [k for k in range(G.q) if k not in ks]
    K = kernel_basis(lambda_matrix(G, off), ncols=G.p)
    if not K:
        return []
    on = sorted(ks)
    # lambda_e restricted to the kernel, one row per e in S
    vals = [[k[a] + k[b] for k in K] for a, b in (G.edges[e] for e in on)]
    if any(not any(r) for r in vals):
        return []
    # a combination with coefficients 1, t, t^2, ... avoids every hyperplane
    # for all but finitely many t
    d = len(K)
    for t in range(len(on) * d + 1):
        coeffs = [Fraction(t) ** i for i in range(d)]
        if all(sum(c * x for c, x in zip(coeffs, r)) for r in vals):
            break
    else:  # pragma: no cover - excluded by the degree count above
        raise InvariantViolation("square_support_solutions", "no generic combination found")
    w = [sum(c * k[i] for c, k in zip(coeffs, K)) for i in range(G.p)]
    return [normalize(w)] + K[1:]


def _reduce_into(basis: dict, row: list[int]) -> list[int]:
    # basis maps pivot column -> integer row with that pivot
    for c, b in basis.items():
        x = row[c]
        if x:
            a = b[c]
            row = [a * r - x * y for r, y in zip(row, b)]
    return row


def has_square_support(G: Graph, S: Iterable) -> bool:
    """Same answer as ``bool(square_support_solutions(G, S))``, by integer
    elimination: some u has supp(u^2) = S iff no lambda_e with e in S lies
    in the span of the lambda_f with f outside S."""
    ks = set(_edge_indices(G, S))
    p = G.p
    basis: dict[int, list[int]] = {}
    for k in range(G.q):
        if k in ks:
            continue
        r = _reduce_into(basis, _lambda_int(G, k))
        lead = next((j for j, x in enumerate(r) if x), None)
        if lead is None:
            continue
        # keep the basis fully reduced so that pivots stay independent
        for c, b in list(basis.items()):
            x = b[lead]
            if x:
                basis[c] = [r[lead] * y - x * z for y, z in zip(b, r)]
        basis[lead] = r
        if len(basis) == p:
            return False  # only u = 0 survives
    return all(any(_reduce_into(basis, _lambda_int(G, k))) for k in ks)


def is_edge_square(G: Graph) -> bool:
    """Every edge is proportional to a square."""
    return all(has_square_support(G, [k]) for k in range(G.q))


def _scaled_witness(G: Graph, u: Sequence, e: int) -> tuple:
    lam = lambda_values(G, u)
    c = lam[e]
    return tuple(x / c for x in u)


def edge_square_witness(G: Graph, e) -> SquareWitness | None:
    """u with u^2 = e, built by the coefficient assignment of the
    odd-cycle / bridge construction; None when neither case applies.

    Both outcomes are cross-checked against ``square_support_solutions``.
    """
    if not is_connected(G):
        raise ValueError("graph must be connected; split it into components first")
    k = _edge_indices(G, [e])[0]
    a, b = G.edges[k]
    H = G.delete_edges([k])
    bs = bipartite_structure(H)
    comps = components(H)
    where = {}
    for ci, comp in enumerate(comps):
        for v in comp:
            where[v] = ci
    half = Fraction(1, 2)
    theta = None
    if where[a] == where[b]:
        parts = bs.parts[where[a]]
        if bs.k_b == bs.k and parts is not None and ((a in parts[0]) == (b in parts[0])):
            # odd cycle through e and G - e bipartite
            side = parts[0] if a in parts[0] else parts[1]
            theta = [half if v in side else -half for v in range(G.p)]
    else:
        for x in (a, b):
            parts = bs.parts[where[x]]
            if parts is not None:
                X = parts[0] if x in parts[0] else parts[1]
                theta = [Fraction(0)] * G.p
                for v in comps[where[x]]:
                    theta[v] = Fraction(1) if v in X else Fraction(-1)
                break
    generic = square_support_solutions(G, [k])
    if theta is None:
        if generic:
            raise InvariantViolation("edge_square_witness", f"edge {G.edges[k]} squares but neither case applies")
        return None
    w = SquareWitness(tuple(theta), frozenset([k]))
    lam = lambda_values(G, w.u)
    if lam[k] != 1 or any(c for i, c in enumerate(lam) if i != k):
        raise InvariantViolation("edge_square_witness", f"assignment does not square to edge {G.edges[k]}")
    if not generic:
        raise InvariantViolation("edge_square_witness", "construction found a square the kernel search missed")
    return w


# -- reports -------------------------------------------------------------------

@dataclass
class ClassificationReport:
    tag: str
    params: dict
    iso: GradedMap | None = field(default=None, repr=False)

    def __post_init__(self):
        if self.tag not in TAGS:
            raise ValueError(f"unknown tag {self.tag!r}")
        if self.iso is not None and not (is_homomorphism(self.iso) and self.iso.is_invertible()):
            raise InvariantViolation("classification_iso", f"{self.tag} map is not an isomorphism")

    def to_dict(self, include_iso: bool = True) -> dict:
        d = {"tag": self.tag, "params": dict(self.params)}
        if include_iso and self.iso is not None:
            d["iso"] = map_to_dict(self.iso)
        return d


def _iso_from_images(G: Graph, A: NormalAlgebra, target: NormalAlgebra,
                     u_images: Sequence[Sequence], z_images: Sequence[Sequence]) -> GradedMap:
    """Isomorphism NG -> target, given where the target's basis goes in NG."""
    psi = GradedMap(target, A,
                    RatMatrix.from_columns([vec(c) for c in u_images], rows=A.dimU),
                    RatMatrix.from_columns([vec(c) for c in z_images], rows=A.dimZ))
    if not is_homomorphism(psi):
        raise InvariantViolation("classification_iso", "basis images do not multiply correctly")
    if not psi.is_invertible():
        raise InvariantViolation("classification_iso", "basis images are not a basis")
    return psi.inverse()


def _unit(n, k, c=1):
    v = [Fraction(0)] * n
    v[k] = Fraction(c)
    return v


def classify_edge_square(G: Graph) -> ClassificationReport:
    if not is_connected(G):
        raise ValueError("graph must be connected")
    params = {"p": G.p, "q": G.q}
    witnesses = []
    for k in range(G.q):
        w = edge_square_witness(G, k)
        if w is None:
            return ClassificationReport("Unclassified", params)
        witnesses.append(w)
    A = graph_algebra(G)
    us = [list(w.u) for w in witnesses]
    zs = [_unit(G.q, k) for k in range(G.q)]
    if G.q == G.p - 1:
        ann = annihilator_basis(G)
        if len(ann) != 1:
            raise InvariantViolation("classify_edge_square", "tree annihilator is not one-dimensional")
        target = direct_sum(zero_algebra(1), build_canonical("Op", G.p - 1)) if G.p > 1 else zero_algebra(1)
        iso = _iso_from_images(G, A, target, [ann[0]] + us, zs)
        return ClassificationReport("Tree_F0_Op", params, iso)
    if G.q == G.p:
        target = build_canonical("Op", G.p)
        iso = _iso_from_images(G, A, target, us, zs)
        return ClassificationReport("OddUnicyclic_Op", params, iso)
    raise InvariantViolation("classify_edge_square", f"edge-square graph with q={G.q}, p={G.p}")


def pair_square_witnesses(G: Graph, e0: int = 0) -> list[tuple] | None:
    """For each edge f != e0, some u with supp(u^2) = {e0, f} and
    lambda_{e0}(u) = 1; None as soon as one pair has no solution."""
    out = []
    for f in range(G.q):
        if f == e0:
            continue
        sols = square_support_solutions(G, [e0, f])
        if not sols:
            return None
        out.append(_scaled_witness(G, sols[0], e0))
    return out


def is_pair_square(G: Graph, exhaustive: bool = False) -> bool:
    """Every pair of edges supports a square.

    By default only the q-1 pairs through edge 0 are tested: if u^2 = e + a^2 f
    and v^2 = e + b^2 g with lambda_e(u) = lambda_e(v) = 1, then
    (u - v)^2 = a^2 f + b^2 g.  ``exhaustive`` tests all pairs.
    """
    if G.q < 2:
        return True
    if exhaustive:
        return all(has_square_support(G, [i, j]) for i in range(G.q) for j in range(i + 1, G.q))
    return all(has_square_support(G, [0, f]) for f in range(1, G.q))


def classify_pair_square(G: Graph) -> ClassificationReport:
    if not is_connected(G):
        raise ValueError("graph must be connected")
    if is_edge_square(G):
        raise ValueError("graph is edge-square; use classify_edge_square")
    params = {"p": G.p, "q": G.q}
    ws = pair_square_witnesses(G, 0)
    if ws is None:
        return ClassificationReport("Unclassified", params)
    A = graph_algebra(G)
    others = [f for f in range(G.q) if f != 0]
    alphas = [lambda_values(G, u)[f] for u, f in zip(ws, others)]
    zs = [_unit(G.q, 0)] + [_unit(G.q, f, a * a) for f, a in zip(others, alphas)]
    us = [list(u) for u in ws]
    if G.q == G.p:
        ann = annihilator_basis(G)
        if len(ann) != 1:
            raise InvariantViolation("classify_pair_square", "annihilator of an even cycle is not one-dimensional")
        target = direct_sum(zero_algebra(1), build_canonical("Tp", G.p - 1))
        iso = _iso_from_images(G, A, target, [ann[0]] + us, zs)
        params["m"] = G.p
        return ClassificationReport("EvenCycle_F0_Tp", params, iso)
    if G.q == G.p + 1:
        target = build_canonical("Tp", G.p)
        iso = _iso_from_images(G, A, target, us, zs)
        shape = circuit_shape(G, range(G.q))
        if shape is None or shape[0] != "paddle":
            raise InvariantViolation("classify_pair_square", "pair-square graph with q = p + 1 is not a paddle")
        _, m, n, path_len, _, _ = shape
        params.update(m=m, n=n, path_len=path_len)
        return ClassificationReport("DoublyOddPaddle_Tp", params, iso)
    raise InvariantViolation("classify_pair_square", f"pair-square graph with q={G.q}, p={G.p}")


# -- structural predicates -------------------------------------------------------

def is_odd_unicyclic(G: Graph) -> bool:
    return G.p >= 3 and G.q == G.p and is_connected(G) and not is_bipartite(G)


def is_even_cycle(G: Graph) -> bool:
    return (G.p >= 4 and G.p % 2 == 0 and G.q == G.p and is_connected(G)
            and all(d == 2 for d in G.degrees()))


def is_doubly_odd_paddle(G: Graph) -> bool:
    if not is_connected(G) or G.q != G.p + 1:
        return False
    shape = circuit_shape(G, range(G.q))
    return shape is not None and shape[0] == "paddle" and shape[1] % 2 == 1 and shape[2] % 2 == 1


# -- coherence -----------------------------------------------------------------

@dataclass(frozen=True)
class CoherenceCertificate:
    edge_set: tuple
    scalars: tuple

    def is_valid(self, G: Graph) -> bool:
        if not any(self.scalars):
            return False
        at = [Fraction(0)] * G.p
        for k, c in zip(self.edge_set, self.scalars):
            a, b = G.edges[k]
            at[a] += c
            at[b] += c
        return not any(at)

    @property
    def proper(self) -> bool:
        return all(self.scalars)


def _columns(G: Graph, ks: Sequence[int]) -> list[list[int]]:
    # p x |ks| incidence submatrix, as rows
    rows = [[0] * len(ks) for _ in range(G.p)]
    for c, k in enumerate(ks):
        a, b = G.edges[k]
        rows[a][c] = 1
        rows[b][c] = 1
    return rows


def coherence_certificate(G: Graph, S: Iterable) -> CoherenceCertificate | None:
    ks = _edge_indices(G, S)
    if not ks:
        raise ValueError("edge set must be nonempty")
    K = kernel_basis(_columns(G, ks), ncols=len(ks))
    if not K:
        return None
    cert = CoherenceCertificate(tuple(ks), K[0])
    if not cert.is_valid(G):
        raise InvariantViolation("coherence_certificate", "kernel vector does not balance at every vertex")
    return cert


def is_coherent(G: Graph, S: Iterable) -> bool:
    ks = _edge_indices(G, S)
    return rank(_columns(G, ks)) < len(ks)


def is_minimally_coherent(G: Graph, S: Iterable) -> bool:
    ks = _edge_indices(G, S)
    if not ks:
        raise ValueError("edge set must be nonempty")
    K = kernel_basis(_columns(G, ks), ncols=len(ks))
    return len(K) == 1 and all(K[0])


def _lambda_int(G: Graph, k: int) -> list[int]:
    a, b = G.edges[k]
    r = [0] * G.p
    r[a] = r[b] = 1
    return r


def minimal_coherent_subgraphs(G: Graph, max_size: int | None = None) -> list[frozenset]:
    """All circuits of the incidence matroid with at most ``max_size`` edges.

    A circuit spans a connected subgraph (its incidence columns split into
    blocks with disjoint row supports otherwise, and a full-support
    dependence would restrict to a smaller one), so the search grows
    connected edge sets, each visited once, keeping only independent ones.
    A grown set that turns dependent is a circuit exactly when its unique
    dependence has full support.
    """
    q = G.q
    if max_size is None:
        max_size = q
    if max_size > q:
        raise ValueError("max_size exceeds the number of edges")
    lam = [_lambda_int(G, k) for k in range(q)]
    ends = G.edges
    # edges sharing a vertex, as bitmasks over edge indices
    at_vertex = [0] * G.p
    for k, (a, b) in enumerate(ends):
        at_vertex[a] |= 1 << k
        at_vertex[b] |= 1 << k
    nbr = [(at_vertex[a] | at_vertex[b]) & ~(1 << k) for k, (a, b) in enumerate(ends)]
    found: list[frozenset] = []

    def extend(chosen: list[int], smask: int, ext: int, closed: int, basis: IncrementalBasis, r: int):
        while ext:
            low = ext & -ext
            w = low.bit_length() - 1
            ext ^= low
            red, combo = basis.reduce(lam[w])
            members = chosen + [w]
            if not any(red):
                if all(combo):
                    found.append(frozenset(members))
                continue
            if len(members) >= max_size:
                continue
            nb = basis.copy()
            nb.add_reduced(red, combo)
            excl = nbr[w] & ~closed & ~((1 << (r + 1)) - 1)
            extend(members, smask | low, ext | excl, closed | nbr[w] | low, nb, r)

    for r in range(q):
        if max_size < 2:
            break
        b = IncrementalBasis(G.p)
        b.add(lam[r])
        ext = nbr[r] & ~((1 << (r + 1)) - 1)
        extend([r], 1 << r, ext, nbr[r] | (1 << r), b, r)
    found.sort(key=lambda s: (len(s), sorted(s)))
    return found


def circuit_shape(G: Graph, S: Iterable):
    """Shape of the subgraph spanned by edge set S.

    Returns ``("cycle", length, vertex sequence)`` or
    ``("paddle", m, n, path_len, cycle1 edges, cycle2 edges)`` with m <= n,
    or None for anything else.
    """
    ks = sorted(_edge_indices(G, S))
    if not ks:
        return None
    inc: dict[int, list[int]] = {}
    for k in ks:
        a, b = G.edges[k]
        inc.setdefault(a, []).append(k)
        inc.setdefault(b, []).append(k)
    verts = list(inc)
    nv, ne = len(verts), len(ks)
    H, _ = G.edge_subgraph(ks)
    if not is_connected(H):
        return None
    degs = {v: len(inc[v]) for v in verts}
    if any(d < 2 for d in degs.values()):
        return None

    def other(k, v):
        a, b = G.edges[k]
        return b if a == v else a

    def walk(v, k):
        """Follow edge k out of v through degree-2 vertices; return (end, edges)."""
        path = [k]
        cur = other(k, v)
        while degs[cur] == 2:
            k2 = inc[cur][0] if inc[cur][1] == path[-1] else inc[cur][1]
            path.append(k2)
            cur = other(k2, cur)
        return cur, path

    if ne == nv:
        if any(d != 2 for d in degs.values()):
            return None
        start = min(verts)
        seq = [start]
        prev = None
        cur = start
        k = inc[start][0]
        while True:
            nxt = other(k, cur)
            if nxt == start:
                break
            seq.append(nxt)
            cur = nxt
            k = inc[cur][0] if inc[cur][1] == k else inc[cur][1]
        return ("cycle", ne, tuple(seq))
    if ne != nv + 1:
        return None
    big = sorted(v for v in verts if degs[v] > 2)
    if len(big) == 1 and degs[big[0]] == 4:
        x = big[0]
        cycles = []
        seen = set()
        for k in inc[x]:
            if k in seen:
                continue
            end, path = walk(x, k)
            if end != x:
                return None
            seen.update(path)
            cycles.append(frozenset(path))
        if len(cycles) != 2:
            return None
        c1, c2 = sorted(cycles, key=len)
        return ("paddle", len(c1), len(c2), 0, c1, c2)
    if len(big) == 2 and degs[big[0]] == 3 and degs[big[1]] == 3:
        x1, x2 = big
        loops = {}
        bridge = None
        for x in (x1, x2):
            seen = set()
            for k in inc[x]:
                if k in seen:
                    continue
                end, path = walk(x, k)
                seen.update(path)
                if end == x:
                    loops[x] = frozenset(path)
                else:
                    if bridge is not None and frozenset(path) != bridge:
                        return None  # a second x1-x2 path: theta graph
                    bridge = frozenset(path)
        if x1 not in loops or x2 not in loops or bridge is None:
            return None
        c1, c2 = sorted((loops[x1], loops[x2]), key=len)
        return ("paddle", len(c1), len(c2), len(bridge), c1, c2)
    return None


@dataclass(frozen=True)
class EvenCycle:
    length: int
    edges: frozenset = field(default=frozenset(), compare=False)


@dataclass(frozen=True)
class DoublyOddPaddle:
    m: int
    n: int
    path_len: int


@dataclass(frozen=True)
class TwoOddCycles:
    first: frozenset
    second: frozenset


def classify_minimal_coherent(G: Graph, S: Iterable) -> EvenCycle | DoublyOddPaddle:
    ks = _edge_indices(G, S)
    if not is_minimally_coherent(G, ks):
        raise ValueError("edge set is not minimally coherent")
    shape = circuit_shape(G, ks)
    if shape is not None and shape[0] == "cycle" and shape[1] % 2 == 0:
        return EvenCycle(shape[1], frozenset(ks))
    if shape is not None and shape[0] == "paddle" and shape[1] % 2 == 1 and shape[2] % 2 == 1:
        return DoublyOddPaddle(shape[1], shape[2], shape[3])
    raise InvariantViolation("classify_minimal_coherent",
                             f"circuit {sorted(G.edges[k] for k in ks)} is neither an even cycle nor a doubly-odd paddle")


def find_circuit(G: Graph) -> frozenset | None:
    """Some circuit: the fundamental circuit of the first edge that depends
    on the edges before it."""
    basis = IncrementalBasis(G.p)
    kept = []
    for k in range(G.q):
        dep = basis.add(_lambda_int(G, k))
        if dep is None:
            kept.append(k)
            continue
        members = kept + [k]
        return frozenset(m for m, c in zip(members, dep) if c)
    return None


def posa_witness(G: Graph) -> EvenCycle | TwoOddCycles:
    """An even cycle or two edge-disjoint odd cycles, read off a circuit."""
    if G.p < 4 or G.q < G.p + 1:
        raise ValueError("need p >= 4 and q >= p + 1")
    C = find_circuit(G)
    if C is None:
        raise InvariantViolation("posa_witness", "more edges than rank but no circuit found")
    kind = classify_minimal_coherent(G, C)
    if isinstance(kind, EvenCycle):
        return kind
    shape = circuit_shape(G, C)
    return TwoOddCycles(shape[4], shape[5])


def check_posa_witness(G: Graph, w) -> bool:
    if isinstance(w, EvenCycle):
        s = circuit_shape(G, w.edges)
        return s is not None and s[0] == "cycle" and s[1] % 2 == 0
    if isinstance(w, TwoOddCycles):
        if w.first & w.second:
            return False
        for c in (w.first, w.second):
            s = circuit_shape(G, c)
            if s is None or s[0] != "cycle" or s[1] % 2 == 0:
                return False
        return True
    return False


def is_mc_edge_connected(G: Graph, circuits: Sequence[frozenset] | None = None) -> bool:
    """Edges linked through chains of overlapping circuits, every edge covered."""
    if G.q == 0:
        return False
    if circuits is None:
        circuits = minimal_coherent_subgraphs(G, G.q)
    parent = list(range(G.q))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    covered = set()
    for c in circuits:
        c = sorted(c)
        covered.update(c)
        for k in c[1:]:
            parent[find(k)] = find(c[0])
    return len(covered) == G.q and len({find(k) for k in range(G.q)}) == 1


def paddle_count(p: int) -> int:
    """Unordered pairs {m, n} of odd integers >= 3 with m + n <= p + 1."""
    if p < 5:
        return 0
    s = (p - 1) // 2  # m = 2a + 1, n = 2b + 1, 1 <= a <= b, a + b <= s
    return s * s // 4


# -- edge-scaling automorphisms ---------------------------------------------------

def induced_map(G: Graph, u_block: RatMatrix, A: NormalAlgebra | None = None) -> GradedMap:
    """Extend a U-map to NG by sending each edge [x,y] to g(x) g(y)."""
    A = A if A is not None else graph_algebra(G)
    imgs = [A.u(u_block.col(v)) for v in range(G.p)]
    cols = [multiply(A, imgs[a], imgs[b]).z_part for a, b in G.edges]
    Z = RatMatrix.from_columns(cols, rows=G.q) if cols else RatMatrix.zeros(0, 0)
    return GradedMap(A, A, u_block, Z)


def edge_scaling_automorphisms(G: Graph) -> list[GradedMap]:
    """Search for automorphisms g with g(lambda_e) proportional to lambda_e.

    Writing M for the U-block of g^-1, the conditions lambda_e M = eps_e lambda_e
    are linear in (M, eps); each kernel vector whose M is invertible and
    whose induced map is an automorphism is returned (as g).
    """
    p, q = G.p, G.q
    nM = p * p
    rows = []
    for k, (a, b) in enumerate(G.edges):
        for j in range(p):
            r = [0] * (nM + q)
            r[a * p + j] += 1
            r[b * p + j] += 1
            if j in (a, b):
                r[nM + k] -= 1
            rows.append(r)
    A = graph_algebra(G)
    K = kernel_basis(rows, ncols=nM + q)
    # basis vectors can all be singular when a combination is not, so a
    # generic combination is tried as well
    candidates = list(K)
    if len(K) > 1:
        candidates.append(tuple(sum(Fraction(2) ** i * k[j] for i, k in enumerate(K)) for j in range(nM + q)))
    out = []
    for v in candidates:
        M = RatMatrix(p, p, v[:nM])
        if not is_invertible(M):
            continue
        g = induced_map(G, inverse(M), A)
        if is_homomorphism(g) and g.is_invertible() and g.z_block.is_diagonal():
            out.append(g)
    return out


def verify_edge_scaling_scalar(G: Graph, m: GradedMap) -> bool:
    """Is the edge-scaling automorphism m a scalar automorphism?"""
    if not isinstance(G, Graph):
        raise ValueError("expected a graph (its normal algebra is the domain)")
    if annihilator_basis(G):
        raise ValueError("precondition: the annihilator must be zero")
    if not is_mc_edge_connected(G):
        raise ValueError("precondition: graph must be MC-edge connected")
    if edge_scaling_data(G, m) is None:
        raise ValueError("precondition: map must scale every edge")
    alpha = m.u_block[0, 0]
    return (m.u_block == RatMatrix.identity(G.p).scale(alpha)
            and m.z_block == RatMatrix.identity(G.q).scale(alpha * alpha))
