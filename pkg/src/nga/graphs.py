"""Finite simple graphs: construction, graph6 / edge-list I/O, structural
predicates, cycles, canonical forms, automorphisms and small censuses."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, NamedTuple, Sequence

from . import canon
from .canon import MAX_ORDER, adjacency_masks, group_closure

Edge = tuple[int, int]


class Graph6Error(ValueError):
    """Malformed graph6 input."""


@dataclass(frozen=True, eq=True)
class Graph:
    """Simple graph on vertices ``0..p-1``.

    ``edges`` is normalized to sorted ``(i, j)`` pairs with ``i < j``.
    ``labels`` is an optional display table and never affects algorithms
    or equality.
    """

    p: int
    edges: tuple[Edge, ...] = ()
    labels: tuple[str, ...] | None = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        if self.p < 0:
            raise ValueError("negative order")
        norm = set()
        for e in self.edges:
            i, j = e
            if i == j:
                raise ValueError(f"loop at vertex {i}")
            if not (0 <= i < self.p and 0 <= j < self.p):
                raise ValueError(f"edge {e} has an endpoint outside 0..{self.p - 1}")
            pair = (i, j) if i < j else (j, i)
            if pair in norm:
                raise ValueError(f"duplicate edge {pair}")
            norm.add(pair)
        object.__setattr__(self, "edges", tuple(sorted(norm)))
        if self.labels is not None and len(self.labels) != self.p:
            raise ValueError("label table does not match the order")

    @property
    def q(self) -> int:
        return len(self.edges)

    @cached_property
    def adj(self) -> tuple[int, ...]:
        return tuple(adjacency_masks(self.p, self.edges))

    @cached_property
    def neighbors(self) -> tuple[tuple[int, ...], ...]:
        nb = [[] for _ in range(self.p)]
        for i, j in self.edges:
            nb[i].append(j)
            nb[j].append(i)
        return tuple(tuple(sorted(x)) for x in nb)

    @cached_property
    def edge_index(self) -> dict[Edge, int]:
        return {e: k for k, e in enumerate(self.edges)}

    def index_of(self, e: Sequence[int]) -> int:
        i, j = e
        key = (i, j) if i < j else (j, i)
        try:
            return self.edge_index[key]
        except KeyError:
            raise ValueError(f"{tuple(e)} is not an edge of the graph") from None

    def has_edge(self, i: int, j: int) -> bool:
        return bool(self.adj[i] >> j & 1) if i != j else False

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [a.bit_count() for a in self.adj]

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def edge_label(self, k: int) -> str:
        i, j = self.edges[k]
        return f"[{self.label(i)},{self.label(j)}]"

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Image under the vertex map ``v -> perm[v]``."""
        return Graph(self.p, tuple((perm[i], perm[j]) for i, j in self.edges))

    def delete_edges(self, ks: Iterable[int]) -> "Graph":
        drop = set(ks)
        return Graph(self.p, tuple(e for k, e in enumerate(self.edges) if k not in drop))

    def edge_subgraph(self, ks: Iterable[int]) -> tuple["Graph", list[int]]:
        """Graph spanned by the given edges, with its vertices renumbered.

        Returns the subgraph and the list mapping new vertex -> old vertex.
        """
        es = [self.edges[k] for k in ks]
        verts = sorted({v for e in es for v in e})
        pos = {v: i for i, v in enumerate(verts)}
        return Graph(len(verts), tuple((pos[i], pos[j]) for i, j in es)), verts

    def __str__(self):
        return f"Graph(p={self.p}, q={self.q}, edges={list(self.edges)})"


# -- constructors -------------------------------------------------------------

def from_edges(p: int, edges: Iterable[Sequence[int]], labels=None) -> Graph:
    return Graph(p, tuple(tuple(e) for e in edges), labels)


def empty_graph(p: int) -> Graph:
    return Graph(p)


def path_graph(p: int) -> Graph:
    return Graph(p, tuple((i, i + 1) for i in range(p - 1)))


def cycle_graph(p: int) -> Graph:
    if p < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph(p, tuple((i, (i + 1) % p) for i in range(p)))


def complete_graph(p: int) -> Graph:
    return Graph(p, tuple(itertools.combinations(range(p), 2)))


def star_graph(leaves: int) -> Graph:
    """Center 0 joined to ``leaves`` other vertices; ``star_graph(3)`` is the claw."""
    return Graph(leaves + 1, tuple((0, i) for i in range(1, leaves + 1)))


def disjoint_union(*graphs: Graph) -> Graph:
    edges = []
    off = 0
    for g in graphs:
        edges.extend((i + off, j + off) for i, j in g.edges)
        off += g.p
    return Graph(off, tuple(edges))


def paddle_graph(m: int, n: int, path_len: int) -> Graph:
    """Cycles of lengths m and n joined by a path with ``path_len`` edges
    (``path_len == 0``: the cycles share one vertex)."""
    if m < 3 or n < 3 or path_len < 0:
        raise ValueError("need m, n >= 3 and path_len >= 0")
    edges = [(i, (i + 1) % m) for i in range(m)]
    # path from vertex 0 of the first cycle
    prev = 0
    nxt = m
    for _ in range(path_len):
        edges.append((prev, nxt))
        prev = nxt
        nxt += 1
    anchor = prev
    ring = [anchor] + list(range(nxt, nxt + n - 1))
    for i in range(n):
        edges.append((ring[i], ring[(i + 1) % n]))
    return Graph(nxt + n - 1, tuple(edges))


def butterfly() -> Graph:
    return paddle_graph(3, 3, 0)


# -- graph6 ------------------------------------------------------------------

_HEADER = ">>graph6<<"


def _decode_n(data: bytes, start: int) -> tuple[int, int]:
    if start >= len(data):
        raise Graph6Error(f"byte {start}: missing size")
    b0 = data[start]
    if b0 < 63 or b0 > 126:
        raise Graph6Error(f"byte {start}: invalid character {chr(b0)!r}")
    if b0 != 126:
        return b0 - 63, start + 1
    if start + 1 < len(data) and data[start + 1] == 126:
        width, off = 6, start + 2
    else:
        width, off = 3, start + 1
    if off + width > len(data):
        raise Graph6Error(f"byte {off}: truncated size field")
    n = 0
    for k in range(width):
        c = data[off + k]
        if c < 63 or c > 126:
            raise Graph6Error(f"byte {off + k}: invalid character {chr(c)!r}")
        n = (n << 6) | (c - 63)
    return n, off + width


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line (optional ``>>graph6<<`` header)."""
    s = text.strip()
    if s.startswith(_HEADER):
        s = s[len(_HEADER):]
        base = len(_HEADER)
    else:
        base = 0
    if not s:
        raise Graph6Error("byte 0: empty input")
    try:
        data = s.encode("ascii")
    except UnicodeEncodeError:
        raise Graph6Error("non-ASCII input") from None
    try:
        n, pos = _decode_n(data, 0)
    except Graph6Error as exc:
        raise Graph6Error(_shift(str(exc), base)) from None
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = data[pos:]
    if len(body) != need:
        raise Graph6Error(f"byte {base + pos}: expected {need} data bytes for n={n}, got {len(body)}")
    bits = 0
    for k, c in enumerate(body):
        if c < 63 or c > 126:
            raise Graph6Error(f"byte {base + pos + k}: invalid character {chr(c)!r}")
        bits = (bits << 6) | (c - 63)
    pad = need * 6 - nbits
    if pad and bits & ((1 << pad) - 1):
        raise Graph6Error(f"byte {base + pos + need - 1}: nonzero padding bits")
    bits >>= pad
    edges = []
    k = nbits - 1
    for j in range(1, n):
        for i in range(j):
            if bits >> k & 1:
                edges.append((i, j))
            k -= 1
    return Graph(n, tuple(edges))


def _shift(msg: str, base: int) -> str:
    if base and msg.startswith("byte "):
        num, rest = msg[5:].split(":", 1)
        return f"byte {int(num) + base}:{rest}"
    return msg


def to_graph6(G: Graph, header: bool = False) -> str:
    n = G.p
    if n < 63:
        out = [n + 63]
    elif n < 258048:
        out = [126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)]
    else:
        out = [126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)]
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append(1 if G.has_edge(i, j) else 0)
    while len(bits) % 6:
        bits.append(0)
    for k in range(0, len(bits), 6):
        x = 0
        for b in bits[k:k + 6]:
            x = (x << 1) | b
        out.append(x + 63)
    s = bytes(out).decode("ascii")
    return _HEADER + s if header else s


def read_graph6_file(path) -> list[Graph]:
    with open(path) as fh:
        return [parse_graph6(line) for line in fh if line.strip()]


def parse_edge_list(text: str) -> Graph:
    """Edge-list text: first line ``p q``, then q lines ``i j``."""
    lines = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines:
        raise ValueError("empty edge list")
    try:
        p, q = (int(x) for x in lines[0])
        edges = [(int(a), int(b)) for a, b in lines[1:]]
    except ValueError:
        raise ValueError("edge list: expected integer pairs") from None
    if len(edges) != q:
        raise ValueError(f"edge list: header says {q} edges, found {len(edges)}")
    return Graph(p, tuple(edges))


def to_edge_list(G: Graph) -> str:
    return "\n".join([f"{G.p} {G.q}"] + [f"{i} {j}" for i, j in G.edges]) + "\n"


# -- structure ---------------------------------------------------------------

def components(G: Graph) -> list[list[int]]:
    seen = 0
    comps = []
    for v in range(G.p):
        if seen >> v & 1:
            continue
        comp = 1 << v
        frontier = comp
        while frontier:
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                nxt |= G.adj[low.bit_length() - 1]
                f ^= low
            nxt &= ~comp
            comp |= nxt
            frontier = nxt
        seen |= comp
        comps.append([w for w in range(G.p) if comp >> w & 1])
    return comps


def is_connected(G: Graph) -> bool:
    return G.p <= 1 or len(components(G)) == 1


class BipartiteStructure(NamedTuple):
    k: int
    k_b: int
    parts: list[tuple[tuple[int, ...], tuple[int, ...]] | None]


def bipartite_structure(G: Graph) -> BipartiteStructure:
    """Components, bipartite components, and a 2-coloring of each bipartite one.

    An isolated vertex is a bipartite component with parts ``((v,), ())``.
    """
    color = [-1] * G.p
    parts = []
    kb = 0
    comps = components(G)
    for comp in comps:
        s = comp[0]
        color[s] = 0
        stack = [s]
        ok = True
        while stack:
            v = stack.pop()
            for w in G.neighbors[v]:
                if color[w] < 0:
                    color[w] = 1 - color[v]
                    stack.append(w)
                elif color[w] == color[v]:
                    ok = False
        if ok:
            kb += 1
            parts.append((tuple(v for v in comp if color[v] == 0),
                          tuple(v for v in comp if color[v] == 1)))
        else:
            parts.append(None)
    return BipartiteStructure(len(comps), kb, parts)


def is_bipartite(G: Graph) -> bool:
    bs = bipartite_structure(G)
    return bs.k == bs.k_b


def is_bridge(G: Graph, e: Sequence[int]) -> bool:
    k = G.index_of(e)
    return len(components(G.delete_edges([k]))) > len(components(G))


def is_cut_vertex(G: Graph, v: int) -> bool:
    return _is_cut(G.adj, G.p, v)


def _is_cut(adj: Sequence[int], n: int, v: int) -> bool:
    """Does deleting v split its component?"""
    nb = adj[v]
    if nb & (nb - 1) == 0:  # degree 0 or 1
        return False
    mask = ((1 << n) - 1) & ~(1 << v)
    start = nb & -nb
    comp = start
    frontier = start
    while frontier:
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            nxt |= adj[low.bit_length() - 1]
            f ^= low
        nxt &= mask & ~comp
        comp |= nxt
        frontier = nxt
        if nb & ~comp == 0:
            return False
    return True


def is_tree(G: Graph) -> bool:
    return G.p >= 1 and G.q == G.p - 1 and is_connected(G)


def is_unicyclic(G: Graph) -> bool:
    return G.p >= 3 and G.q == G.p and is_connected(G)


def is_cycle(G: Graph) -> bool:
    return G.p >= 3 and is_unicyclic(G) and all(d == 2 for d in G.degrees())


def girth(G: Graph) -> int | None:
    best = None
    for s in range(G.p):
        dist = {s: 0}
        parent = {s: -1}
        queue = [s]
        for v in queue:
            for w in G.neighbors[v]:
                if w not in dist:
                    dist[w] = dist[v] + 1
                    parent[w] = v
                    queue.append(w)
                elif parent[v] != w:
                    c = dist[v] + dist[w] + 1
                    if best is None or c < best:
                        best = c
    return best


# -- cycles ------------------------------------------------------------------

def enumerate_cycles(G: Graph, max_len: int) -> list[tuple[int, ...]]:
    """All cycles of length 3..max_len, each as its canonical vertex sequence:
    starts at its smallest vertex, second vertex smaller than the last."""
    if max_len < 3:
        raise ValueError("max_len must be at least 3")
    out = []
    nbrs = G.neighbors
    for s in range(G.p):
        path = [s]
        on_path = 1 << s

        def dfs(v):
            nonlocal on_path
            for w in nbrs[v]:
                if w == s:
                    if len(path) >= 3 and path[1] < path[-1]:
                        out.append(tuple(path))
                elif w > s and not (on_path >> w & 1) and len(path) < max_len:
                    path.append(w)
                    on_path |= 1 << w
                    dfs(w)
                    path.pop()
                    on_path &= ~(1 << w)

        dfs(s)
    out.sort(key=lambda c: (len(c), c))
    return out


def cycle_edges(G: Graph, cycle: Sequence[int]) -> frozenset[int]:
    n = len(cycle)
    return frozenset(G.index_of((cycle[i], cycle[(i + 1) % n])) for i in range(n))


# -- canonical forms and automorphisms ----------------------------------------

def _check_bound(G: Graph):
    if G.p > MAX_ORDER:
        raise ValueError("exceeds canonicalization bound")


def canonical_labeling(G: Graph) -> list[int]:
    """``perm`` with ``G.relabel(perm) == canonical_form(G)``."""
    _check_bound(G)
    return canon.canonical_labeling(G.adj).position()


def canonical_form(G: Graph) -> Graph:
    _check_bound(G)
    return G.relabel(canonical_labeling(G))


def certificate(G: Graph) -> tuple:
    """Hashable isomorphism invariant that is complete: equal iff isomorphic
    (for graphs of the same order)."""
    _check_bound(G)
    return (G.p, canon.canonical_labeling(G.adj).certificate)


def is_isomorphic(G: Graph, H: Graph) -> bool:
    return G.p == H.p and G.q == H.q and certificate(G) == certificate(H)


def automorphism_generators(G: Graph) -> list[tuple[int, ...]]:
    """Generators of aut G as vertex permutations ``v -> g[v]``."""
    _check_bound(G)
    return list(canon.canonical_labeling(G.adj).generators)


def automorphism_group(G: Graph) -> set[tuple[int, ...]]:
    return group_closure(automorphism_generators(G), G.p)


def is_automorphism(G: Graph, perm: Sequence[int]) -> bool:
    if sorted(perm) != list(range(G.p)):
        return False
    return all(G.has_edge(perm[i], perm[j]) for i, j in G.edges)


# -- census -------------------------------------------------------------------

UNRESTRICTED_BOUND = 9
REGULAR_BOUND = 10


def _subset_orbit_reps(n: int, gens: Sequence[Sequence[int]]) -> Iterator[int]:
    """One bitmask per orbit of aut on subsets of ``range(n)``."""
    if not gens:
        yield from range(1 << n)
        return
    seen = bytearray(1 << n)
    images = []
    for g in gens:
        # image of each single-bit mask
        images.append([1 << g[i] for i in range(n)])
    for s in range(1 << n):
        if seen[s]:
            continue
        yield s
        seen[s] = 1
        stack = [s]
        while stack:
            t = stack.pop()
            for img in images:
                u = 0
                x = t
                while x:
                    low = x & -x
                    u |= img[low.bit_length() - 1]
                    x ^= low
                if not seen[u]:
                    seen[u] = 1
                    stack.append(u)


class _Node:
    __slots__ = ("adj", "gens")

    def __init__(self, adj, gens):
        self.adj = adj
        self.gens = gens


def _accept(adj: list[int], n: int, connected: bool) -> bool:
    """Canonical-augmentation test: is the last vertex the canonical
    deletion vertex of the graph (up to automorphism)?"""
    v = n - 1
    dv = adj[v].bit_count()
    degs = [a.bit_count() for a in adj]
    # the canonical vertex has maximum degree among eligible vertices
    for w in range(n - 1):
        if degs[w] > dv and (not connected or not _is_cut(adj, n, w)):
            return False
    top = [w for w in range(n) if degs[w] == dv and (not connected or w == v or not _is_cut(adj, n, w))]
    if len(top) == 1:
        return True
    topset = set(top)
    rest: dict[int, list[int]] = {}
    for w in range(n):
        if w not in topset:
            rest.setdefault(degs[w] + (n + 1 if (connected and not _is_cut(adj, n, w)) else 0), []).append(w)
    cells = [rest[k] for k in sorted(rest)] + [top]
    part = canon.refine(adj, cells)
    last = part[-1]
    if v not in last:
        return False
    if len(last) == 1:
        return True
    res = canon.canonical_labeling(adj, part)
    pos = res.position()
    m = max(last, key=lambda w: pos[w])
    if m == v:
        return True
    orb = canon.orbits(n, res.generators)
    return orb[m] == orb[v]


def census(p: int, connected: bool = False, regular_degree: int | None = None,
           ordered: bool = True) -> list[Graph]:
    """One graph per isomorphism class on p vertices.

    Generated by canonical augmentation (adding one vertex at a time).
    With ``ordered`` the result is sorted by canonical certificate and each
    graph is returned in its canonical labeling.
    """
    if p < 0:
        raise ValueError("negative order")
    if regular_degree is not None:
        if p > REGULAR_BOUND:
            raise ValueError(f"regular census limited to p <= {REGULAR_BOUND}")
        if regular_degree < 0 or regular_degree >= max(p, 1) and p > 0:
            return []
        if (p * regular_degree) % 2:
            return []
    elif p > UNRESTRICTED_BOUND or (p == UNRESTRICTED_BOUND and not connected):
        raise ValueError(f"census limited to p <= {UNRESTRICTED_BOUND - 1} "
                         f"(connected: p <= {UNRESTRICTED_BOUND})")
    if p == 0:
        return [Graph(0)]

    d = regular_degree

    def viable(adj, m):
        if d is None:
            return True
        left = p - m
        deficit = 0
        for a in adj:
            c = a.bit_count()
            if c > d or d - c > left:
                return False
            deficit += d - c
        return deficit <= d * left

    level = [_Node([0], [])]
    for m in range(1, p):
        nxt = []
        for node in level:
            for s in _subset_orbit_reps(m, node.gens):
                if connected and s == 0:
                    continue
                if d is not None and s.bit_count() > d:
                    continue
                adj = node.adj[:]
                x = s
                while x:
                    low = x & -x
                    adj[low.bit_length() - 1] |= 1 << m
                    x ^= low
                adj.append(s)
                if not viable(adj, m + 1):
                    continue
                if not _accept(adj, m + 1, connected):
                    continue
                nxt.append(adj)
        if m + 1 < p:
            level = [_Node(a, canon.canonical_labeling(a).generators) for a in nxt]
        else:
            level = [_Node(a, None) for a in nxt]
    graphs = []
    for node in level:
        adj = node.adj
        edges = tuple((i, j) for j in range(p) for i in range(j) if adj[i] >> j & 1)
        graphs.append(Graph(p, edges))
    if d is not None:
        graphs = [g for g in graphs if all(x == d for x in g.degrees())]
    if ordered:
        keyed = []
        for g in graphs:
            res = canon.canonical_labeling(g.adj)
            keyed.append((res.certificate, g.relabel(res.position())))
        keyed.sort(key=lambda t: t[0])
        graphs = [g for _, g in keyed]
    return graphs


def iter_random_graphs(rng, count: int, max_order: int, min_order: int = 1) -> Iterator[Graph]:
    """Erdos-Renyi style samples with a random order and edge density."""
    for _ in range(count):
        p = rng.randint(min_order, max_order)
        dens = rng.random()
        yield Graph(p, tuple(e for e in itertools.combinations(range(p), 2) if rng.random() < dens))
