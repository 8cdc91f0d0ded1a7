"""Canonical labeling of small graphs by partition refinement and
individualization, with automorphism pruning.

Graphs are passed as adjacency bitmasks: ``adj[v]`` has bit ``w`` set
when ``v ~ w``.  Everything is written for n <= 16.
"""

from __future__ import annotations

from typing import Sequence

MAX_ORDER = 16


def refine(adj: Sequence[int], cells: list[list[int]]) -> list[list[int]]:
    """Coarsest equitable refinement of an ordered partition.

    Split pieces are ordered by their neighbor-count signature, so the
    result is an isomorphism-invariant function of (graph, ordered partition).
    """
    cells = [c for c in cells if c]
    while True:
        masks = []
        for c in cells:
            m = 0
            for v in c:
                m |= 1 << v
            masks.append(m)
        out: list[list[int]] = []
        split = False
        for c in cells:
            if len(c) == 1:
                out.append(c)
                continue
            groups: dict[tuple, list[int]] = {}
            for v in c:
                a = adj[v]
                sig = tuple((a & m).bit_count() for m in masks)
                groups.setdefault(sig, []).append(v)
            if len(groups) == 1:
                out.append(c)
            else:
                split = True
                for sig in sorted(groups):
                    out.append(groups[sig])
        cells = out
        if not split:
            return cells


class _UnionFind:
    def __init__(self, n):
        self.p = list(range(n))

    def find(self, x):
        p = self.p
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, a, b):
        a, b = self.find(a), self.find(b)
        if a != b:
            if a < b:
                self.p[b] = a
            else:
                self.p[a] = b


def orbits(n: int, gens: Sequence[Sequence[int]]) -> list[int]:
    """Orbit representative (smallest member) for each point."""
    uf = _UnionFind(n)
    for g in gens:
        for i, j in enumerate(g):
            uf.union(i, j)
    return [uf.find(i) for i in range(n)]


def _certificate(adj, order):
    pos = [0] * len(order)
    for i, v in enumerate(order):
        pos[v] = i
    cert = []
    for v in order:
        a = adj[v]
        m = 0
        while a:
            low = a & -a
            m |= 1 << pos[low.bit_length() - 1]
            a ^= low
        cert.append(m)
    return tuple(cert)


class CanonResult:
    """Canonical labeling of one graph.

    ``labeling[i]`` is the original vertex placed at canonical position i;
    ``certificate`` is the relabeled adjacency (equal iff isomorphic, for
    the same initial partition shape); ``generators`` generate the
    automorphism group preserving the initial partition.
    """

    __slots__ = ("labeling", "certificate", "generators")

    def __init__(self, labeling, certificate, generators):
        self.labeling = labeling
        self.certificate = certificate
        self.generators = generators

    def position(self) -> list[int]:
        pos = [0] * len(self.labeling)
        for i, v in enumerate(self.labeling):
            pos[v] = i
        return pos


def canonical_labeling(adj: Sequence[int], cells: list[list[int]] | None = None) -> CanonResult:
    n = len(adj)
    if n > MAX_ORDER:
        raise ValueError("exceeds canonicalization bound")
    if cells is None:
        cells = [list(range(n))]
    if n == 0:
        return CanonResult((), (), [])
    start = refine(adj, cells)

    gens: list[tuple[int, ...]] = []
    first: list = [None, None]  # certificate, order of the first leaf
    best: list = [None, None]

    def leaf(order):
        cert = _certificate(adj, order)
        if first[0] is None:
            first[0], first[1] = cert, order
            best[0], best[1] = cert, order
            return
        for ref_cert, ref_order in ((first[0], first[1]), (best[0], best[1])):
            if cert == ref_cert:
                g = [0] * n
                for a, b in zip(ref_order, order):
                    g[a] = b
                g = tuple(g)
                if any(x != i for i, x in enumerate(g)) and g not in gens:
                    gens.append(g)
                return
        if cert > best[0]:
            best[0], best[1] = cert, order

    def search(part, prefix):
        if len(part) == n:
            leaf(tuple(c[0] for c in part))
            return
        # first smallest non-singleton cell
        ti = -1
        size = n + 1
        for i, c in enumerate(part):
            if 1 < len(c) < size:
                ti, size = i, len(c)
        cell = part[ti]
        tried: list[int] = []
        for v in cell:
            if tried:
                fixing = [g for g in gens if all(g[x] == x for x in prefix)]
                if fixing:
                    orb = orbits(n, fixing)
                    if any(orb[v] == orb[w] for w in tried):
                        continue
            tried.append(v)
            rest = [w for w in cell if w != v]
            child = part[:ti] + [[v], rest] + part[ti + 1:]
            search(refine(adj, child), prefix + [v])

    search(start, [])
    return CanonResult(best[1], best[0], gens)


def adjacency_masks(n: int, edges: Sequence[tuple[int, int]]) -> list[int]:
    adj = [0] * n
    for i, j in edges:
        adj[i] |= 1 << j
        adj[j] |= 1 << i
    return adj


def group_closure(gens: Sequence[Sequence[int]], n: int, limit: int = 10**6) -> set[tuple[int, ...]]:
    """All elements of the permutation group generated by ``gens``."""
    ident = tuple(range(n))
    seen = {ident}
    frontier = [ident]
    gens = [tuple(g) for g in gens]
    while frontier:
        nxt = []
        for h in frontier:
            for g in gens:
                k = tuple(g[h[i]] for i in range(n))
                if k not in seen:
                    seen.add(k)
                    nxt.append(k)
                    if len(seen) > limit:
                        raise ValueError("group too large to enumerate")
        frontier = nxt
    return seen
