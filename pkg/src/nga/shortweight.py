"""Short functionals, supports and weights, the annihilator, and incidence ranks."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .algebra import Element, InvariantViolation, NormalAlgebra, graph_algebra, multiply
from .exactlin import RatMatrix, kernel_basis, normalize, rank, solve, vec
from .graphs import Graph, bipartite_structure


@dataclass(frozen=True)
class ShortFunctional:
    """A pair (lambda on the U-basis, mu on the Z-basis) of a graph algebra
    making ``u + z -> lambda(u) r + mu(z) s`` a homomorphism to the spline
    algebra.  Validated on construction."""

    graph: Graph
    lam: tuple
    mu: tuple
    source_edge: tuple[int, int] | None = None

    def __post_init__(self):
        object.__setattr__(self, "lam", vec(self.lam))
        object.__setattr__(self, "mu", vec(self.mu))
        problem = short_conditions_violation(self.graph, self.lam, self.mu)
        if problem:
            raise ValueError(problem)

    def __call__(self, u: Sequence) -> Fraction:
        return sum((a * b for a, b in zip(self.lam, u) if a and b), Fraction(0))

    def span(self) -> tuple:
        return normalize(self.lam)


def short_conditions_violation(G: Graph, lam: Sequence, mu: Sequence) -> str | None:
    """None when (lam, mu) satisfy the three short-functional conditions,
    else a description of the first failure."""
    if len(lam) != G.p or len(mu) != G.q:
        return "wrong vector lengths"
    if not any(lam):
        return "short functionals are nonzero"
    for x in range(G.p):
        if not lam[x]:
            continue
        for y in range(x + 1, G.p):
            if lam[y] and not G.has_edge(x, y):
                return f"nonadjacent vertices {x}, {y} both have nonzero value"
        if lam[x] != sum((lam[t] for t in G.neighbors[x]), Fraction(0)):
            return f"value at {x} is not the sum over its neighbors"
    for k, (x, y) in enumerate(G.edges):
        if mu[k] != lam[x] * lam[y]:
            return f"mu on edge {(x, y)} is not lambda(x) lambda(y)"
    return None


def lambda_of_edge(G: Graph, e: Sequence[int]) -> ShortFunctional:
    k = G.index_of(e)
    a, b = G.edges[k]
    lam = [0] * G.p
    lam[a] = lam[b] = 1
    mu = [0] * G.q
    mu[k] = 1
    return ShortFunctional(G, lam, mu, (a, b))


def lambda_matrix(G: Graph, edge_subset: Sequence[int] | None = None) -> list[list[int]]:
    """Rows are lambda_e over the vertices, for the chosen edge indices."""
    ks = range(G.q) if edge_subset is None else edge_subset
    rows = []
    for k in ks:
        a, b = G.edges[k]
        r = [0] * G.p
        r[a] = r[b] = 1
        rows.append(r)
    return rows


def _cliques(G: Graph, min_size: int = 2):
    """All cliques (not just maximal ones) of at least ``min_size`` vertices."""
    out = []

    def grow(clique, cand):
        if len(clique) >= min_size:
            out.append(tuple(clique))
        for v in cand:
            grow(clique + [v], [w for w in cand if w > v and G.has_edge(v, w)])

    grow([], list(range(G.p)))
    return out


def oracle_short_functionals(G: Graph) -> list[ShortFunctional]:
    """Short functionals found without assuming they come from edges.

    The nonzero set K of a short functional is a clique.  For every clique
    K, solve the linear conditions lambda(x) = sum of lambda over the other
    members of K for lambda supported on K, and keep the solution lines
    whose members are nonzero on all of K.
    """
    found = []
    for K in _cliques(G, 2):
        n = len(K)
        # lambda(x) - sum_{t in K, t != x} lambda(t) = 0, restricted to K
        rows = [[1 if i == j else -1 for j in range(n)] for i in range(n)]
        sols = kernel_basis(rows, ncols=n)
        if len(sols) > 1:
            raise InvariantViolation("oracle_short_functionals", f"solution space on clique {K} is not a line")
        for sol in sols:
            if not all(sol):
                continue
            lam = [Fraction(0)] * G.p
            for v, c in zip(K, sol):
                lam[v] = c
            mu = [lam[x] * lam[y] for x, y in G.edges]
            found.append(ShortFunctional(G, lam, mu))
    return found


@dataclass(frozen=True)
class SupportProfile:
    support: frozenset
    weight: int


def support_profile(A: NormalAlgebra, z: Element) -> SupportProfile:
    if z.algebra is not A:
        raise ValueError("element is not in this algebra")
    if not z.is_pure_z():
        raise ValueError("support is defined for Z-elements only")
    supp = frozenset(k for k, c in enumerate(z.z_part) if c)
    return SupportProfile(supp, len(supp))


def weight_by_functionals(G: Graph, z: Element, scales: Sequence | None = None) -> int:
    """Number of (optionally rescaled) mu_e that do not vanish on z."""
    count = 0
    for k in range(G.q):
        f = lambda_of_edge(G, G.edges[k]).mu
        c = 1 if scales is None else scales[k]
        if sum(c * a * b for a, b in zip(f, z.z_part)):
            count += 1
    return count


def annihilator_basis(G: Graph) -> list[tuple]:
    """Basis of {u : lambda_e(u) = 0 for every edge e}."""
    return kernel_basis(lambda_matrix(G), ncols=G.p)


def incidence_matrix(G: Graph, oriented: bool = False) -> RatMatrix:
    """Vertices x edges.  Oriented: each edge runs from its smaller to its
    larger endpoint and carries -1 at the tail."""
    rows = [[0] * G.q for _ in range(G.p)]
    for k, (a, b) in enumerate(G.edges):
        rows[a][k] = -1 if oriented else 1
        rows[b][k] = 1
    return RatMatrix.from_rows(rows, cols=G.q)


def incidence_rank(G: Graph, oriented: bool = False) -> int:
    return rank(incidence_matrix(G, oriented))


def incidence_rank_formula(G: Graph, oriented: bool = False) -> int:
    bs = bipartite_structure(G)
    return G.p - (bs.k if oriented else bs.k_b)


def lambda_values(G: Graph, u: Sequence) -> list[Fraction]:
    u = vec(u)
    return [u[a] + u[b] for a, b in G.edges]


def verify_product_identity(G: Graph, u: Element, v: Element, A: NormalAlgebra | None = None) -> bool:
    """uv == sum_e lambda_e(u) lambda_e(v) e and supp(uv) = supp(u^2) & supp(v^2)."""
    A = A if A is not None else u.algebra
    if any(u.z_part) or any(v.z_part):
        raise ValueError("expected U-elements")
    uv = multiply(A, u, v).z_part
    lu, lv = lambda_values(G, u.u_part), lambda_values(G, v.u_part)
    if uv != tuple(a * b for a, b in zip(lu, lv)):
        return False
    uu = multiply(A, u, u).z_part
    vv = multiply(A, v, v).z_part
    supp = {k for k, c in enumerate(uv) if c}
    return supp == {k for k, c in enumerate(uu) if c} & {k for k, c in enumerate(vv) if c}


# -- short functionals of an arbitrary normal algebra --------------------------

def algebra_short_functionals(A: NormalAlgebra) -> list[tuple[tuple, tuple]]:
    """All short functionals of a normal algebra, up to scalars, as
    (lambda, mu) pairs with lambda normalized (first nonzero = 1).

    Nothing about the algebra is assumed: the condition is that
    ``lambda_i lambda_j`` is the value of one linear functional mu on the
    structure constants c_ij, i.e. every linear relation among the c_ij
    must also hold among the products lambda_i lambda_j.  The resulting
    homogeneous quadratic system is solved chart by chart (first nonzero
    coordinate fixed to 1) with sympy, keeping rational solutions.  Only
    algebras whose structure constants span Z are supported, so that mu is
    determined by lambda.
    """
    import sympy

    pairs = [(i, j) for i in range(A.dimU) for j in range(i, A.dimU)]
    cols = [A.product(i, j) for i, j in pairs]
    if rank(cols) != A.dimZ:
        raise ValueError("structure constants do not span Z; mu would not be determined")
    # relations: coefficient vectors r with sum_r r_ij c_ij = 0
    M = RatMatrix.from_rows([[cols[k][z] for k in range(len(pairs))] for z in range(A.dimZ)], cols=len(pairs))
    relations = kernel_basis(M)
    xs = sympy.symbols(f"x0:{A.dimU}")
    out = []
    for lead in range(A.dimU):
        sub = {xs[i]: 0 for i in range(lead)}
        sub[xs[lead]] = 1
        free = [xs[i] for i in range(lead + 1, A.dimU)]
        eqs = []
        for r in relations:
            expr = sum(sympy.Rational(c.numerator, c.denominator) * xs[i] * xs[j]
                       for c, (i, j) in zip(r, pairs) if c)
            expr = sympy.expand(expr.subs(sub))
            if expr != 0:
                eqs.append(expr)
        if not eqs:
            if free:
                raise ValueError("positive-dimensional family of short functionals")
            sols = [{}]
        elif not free:
            continue  # a nonzero constant equation: no solution in this chart
        else:
            sols = sympy.solve(eqs, free, dict=True)
        for s in sols:
            vals = []
            for i in range(A.dimU):
                if xs[i] in sub:
                    vals.append(sympy.Integer(sub[xs[i]]))
                else:
                    val = sympy.nsimplify(s.get(xs[i], xs[i]))
                    vals.append(val)
            if any(not v.is_Rational for v in vals):
                if any(v.free_symbols for v in vals):
                    raise ValueError("positive-dimensional family of short functionals")
                continue  # irrational point, not over the rationals
            lam = tuple(Fraction(int(v.p), int(v.q)) for v in vals)
            mu = _solve_mu(A, lam, cols, pairs)
            out.append((lam, mu))
    uniq = []
    for item in out:
        if item not in uniq:
            uniq.append(item)
    return uniq


def _solve_mu(A: NormalAlgebra, lam, cols, pairs) -> tuple:
    # rows of M are the c_ij, so M mu lists the values mu(c_ij)
    targets = [lam[i] * lam[j] for i, j in pairs]
    M = RatMatrix.from_rows(cols, cols=A.dimZ)
    mu = solve(M, targets)
    if mu is None:
        raise InvariantViolation("short_functional_mu", "no mu for a solution lambda")
    return mu


def is_short_functional_of(A: NormalAlgebra, lam: Sequence, mu: Sequence) -> bool:
    lam, mu = vec(lam), vec(mu)
    for i in range(A.dimU):
        for j in range(i, A.dimU):
            if sum(a * b for a, b in zip(mu, A.product(i, j))) != lam[i] * lam[j]:
                return False
    return any(lam)
