"""Normal algebras: commutative, graded ``U + Z`` with ``U*U`` in ``Z`` and
every other product zero.

An algebra is stored by its structure constants on unordered pairs of
U-basis elements only, so the grading cannot be violated.  Maps between
algebras are block matrices (one block per graded piece).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from .exactlin import RatMatrix, as_fraction, inverse, is_invertible, vec
from .graphs import Graph, is_automorphism


class InvariantViolation(RuntimeError):
    """A check that must hold by construction (or by a theorem) failed."""

    def __init__(self, check: str, detail: str = ""):
        self.check = check
        super().__init__(f"{check}: {detail}" if detail else check)


def _zero(n):
    return (Fraction(0),) * n


@dataclass(frozen=True, eq=False)
class NormalAlgebra:
    dimU: int
    dimZ: int
    sc: Mapping[tuple[int, int], tuple[Fraction, ...]]
    u_labels: tuple[str, ...] = field(default=())
    z_labels: tuple[str, ...] = field(default=())
    name: str = ""

    def __post_init__(self):
        table = {}
        for (i, j), z in self.sc.items():
            if not (0 <= i < self.dimU and 0 <= j < self.dimU):
                raise ValueError(f"structure constant index {(i, j)} out of range")
            z = vec(z)
            if len(z) != self.dimZ:
                raise ValueError("structure constant has the wrong length")
            key = (i, j) if i <= j else (j, i)
            if key in table and table[key] != z:
                raise ValueError(f"conflicting structure constants for {key}")
            if any(z):
                table[key] = z
        object.__setattr__(self, "sc", table)
        if not self.u_labels:
            object.__setattr__(self, "u_labels", tuple(f"u{i}" for i in range(self.dimU)))
        if not self.z_labels:
            object.__setattr__(self, "z_labels", tuple(f"z{i}" for i in range(self.dimZ)))

    def product(self, i: int, j: int) -> tuple[Fraction, ...]:
        """Z-vector of the product of U-basis elements i and j."""
        return self.sc.get((i, j) if i <= j else (j, i), _zero(self.dimZ))

    def u(self, coeffs: Sequence) -> "Element":
        return Element(self, vec(coeffs), _zero(self.dimZ))

    def z(self, coeffs: Sequence) -> "Element":
        return Element(self, _zero(self.dimU), vec(coeffs))

    def basis_u(self, i: int) -> "Element":
        return self.u([int(k == i) for k in range(self.dimU)])

    def basis_z(self, k: int) -> "Element":
        return self.z([int(x == k) for x in range(self.dimZ)])

    def zero(self) -> "Element":
        return Element(self, _zero(self.dimU), _zero(self.dimZ))

    @property
    def dim(self) -> int:
        return self.dimU + self.dimZ

    def __repr__(self):
        label = f" {self.name}" if self.name else ""
        return f"<NormalAlgebra{label} dimU={self.dimU} dimZ={self.dimZ}>"


@dataclass(frozen=True)
class Element:
    algebra: NormalAlgebra = field(repr=False, compare=False)
    u_part: tuple
    z_part: tuple

    def __post_init__(self):
        if len(self.u_part) != self.algebra.dimU or len(self.z_part) != self.algebra.dimZ:
            raise ValueError("element does not match the algebra's dimensions")

    def _same(self, other: "Element"):
        if other.algebra is not self.algebra:
            raise ValueError("elements belong to different algebras")

    def __add__(self, other: "Element") -> "Element":
        self._same(other)
        return Element(self.algebra,
                       tuple(a + b for a, b in zip(self.u_part, other.u_part)),
                       tuple(a + b for a, b in zip(self.z_part, other.z_part)))

    def __neg__(self) -> "Element":
        return Element(self.algebra, tuple(-a for a in self.u_part), tuple(-a for a in self.z_part))

    def __sub__(self, other: "Element") -> "Element":
        return self + (-other)

    def __rmul__(self, c) -> "Element":
        c = as_fraction(c)
        return Element(self.algebra, tuple(c * a for a in self.u_part), tuple(c * a for a in self.z_part))

    def __mul__(self, other):
        if isinstance(other, Element):
            return multiply(self.algebra, self, other)
        return self.__rmul__(other)

    def is_zero(self) -> bool:
        return not any(self.u_part) and not any(self.z_part)

    def is_pure_z(self) -> bool:
        return not any(self.u_part)

    def format(self) -> str:
        A = self.algebra
        terms = []
        for labels, coeffs in ((A.u_labels, self.u_part), (A.z_labels, self.z_part)):
            for lab, c in zip(labels, coeffs):
                if c:
                    terms.append(lab if c == 1 else f"-{lab}" if c == -1 else f"({c}){lab}")
        return " + ".join(terms).replace("+ -", "- ") if terms else "0"


def multiply(A: NormalAlgebra, a: Element, b: Element) -> Element:
    if a.algebra is not A or b.algebra is not A:
        raise ValueError("elements belong to a different algebra")
    z = [Fraction(0)] * A.dimZ
    au, bu = a.u_part, b.u_part
    for (i, j), vec_ij in A.sc.items():
        c = au[i] * bu[j]
        if i != j:
            c += au[j] * bu[i]
        if c:
            for k, x in enumerate(vec_ij):
                if x:
                    z[k] += c * x
    return Element(A, _zero(A.dimU), tuple(z))


def square(A: NormalAlgebra, a: Element) -> Element:
    return multiply(A, a, a)


# -- constructions ----------------------------------------------------------

def graph_algebra(G: Graph) -> NormalAlgebra:
    """x*y = [x,y] for adjacent x != y, 0 for nonadjacent, x^2 = sum of edges at x."""
    q = G.q
    sc = {}
    for k, (i, j) in enumerate(G.edges):
        e = [0] * q
        e[k] = 1
        sc[(i, j)] = e
    for x in range(G.p):
        z = [0] * q
        for y in G.neighbors[x]:
            z[G.index_of((x, y))] = 1
        sc[(x, x)] = z
    return NormalAlgebra(G.p, q, sc,
                         tuple(G.label(v) for v in range(G.p)),
                         tuple(G.edge_label(k) for k in range(q)),
                         name="NG")


def zero_algebra(n: int = 1) -> NormalAlgebra:
    """``n`` copies of the one-dimensional algebra with all products 0."""
    return NormalAlgebra(n, 0, {}, tuple(f"a{i}" for i in range(n)), (), name="F0" if n == 1 else f"F0^{n}")


def build_canonical(kind: str, p: int = 1) -> NormalAlgebra:
    """``"Spline"``: r^2 = s.  ``"Op"``: w_i^2 = z_i, w_i w_j = 0.
    ``"Tp"``: w_i w_j = z_0 + delta_ij z_i (Z has p + 1 basis elements)."""
    kind = kind.capitalize() if kind.lower() == "spline" else kind
    if kind == "Spline":
        return NormalAlgebra(1, 1, {(0, 0): [1]}, ("r",), ("s",), name="Spline")
    if p < 1:
        raise ValueError("p must be at least 1")
    if kind == "Op":
        sc = {(i, i): [int(k == i) for k in range(p)] for i in range(p)}
        return NormalAlgebra(p, p, sc, tuple(f"w{i + 1}" for i in range(p)),
                             tuple(f"z{i + 1}" for i in range(p)), name=f"O{p}")
    if kind == "Tp":
        sc = {}
        for i in range(p):
            for j in range(i, p):
                z = [0] * (p + 1)
                z[0] = 1
                if i == j:
                    z[i + 1] = 1
                sc[(i, j)] = z
        return NormalAlgebra(p, p + 1, sc, tuple(f"w{i + 1}" for i in range(p)),
                             tuple(f"z{i}" for i in range(p + 1)), name=f"T{p}")
    raise ValueError(f"unknown canonical algebra {kind!r}")


def direct_sum(A: NormalAlgebra, B: NormalAlgebra) -> NormalAlgebra:
    sc = {}
    for (i, j), z in A.sc.items():
        sc[(i, j)] = tuple(z) + _zero(B.dimZ)
    for (i, j), z in B.sc.items():
        sc[(i + A.dimU, j + A.dimU)] = _zero(A.dimZ) + tuple(z)
    name = f"{A.name}+{B.name}" if A.name and B.name else ""
    return NormalAlgebra(A.dimU + B.dimU, A.dimZ + B.dimZ, sc,
                         A.u_labels + B.u_labels, A.z_labels + B.z_labels, name=name)


# -- maps --------------------------------------------------------------------

@dataclass(frozen=True)
class GradedMap:
    """Linear map preserving the grading: ``u_block`` is dimU(target) x
    dimU(source), ``z_block`` is dimZ(target) x dimZ(source)."""

    source: NormalAlgebra = field(repr=False)
    target: NormalAlgebra = field(repr=False)
    u_block: RatMatrix
    z_block: RatMatrix

    def __post_init__(self):
        if self.u_block.shape != (self.target.dimU, self.source.dimU):
            raise ValueError("U-block has the wrong shape")
        if self.z_block.shape != (self.target.dimZ, self.source.dimZ):
            raise ValueError("Z-block has the wrong shape")

    def __call__(self, a: Element) -> Element:
        if a.algebra is not self.source:
            raise ValueError("element is not in the source algebra")
        return Element(self.target, self.u_block @ a.u_part, self.z_block @ a.z_part)

    def compose(self, other: "GradedMap") -> "GradedMap":
        """``self`` after ``other``."""
        if other.target is not self.source:
            raise ValueError("maps do not compose")
        return GradedMap(other.source, self.target, self.u_block @ other.u_block, self.z_block @ other.z_block)

    def is_invertible(self) -> bool:
        return is_invertible(self.u_block) and is_invertible(self.z_block)

    def inverse(self) -> "GradedMap":
        return GradedMap(self.target, self.source, inverse(self.u_block), inverse(self.z_block))


def identity_map(A: NormalAlgebra) -> GradedMap:
    return GradedMap(A, A, RatMatrix.identity(A.dimU), RatMatrix.identity(A.dimZ))


def is_homomorphism(m: GradedMap) -> bool:
    """phi(u_i u_j) == phi(u_i) phi(u_j) on all U-basis pairs.

    Basis pairs suffice: both sides are bilinear in (u_i, u_j), and every
    product involving Z is zero on both sides by the grading.
    """
    S, T = m.source, m.target
    images = [T.u(m.u_block.col(i)) for i in range(S.dimU)]
    for i in range(S.dimU):
        for j in range(i, S.dimU):
            lhs = m.z_block @ S.product(i, j)
            rhs = multiply(T, images[i], images[j]).z_part
            if tuple(lhs) != rhs:
                return False
    return True


def is_isomorphism(m: GradedMap) -> bool:
    return m.is_invertible() and is_homomorphism(m)


def graphical_automorphism(G: Graph, perm: Sequence[int], A: NormalAlgebra | None = None) -> GradedMap:
    """Automorphism of NG induced by the vertex permutation ``v -> perm[v]``."""
    if not is_automorphism(G, perm):
        raise ValueError("permutation is not a graph automorphism")
    if A is None:
        A = graph_algebra(G)
    p, q = G.p, G.q
    U = [[0] * p for _ in range(p)]
    for v in range(p):
        U[perm[v]][v] = 1
    Z = [[0] * q for _ in range(q)]
    for k, (i, j) in enumerate(G.edges):
        Z[G.index_of((perm[i], perm[j]))][k] = 1
    return GradedMap(A, A, RatMatrix.from_rows(U, cols=p), RatMatrix.from_rows(Z, cols=q))


def scalar_automorphism(A: NormalAlgebra, alpha) -> GradedMap:
    alpha = as_fraction(alpha)
    if alpha == 0:
        raise ValueError("scalar automorphism needs a nonzero scalar")
    return GradedMap(A, A, RatMatrix.identity(A.dimU).scale(alpha), RatMatrix.identity(A.dimZ).scale(alpha * alpha))


def edge_scaling_data(G: Graph, m: GradedMap) -> dict[tuple[int, int], Fraction] | None:
    """Per-edge scale factors when ``m`` scales every edge, else None."""
    if m.source is not m.target or m.source.dimU != G.p or m.source.dimZ != G.q:
        raise ValueError("map is not an endomorphism of the graph's algebra")
    if not is_isomorphism(m):
        raise ValueError("map is not an automorphism")
    if not m.z_block.is_diagonal():
        return None
    return {e: m.z_block[k, k] for k, e in enumerate(G.edges)}


# -- JSON --------------------------------------------------------------------

def _q(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def algebra_to_dict(A: NormalAlgebra) -> dict:
    return {
        "dimU": A.dimU,
        "dimZ": A.dimZ,
        "labels": {"U": list(A.u_labels), "Z": list(A.z_labels)},
        "sc": [[i, j, [[k, _q(x)] for k, x in enumerate(z) if x]] for (i, j), z in sorted(A.sc.items())],
    }


def algebra_from_dict(d: Mapping) -> NormalAlgebra:
    dimZ = d["dimZ"]
    sc = {}
    for i, j, pairs in d["sc"]:
        z = [Fraction(0)] * dimZ
        for k, x in pairs:
            z[k] = Fraction(x)
        sc[(i, j)] = z
    labels = d.get("labels", {})
    return NormalAlgebra(d["dimU"], dimZ, sc, tuple(labels.get("U", ())), tuple(labels.get("Z", ())))


def dump_algebra(A: NormalAlgebra) -> str:
    return json.dumps(algebra_to_dict(A))


def load_algebra(text: str) -> NormalAlgebra:
    return algebra_from_dict(json.loads(text))


def _matrix_to_list(M: RatMatrix) -> list[list[str]]:
    return [[_q(x) for x in M.row(i)] for i in range(M.rows)]


def map_to_dict(m: GradedMap) -> dict:
    return {
        "source": algebra_to_dict(m.source),
        "target": algebra_to_dict(m.target),
        "u_block": _matrix_to_list(m.u_block),
        "z_block": _matrix_to_list(m.z_block),
    }


def map_from_dict(d: Mapping) -> GradedMap:
    S = algebra_from_dict(d["source"])
    T = algebra_from_dict(d["target"])
    U = RatMatrix.from_rows(d["u_block"], cols=S.dimU) if d["u_block"] else RatMatrix.zeros(T.dimU, S.dimU)
    Z = RatMatrix.from_rows(d["z_block"], cols=S.dimZ) if d["z_block"] else RatMatrix.zeros(T.dimZ, S.dimZ)
    return GradedMap(S, T, U, Z)
