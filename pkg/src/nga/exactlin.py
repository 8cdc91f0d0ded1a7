"""Exact rational linear algebra.

Scalars are :class:`fractions.Fraction`.  Matrices are small and dense, so
everything here is plain Python: rows are scaled to integers and reduced
fraction-free, which keeps the inner loops on machine-sized ints for the
0/1 incidence-style matrices this package mostly deals with.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

Rational = Fraction
Vector = tuple  # tuple[Fraction, ...]


def rat(n: int, d: int = 1) -> Fraction:
    """Return the normalized fraction ``n/d``."""
    if d == 0:
        raise ZeroDivisionError("division by zero")
    return Fraction(n, d)


def as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return Fraction(x)
    if isinstance(x, float):
        raise TypeError("floats are not accepted; pass an int, Fraction or 'n/d' string")
    return Fraction(x)


def vec(values: Iterable) -> tuple:
    return tuple(as_fraction(v) for v in values)


class RatMatrix:
    """Immutable dense matrix of rationals, stored row-major."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Sequence):
        if rows < 0 or cols < 0:
            raise ValueError("negative dimension")
        if len(entries) != rows * cols:
            raise ValueError(f"expected {rows * cols} entries, got {len(entries)}")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", tuple(as_fraction(x) for x in entries))

    def __setattr__(self, name, value):
        raise AttributeError("RatMatrix is immutable")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> "RatMatrix":
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != cols:
                raise ValueError("ragged rows")
        return cls(len(rows), cols, [x for r in rows for x in r])

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int | None = None) -> "RatMatrix":
        if rows is None:
            rows = len(columns[0]) if columns else 0
        return cls.from_rows([[c[i] for c in columns] for i in range(rows)], cols=len(columns))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RatMatrix":
        return cls(rows, cols, [Fraction(0)] * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "RatMatrix":
        return cls(n, n, [Fraction(int(i == j)) for i in range(n) for j in range(n)])

    @classmethod
    def diagonal(cls, values: Sequence) -> "RatMatrix":
        n = len(values)
        vals = vec(values)
        return cls(n, n, [vals[i] if i == j else Fraction(0) for i in range(n) for j in range(n)])

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def col(self, j: int) -> tuple:
        return self.entries[j::self.cols] if self.cols else ()

    def to_rows(self) -> list[tuple]:
        return [self.row(i) for i in range(self.rows)]

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def transpose(self) -> "RatMatrix":
        return RatMatrix.from_rows([self.col(j) for j in range(self.cols)], cols=self.rows)

    T = property(transpose)

    def select_columns(self, idx: Sequence[int]) -> "RatMatrix":
        return RatMatrix.from_rows([[self[i, j] for j in idx] for i in range(self.rows)], cols=len(idx))

    def select_rows(self, idx: Sequence[int]) -> "RatMatrix":
        return RatMatrix.from_rows([self.row(i) for i in idx], cols=self.cols)

    def __matmul__(self, other):
        if isinstance(other, RatMatrix):
            if self.cols != other.rows:
                raise ValueError("shape mismatch")
            ocols = [other.col(j) for j in range(other.cols)]
            return RatMatrix.from_rows(
                [[sum((a * b for a, b in zip(self.row(i), c) if a and b), Fraction(0)) for c in ocols]
                 for i in range(self.rows)],
                cols=other.cols,
            )
        v = vec(other)
        if len(v) != self.cols:
            raise ValueError("shape mismatch")
        return tuple(sum((a * b for a, b in zip(self.row(i), v) if a and b), Fraction(0))
                     for i in range(self.rows))

    def scale(self, c) -> "RatMatrix":
        c = as_fraction(c)
        return RatMatrix(self.rows, self.cols, [c * x for x in self.entries])

    def is_zero(self) -> bool:
        return not any(self.entries)

    def is_diagonal(self) -> bool:
        return all(not self[i, j] for i in range(self.rows) for j in range(self.cols) if i != j)

    def __eq__(self, other):
        if not isinstance(other, RatMatrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in self.row(i)) for i in range(self.rows))
        return f"RatMatrix({self.rows}x{self.cols}: [{body}])"


def _as_matrix(M) -> RatMatrix:
    if isinstance(M, RatMatrix):
        return M
    return RatMatrix.from_rows(M)


# -- integer row machinery ---------------------------------------------------

def _int_row(row: Sequence) -> list[int]:
    """Scale a rational row to a primitive integer row (same span)."""
    if all(type(x) is int for x in row):
        return _primitive(list(row))
    fr = [as_fraction(x) for x in row]
    den = 1
    for x in fr:
        if x.denominator != 1:
            den = lcm(den, x.denominator)
    ints = [int(x * den) for x in fr]
    return _primitive(ints)


def _primitive(row: list[int]) -> list[int]:
    g = 0
    for x in row:
        if x:
            g = gcd(g, x)
            if g == 1:
                return row
    if g > 1:
        return [x // g for x in row]
    return row


def _echelon(rows: list[list[int]], ncols: int, stop_at_full: bool = False):
    """Forward elimination in place.  Returns (pivot rows, pivot columns)."""
    basis: list[list[int]] = []
    pivots: list[int] = []
    for r in rows:
        r = list(r)
        for b, c in zip(basis, pivots):
            x = r[c]
            if x:
                a = b[c]
                r = [a * ri - x * bi for ri, bi in zip(r, b)]
        lead = next((j for j in range(ncols) if r[j]), None)
        if lead is None:
            continue
        r = _primitive(r)
        if r[lead] < 0:
            r = [-x for x in r]
        # keep pivot columns sorted so the reduction order above stays valid
        k = 0
        while k < len(pivots) and pivots[k] < lead:
            k += 1
        # clear the new pivot column out of rows already in the basis
        for i in range(len(basis)):
            x = basis[i][lead]
            if x:
                basis[i] = _primitive([r[lead] * bi - x * ri for bi, ri in zip(basis[i], r)])
                if basis[i][pivots[i]] < 0:
                    basis[i] = [-y for y in basis[i]]
        basis.insert(k, r)
        pivots.insert(k, lead)
        if stop_at_full and len(pivots) == ncols:
            break
    return basis, pivots


def rref(M) -> tuple[RatMatrix, list[int]]:
    """Reduced row echelon form (pivots scaled to 1) and the pivot columns."""
    M = _as_matrix(M)
    basis, pivots = _echelon([_int_row(M.row(i)) for i in range(M.rows)], M.cols)
    out = []
    for b, c in zip(basis, pivots):
        a = b[c]
        out.append([Fraction(x, a) for x in b])
    while len(out) < M.rows:
        out.append([Fraction(0)] * M.cols)
    return RatMatrix.from_rows(out, cols=M.cols), pivots


def rank(M) -> int:
    M = _as_matrix(M)
    if M.rows == 0 or M.cols == 0:
        return 0
    basis, _ = _echelon([_int_row(M.row(i)) for i in range(M.rows)], M.cols, stop_at_full=True)
    return len(basis)


def normalize(v: Sequence) -> tuple:
    """Scale so the first nonzero entry is 1.  The zero vector is returned as is."""
    v = vec(v)
    lead = next((x for x in v if x), None)
    if lead is None or lead == 1:
        return v
    return tuple(x / lead for x in v)


def kernel_basis(M, *, ncols: int | None = None) -> list[tuple]:
    """Basis of the right null space ``{v : M v = 0}``.

    One vector per free column, in increasing free-column order, each
    normalized so its first nonzero entry is 1.  ``ncols`` is only needed
    when ``M`` is given as an empty list of rows.
    """
    if isinstance(M, RatMatrix):
        n = M.cols
        rows = [_int_row(M.row(i)) for i in range(M.rows)]
    else:
        rows = [_int_row(r) for r in M]
        n = ncols if ncols is not None else (len(rows[0]) if rows else 0)
    basis, pivots = _echelon(rows, n, stop_at_full=True)
    if len(pivots) == n:
        return []
    pivset = set(pivots)
    out = []
    for f in range(n):
        if f in pivset:
            continue
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for b, c in zip(basis, pivots):
            if b[f]:
                v[c] = Fraction(-b[f], b[c])
        out.append(normalize(v))
    return out


def nullity(M) -> int:
    M = _as_matrix(M)
    return M.cols - rank(M)


def in_span(vectors: Sequence[Sequence], v: Sequence) -> bool:
    vectors = [vec(x) for x in vectors]
    v = vec(v)
    if not any(v):
        return True
    if not vectors:
        return False
    return rank(vectors + [v]) == rank(vectors)


def span_coordinates(vectors: Sequence[Sequence], v: Sequence) -> tuple | None:
    """Coefficients c with ``sum(c_i * vectors[i]) == v``, or None.

    When the vectors are dependent the solution returned has zeros on the
    free coordinates.
    """
    vectors = [vec(x) for x in vectors]
    v = vec(v)
    k = len(vectors)
    if k == 0:
        return () if not any(v) else None
    n = len(v)
    # columns are the vectors, augmented by v
    aug = RatMatrix.from_rows([[vectors[j][i] for j in range(k)] + [v[i]] for i in range(n)], cols=k + 1)
    R, piv = rref(aug)
    if k in piv:
        return None
    sol = [Fraction(0)] * k
    for i, c in enumerate(piv):
        sol[c] = R[i, k]
    return tuple(sol)


def solve(M, b: Sequence) -> tuple | None:
    """One solution of ``M x = b`` (free variables zero), or None."""
    M = _as_matrix(M)
    return span_coordinates([M.col(j) for j in range(M.cols)], b)


def det(M) -> Fraction:
    M = _as_matrix(M)
    if M.rows != M.cols:
        raise ValueError("determinant of a non-square matrix")
    n = M.rows
    a = [list(M.row(i)) for i in range(n)]
    d = Fraction(1)
    for c in range(n):
        p = next((r for r in range(c, n) if a[r][c]), None)
        if p is None:
            return Fraction(0)
        if p != c:
            a[c], a[p] = a[p], a[c]
            d = -d
        piv = a[c][c]
        d *= piv
        for r in range(c + 1, n):
            x = a[r][c]
            if x:
                f = x / piv
                a[r] = [ar - f * ac for ar, ac in zip(a[r], a[c])]
    return d


def inverse(M) -> RatMatrix:
    M = _as_matrix(M)
    if M.rows != M.cols:
        raise ValueError("inverse of a non-square matrix")
    n = M.rows
    aug = RatMatrix.from_rows([list(M.row(i)) + [int(i == j) for j in range(n)] for i in range(n)])
    R, piv = rref(aug)
    if piv[:n] != list(range(n)) or len(piv) < n:
        raise ZeroDivisionError("matrix is singular")
    return RatMatrix.from_rows([R.row(i)[n:] for i in range(n)], cols=n)


def is_invertible(M) -> bool:
    M = _as_matrix(M)
    return M.rows == M.cols and rank(M) == M.rows


class IncrementalBasis:
    """Row space built one vector at a time, remembering how each reduced
    row was assembled from the inputs.

    ``add`` returns None when the new vector is independent, otherwise the
    dependence: coefficients over the previously added vectors (indexed by
    insertion order) plus the new one, integer and primitive.
    """

    __slots__ = ("n", "rows", "combos", "pivots", "count")

    def __init__(self, n: int):
        self.n = n
        self.rows: list[list[int]] = []
        self.combos: list[list[int]] = []
        self.pivots: list[int] = []
        self.count = 0

    def copy(self) -> "IncrementalBasis":
        other = IncrementalBasis.__new__(IncrementalBasis)
        other.n = self.n
        other.rows = self.rows[:]
        other.combos = self.combos[:]
        other.pivots = self.pivots[:]
        other.count = self.count
        return other

    def reduce(self, v: Sequence[int]) -> tuple[list[int], list[int]]:
        r = list(v)
        k = self.count
        combo = [0] * (k + 1)
        combo[k] = 1
        for b, cb, c in zip(self.rows, self.combos, self.pivots):
            x = r[c]
            if x:
                a = b[c]
                r = [a * ri - x * bi for ri, bi in zip(r, b)]
                cb = cb + [0] * (k + 1 - len(cb))
                combo = [a * ci - x * bi for ci, bi in zip(combo, cb)]
        return r, combo

    def add(self, v: Sequence[int]) -> list[int] | None:
        return self.add_reduced(*self.reduce(v))

    def add_reduced(self, r: list[int], combo: list[int]) -> list[int] | None:
        """``add`` for a pair already returned by ``reduce`` on this basis."""
        lead = next((j for j, x in enumerate(r) if x), None)
        self.count += 1
        if lead is None:
            return _primitive(combo)
        g = 0
        for x in r:
            g = gcd(g, x)
        for x in combo:
            g = gcd(g, x)
        if g > 1:
            r = [x // g for x in r]
            combo = [x // g for x in combo]
        self.rows.append(r)
        self.combos.append(combo)
        self.pivots.append(lead)
        return None

    @property
    def rank(self) -> int:
        return len(self.rows)
