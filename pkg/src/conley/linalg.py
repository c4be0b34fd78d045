"""Dense exact linear algebra over the rationals.

Matrices are immutable, stored row-major as Fractions.  Rank and kernel run
fraction-free (Bareiss) on a denominator-cleared copy so every intermediate
is an integer determinant of the input; only the final back-substitution
produces rational entries.  Subspaces carry a canonical basis (the reduced
column echelon form), so equal subspaces compare equal entrywise.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .errors import DomainError, InvariantError, ShapeError
from .poly import IntPolynomial

# The scalar field: arbitrary-precision rationals from the standard
# library, already kept in lowest terms with a positive denominator.
Rational = Fraction


def _as_fraction(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int) and not isinstance(x, bool):
        return Fraction(x)
    raise DomainError(f"matrix entry {x!r} is not a rational number")


class RationalMatrix:
    """Immutable dense matrix of exact rationals."""

    __slots__ = ("rows", "cols", "_e")

    def __init__(self, rows, cols, entries):
        entries = tuple(_as_fraction(x) for x in entries)
        if len(entries) != rows * cols:
            raise ShapeError(
                f"{rows}x{cols} matrix needs {rows * cols} entries, "
                f"got {len(entries)}")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "_e", entries)

    @classmethod
    def from_rows(cls, rows):
        rows = [list(r) for r in rows]
        nrows = len(rows)
        ncols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != ncols:
                raise ShapeError("ragged rows in matrix literal")
        return cls(nrows, ncols, [x for r in rows for x in r])

    @classmethod
    def identity(cls, n):
        return cls(n, n, [Fraction(int(i == j))
                          for i in range(n) for j in range(n)])

    @classmethod
    def zeros(cls, rows, cols):
        return cls(rows, cols, [Fraction(0)] * (rows * cols))

    @classmethod
    def column(cls, entries):
        entries = list(entries)
        return cls(len(entries), 1, entries)

    def __getitem__(self, key):
        i, j = key
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(key)
        return self._e[i * self.cols + j]

    def row_list(self, i):
        return list(self._e[i * self.cols:(i + 1) * self.cols])

    def column_list(self, j):
        return [self._e[i * self.cols + j] for i in range(self.rows)]

    def tolist(self):
        return [self.row_list(i) for i in range(self.rows)]

    @property
    def is_square(self):
        return self.rows == self.cols

    @property
    def is_integer(self):
        return all(x.denominator == 1 for x in self._e)

    def to_int_rows(self):
        if not self.is_integer:
            raise DomainError("matrix has non-integer entries")
        return [[int(x) for x in self.row_list(i)] for i in range(self.rows)]

    def __eq__(self, other):
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return (self.rows, self.cols, self._e) == (other.rows, other.cols,
                                                   other._e)

    def __hash__(self):
        return hash((self.rows, self.cols, self._e))

    def __repr__(self):
        return f"RationalMatrix.from_rows({self.tolist()!r})"

    def __neg__(self):
        return RationalMatrix(self.rows, self.cols, [-x for x in self._e])

    def __add__(self, other):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ShapeError("matrix addition shape mismatch")
        return RationalMatrix(self.rows, self.cols,
                              [a + b for a, b in zip(self._e, other._e)])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, RationalMatrix):
            return mat_mul(self, other)
        other = _as_fraction(other)
        return RationalMatrix(self.rows, self.cols,
                              [x * other for x in self._e])

    def __rmul__(self, other):
        return self * _as_fraction(other)

    def __pow__(self, n):
        self._require_square("matrix power")
        if n < 0:
            raise DomainError("negative matrix power")
        out = RationalMatrix.identity(self.rows)
        for _ in range(n):
            out = out * self
        return out

    def transpose(self):
        return RationalMatrix(
            self.cols, self.rows,
            [self._e[i * self.cols + j]
             for j in range(self.cols) for i in range(self.rows)])

    def trace(self):
        self._require_square("trace")
        return sum((self[i, i] for i in range(self.rows)), Fraction(0))

    def augment(self, other):
        if self.rows != other.rows:
            raise ShapeError("augment needs equal row counts")
        entries = []
        for i in range(self.rows):
            entries.extend(self.row_list(i))
            entries.extend(other.row_list(i))
        return RationalMatrix(self.rows, self.cols + other.cols, entries)

    def take_columns(self, indices):
        entries = []
        for i in range(self.rows):
            row = self.row_list(i)
            entries.extend(row[j] for j in indices)
        return RationalMatrix(self.rows, len(indices), entries)

    def _require_square(self, what):
        if not self.is_square:
            raise ShapeError(f"{what} needs a square matrix, "
                             f"got {self.rows}x{self.cols}")

    def _int_rows_cleared(self):
        """Rows scaled by positive integers to clear denominators; this
        preserves rank and kernel."""
        out = []
        for i in range(self.rows):
            row = self.row_list(i)
            mult = 1
            for x in row:
                mult = mult * x.denominator // gcd(mult, x.denominator)
            out.append([int(x * mult) for x in row])
        return out

    def rank(self):
        """Exact rank by fraction-free (Bareiss) elimination."""
        m = self._int_rows_cleared()
        return _bareiss_forward(m)[0]

    def charpoly(self):
        """Monic characteristic polynomial det(tI - self), ascending
        Fraction coefficients, computed by the Faddeev-LeVerrier
        trace recursion."""
        self._require_square("characteristic polynomial")
        n = self.rows
        coeffs = [Fraction(1)]          # descending: c_n, c_{n-1}, ...
        m = RationalMatrix.zeros(n, n)
        ident = RationalMatrix.identity(n)
        for k in range(1, n + 1):
            m = m + coeffs[-1] * ident
            m = self * m
            coeffs.append(-m.trace() / k)
        return tuple(reversed(coeffs))

    def det(self):
        self._require_square("determinant")
        if self.rows == 0:
            return Fraction(1)
        c0 = self.charpoly()[0]
        return c0 if self.rows % 2 == 0 else -c0


def mat_mul(a, b):
    """Exact matrix product."""
    if a.cols != b.rows:
        raise ShapeError(f"cannot multiply {a.rows}x{a.cols} by "
                         f"{b.rows}x{b.cols}")
    cols = [b.column_list(j) for j in range(b.cols)]
    entries = []
    for i in range(a.rows):
        row = a.row_list(i)
        for col in cols:
            entries.append(sum((x * y for x, y in zip(row, col)),
                               Fraction(0)))
    return RationalMatrix(a.rows, b.cols, entries)


def _bareiss_forward(m):
    """Fraction-free forward elimination in place on integer rows.

    Returns (rank, pivot column list); afterwards m is upper echelon with
    integer entries (each a minor of the input, up to sign).
    """
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    pivots = []
    prev = 1
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, nrows):
            if m[i][c] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        if pivot_row != r:
            m[r], m[pivot_row] = m[pivot_row], m[r]
        for i in range(r + 1, nrows):
            for j in range(c + 1, ncols):
                m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) // prev
            m[i][c] = 0
        prev = m[r][c]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return r, pivots


def rank(a):
    return a.rank()


def _rref(rows):
    """Reduced row echelon form over Fractions, in place.

    Returns the pivot column list.
    """
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, nrows):
            if rows[i][c] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return pivots


class Subspace:
    """Subspace of Q^n carried by a canonical basis.

    The basis columns are the reduced column echelon form of any spanning
    set, so two Subspace values are equal exactly when they describe the
    same subspace.
    """

    __slots__ = ("ambient_dim", "basis")

    def __init__(self, ambient_dim, basis):
        if basis.rows != ambient_dim:
            raise ShapeError("basis rows must match the ambient dimension")
        if basis.cols > ambient_dim:
            raise ShapeError("more basis columns than the ambient dimension")
        if basis.cols and basis.rank() != basis.cols:
            raise InvariantError("subspace basis columns are dependent")
        object.__setattr__(self, "ambient_dim", ambient_dim)
        object.__setattr__(self, "basis", basis)

    @classmethod
    def spanned_by_columns(cls, m):
        return cls(m.rows, column_rref(m))

    @property
    def dim(self):
        return self.basis.cols

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return (self.ambient_dim == other.ambient_dim
                and self.basis == other.basis)

    def __hash__(self):
        return hash((self.ambient_dim, self.basis))

    def __repr__(self):
        return (f"Subspace(dim={self.dim}, "
                f"ambient_dim={self.ambient_dim})")

    def contains(self, vector):
        """Exact membership test for a length-n coordinate sequence."""
        vec = [_as_fraction(x) for x in vector]
        if len(vec) != self.ambient_dim:
            raise ShapeError("vector length does not match ambient space")
        if self.dim == 0:
            return all(x == 0 for x in vec)
        aug = self.basis.augment(RationalMatrix.column(vec))
        return aug.rank() == self.dim


def column_rref(m):
    """Canonical basis (reduced column echelon form) of the column space."""
    rows = [m.column_list(j) for j in range(m.cols)]
    if not rows:
        return RationalMatrix.zeros(m.rows, 0)
    _rref(rows)
    kept = [r for r in rows if any(x != 0 for x in r)]
    if not kept:
        return RationalMatrix.zeros(m.rows, 0)
    return RationalMatrix.from_rows(kept).transpose()


def column_space(a):
    """Column space of a, with canonical basis."""
    return Subspace.spanned_by_columns(a)


def kernel_basis(a):
    """Canonical basis of the exact null space {v : a v = 0}.

    Forward elimination is fraction-free; back-substitution from the
    integer echelon produces one basis vector per free column, and the
    result is normalised to reduced column echelon form.
    """
    m = a._int_rows_cleared()
    nrows, ncols = a.rows, a.cols
    rank_, pivots = _bareiss_forward(m)
    free = [c for c in range(ncols) if c not in pivots]
    vectors = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for r in range(rank_ - 1, -1, -1):
            p = pivots[r]
            if p > f:
                continue
            s = sum((Fraction(m[r][j]) * v[j] for j in range(p + 1, ncols)),
                    Fraction(0))
            v[p] = -s / m[r][p]
        vectors.append(v)
    if not vectors:
        return Subspace(ncols, RationalMatrix.zeros(ncols, 0))
    basis = RationalMatrix.from_rows(vectors).transpose()
    return Subspace(ncols, column_rref(basis))


def solve_columns(b, c):
    """The unique x with b x = c for a full-column-rank b; raises
    DomainError when the system is inconsistent."""
    if b.rows != c.rows:
        raise ShapeError("solve needs matching row counts")
    rows = [b.row_list(i) + c.row_list(i) for i in range(b.rows)]
    pivots = _rref(rows)
    if any(p >= b.cols for p in pivots):
        raise DomainError("inconsistent linear system")
    if len(pivots) != b.cols:
        raise InvariantError("solve requires full column rank")
    sol_rows = [rows[i][b.cols:] for i in range(b.cols)]
    return RationalMatrix.from_rows(sol_rows) if sol_rows else \
        RationalMatrix.zeros(0, c.cols)


def inverse(a):
    """Exact inverse of a square nonsingular matrix."""
    a._require_square("inverse")
    if a.rank() != a.rows:
        raise DomainError("matrix is singular")
    return solve_columns(a, RationalMatrix.identity(a.rows))


def _reversed_from_charpoly(coeffs):
    """det(I - a t) from the monic charpoly coefficients of a: the
    coefficient of t^k is the charpoly coefficient of t^(n-k)."""
    rev = list(reversed(coeffs))
    for c in rev:
        if c.denominator != 1:
            raise DomainError(
                "characteristic polynomial is not integral")
    return IntPolynomial([int(c) for c in rev])


def char_reversed(a):
    """det(I - a t) in Z[t] for a square integer matrix.

    The constant term is always 1; the degree drops by the multiplicity of
    the zero eigenvalue.
    """
    a._require_square("char_reversed")
    if not a.is_integer:
        raise DomainError("char_reversed needs integer entries")
    return _reversed_from_charpoly(a.charpoly())


def char_reversed_rational(a):
    """det(I - a t) for a rational square matrix whose characteristic
    polynomial happens to be integral (e.g. any matrix similar to an
    integer one).  DomainError when the coefficients are not integers."""
    a._require_square("char_reversed_rational")
    return _reversed_from_charpoly(a.charpoly())
