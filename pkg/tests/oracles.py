"""Independent reference computations for the test suite.

Everything in here deliberately avoids the code paths it is used to check:
determinants of polynomial matrices go through plain cofactor expansion
(the library uses a trace recursion), ranks go through textbook Gaussian
elimination over Fractions (the library uses fraction-free elimination).
"""

from fractions import Fraction
import random

from conley.linalg import RationalMatrix, inverse


def _pmul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        for j, cb in enumerate(b):
            out[i + j] += ca * cb
    return out


def _padd(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return out


def _ptrim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def det_poly(matrix):
    """Cofactor-expansion determinant of a matrix of coefficient lists."""
    n = len(matrix)
    if n == 0:
        return [1]
    if n == 1:
        return list(matrix[0][0])
    total = []
    for j, entry in enumerate(matrix[0]):
        if not any(entry):
            continue
        minor = [row[:j] + row[j + 1:] for row in matrix[1:]]
        term = _pmul(entry, det_poly(minor))
        if j % 2:
            term = [-c for c in term]
        total = _padd(total, term)
    return _ptrim(total)


def char_reversed_oracle(int_rows):
    """det(I - A t) by cofactor expansion, ascending int coefficients."""
    n = len(int_rows)
    m = [[[1, -int_rows[i][j]] if i == j else [0, -int_rows[i][j]]
          for j in range(n)] for i in range(n)]
    return _ptrim(det_poly(m))


def rref_rank(rows):
    """Rank by plain Gaussian elimination over Fractions."""
    m = [[Fraction(x) for x in row] for row in rows]
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    rank = 0
    for c in range(ncols):
        pivot = None
        for i in range(rank, nrows):
            if m[i][c] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        inv = 1 / m[rank][c]
        m[rank] = [x * inv for x in m[rank]]
        for i in range(nrows):
            if i != rank and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[rank])]
        rank += 1
    return rank


def random_int_matrix(rng, n, lo=-3, hi=3):
    return RationalMatrix.from_rows(
        [[rng.randint(lo, hi) for _ in range(n)] for _ in range(n)])


def random_unimodular(rng, n, steps=10):
    """Product of elementary integer row operations: determinant +/-1 and
    an exact integer inverse."""
    rows = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(steps):
        op = rng.randrange(3)
        i = rng.randrange(n)
        j = rng.randrange(n)
        if op == 0 and i != j:
            c = rng.choice([-2, -1, 1, 2])
            rows[i] = [a + c * b for a, b in zip(rows[i], rows[j])]
        elif op == 1 and i != j:
            rows[i], rows[j] = rows[j], rows[i]
        elif op == 2:
            rows[i] = [-a for a in rows[i]]
    return RationalMatrix.from_rows(rows)


def conjugate(u, a):
    """u a u^-1, exactly."""
    return u * a * inverse(u)


def jordan_block(lam, size):
    return RationalMatrix.from_rows(
        [[lam if i == j else (1 if j == i + 1 else 0)
          for j in range(size)] for i in range(size)])


def quadratic_companion_block(size):
    """Block-Jordan matrix built on the companion matrix of t^2 - t + 1:
    ``size`` copies of the companion on the diagonal, identity blocks on
    the superdiagonal.  Real dimension 2 * size."""
    comp = [[0, -1], [1, 1]]
    n = 2 * size
    rows = [[0] * n for _ in range(n)]
    for b in range(size):
        for i in range(2):
            for j in range(2):
                rows[2 * b + i][2 * b + j] = comp[i][j]
        if b + 1 < size:
            rows[2 * b][2 * (b + 1)] = 1
            rows[2 * b + 1][2 * (b + 1) + 1] = 1
    return RationalMatrix.from_rows(rows)


def block_diag(blocks):
    n = sum(b.rows for b in blocks)
    rows = [[0] * n for _ in range(n)]
    at = 0
    for b in blocks:
        for i in range(b.rows):
            for j in range(b.cols):
                rows[at + i][at + j] = b[i, j]
        at += b.rows
    return RationalMatrix.from_rows(rows)


def random_shift_graph(rng, max_vertices=4):
    n = rng.randint(1, max_vertices)
    adjacency = [[rng.randint(0, 1) for _ in range(n)] for _ in range(n)]
    orientation = [rng.choice([1, -1]) for _ in range(n)]
    return adjacency, orientation


__all__ = [
    "block_diag", "char_reversed_oracle", "conjugate", "det_poly",
    "jordan_block", "quadratic_companion_block", "random_int_matrix",
    "random_shift_graph", "random_unimodular", "rref_rank",
]


def _self_check():
    rng = random.Random(0)
    u = random_unimodular(rng, 4)
    assert u * inverse(u) == RationalMatrix.identity(4)


_self_check()
