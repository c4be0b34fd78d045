"""Eventual kernel and image, induced invertible parts, and exact
conjugacy invariants of rational matrices.

Similarity over the rationals is certified by invariant factors (the
diagonal of the Smith normal form of tI - A over Q[t], obtained here from
determinantal-divisor gcds).  Block structure per irreducible factor of
the characteristic polynomial is recovered from the rank sequence of
powers, which is a complete description without ever leaving exact
arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import isqrt, lcm

from .errors import DomainError, InvariantError
from .linalg import (RationalMatrix, Subspace, column_space, kernel_basis,
                     solve_columns)
from .poly import (ONE, T, IntPolynomial, exact_div, poly_gcd,
                   squarefree_decomposition, tpoly_add, tpoly_mul, tpoly_neg)

KIND_RATIONAL = "rational_eigenvalue"
KIND_COMPLEX = "complex_pair"
KIND_UNRESOLVED = "unresolved"


def generalized_kernel(a):
    """ker(a^n) for an n x n matrix: the stabilised member of the chain
    ker a <= ker a^2 <= ..., with canonical basis."""
    a._require_square("generalized kernel")
    return kernel_basis(a ** a.rows)


def generalized_image(a):
    """Column space of a^n for an n x n matrix, with canonical basis."""
    a._require_square("generalized image")
    return column_space(a ** a.rows)


@dataclass(frozen=True)
class InducedMap:
    """Restriction of a square matrix to its eventual image.

    ``matrix`` is the (invertible) action in the coordinates of
    ``image_basis``; the defining identity is
    ``source * image_basis = image_basis * matrix``.
    """

    matrix: RationalMatrix
    image_basis: Subspace
    ambient_dim: int
    source: RationalMatrix

    @property
    def dim(self):
        return self.matrix.rows

    def verify(self):
        """Recheck the intertwining identity and invertibility exactly."""
        b = self.image_basis.basis
        if self.source * b != b * self.matrix:
            raise InvariantError("induced map does not intertwine its basis")
        if self.dim and self.matrix.rank() != self.dim:
            raise InvariantError("induced map is singular")
        return True


def nonnilpotent_part(a):
    """The invertible map induced by a on its eventual image.

    The quotient of the ambient space by the eventual kernel is canonically
    isomorphic to the eventual image, and a maps that image bijectively to
    itself, so this is the nonnilpotent part of a.  A nilpotent input gives
    the empty 0 x 0 map.
    """
    a._require_square("nonnilpotent part")
    image = generalized_image(a)
    basis = image.basis
    if image.dim == 0:
        matrix = RationalMatrix.zeros(0, 0)
    else:
        matrix = solve_columns(basis, a * basis)
        if matrix.rank() != image.dim:
            raise InvariantError("restriction to the eventual image "
                                 "is singular")
    return InducedMap(matrix=matrix, image_basis=image,
                      ambient_dim=a.rows, source=a)


# ---------------------------------------------------------------------------
# invariant factors via determinantal divisors of tI - A

def _char_matrix_entries(n, int_rows):
    """Entries of tI - N as ascending coefficient tuples."""
    entries = []
    for i in range(n):
        row = []
        for j in range(n):
            v = -int_rows[i][j]
            if i == j:
                row.append((v, 1))
            else:
                row.append((v,) if v else ())
        entries.append(row)
    return entries


def _minor_det(entries, row_idx, col_idx):
    """Determinant of a square polynomial submatrix by first-row expansion
    with memoisation over column subsets."""
    k = len(row_idx)
    if k == 0:
        return (1,)
    memo = {}

    def rec(r, mask):
        if r == k:
            return (1,)
        cached = memo.get(mask)
        if cached is not None:
            return cached
        total = ()
        sign = 1
        row = entries[row_idx[r]]
        remaining = mask
        while remaining:
            low = remaining & (-remaining)
            j = low.bit_length() - 1
            entry = row[col_idx[j]]
            if entry:
                sub = rec(r + 1, mask ^ low)
                if sub:
                    term = tpoly_mul(entry, sub)
                    if sign < 0:
                        term = tpoly_neg(term)
                    total = tpoly_add(total, term)
            sign = -sign
            remaining ^= low
        memo[mask] = total
        return total

    return rec(0, (1 << k) - 1)


def _substitute_scaled(p, d):
    """primitive part of p(d*t), positive leading coefficient."""
    if d == 1:
        return p
    return IntPolynomial([c * d ** i
                          for i, c in enumerate(p.coeffs)]).normalized()


def invariant_factors(a):
    """Nontrivial invariant factors of a, smallest first.

    Each factor divides the next, their product is the characteristic
    polynomial, and the list determines a up to similarity over Q.
    Returned primitive and integral (monic for integer input).
    """
    a._require_square("invariant factors")
    n = a.rows
    if n == 0:
        return []
    denom = 1
    for x in a._e:
        denom = lcm(denom, x.denominator)
    int_rows = [[int(x * denom) for x in a.row_list(i)] for i in range(n)]
    entries = _char_matrix_entries(n, int_rows)

    divisors = [ONE] + [None] * n
    all_idx = tuple(range(n))
    divisors[n] = IntPolynomial(_minor_det(entries, all_idx, all_idx))
    for k in range(n - 1, 0, -1):
        g = IntPolynomial(())
        for rows_sel in combinations(range(n), k):
            for cols_sel in combinations(range(n), k):
                minor = _minor_det(entries, rows_sel, cols_sel)
                if minor:
                    g = poly_gcd(g, IntPolynomial(minor))
                    if g.degree == 0:
                        break
            if not g.is_zero and g.degree == 0:
                break
        if g.is_zero:
            raise InvariantError("tI - A lost full rank")
        divisors[k] = g
        if g.degree == 0:
            for j in range(1, k):
                divisors[j] = ONE
            break

    factors = []
    for k in range(1, n + 1):
        f = exact_div(divisors[k], divisors[k - 1])
        if f.degree > 0:
            factors.append(_substitute_scaled(f, denom))
    return factors


def is_similar(a, b):
    """True when a and b are conjugate over Q (same rational canonical
    form); matrices of different sizes are never similar."""
    a._require_square("similarity test")
    b._require_square("similarity test")
    if a.rows != b.rows:
        return False
    return invariant_factors(a) == invariant_factors(b)


# ---------------------------------------------------------------------------
# Jordan-type block profile per irreducible factor

@dataclass(frozen=True)
class EigenClass:
    """Block data for one factor of the characteristic polynomial.

    ``block_sizes`` is non-increasing; for a quadratic complex-pair factor
    the sizes count conjugate pairs once.  ``kind`` is one of
    KIND_RATIONAL, KIND_COMPLEX, KIND_UNRESOLVED.
    """

    factor: IntPolynomial
    kind: str
    block_sizes: tuple
    algebraic_multiplicity: int
    geometric_multiplicity: int


@dataclass(frozen=True)
class JordanProfile:
    ambient_dim: int
    entries: tuple

    def class_for(self, factor):
        for entry in self.entries:
            if entry.factor == factor:
                return entry
        return None

    def without_zero_class(self):
        """The profile with the zero-eigenvalue class removed; this equals
        the profile of the nonnilpotent part."""
        kept = tuple(e for e in self.entries if e.factor != T)
        dim = sum(e.factor.degree * e.algebraic_multiplicity for e in kept)
        return JordanProfile(dim, kept)

    def check(self):
        total = 0
        for e in self.entries:
            if list(e.block_sizes) != sorted(e.block_sizes, reverse=True):
                raise InvariantError("block sizes are not non-increasing")
            if len(e.block_sizes) != e.geometric_multiplicity:
                raise InvariantError("block count disagrees with geometric "
                                     "multiplicity")
            if sum(e.block_sizes) != e.algebraic_multiplicity:
                raise InvariantError("block sizes disagree with algebraic "
                                     "multiplicity")
            total += e.factor.degree * e.algebraic_multiplicity
        if total != self.ambient_dim:
            raise InvariantError("profile does not fill the ambient space")
        return True


def _signed_divisors(c):
    out = set()
    for d in range(1, isqrt(c) + 1):
        if c % d == 0:
            out.update((d, -d, c // d, -(c // d)))
    return sorted(out)


def _split_squarefree(part):
    """Split a monic squarefree integer polynomial into a zero root,
    integer roots, and an undivided remainder classified by degree."""
    out = []
    rem = part
    if rem.degree >= 1 and rem.coefficient(0) == 0:
        out.append((T, KIND_RATIONAL))
        rem = exact_div(rem, T)
    if rem.degree >= 1:
        for r in _signed_divisors(abs(rem.coefficient(0))):
            if rem.degree < 1:
                break
            if rem(r) == 0:
                factor = IntPolynomial([-r, 1])
                out.append((factor, KIND_RATIONAL))
                rem = exact_div(rem, factor)
    if rem.degree == 1:
        raise InvariantError("monic linear factor escaped root extraction")
    if rem.degree == 2:
        disc = rem.coefficient(1) ** 2 - 4 * rem.coefficient(0)
        out.append((rem, KIND_COMPLEX if disc < 0 else KIND_UNRESOLVED))
    elif rem.degree >= 3:
        out.append((rem, KIND_UNRESOLVED))
    return out


def _matrix_poly(p, a):
    n = a.rows
    out = RationalMatrix.zeros(n, n)
    ident = RationalMatrix.identity(n)
    for c in reversed(p.coeffs):
        out = out * a + c * ident
    return out


def _block_sizes_from_ranks(a, factor, mult):
    """Recover the block size multiset of one factor from the rank
    sequence r_k = rank(factor(a)^k): the number of blocks of size >= k is
    (r_{k-1} - r_k) / deg(factor)."""
    deg = factor.degree
    base = _matrix_poly(factor, a)
    ranks = [a.rows]
    power = base
    while True:
        r = power.rank()
        if r == ranks[-1]:
            break
        ranks.append(r)
        if len(ranks) > a.rows + 1:
            raise InvariantError("rank sequence failed to stabilise")
        power = power * base
    at_least = []
    for k in range(1, len(ranks)):
        diff = ranks[k - 1] - ranks[k]
        if diff % deg:
            raise InvariantError(
                "rank drops are not a multiple of the factor degree; the "
                "residual factor mixes irreducible factors of unequal "
                "block structure, which this tool does not resolve")
        at_least.append(diff // deg)
    sizes = []
    for k in range(len(at_least), 0, -1):
        exactly = at_least[k - 1] - (at_least[k] if k < len(at_least) else 0)
        sizes.extend([k] * exactly)
    sizes.sort(reverse=True)
    if sum(sizes) != mult:
        raise InvariantError("block sizes do not sum to the multiplicity")
    return tuple(sizes)


def _class_sort_key(entry):
    f = entry.factor
    if f.degree == 1:
        return (1, -f.coefficient(0))
    return (f.degree, f.coeffs)


def jordan_profile(a):
    """Block profile of an integer square matrix over Q-irreducible
    factors of its characteristic polynomial.

    Factors are obtained from squarefree decomposition, integer-root
    extraction and a quadratic discriminant test; residual factors of
    degree >= 3 (and irrational real quadratics) are reported whole as
    KIND_UNRESOLVED, with exact block data.
    """
    a._require_square("jordan profile")
    if not a.is_integer:
        raise DomainError("jordan_profile needs integer entries")
    n = a.rows
    if n == 0:
        return JordanProfile(0, ())
    char = IntPolynomial(a.charpoly())
    entries = []
    for part, mult in squarefree_decomposition(char):
        for factor, kind in _split_squarefree(part):
            if mult == 1:
                sizes = (1,)
            else:
                sizes = _block_sizes_from_ranks(a, factor, mult)
            entries.append(EigenClass(
                factor=factor, kind=kind, block_sizes=sizes,
                algebraic_multiplicity=mult,
                geometric_multiplicity=len(sizes)))
    entries.sort(key=_class_sort_key)
    profile = JordanProfile(n, tuple(entries))
    profile.check()
    return profile
