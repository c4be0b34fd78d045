"""Exact polynomial arithmetic over the integers, plus rational functions.

Coefficients are stored ascending in degree with no trailing zeros, so the
zero polynomial is the empty tuple and ``coeffs[-1]`` is always the leading
coefficient of a nonzero polynomial.  Division-flavoured operations work in
the rationals internally and hand back integer polynomials in a canonical
scaling (primitive, positive leading coefficient for gcds).
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .errors import DomainError


def _trim(coeffs):
    n = len(coeffs)
    while n and coeffs[n - 1] == 0:
        n -= 1
    return coeffs[:n]


def _coerce_int(c):
    if isinstance(c, bool):
        raise DomainError(f"coefficient {c!r} is not an integer")
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        if c.denominator != 1:
            raise DomainError(f"coefficient {c} is not an integer")
        return c.numerator
    raise DomainError(f"coefficient {c!r} is not an integer")


class IntPolynomial:
    """Dense integer polynomial, coefficients ascending in degree."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        object.__setattr__(self, "coeffs",
                           tuple(_trim([_coerce_int(c) for c in coeffs])))

    @property
    def degree(self):
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self):
        return not self.coeffs

    @property
    def leading(self):
        return self.coeffs[-1] if self.coeffs else 0

    def coefficient(self, k):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __neg__(self):
        return IntPolynomial([-c for c in self.coeffs])

    def __add__(self, other):
        other = as_poly(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial(out)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-as_poly(other))

    def __rsub__(self, other):
        return as_poly(other) + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPolynomial([c * other for c in self.coeffs])
        other = as_poly(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ZERO
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise DomainError("negative power of a polynomial")
        out = ONE
        for _ in range(n):
            out = out * self
        return out

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self):
        return IntPolynomial([k * c for k, c in enumerate(self.coeffs)][1:])

    def content(self):
        """gcd of the coefficients (0 for the zero polynomial)."""
        g = 0
        for c in self.coeffs:
            g = gcd(g, abs(c))
        return g

    def normalized(self):
        """Primitive part with positive leading coefficient."""
        if self.is_zero:
            return self
        g = self.content()
        if self.leading < 0:
            g = -g
        return IntPolynomial([c // g for c in self.coeffs])

    @property
    def is_monic(self):
        return self.leading == 1

    def __str__(self):
        if self.is_zero:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                var = "t" if k == 1 else f"t^{k}"
                body = var if mag == 1 else f"{mag}{var}"
            if not parts:
                parts.append(f"-{body}" if c < 0 else body)
            else:
                parts.append(f"{'-' if c < 0 else '+'} {body}")
        return " ".join(parts)

    def __repr__(self):
        return f"IntPolynomial({list(self.coeffs)!r})"


ZERO = IntPolynomial()
ONE = IntPolynomial([1])
T = IntPolynomial([0, 1])


def as_poly(value):
    """Coerce an int or a coefficient sequence to an IntPolynomial."""
    if isinstance(value, IntPolynomial):
        return value
    if isinstance(value, int):
        return IntPolynomial([value])
    return IntPolynomial(value)


def poly_mul(p, q):
    return as_poly(p) * as_poly(q)


def _qtrim(cs):
    n = len(cs)
    while n and cs[n - 1] == 0:
        n -= 1
    del cs[n:]
    return cs


def _qdivmod(num, den):
    """Quotient and remainder over the rationals, as Fraction lists."""
    rem = [Fraction(c) for c in num]
    db = len(den) - 1
    lead = Fraction(den[-1])
    if len(rem) < len(den):
        return [], _qtrim(rem)
    quot = [Fraction(0)] * (len(rem) - db)
    for k in range(len(rem) - 1, db - 1, -1):
        c = rem[k] / lead
        if c:
            quot[k - db] = c
            for j in range(db + 1):
                rem[k - db + j] -= c * den[j]
        rem[k] = Fraction(0)
    return _qtrim(quot), _qtrim(rem)


def poly_divmod(p, q):
    """Exact division with remainder in Q[t], restricted to integer results.

    Division by a primitive divisor of an integer polynomial always lands
    back in Z[t] (Gauss), which covers every caller in this package; a
    genuinely fractional quotient or remainder raises DomainError instead
    of being silently rescaled.
    """
    p, q = as_poly(p), as_poly(q)
    if q.is_zero:
        raise DomainError("polynomial division by zero")
    quot, rem = _qdivmod(p.coeffs, q.coeffs)
    for c in quot + rem:
        if c.denominator != 1:
            raise DomainError(
                f"division of {p} by {q} is not exact over the integers")
    return IntPolynomial(quot), IntPolynomial(rem)


def exact_div(p, q):
    """p / q when q divides p exactly; DomainError otherwise."""
    quot, rem = poly_divmod(p, q)
    if not rem.is_zero:
        raise DomainError(f"{q} does not divide {p}")
    return quot


def _qmod(a, b):
    """a mod b for nonzero Fraction lists a, b."""
    a = a[:]
    db = len(b) - 1
    inv = 1 / b[-1]
    for k in range(len(a) - 1, db - 1, -1):
        c = a[k] * inv
        if c:
            for j in range(db):
                a[k - db + j] -= c * b[j]
            a[k] = Fraction(0)
    return _qtrim(a)


def _fractions_to_primitive(cs):
    """Scale a nonzero Fraction list to a primitive, positive-leading
    integer polynomial."""
    mult = 1
    for c in cs:
        mult = mult * c.denominator // gcd(mult, c.denominator)
    ints = [int(c * mult) for c in cs]
    g = 0
    for c in ints:
        g = gcd(g, abs(c))
    if ints[-1] < 0:
        g = -g
    return IntPolynomial([c // g for c in ints])


def poly_gcd(p, q):
    """gcd in Q[t], returned primitive with positive leading coefficient."""
    p, q = as_poly(p), as_poly(q)
    a = [Fraction(c) for c in p.coeffs]
    b = [Fraction(c) for c in q.coeffs]
    while b:
        a, b = b, _qmod(a, b)
    if not a:
        return ZERO
    return _fractions_to_primitive(a)


def squarefree_decomposition(p):
    """Yun decomposition: pairwise-coprime squarefree factors with their
    multiplicities, reassembling to the input up to a rational unit."""
    p = as_poly(p)
    if p.is_zero:
        raise DomainError("zero polynomial has no squarefree decomposition")
    if p.degree == 0:
        return []
    a0 = p.normalized()
    deriv = a0.derivative()
    g = poly_gcd(a0, deriv)
    if g.degree == 0:
        return [(a0, 1)]
    c = exact_div(a0, g)
    d = exact_div(deriv, g) - c.derivative()
    out = []
    i = 1
    while c.degree > 0:
        a = poly_gcd(c, d)
        if a.degree > 0:
            out.append((a, i))
        c = exact_div(c, a)
        d = exact_div(d, a) - c.derivative()
        i += 1
    return out


class RationalFunction:
    """Quotient of integer polynomials in a canonical form: numerator and
    denominator coprime in Q[t] with coprime integer contents, denominator
    with positive leading coefficient.  The representation is unique."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=1):
        num, den = as_poly(num), as_poly(den)
        if den.is_zero:
            raise DomainError("zero denominator in rational function")
        if num.is_zero:
            num, den = ZERO, ONE
        else:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num, den = exact_div(num, g), exact_div(den, g)
            if den.leading < 0:
                num, den = -num, -den
            k = gcd(num.content(), den.content())
            if k > 1:
                num = IntPolynomial([c // k for c in num.coeffs])
                den = IntPolynomial([c // k for c in den.coeffs])
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    @property
    def is_one(self):
        return self.num == ONE and self.den == ONE

    @property
    def is_polynomial(self):
        """True when the canonical denominator is the constant 1, i.e. the
        value lies in Z[t]."""
        return self.den == ONE

    def __eq__(self, other):
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __mul__(self, other):
        if isinstance(other, (IntPolynomial, int)):
            other = RationalFunction(other)
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self):
        if self.num.is_zero:
            raise DomainError("cannot invert the zero rational function")
        return RationalFunction(self.den, self.num)

    def __pow__(self, n):
        base = self
        if n < 0:
            base, n = self.inverse(), -n
        out = RationalFunction(1)
        for _ in range(n):
            out = out * base
        return out

    def __str__(self):
        if self.den == ONE:
            return str(self.num)
        return f"({self.num}) / ({self.den})"

    def __repr__(self):
        return f"RationalFunction({list(self.num.coeffs)!r}, {list(self.den.coeffs)!r})"


RF_ONE = RationalFunction(1)


def ratfunc_mul(f, g):
    return f * g


def ratfunc_inv(f):
    return f.inverse()


# Tuple-based helpers for hot loops that would otherwise allocate one
# IntPolynomial per intermediate (polynomial-matrix determinants).

def tpoly_add(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return tuple(_trim(out))


def tpoly_mul(a, b):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
    return tuple(_trim(out))


def tpoly_neg(a):
    return tuple(-c for c in a)
