"""Exact univariate polynomials and rational functions over the rationals.

Everything lives in a single formal variable.  ``Poly`` stores ascending
coefficients (``int`` where integral, otherwise ``Fraction``) with trailing
zeros stripped; ``RatFunc`` keeps numerator and denominator coprime with a
monic denominator, so structural equality is semantic equality.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import gcd
from numbers import Rational

__all__ = [
    "Poly",
    "RatFunc",
    "NonPolynomial",
    "NonIntegerCoefficients",
    "to_int_poly",
    "parse_poly",
    "VAR",
]

VAR = "q"


class NonPolynomial(ArithmeticError):
    """Raised when a rational function does not reduce to a polynomial."""


class NonIntegerCoefficients(ArithmeticError):
    """Raised when a polynomial has a non-integral coefficient."""


def _canon(c):
    """Exact coefficient: ``int`` when integral, else ``Fraction``."""
    if isinstance(c, int):
        return int(c)
    c = Fraction(c)
    return c.numerator if c.denominator == 1 else c


def _ratio(a, b):
    if b == 1:
        return a
    if b == -1:
        return -a
    return _canon(Fraction(a) / b)


def _primitive(coeffs):
    """Integer coefficient list with content 1 and positive leading term."""
    den = 1
    for c in coeffs:
        if not isinstance(c, int):
            den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in coeffs]
    g = 0
    for c in ints:
        g = gcd(g, c)
        if g == 1:
            break
    if ints[-1] < 0:
        g = -g
    return [c // g for c in ints]


def _pseudo_rem(a, b):
    """Remainder of lc(b)^(deg a - deg b + 1) * a by b over the integers."""
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    while len(r) - 1 >= db and r:
        c = r[-1]
        shift = len(r) - 1 - db
        r = [x * lb for x in r]
        for j in range(db + 1):
            r[shift + j] -= c * b[j]
        while r and not r[-1]:
            r.pop()
    return r


def _strip(coeffs):
    n = len(coeffs)
    while n and not coeffs[n - 1]:
        n -= 1
    return tuple(coeffs[:n])


class Poly:
    """Polynomial with exact rational coefficients, ascending degree.

    The zero polynomial has an empty coefficient tuple and degree -1.
    """

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs=()):
        self.coeffs = _strip([_canon(c) for c in coeffs])
        self._hash = None

    @classmethod
    def _raw(cls, coeffs):
        # coeffs must already be a stripped tuple of exact coefficients
        p = object.__new__(cls)
        p.coeffs = coeffs
        p._hash = None
        return p

    @classmethod
    def constant(cls, c):
        return cls((c,))

    @classmethod
    def monomial(cls, k, c=1):
        if k < 0:
            raise ValueError("negative exponent in monomial")
        return cls([0] * k + [c])

    @classmethod
    def var(cls):
        return cls.monomial(1)

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def is_one(self):
        return len(self.coeffs) == 1 and self.coeffs[0] == 1

    def is_constant(self):
        return len(self.coeffs) <= 1

    @property
    def lead(self):
        return self.coeffs[-1] if self.coeffs else 0

    def __getitem__(self, k):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return 0

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Rational)):
            return self.coeffs == _strip([_canon(other)])
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.coeffs)
        return self._hash

    def __bool__(self):
        return bool(self.coeffs)

    def __neg__(self):
        return Poly._raw(tuple(-c for c in self.coeffs))

    def __add__(self, other):
        if not isinstance(other, Poly):
            other = Poly.constant(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        res = list(a)
        for i, c in enumerate(b):
            res[i] += c
        return Poly._raw(_strip(res))

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, Poly):
            other = Poly.constant(other)
        return self + (-other)

    def __rsub__(self, other):
        return Poly.constant(other) - self

    def __mul__(self, other):
        if not isinstance(other, Poly):
            c = _canon(other)
            if not c:
                return Poly._raw(())
            return Poly._raw(tuple(x * c for x in self.coeffs))
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly._raw(())
        res = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    res[i + j] += x * y
        return Poly._raw(tuple(res))

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("Poly exponent must be nonnegative")
        result = Poly._raw((1,))
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def divmod(self, other):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        db = other.degree
        lb = other.lead
        if len(rem) - 1 < db:
            return Poly._raw(()), self
        quot = [0] * (len(rem) - db)
        bc = other.coeffs
        for k in range(len(rem) - 1 - db, -1, -1):
            c = _ratio(rem[k + db], lb)
            quot[k] = c
            if c:
                for j in range(db + 1):
                    rem[k + j] -= c * bc[j]
        return Poly._raw(_strip(quot)), Poly._raw(_strip([_canon(x) for x in rem[:db]]))

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def monic(self):
        if not self.coeffs or self.coeffs[-1] == 1:
            return self
        lc = self.coeffs[-1]
        return Poly._raw(tuple(_ratio(c, lc) for c in self.coeffs))

    def gcd(self, other):
        """Monic greatest common divisor (zero if both are zero).

        Runs a primitive pseudo-remainder sequence on integer coefficient
        lists, which avoids the fraction growth of plain Euclid over Q.
        """
        if not self.coeffs:
            return other.monic()
        if not other.coeffs:
            return self.monic()
        if len(self.coeffs) == 1 or len(other.coeffs) == 1:
            return _ONE
        a, b = _primitive(self.coeffs), _primitive(other.coeffs)
        if len(a) < len(b):
            a, b = b, a
        while b:
            r = _pseudo_rem(a, b)
            a, b = b, (_primitive(r) if r else r)
        if len(a) == 1:
            return _ONE
        return Poly._raw(tuple(a)).monic()

    def eval_at(self, r):
        r = Fraction(r)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * r + c
        return acc

    def reversed_coeffs(self):
        """Return x^deg * p(1/x)."""
        return Poly._raw(_strip(list(reversed(self.coeffs))))

    def low_order(self):
        """Multiplicity of 0 as a root (0 for the zero polynomial)."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return 0

    def is_integral(self):
        return all(c.denominator == 1 for c in self.coeffs)

    def __repr__(self):
        return f"Poly({self.render()!r})"

    def __str__(self):
        return self.render()

    def render(self, var=VAR):
        """Canonical text: descending powers, explicit signs, e.g. ``-q^3+2q^2-q``."""
        if not self.coeffs:
            return "0"
        out = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if k == 0:
                body = str(a)
            else:
                mono = var if k == 1 else f"{var}^{k}"
                body = mono if a == 1 else f"{a}{mono}"
            if out or sign == "-":
                out.append(sign)
            out.append(body)
        return "".join(out)


_TERM = re.compile(
    r"""\s*([+-])?\s*
        (?:(\d+(?:/\d+)?)\s*\*?\s*)?
        (?:([a-zA-Z])(?:\^(\d+))?)?""",
    re.VERBOSE,
)


def parse_poly(text, var=VAR):
    """Parse the canonical rendering back into a ``Poly``.

    >>> parse_poly("-q^3+2q^2-q").render()
    '-q^3+2q^2-q'
    """
    s = text.strip()
    if not s:
        raise ValueError("empty polynomial string")
    coeffs = {}
    pos = 0
    first = True
    while pos < len(s):
        m = _TERM.match(s, pos)
        sign, num, name, exp = m.groups()
        if m.end() == pos or (num is None and name is None):
            raise ValueError(f"cannot parse polynomial {text!r} at offset {pos}")
        if sign is None and not first:
            raise ValueError(f"missing sign before term at offset {pos} in {text!r}")
        if name is not None and name != var:
            raise ValueError(f"unexpected variable {name!r} in {text!r}")
        c = Fraction(num) if num is not None else Fraction(1)
        if sign == "-":
            c = -c
        k = 0 if name is None else (int(exp) if exp is not None else 1)
        coeffs[k] = coeffs.get(k, 0) + c
        pos = m.end()
        first = False
    deg = max(coeffs)
    return Poly([coeffs.get(i, 0) for i in range(deg + 1)])


_ONE = Poly._raw((1,))
_ZERO = Poly._raw(())


class RatFunc:
    """Reduced quotient of two ``Poly`` values with a monic denominator."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num=0, den=1):
        if not isinstance(num, Poly):
            num = Poly.constant(num)
        if not isinstance(den, Poly):
            den = Poly.constant(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        self.num, self.den = _normalize(num, den)
        self._hash = None

    @classmethod
    def _raw(cls, num, den):
        r = object.__new__(cls)
        r.num = num
        r.den = den
        r._hash = None
        return r

    @classmethod
    def var(cls):
        return cls._raw(Poly.var(), _ONE)

    @classmethod
    def monomial(cls, k, c=1):
        """c * x^k for any integer k."""
        if k >= 0:
            return cls(Poly.monomial(k, c))
        return cls(Poly.constant(c), Poly.monomial(-k))

    def is_zero(self):
        return self.num.is_zero()

    def is_polynomial(self):
        return self.den.is_one()

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        if isinstance(other, RatFunc):
            return self.num == other.num and self.den == other.den
        if isinstance(other, Poly):
            return self.den.is_one() and self.num == other
        if isinstance(other, (int, Rational)):
            return self.den.is_one() and self.num == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def __neg__(self):
        return RatFunc._raw(-self.num, self.den)

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if self.den == other.den:
            n = self.num + other.num
            if self.den.is_one():
                return RatFunc._raw(n, _ONE)
            return RatFunc._from_unreduced(n, self.den)
        return RatFunc._from_unreduced(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Rational)) and not isinstance(other, bool):
            if not other:
                return RatFunc._raw(_ZERO, _ONE)
            return RatFunc._raw(self.num * other, self.den)
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if self.den.is_one() and other.den.is_one():
            return RatFunc._raw(self.num * other.num, _ONE)
        # cross-cancel before multiplying to keep degrees small
        g1 = self.num.gcd(other.den)
        g2 = other.num.gcd(self.den)
        n1, d2 = (self.num // g1, other.den // g1) if not g1.is_one() else (self.num, other.den)
        n2, d1 = (other.num // g2, self.den // g2) if not g2.is_one() else (other.num, self.den)
        num, den = n1 * n2, d1 * d2
        if num.is_zero():
            return RatFunc._raw(_ZERO, _ONE)
        lc = den.lead
        if lc != 1:
            num, den = num * _ratio(1, lc), den * _ratio(1, lc)
        return RatFunc._raw(num, den)

    __rmul__ = __mul__

    def inverse(self):
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of the zero rational function")
        lc = self.num.lead
        return RatFunc._raw(self.den * _ratio(1, lc), self.num * _ratio(1, lc))

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return _coerce(other) * self.inverse()

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        return RatFunc._raw(self.num ** k, self.den ** k)

    def int_pow(self, k):
        return self ** k

    @classmethod
    def _from_unreduced(cls, num, den):
        num, den = _normalize(num, den)
        return cls._raw(num, den)

    def eval_at(self, r):
        d = self.den.eval_at(r)
        if d == 0:
            raise ZeroDivisionError(f"denominator vanishes at {r}")
        return self.num.eval_at(r) / d

    def substitute_reciprocal(self):
        """Return f(1/x), renormalized."""
        # N(1/x) = x^-a rev(N), D(1/x) = x^-b rev(D)
        if self.num.is_zero():
            return self
        a, b = self.num.degree, self.den.degree
        num = self.num.reversed_coeffs()
        den = self.den.reversed_coeffs()
        shift = b - a
        if shift > 0:
            num = num * Poly.monomial(shift)
        elif shift < 0:
            den = den * Poly.monomial(-shift)
        return RatFunc._from_unreduced(num, den)

    def __repr__(self):
        return f"RatFunc({self.render()!r})"

    def __str__(self):
        return self.render()

    def render(self, var=VAR):
        if self.den.is_one():
            return self.num.render(var)
        n = self.num.render(var)
        d = self.den.render(var)
        if len(self.num.coeffs) > 1 or self.num.lead < 0:
            n = f"({n})"
        if len(self.den.coeffs) > 1 or any(c.denominator != 1 for c in self.den.coeffs):
            d = f"({d})"
        return f"{n}/{d}"


def _normalize(num, den):
    if num.is_zero():
        return _ZERO, _ONE
    if not den.is_constant():
        g = num.gcd(den)
        if not g.is_one():
            num, den = num // g, den // g
    lc = den.lead
    if lc != 1:
        inv = _ratio(1, lc)
        num, den = num * inv, den * inv
    return num, den


def _coerce(x):
    if isinstance(x, RatFunc):
        return x
    if isinstance(x, Poly):
        return RatFunc._raw(x, _ONE)
    if isinstance(x, (int, Rational)):
        return RatFunc._raw(Poly.constant(x), _ONE)
    return NotImplemented


def to_int_poly(f):
    """Return the numerator of ``f`` if it is a polynomial with integer coefficients.

    Raises ``NonPolynomial`` if the reduced denominator is not 1 and
    ``NonIntegerCoefficients`` if some coefficient is fractional.
    """
    if not isinstance(f, RatFunc):
        f = _coerce(f)
    if not f.den.is_one():
        raise NonPolynomial(f"not a polynomial: {f.render()}")
    if not f.num.is_integral():
        raise NonIntegerCoefficients(f"non-integer coefficients: {f.num.render()}")
    return f.num
