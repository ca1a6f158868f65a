"""Symmetric functions in the power-sum basis.

A ``PExpansion`` maps partitions to ``RatFunc`` coefficients: the term
``lam -> c`` stands for ``c * p_lam``.  Coefficients of the Hall-Littlewood
family are functions of the formal variable ``t``; the character code
substitutes ``t = 1/q`` once per expansion.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from numbers import Rational

from .combinatorics import Partition, partitions_of, weight, z_of, z_of_t
from .exact import Poly, RatFunc, VAR

__all__ = [
    "PExpansion",
    "p_mul",
    "inner_product",
    "q_one_row",
    "q_product",
    "elementary_e",
    "schur",
    "omega_char",
]


def _as_ratfunc(c):
    return c if isinstance(c, RatFunc) else RatFunc(c)


def _sort_key(lam):
    # ascending weight, then reverse lexicographic within a weight
    return (weight(lam), tuple(-x for x in lam))


class PExpansion:
    """Finite linear combination of power-sum products ``p_lam``."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for lam, c in dict(terms).items():
                c = _as_ratfunc(c)
                if c:
                    clean[tuple(lam)] = c
        self.terms = clean

    @classmethod
    def _raw(cls, terms):
        e = object.__new__(cls)
        e.terms = terms
        return e

    @classmethod
    def one(cls):
        return cls({(): 1})

    @classmethod
    def zero(cls):
        return cls._raw({})

    @classmethod
    def p(cls, lam, coeff=1):
        return cls({tuple(lam): coeff})

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def items(self):
        return self.terms.items()

    def coefficient(self, lam):
        return self.terms.get(tuple(lam), RatFunc(0))

    def support(self):
        return sorted(self.terms, key=_sort_key)

    def degrees(self):
        return {weight(lam) for lam in self.terms}

    def homogeneous_component(self, d):
        return PExpansion._raw({lam: c for lam, c in self.terms.items() if weight(lam) == d})

    def __eq__(self, other):
        if isinstance(other, PExpansion):
            return self.terms == other.terms
        if isinstance(other, (int, Rational, RatFunc)):
            return self == PExpansion({(): other})
        return NotImplemented

    __hash__ = None

    def __neg__(self):
        return PExpansion._raw({lam: -c for lam, c in self.terms.items()})

    def __add__(self, other):
        if not isinstance(other, PExpansion):
            other = PExpansion({(): other})
        out = dict(self.terms)
        for lam, c in other.terms.items():
            s = out[lam] + c if lam in out else c
            if s:
                out[lam] = s
            else:
                out.pop(lam, None)
        return PExpansion._raw(out)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, PExpansion):
            other = PExpansion({(): other})
        return self + (-other)

    def __rsub__(self, other):
        return PExpansion({(): other}) - self

    def scale(self, c):
        c = _as_ratfunc(c)
        if not c:
            return PExpansion._raw({})
        return PExpansion._raw({lam: v * c for lam, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, PExpansion):
            return p_mul(self, other)
        return self.scale(other)

    __rmul__ = __mul__

    def map_coefficients(self, fn):
        return PExpansion({lam: fn(c) for lam, c in self.terms.items()})

    def substitute_reciprocal(self):
        """Replace the formal variable by its reciprocal in every coefficient."""
        return self.map_coefficients(RatFunc.substitute_reciprocal)

    def render(self, var="t"):
        """One ``coeff * p[...]`` line per term, sorted by partition."""
        lines = []
        for lam in self.support():
            label = ",".join(map(str, lam))
            c = self.terms[lam]
            text = c.render(var)
            if c.is_polynomial() and len([x for x in c.num.coeffs if x]) > 1:
                text = f"({text})"
            lines.append(f"{text} * p[{label}]")
        return "\n".join(lines) if lines else "0"

    def __repr__(self):
        return f"PExpansion({self.render(VAR)!r})"


def p_mul(f: PExpansion, g: PExpansion) -> PExpansion:
    """Product, extending ``p_lam * p_mu = p_{lam u mu}`` bilinearly."""
    out = {}
    for lam, a in f.terms.items():
        for mu, b in g.terms.items():
            key = tuple(sorted(lam + mu, reverse=True))
            c = a * b
            if key in out:
                c = out[key] + c
            if c:
                out[key] = c
            else:
                out.pop(key, None)
    return PExpansion._raw(out)


def inner_product(f: PExpansion, g: PExpansion) -> RatFunc:
    """Hall inner product: ``sum_lam f_lam g_lam z_lam``."""
    if len(g.terms) < len(f.terms):
        f, g = g, f
    acc = RatFunc(0)
    for lam, a in f.terms.items():
        b = g.terms.get(lam)
        if b is not None:
            acc = acc + a * b * z_of(lam)
    return acc


@lru_cache(maxsize=None)
def q_one_row(n: int) -> PExpansion:
    """One-row Hall-Littlewood function ``q_n(x; t)``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return PExpansion({lam: z_of_t(lam).inverse() for lam in partitions_of(n)})


@lru_cache(maxsize=None)
def q_product(rho: Partition) -> PExpansion:
    """``q_rho = q_{rho_1} q_{rho_2} ...``; ``q_() = 1``."""
    rho = tuple(rho)
    if not rho:
        return PExpansion.one()
    return p_mul(q_product(rho[:-1]), q_one_row(rho[-1]))


@lru_cache(maxsize=None)
def q_product_reciprocal(rho: Partition) -> PExpansion:
    """``q_rho(x; 1/q)``: ``q_product`` with ``t`` replaced by ``1/q``."""
    return q_product(tuple(rho)).substitute_reciprocal()


@lru_cache(maxsize=None)
def elementary_e(k: int) -> PExpansion:
    """Elementary symmetric function, read off as ``(-1)^k S*_{-k}.1``."""
    from .vertex import apply_Sstar

    if k < 0:
        raise ValueError("k must be nonnegative")
    e = apply_Sstar(-k, PExpansion.one())
    return e if k % 2 == 0 else -e


@lru_cache(maxsize=None)
def schur(lam: Partition) -> PExpansion:
    """Schur function built as ``S_{lam_1} ... S_{lam_l}.1``."""
    from .vertex import apply_S

    lam = tuple(lam)
    f = PExpansion.one()
    for part in reversed(lam):
        f = apply_S(part, f)
    return f


def omega_char(lam: Partition, mu: Partition) -> int:
    """Symmetric-group character value on the class of cycle type ``mu``."""
    lam, mu = tuple(lam), tuple(mu)
    if weight(lam) != weight(mu):
        raise ValueError(f"weight mismatch: |{lam}| != |{mu}|")
    c = schur(lam).coefficient(mu)
    if not c.is_polynomial() or not c.num.is_constant():
        raise ArithmeticError(f"schur coefficient of p{mu} is not a constant: {c}")
    value = c.num[0] * z_of(mu)
    assert value.denominator == 1, (lam, mu, value)
    return int(value)


def complete_h(n: int) -> PExpansion:
    """``h_n = sum_{lam |- n} p_lam / z_lam`` (direct definition)."""
    return PExpansion({lam: Fraction(1, z_of(lam)) for lam in partitions_of(n)})


def t_var() -> RatFunc:
    return RatFunc(Poly.var())
