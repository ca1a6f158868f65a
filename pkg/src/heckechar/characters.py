"""Irreducible characters of the type-A Hecke algebra ``H_n(q)``.

Two independent routes:

* ``frobenius_oracle`` evaluates ``q^n / (q-1)^l(mu) * <q_mu(x; 1/q), s_lam>``
  directly in the power-sum basis.
* ``dual_mn`` peels the largest part of ``lam`` and recurses, summing over
  sub-compositions ``tau`` of ``mu`` and brick tabloids of ``|tau| - lam_1``.

Both return polynomials in ``q`` with integer coefficients.
"""

from __future__ import annotations

import json
from collections import defaultdict
from dataclasses import dataclass, field
from functools import lru_cache

from .combinatorics import (
    Partition,
    brick_tabloids,
    brick_tabloids_of_type,
    format_partition,
    is_partition,
    length,
    partition,
    partitions_of,
    prefix_sums,
    sub_compositions,
    subtract_to_partition,
    tabloid_type,
    union_parts,
    weight,
)
from .exact import NonPolynomial, Poly, RatFunc, to_int_poly
from .symfunc import (
    PExpansion,
    elementary_e,
    inner_product,
    q_product,
    q_product_reciprocal,
    schur,
)

__all__ = [
    "frobenius_oracle",
    "dual_mn",
    "c_coefficient",
    "e_expansion_check",
    "brick_tabloid_expansion",
    "character_table",
    "CharTable",
    "clear_caches",
]

_Q_MINUS_1 = RatFunc(Poly((-1, 1)))
_ONE_POLY = Poly.constant(1)


def _check_weights(lam, mu):
    if weight(lam) != weight(mu):
        raise ValueError(f"weight mismatch: |{lam}| = {weight(lam)} != |{mu}| = {weight(mu)}")


@lru_cache(maxsize=None)
def _q_power(k):
    return RatFunc.monomial(k)


@lru_cache(maxsize=None)
def _q_minus_1_power(k):
    if k < 0:
        raise ArithmeticError(f"negative power of (q-1) requested: {k}")
    return _Q_MINUS_1 ** k


@lru_cache(maxsize=None)
def _tabloid_factor(b):
    """``prod_j 1/(q^{-r_j} - 1)`` over the prefix sums of ``b``."""
    f = RatFunc(1)
    for r in prefix_sums(b):
        # 1/(q^-r - 1) = q^r / (1 - q^r)
        f = f * RatFunc(Poly.monomial(r), Poly.constant(1) - Poly.monomial(r))
    return f


@lru_cache(maxsize=None)
def _grouped_tabloid_weights(k):
    """``{rho: sum_{b of type rho} (q-1)^l(b) * prod 1/(q^{-r_j}-1)}`` over tabloids of ``k``."""
    out = {}
    for b in brick_tabloids(k):
        rho = tabloid_type(b)
        w = _q_minus_1_power(len(b)) * _tabloid_factor(b)
        out[rho] = out[rho] + w if rho in out else w
    return out


@lru_cache(maxsize=None)
def _cyclotomic_block(lo, hi):
    """``prod_{lo < r <= hi} (1 - q^r)`` as an integer polynomial."""
    f = _ONE_POLY
    for r in range(lo + 1, hi + 1):
        f = f * (_ONE_POLY - Poly.monomial(r))
    return f


@lru_cache(maxsize=None)
def _cleared_tabloid_weights(k):
    """``_grouped_tabloid_weights(k)`` times ``prod_{r<=k} (1 - q^r)``; all polynomials.

    Every prefix sum of a tabloid of ``k`` is a distinct integer in ``1..k``,
    so this common denominator clears each weight.
    """
    clear = RatFunc(_cyclotomic_block(0, k))
    return tuple(
        (rho, to_int_poly(w * clear)) for rho, w in _grouped_tabloid_weights(k).items()
    )


@lru_cache(maxsize=None)
def _poly_q_minus_1_power(k):
    return Poly((-1, 1)) ** k


def frobenius_oracle(lam: Partition, mu: Partition) -> RatFunc:
    """``q^n/(q-1)^l(mu) * <q_mu(x; q^-1), s_lam>``, reduced."""
    lam, mu = tuple(lam), tuple(mu)
    _check_weights(lam, mu)
    n = weight(mu)
    pairing = inner_product(q_product_reciprocal(mu), schur(lam))
    return pairing * _q_power(n) / _q_minus_1_power(len(mu))


def _tau_groups(lam1, mu):
    """Collapse sub-compositions by what the recursion actually depends on.

    The term for ``tau`` depends only on ``l(tau)``, ``|tau|`` and the
    partition ``mu - tau``; returns ``{(l(tau), |tau|, mu - tau): count}``.
    """
    groups = defaultdict(int)
    for tau in sub_compositions(mu):
        size = sum(tau)
        if size < lam1:
            continue
        groups[(length(tau), size, subtract_to_partition(mu, tau))] += 1
    return groups


def dual_mn(lam: Partition, mu: Partition, memo: dict | None = None, grouped: bool = True) -> Poly:
    """Character value ``chi^lam_mu(q)`` by the upper-partition recursion.

    ``memo`` maps ``(lam, mu)`` to finished values and may be shared across
    calls.  With ``grouped=False`` every sub-composition and every brick
    tabloid is visited one at a time; the default collapses equal terms first.
    """
    lam, mu = tuple(lam), partition(mu)
    if not is_partition(lam):
        raise ValueError(f"lambda must be a partition, got {lam}")
    _check_weights(lam, mu)
    if memo is None:
        memo = {}
    return _dual_mn(lam, mu, memo, grouped)


def _dual_mn(lam, mu, memo, grouped):
    key = (lam, mu)
    hit = memo.get(key)
    if hit is not None:
        return hit
    if not lam:
        value = _ONE_POLY
        memo[key] = value
        return value

    lam1, rest = lam[0], lam[1:]
    ell_mu = len(mu)
    if grouped:
        value = _grouped_sum(lam1, rest, mu, memo)
        memo[key] = value
        return value

    coeffs = {}
    for tau in sub_compositions(mu):
        size = sum(tau)
        if size < lam1:
            continue
        ell_tau = length(tau)
        diff = subtract_to_partition(mu, tau)
        for b in brick_tabloids(size - lam1):
            e = ell_tau - ell_mu + len(diff) + len(b)
            assert e >= 0, (lam, mu, tau, b)
            c = _q_power(lam1 - ell_tau) * _q_minus_1_power(e) * _tabloid_factor(b)
            nu = union_parts(diff, b)
            coeffs[nu] = coeffs[nu] + c if nu in coeffs else c

    total = RatFunc(0)
    for nu, c in coeffs.items():
        if not c:
            continue
        assert weight(nu) == weight(rest), (lam, mu, nu)
        sub = _dual_mn(rest, nu, memo, grouped)
        if sub:
            total = total + c * RatFunc(sub)
    value = to_int_poly(total)
    memo[key] = value
    return value


def _grouped_sum(lam1, rest, mu, memo):
    # Everything is put over prod_{r<=K} (1 - q^r) * q^l(mu), K = |mu| - lam1,
    # so the sum runs in integer polynomials and ends in one exact division.
    top = weight(mu) - lam1
    shift = len(mu)
    acc = Poly()
    for (ell_tau, size, diff), count in _tau_groups(lam1, mu).items():
        k = size - lam1
        base_exp = ell_tau - len(mu) + len(diff)
        assert base_exp >= 0, (lam1, mu, ell_tau, diff)
        inner = Poly()
        for rho, w in _cleared_tabloid_weights(k):
            nu = union_parts(diff, rho)
            assert weight(nu) == weight(rest), (rest, mu, nu)
            sub = _dual_mn(rest, nu, memo, True)
            if sub:
                inner = inner + w * sub
        if not inner:
            continue
        factor = (
            Poly.monomial(lam1 - ell_tau + shift, count)
            * _poly_q_minus_1_power(base_exp)
            * _cyclotomic_block(k, top)
        )
        acc = acc + factor * inner
    den = _cyclotomic_block(0, top) * Poly.monomial(shift)
    quot, rem = acc.divmod(den)
    if rem:
        raise NonPolynomial(f"dual recursion left a remainder for mu={mu}, lam_1={lam1}")
    return to_int_poly(RatFunc(quot))


def c_coefficient(m: int, rho: Partition) -> RatFunc:
    """Coefficient of ``q_rho(x; t)`` in ``e_m``, as a brick-tabloid sum in ``t``."""
    rho = tuple(rho)
    if weight(rho) != m:
        raise ValueError(f"rho={rho} is not a partition of {m}")
    total = RatFunc(0)
    for b in brick_tabloids_of_type(rho):
        term = RatFunc(1)
        for r in prefix_sums(b):
            term = term / RatFunc(Poly.monomial(r) - Poly.constant(1))
        total = total + term
    return -total if m % 2 else total


def e_expansion_check(m: int) -> bool:
    """Does ``e_m == sum_{rho |- m} C_{m,rho} q_rho(x; t)`` hold exactly?"""
    rhs = PExpansion.zero()
    for rho in partitions_of(m):
        rhs = rhs + q_product(rho).scale(c_coefficient(m, rho))
    return rhs == elementary_e(m)


@lru_cache(maxsize=None)
def brick_tabloid_expansion(n: int) -> PExpansion:
    """``sum_b prod_i 1/(q^{-r_i}-1) q_b(x; 1/q)`` over brick tabloids of ``n``."""
    # q_b depends only on the type of b, so sum the scalar factors per type first
    by_type = {}
    for b in brick_tabloids(n):
        rho = tabloid_type(b)
        f = _tabloid_factor(b)
        by_type[rho] = by_type[rho] + f if rho in by_type else f
    total = PExpansion.zero()
    for rho, f in by_type.items():
        total = total + q_product_reciprocal(rho).scale(f)
    return total


@dataclass
class CharTable:
    n: int
    rows: tuple
    cols: tuple
    values: dict = field(repr=False)

    def __getitem__(self, key):
        return self.values[key]

    def matrix(self):
        return [[self.values[(lam, mu)] for mu in self.cols] for lam in self.rows]

    def to_json_obj(self):
        return {
            "n": self.n,
            "rows": [format_partition(lam) for lam in self.rows],
            "cols": [format_partition(mu) for mu in self.cols],
            "values": [[v.render() for v in row] for row in self.matrix()],
        }

    def to_json(self, indent=None):
        return json.dumps(self.to_json_obj(), indent=indent)


def character_table(n: int, method: str = "dual", memo: dict | None = None) -> CharTable:
    """Full table over partitions of ``n``; one memo is shared across all cells."""
    parts = partitions_of(n)
    values = {}
    if method == "dual":
        if memo is None:
            memo = {}
        for lam in parts:
            for mu in parts:
                values[(lam, mu)] = dual_mn(lam, mu, memo)
    elif method == "oracle":
        for lam in parts:
            for mu in parts:
                values[(lam, mu)] = to_int_poly(frobenius_oracle(lam, mu))
    else:
        raise ValueError(f"unknown method {method!r}")
    return CharTable(n, parts, parts, values)


def clear_caches():
    """Drop every process-wide expansion and coefficient cache (used by benchmarks)."""
    from . import combinatorics, symfunc, vertex

    for mod in (combinatorics, symfunc, vertex):
        for obj in vars(mod).values():
            if hasattr(obj, "cache_clear"):
                obj.cache_clear()
    for fn in (
        _q_power,
        _q_minus_1_power,
        _tabloid_factor,
        _grouped_tabloid_weights,
        _cyclotomic_block,
        _cleared_tabloid_weights,
        _poly_q_minus_1_power,
        brick_tabloid_expansion,
    ):
        fn.cache_clear()
