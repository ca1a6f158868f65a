"""Vertex operators ``S_n`` and ``S*_n`` acting on power-sum expansions.

    S(z)  = exp( sum p_r z^r / r) exp(-sum d/dp_r z^-r) = sum_n S_n  z^n
    S*(z) = exp(-sum p_r z^r / r) exp( sum d/dp_r z^-r) = sum_n S*_n z^-n

Each exponential is expanded exactly.  On ``p_lam`` the ``z^-j`` part of the
derivative exponential picks a sub-multiset ``nu`` of the parts of ``lam``
with ``|nu| = j`` and contributes ``sign^len(nu) * prod_r C(m_r(lam), m_r(nu))``,
so only finitely many terms ever appear.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import comb

from .combinatorics import partitions_of, z_of
from .symfunc import PExpansion, inner_product, schur

__all__ = [
    "apply_S",
    "apply_Sstar",
    "apply_S_sequence",
    "adjoint_check",
    "p_derivative",
    "straighten",
]


@lru_cache(maxsize=None)
def _exp_power_sums(m, sign):
    """z^m coefficient of exp(sign * sum p_r z^r / r) as {nu: Fraction}."""
    if m < 0:
        return {}
    out = {}
    for nu in partitions_of(m):
        c = Fraction(1, z_of(nu))
        if sign < 0 and len(nu) % 2:
            c = -c
        out[nu] = c
    return out


@lru_cache(maxsize=None)
def _derivative_terms(lam, sign):
    """Group the derivative exponential's action on p_lam by degree drop.

    Returns {j: {remaining partition: Fraction}}.
    """
    counts = sorted(Counter(lam).items(), reverse=True)
    out = {}
    for picks in product(*(range(m + 1) for _, m in counts)):
        j = sum(r * k for (r, _), k in zip(counts, picks))
        coeff = 1
        rest = []
        for (r, m), k in zip(counts, picks):
            coeff *= comb(m, k)
            rest.extend([r] * (m - k))
        if sign < 0 and sum(picks) % 2:
            coeff = -coeff
        bucket = out.setdefault(j, {})
        key = tuple(rest)
        bucket[key] = bucket.get(key, 0) + coeff
    return out


@lru_cache(maxsize=None)
def _basis_image(lam, shift, mult_sign, deriv_sign):
    """Image of p_lam as {partition: Fraction}; the multiplication degree is j + shift."""
    acc = {}
    for j, rests in _derivative_terms(lam, deriv_sign).items():
        mults = _exp_power_sums(j + shift, mult_sign)
        if not mults:
            continue
        for rest, a in rests.items():
            for nu, b in mults.items():
                key = tuple(sorted(rest + nu, reverse=True))
                acc[key] = acc.get(key, 0) + a * b
    return tuple((key, w) for key, w in acc.items() if w)


def _apply(f, shift, mult_sign, deriv_sign):
    out = {}
    for lam, c in f.items():
        for key, w in _basis_image(lam, shift, mult_sign, deriv_sign):
            term = c * w
            if key in out:
                term = out[key] + term
            if term:
                out[key] = term
            else:
                out.pop(key, None)
    return PExpansion._raw(out)


def apply_S(n: int, f: PExpansion) -> PExpansion:
    """The ``z^n`` component ``S_n`` applied to ``f``."""
    return _apply(f, n, +1, -1)


def apply_Sstar(n: int, f: PExpansion) -> PExpansion:
    """The ``z^-n`` component ``S*_n`` applied to ``f``."""
    return _apply(f, -n, -1, +1)


def apply_S_sequence(indices, f=None) -> PExpansion:
    """``S_{a_1} S_{a_2} ... S_{a_k} f`` (rightmost applied first); ``f`` defaults to 1."""
    if f is None:
        f = PExpansion.one()
    for a in reversed(tuple(indices)):
        f = apply_S(a, f)
    return f


def p_derivative(r: int, f: PExpansion) -> PExpansion:
    """Formal partial derivative with respect to ``p_r``."""
    out = {}
    for lam, c in f.items():
        m = lam.count(r)
        if m:
            rest = list(lam)
            rest.remove(r)
            key = tuple(rest)
            term = c * m
            if key in out:
                term = out[key] + term
            if term:
                out[key] = term
            else:
                out.pop(key, None)
    return PExpansion._raw(out)


def adjoint_check(f: PExpansion, g: PExpansion, r: int) -> bool:
    """Check ``<p_r f, g> == <f, r d/dp_r g>`` exactly."""
    lhs = inner_product(PExpansion.p((r,)) * f, g)
    rhs = inner_product(f, p_derivative(r, g).scale(r))
    return lhs == rhs


def straighten(mu):
    """Predict ``S_mu.1`` for a composition: ``(sign, partition)`` or ``None`` for zero.

    Sorts ``mu + delta`` decreasingly; repeated or negative entries mean zero.
    """
    mu = tuple(mu)
    ell = len(mu)
    shifted = [m + ell - 1 - i for i, m in enumerate(mu)]
    if len(set(shifted)) != ell or any(s < 0 for s in shifted):
        return None
    order = sorted(range(ell), key=lambda i: -shifted[i])
    # sign of the sorting permutation via inversion count
    inversions = sum(1 for i in range(ell) for j in range(i + 1, ell) if order[i] > order[j])
    lam = [shifted[order[i]] - (ell - 1 - i) for i in range(ell)]
    lam = tuple(x for x in lam if x)
    return (-1 if inversions % 2 else 1), lam


def straightened_schur(mu) -> PExpansion:
    """``S_mu.1`` evaluated through ``straighten`` and the partition Schur cache."""
    res = straighten(mu)
    if res is None:
        return PExpansion.zero()
    sign, lam = res
    s = schur(lam)
    return s if sign > 0 else -s
