"""Identity suites shared by the CLI ``verify`` command and the test-suite.

Each suite returns a list of ``Check`` records, one per identity family and
size, carrying the number of instances examined and any failures found.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from .characters import (
    brick_tabloid_expansion,
    dual_mn,
    e_expansion_check,
    frobenius_oracle,
)
from .combinatorics import (
    length,
    partitions_of,
    sub_compositions,
    subtract_to_partition,
)
from .exact import Poly, RatFunc, to_int_poly
from .symfunc import PExpansion, omega_char, q_product
from .vertex import apply_S, apply_S_sequence, apply_Sstar, straightened_schur


@dataclass
class Check:
    identity: str
    size: int
    count: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.failures

    def line(self):
        status = "PASS" if self.ok else "FAIL"
        msg = f"{status} {self.identity} [n={self.size}]: {self.count} checked"
        if self.failures:
            msg += f", {len(self.failures)} failed (first: {self.failures[0]})"
        return msg


def oracle_suite(max_n=8, memo=None):
    """Dual recursion against the Frobenius formula, all pairs of weight n."""
    memo = {} if memo is None else memo
    checks = []
    for n in range(max_n + 1):
        chk = Check("dual_mn == frobenius_oracle", n)
        for lam in partitions_of(n):
            for mu in partitions_of(n):
                chk.count += 1
                a = dual_mn(lam, mu, memo)
                b = to_int_poly(frobenius_oracle(lam, mu))
                if a != b:
                    chk.failures.append((lam, mu, a.render(), b.render()))
        checks.append(chk)
    return checks


def q1_suite(max_n=8, memo=None):
    """Character values at q = 1 against symmetric-group characters."""
    memo = {} if memo is None else memo
    checks = []
    for n in range(max_n + 1):
        chk = Check("chi(q=1) == omega", n)
        for lam in partitions_of(n):
            for mu in partitions_of(n):
                chk.count += 1
                a = dual_mn(lam, mu, memo).eval_at(1)
                b = omega_char(lam, mu)
                if a != b:
                    chk.failures.append((lam, mu, a, b))
        checks.append(chk)
    return checks


def lemma_suite(max_n=8):
    """``S*_{-n}.1`` as a brick-tabloid sum, and ``e_m`` in the ``q_rho`` basis."""
    checks = []
    one = PExpansion.one()
    for n in range(1, max_n + 1):
        chk = Check("S*_{-n}.1 == brick tabloid sum", n, count=1)
        if apply_Sstar(-n, one) != brick_tabloid_expansion(n):
            chk.failures.append(n)
        checks.append(chk)
    for m in range(max_n + 1):
        chk = Check("e_m == sum_rho C_{m,rho} q_rho", m, count=len(partitions_of(m)))
        if not e_expansion_check(m):
            chk.failures.append(m)
        checks.append(chk)
    return checks


def prop23_rhs(k, mu):
    """``sum_{tau in C_mu} (1-t)^l(tau) q_{mu-tau} S*_{k-|tau|}.1``."""
    one_minus_t = RatFunc(Poly((1, -1)))
    total = PExpansion.zero()
    for tau in sub_compositions(mu):
        vac = apply_Sstar(k - sum(tau), PExpansion.one())
        if not vac:
            continue
        coeff = one_minus_t ** length(tau)
        total = total + (q_product(subtract_to_partition(mu, tau)) * vac).scale(coeff)
    return total


def prop23_suite(max_n=6, max_k=None):
    """``S*_k q_mu`` expanded over sub-compositions, ``|mu| <= max_n``, ``0 <= k <= max_k``."""
    if max_k is None:
        max_k = max_n + 2
    checks = []
    for n in range(max_n + 1):
        chk = Check("S*_k q_mu == sum_tau (1-t)^l(tau) q_{mu-tau} S*_{k-|tau|}.1", n)
        for mu in partitions_of(n):
            qmu = q_product(mu)
            for k in range(max_k + 1):
                chk.count += 1
                if apply_Sstar(k, qmu) != prop23_rhs(k, mu):
                    chk.failures.append((k, mu))
        checks.append(chk)
    return checks


def commutation_suite(max_n=5, max_index=4):
    """The three quadratic relations among ``S_m`` and ``S*_n`` on ``p_nu``."""
    idx = range(-max_index, max_index + 1)
    checks = []
    for d in range(max_n + 1):
        ss = Check("S_m S_n + S_{n-1} S_{m+1} == 0", d)
        tt = Check("S*_m S*_n + S*_{n+1} S*_{m-1} == 0", d)
        st = Check("S_m S*_n + S*_{n-1} S_{m-1} == delta_{m,n}", d)
        for nu in partitions_of(d):
            f = PExpansion.p(nu)
            span = range(-max_index - 1, max_index + 2)
            s_f = {j: apply_S(j, f) for j in span}
            t_f = {j: apply_Sstar(j, f) for j in span}
            for m, n in product(idx, idx):
                ss.count += 1
                if apply_S(m, s_f[n]) + apply_S(n - 1, s_f[m + 1]):
                    ss.failures.append((m, n, nu))
                tt.count += 1
                if apply_Sstar(m, t_f[n]) + apply_Sstar(n + 1, t_f[m - 1]):
                    tt.failures.append((m, n, nu))
                st.count += 1
                lhs = apply_S(m, t_f[n]) + apply_Sstar(n - 1, s_f[m - 1])
                if lhs != (f if m == n else PExpansion.zero()):
                    st.failures.append((m, n, nu))
        checks.extend([ss, tt, st])
    return checks


def compositions(n, max_len):
    """Tuples of nonnegative ints summing to ``n`` with length 1..max_len."""
    out = []
    for ell in range(1, max_len + 1):
        for c in product(range(n + 1), repeat=ell):
            if sum(c) == n:
                out.append(c)
    return out


def straightening_suite(max_n=6, max_len=3):
    """``S_mu.1`` for compositions against the sorted-partition Schur function."""
    checks = []
    for n in range(max_n + 1):
        chk = Check("S_mu.1 == 0 or +-s_lam", n)
        for mu in compositions(n, max_len):
            chk.count += 1
            if apply_S_sequence(mu) != straightened_schur(mu):
                chk.failures.append(mu)
        checks.append(chk)
    return checks


SUITES = {
    "oracle": (oracle_suite, 8),
    "q1": (q1_suite, 8),
    "lemma": (lemma_suite, 8),
    "prop23": (prop23_suite, 6),
    "commutation": (commutation_suite, 5),
    "straightening": (straightening_suite, 6),
}


def run_suite(name, max_n=None):
    fn, default = SUITES[name]
    return fn(default if max_n is None else max_n)
