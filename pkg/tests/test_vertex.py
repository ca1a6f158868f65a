from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from heckechar.characters import brick_tabloid_expansion
from heckechar.combinatorics import partitions_of
from heckechar.symfunc import PExpansion, elementary_e, schur
from heckechar.verify import (
    commutation_suite,
    compositions,
    prop23_suite,
    straightening_suite,
)
from heckechar.vertex import (
    adjoint_check,
    apply_S,
    apply_S_sequence,
    apply_Sstar,
    p_derivative,
    straighten,
)

ONE = PExpansion.one()
p = PExpansion.p

partitions_upto_4 = st.sampled_from([lam for n in range(5) for lam in partitions_of(n)])
small_expansions = st.dictionaries(
    partitions_upto_4, st.fractions(-3, 3, max_denominator=3), max_size=4
).map(PExpansion)


@pytest.mark.parametrize("n", range(0, 6))
def test_vacuum(n):
    assert apply_S(-n, ONE) == (ONE if n == 0 else PExpansion.zero())
    assert apply_Sstar(n, ONE) == (ONE if n == 0 else PExpansion.zero())


def test_apply_examples():
    assert apply_S(2, ONE) == p((1, 1), Fraction(1, 2)) + p((2,), Fraction(1, 2))
    assert apply_S(2, ONE) == schur((2,))
    assert apply_S(1, apply_S(2, ONE)).is_zero()
    assert apply_Sstar(-1, ONE) == -p((1,))
    # (-1)^2 e_2 = (p_1^2 - p_2)/2
    assert apply_Sstar(-2, ONE) == p((1, 1), Fraction(1, 2)) - p((2,), Fraction(1, 2))


@pytest.mark.parametrize("k", range(0, 9))
def test_sstar_vacuum_is_signed_elementary(k):
    e = elementary_e(k)
    assert apply_Sstar(-k, ONE) == (e if k % 2 == 0 else -e)


def test_p_derivative():
    assert p_derivative(2, p((2, 2, 1))) == p((2, 1), 2)
    assert p_derivative(3, p((2, 1))).is_zero()


def test_adjoint_examples():
    assert adjoint_check(ONE, p((1,)), 1)
    assert adjoint_check(p((2,)), p((2, 2)), 2)
    assert adjoint_check(p((1,)), p((2,)), 1)


@given(small_expansions, small_expansions, st.integers(1, 4))
def test_adjoint_random(f, g, r):
    assert adjoint_check(f, g, r)
    assert adjoint_check(f, p((r,)) * g, r)


def test_straighten_rule():
    assert straighten((1, 2)) is None
    assert straighten((2, 1)) == (1, (2, 1))
    assert straighten((1, 3)) == (-1, (2, 2))
    assert straighten((0, 2)) == (-1, (1, 1))
    assert straighten(()) == (1, ())


@pytest.mark.parametrize("mu", compositions(5, 3))
def test_straightening_weight5(mu):
    res = straighten(mu)
    got = apply_S_sequence(mu)
    if res is None:
        assert got.is_zero()
    else:
        sign, lam = res
        assert got == (schur(lam) if sign > 0 else -schur(lam))


@pytest.mark.parametrize("n", range(1, 7))
def test_brick_tabloid_lemma(n):
    assert apply_Sstar(-n, ONE) == brick_tabloid_expansion(n)


def test_prop23_small():
    assert all(c.ok for c in prop23_suite(max_n=4, max_k=6))


def test_commutation_small():
    assert all(c.ok for c in commutation_suite(max_n=3, max_index=3))


def test_straightening_suite_small():
    checks = straightening_suite(max_n=4)
    assert all(c.ok for c in checks)
    assert sum(c.count for c in checks) == sum(len(compositions(n, 3)) for n in range(5))
