from collections import Counter
from itertools import combinations, permutations, product
from math import factorial, prod

import pytest
from hypothesis import given, strategies as st

from heckechar.combinatorics import (
    brick_tabloids,
    brick_tabloids_of_type,
    format_partition,
    parse_partition,
    partitions_of,
    prefix_sums,
    sub_compositions,
    subtract_to_partition,
    tabloid_type,
    union_parts,
    weight,
    z_of,
    z_of_t,
)
from heckechar.exact import Poly, RatFunc


def brute_partitions(n):
    """Every multiset of positive ints summing to n, via sorted tuples of all compositions."""
    found = set()
    for k in range(1, n + 1):
        for c in product(range(1, n + 1), repeat=k):
            if sum(c) == n:
                found.add(tuple(sorted(c, reverse=True)))
    return found


def brute_tabloids(n):
    """Ordered compositions of n from subsets of the n-1 interior cut points."""
    out = []
    for k in range(n):
        for cuts in combinations(range(1, n), k):
            pts = (0,) + cuts + (n,)
            out.append(tuple(b - a for a, b in zip(pts, pts[1:])))
    return out


def cycle_type(perm):
    seen, lengths = set(), []
    for i in range(len(perm)):
        if i in seen:
            continue
        j, ell = i, 0
        while j not in seen:
            seen.add(j)
            j = perm[j]
            ell += 1
        lengths.append(ell)
    return tuple(sorted(lengths, reverse=True))


def test_partitions_small():
    assert partitions_of(0) == ((),)
    assert partitions_of(4) == ((4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1))


def test_partitions_of_8_against_brute_force():
    brute = brute_partitions(8)
    assert len(brute) == 22
    assert set(partitions_of(8)) == brute
    assert len(partitions_of(8)) == 22


@pytest.mark.parametrize("n", range(0, 11))
def test_partitions_reverse_lex_no_duplicates(n):
    ps = partitions_of(n)
    assert len(set(ps)) == len(ps)
    assert list(ps) == sorted(ps, reverse=True)
    assert all(weight(p) == n for p in ps)


def test_sub_compositions_examples():
    assert sub_compositions((2,)) == [(0,), (1,), (2,)]
    assert len(sub_compositions((4, 2))) == 15
    assert sub_compositions(()) == [()]


@pytest.mark.parametrize("mu", [mu for n in range(9) for mu in partitions_of(n)])
def test_sub_compositions_count_and_weight(mu):
    taus = sub_compositions(mu)
    assert len(taus) == prod(m + 1 for m in mu)
    assert len(set(taus)) == len(taus)
    for tau in taus:
        assert weight(subtract_to_partition(mu, tau)) == weight(mu) - sum(tau)


def test_brick_tabloids_of_three():
    tabs = brick_tabloids(3)
    assert len(tabs) == 4
    assert sorted(tabloid_type(b) for b in tabs) == sorted([(1, 1, 1), (2, 1), (2, 1), (3,)])
    assert tabs == ((1, 1, 1), (1, 2), (2, 1), (3,))


def test_brick_tabloids_edge_cases():
    assert brick_tabloids(0) == ((),)
    assert brick_tabloids(-2) == ()
    assert len(brick_tabloids(10)) == 512


@pytest.mark.parametrize("n", range(1, 13))
def test_brick_tabloid_counts(n):
    tabs = brick_tabloids(n)
    assert sorted(tabs) == sorted(brute_tabloids(n))
    assert len(tabs) == 2 ** (n - 1) == len(set(tabs))
    assert sum(len(brick_tabloids_of_type(rho)) for rho in partitions_of(n)) == len(tabs)


def test_brick_tabloids_of_type():
    assert brick_tabloids_of_type((2, 1)) == [(1, 2), (2, 1)]
    five = brick_tabloids_of_type((5, 3, 2))
    assert len(five) == 6 and (5, 2, 3) in five
    assert brick_tabloids_of_type((3, 3)) == [(3, 3)]
    assert brick_tabloids_of_type(()) == [()]


@pytest.mark.parametrize("rho", [rho for n in range(1, 8) for rho in partitions_of(n)])
def test_tabloids_of_type_count(rho):
    expected = factorial(len(rho)) // prod(factorial(m) for m in Counter(rho).values())
    tabs = brick_tabloids_of_type(rho)
    assert len(tabs) == expected == len(set(tabs))
    assert set(tabs) == set(permutations(rho))


def test_prefix_sums():
    assert prefix_sums((5, 2, 3)) == (5, 7, 10)
    assert prefix_sums(()) == ()


def test_z_examples():
    assert z_of((1, 1, 1)) == 6
    assert z_of((4, 2)) == 8
    assert z_of((2, 2, 1)) == 8
    assert z_of(()) == 1


@pytest.mark.parametrize("n", range(1, 7))
def test_z_against_permutation_count(n):
    counts = Counter(cycle_type(p) for p in permutations(range(n)))
    for lam in partitions_of(n):
        assert z_of(lam) == factorial(n) // counts[lam]


def test_z_of_t():
    one = Poly.constant(1)
    assert z_of_t(()) == 1
    assert z_of_t((1,)) == RatFunc(one, one - Poly.monomial(1))
    den = (one - Poly.monomial(2)) * (one - Poly.monomial(1))
    assert z_of_t((2, 1)) == RatFunc(Poly.constant(2), den)


def test_subtract_to_partition():
    assert subtract_to_partition((4, 2), (4, 2)) == ()
    assert subtract_to_partition((4, 2), (2, 0)) == (2, 2)
    assert subtract_to_partition((4, 2), (1, 2)) == (3,)
    with pytest.raises(ValueError):
        subtract_to_partition((4, 2), (5, 0))
    with pytest.raises(ValueError):
        subtract_to_partition((4, 2), (1,))


def test_union_parts():
    assert union_parts((2, 2), (1, 2)) == (2, 2, 2, 1)
    assert union_parts((), ()) == ()
    assert union_parts((3,), (3,)) == (3, 3)


def test_partition_text_roundtrip():
    assert parse_partition("4,2") == ((4, 2), False)
    assert parse_partition("-") == ((), False)
    assert parse_partition("") == ((), False)
    assert parse_partition("1,3") == ((3, 1), True)
    assert format_partition(()) == "-"
    assert format_partition((4, 2)) == "4,2"
    for bad in ("a", "1,,2", "0,1", "-1"):
        with pytest.raises(ValueError):
            parse_partition(bad)


@given(st.lists(st.integers(1, 6), max_size=6))
def test_union_is_sorted_multiset(parts):
    p = tuple(sorted(parts[: len(parts) // 2], reverse=True))
    b = tuple(parts[len(parts) // 2:])
    u = union_parts(p, b)
    assert list(u) == sorted(u, reverse=True)
    assert Counter(u) == Counter(p) + Counter(b)
