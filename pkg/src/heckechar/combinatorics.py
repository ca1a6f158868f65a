"""Partitions, bounded compositions and brick tabloids.

Partitions are plain tuples of positive ints in weakly decreasing order; the
empty partition is ``()``.  A brick tabloid is a tuple of positive brick
lengths read left to right.  A sub-composition of ``mu`` is a tuple of the
same length as ``mu`` with ``0 <= tau[i] <= mu[i]``.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from itertools import accumulate, product
from math import factorial, prod

from .exact import Poly, RatFunc

Partition = tuple
BrickTabloid = tuple
SubComposition = tuple


def partition(parts) -> Partition:
    """Canonicalize an iterable of nonnegative ints into a partition."""
    parts = [int(p) for p in parts]
    if any(p < 0 for p in parts):
        raise ValueError(f"negative part in {parts}")
    return tuple(sorted((p for p in parts if p), reverse=True))


def is_partition(parts) -> bool:
    return all(isinstance(p, int) and p > 0 for p in parts) and all(
        a >= b for a, b in zip(parts, parts[1:])
    )


def weight(parts) -> int:
    return sum(parts)


def length(parts) -> int:
    """Number of nonzero entries (so this also serves sub-compositions)."""
    return sum(1 for p in parts if p)


def multiplicities(lam) -> Counter:
    return Counter(lam)


@lru_cache(maxsize=None)
def partitions_of(n: int) -> tuple[Partition, ...]:
    """All partitions of ``n`` in reverse lexicographic order.

    >>> partitions_of(4)
    ((4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1))
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    return tuple(_partitions_bounded(n, n))


def _partitions_bounded(n, largest):
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions_bounded(n - first, first):
            yield (first,) + rest


def sub_compositions(mu: Partition) -> list[SubComposition]:
    """Every ``tau`` with ``len(tau) == len(mu)`` and ``0 <= tau[i] <= mu[i]``."""
    return list(product(*(range(m + 1) for m in mu)))


@lru_cache(maxsize=None)
def brick_tabloids(n: int) -> tuple[BrickTabloid, ...]:
    """Ordered compositions of ``n`` into positive bricks, lexicographic.

    ``brick_tabloids(0) == ((),)`` and negative ``n`` gives no tabloids.
    """
    if n < 0:
        return ()
    if n == 0:
        return ((),)
    out = []
    for first in range(1, n + 1):
        for rest in brick_tabloids(n - first):
            out.append((first,) + rest)
    return tuple(out)


def brick_tabloids_of_type(rho: Partition) -> list[BrickTabloid]:
    """Distinct orderings of the parts of ``rho``, lexicographic."""
    counts = Counter(rho)
    keys = sorted(counts)
    out = []

    def rec(prefix, remaining):
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for k in keys:
            if counts[k]:
                counts[k] -= 1
                prefix.append(k)
                rec(prefix, remaining - 1)
                prefix.pop()
                counts[k] += 1

    rec([], len(rho))
    return out


def prefix_sums(b: BrickTabloid) -> tuple[int, ...]:
    """``r_i`` for each brick: boxes covered by the first ``i`` bricks."""
    return tuple(accumulate(b))


def tabloid_type(b: BrickTabloid) -> Partition:
    return tuple(sorted(b, reverse=True))


def z_of(lam: Partition) -> int:
    """Centralizer order ``prod_i i^{m_i} m_i!``."""
    return prod(i ** m * factorial(m) for i, m in Counter(lam).items())


def z_of_t(lam: Partition) -> RatFunc:
    """``z_lam / prod_i (1 - t^{lam_i})`` as a rational function in ``t``."""
    den = Poly.constant(1)
    for part in lam:
        den = den * (Poly.constant(1) - Poly.monomial(part))
    return RatFunc(Poly.constant(z_of(lam)), den)


def subtract_to_partition(mu: Partition, tau: SubComposition) -> Partition:
    if len(mu) != len(tau):
        raise ValueError(f"length mismatch: mu={mu}, tau={tau}")
    if any(t < 0 or t > m for m, t in zip(mu, tau)):
        raise ValueError(f"tau={tau} is not contained in mu={mu}")
    return partition(m - t for m, t in zip(mu, tau))


def union_parts(p: Partition, b: BrickTabloid) -> Partition:
    return tuple(sorted(p + tuple(b), reverse=True))


def format_partition(lam: Partition) -> str:
    return ",".join(map(str, lam)) if lam else "-"


def parse_partition(text: str) -> tuple[Partition, bool]:
    """Parse ``"4,2"`` (or ``""``/``"-"`` for the empty partition).

    Returns the canonical partition and whether the input had to be reordered.
    """
    s = text.strip()
    if s in ("", "-"):
        return (), False
    try:
        parts = [int(x) for x in s.split(",")]
    except ValueError:
        raise ValueError(f"not a partition: {text!r}") from None
    if any(p <= 0 for p in parts):
        raise ValueError(f"parts must be positive: {text!r}")
    canon = tuple(sorted(parts, reverse=True))
    return canon, canon != tuple(parts)
