"""Brute-force partition counts used as independent oracles for series identities."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterator


class UnknownOracle(KeyError):
    pass


@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...]

    def __post_init__(self):
        if any(p < 1 for p in self.parts):
            raise ValueError("parts must be positive")
        if any(a < b for a, b in zip(self.parts, self.parts[1:])):
            raise ValueError("parts must be weakly decreasing")

    @property
    def weight(self) -> int:
        return sum(self.parts)


def enumerate_partitions(
    n: int,
    allowed: Callable[[int], bool],
    compatible: Callable[[int, int], bool],
) -> Iterator[Partition]:
    """Partitions of ``n`` with parts passing ``allowed`` and each adjacent pair passing ``compatible``.

    ``compatible(larger, smaller)`` sees consecutive parts.  Parts are chosen
    largest first; the remaining weight bounds every later choice.
    """

    def rec(remaining, cap, prefix):
        if remaining == 0:
            yield Partition(tuple(prefix))
            return
        for p in range(min(cap, remaining), 0, -1):
            if not allowed(p):
                continue
            if prefix and not compatible(prefix[-1], p):
                continue
            prefix.append(p)
            yield from rec(remaining - p, p, prefix)
            prefix.pop()

    yield from rec(n, n, [])


def _distinct_no_pm1_mod6(p: int) -> bool:
    return p % 6 not in (1, 5)


def capparelli_gap_ok(larger: int, smaller: int) -> bool:
    """Difference rule between consecutive parts on the gap side."""
    d = larger - smaller
    if d >= 4:
        return True
    if d == 3:
        return smaller % 3 == 0
    if d == 2:
        # 3k-1 followed by 3k+1
        return smaller % 3 == 2
    return False


def capparelli_product_partitions(n: int) -> Iterator[Partition]:
    return enumerate_partitions(n, _distinct_no_pm1_mod6, lambda a, b: a > b)


def capparelli_gap_partitions(n: int) -> Iterator[Partition]:
    return enumerate_partitions(n, lambda p: p != 1, capparelli_gap_ok)


def count_capparelli_product_side(n: int) -> int:
    """Partitions of ``n`` into distinct parts none of which is ``+-1 (mod 6)``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return sum(1 for _ in capparelli_product_partitions(n))


def count_capparelli_gap_side(n: int) -> int:
    """Partitions of ``n`` into parts other than 1 obeying the Capparelli gap rule."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return sum(1 for _ in capparelli_gap_partitions(n))


@lru_cache(maxsize=None)
def partitions_bounded(n: int, largest: int) -> int:
    """Number of partitions of ``n`` into parts of size at most ``largest``."""
    if n == 0:
        return 1
    if n < 0 or largest <= 0:
        return 0
    return partitions_bounded(n, largest - 1) + partitions_bounded(n - largest, largest)


@lru_cache(maxsize=None)
def partition_count(n: int) -> int:
    """``p(n)`` by Euler's pentagonal recurrence."""
    if n < 0:
        return 0
    if n == 0:
        return 1
    total = 0
    k = 1
    while True:
        g1 = k * (3 * k - 1) // 2
        if g1 > n:
            break
        sign = 1 if k % 2 else -1
        total += sign * partition_count(n - g1)
        g2 = k * (3 * k + 1) // 2
        if g2 <= n:
            total += sign * partition_count(n - g2)
        k += 1
    return total


def kr1_sum_coefficient(N: int) -> int:
    """Coefficient of ``q^N`` in ``sum q^(2m^2+6mn+6n^2) / ((q;q)_m (q^3;q^3)_n)``.

    ``1/(q;q)_m`` counts partitions into parts ``<= m`` and ``1/(q^3;q^3)_n``
    counts partitions into multiples of 3 up to ``3n``; the coefficient is
    their convolution summed over the lattice points with ``Q(m, n) <= N``.
    """
    total = 0
    n = 0
    while 6 * n * n <= N:
        m = 0
        while 2 * m * m + 6 * m * n + 6 * n * n <= N:
            rest = N - (2 * m * m + 6 * m * n + 6 * n * n)
            for b in range(0, rest + 1, 3):
                total += partitions_bounded(rest - b, m) * partitions_bounded(b // 3, n)
            m += 1
        n += 1
    return total


ORACLES: dict[str, Callable[[int], int]] = {
    "kr1_product": count_capparelli_product_side,
    "kr1_gap": count_capparelli_gap_side,
    "kr1_sum": kr1_sum_coefficient,
    "pentagonal_partitions": partition_count,
}


def series_coefficient_oracle(name: str, n: int) -> int:
    try:
        oracle = ORACLES[name]
    except KeyError:
        raise UnknownOracle(name) from None
    return oracle(n)
