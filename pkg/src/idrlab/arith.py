"""Exact integer helpers: binomials, cumulative lcm tables, small primes."""

from __future__ import annotations

import math


def binom(n: int, k: int) -> int:
    """C(n, k) over the naturals; zero when k exceeds n."""
    if n < 0 or k < 0:
        raise ValueError("binom requires n >= 0 and k >= 0")
    return math.comb(n, k)


def lcm_table(n_max: int) -> list[int]:
    """Cumulative table entries[k] = lcm(1, ..., k), with entries[0] = 1."""
    if n_max < 0:
        raise ValueError("lcm_table requires n_max >= 0")
    entries = [1]
    for k in range(1, n_max + 1):
        entries.append(math.lcm(entries[-1], k))
    return entries


def is_prime(n: int) -> bool:
    """Trial division; intended for the small witnesses this package builds."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def next_prime(n: int) -> int:
    """Least prime strictly greater than n."""
    candidate = max(n + 1, 2)
    while not is_prime(candidate):
        candidate += 1
    return candidate
