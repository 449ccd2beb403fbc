"""Exact integer utilities: factorization, valuations, divisors.

Inputs are desk-scale (roughly up to 10**6), so trial division is enough.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache


@dataclass(frozen=True)
class Factorization:
    """Prime factorization of a positive integer, primes strictly ascending."""

    n: int
    factors: tuple[tuple[int, int], ...]  # (prime, exponent), exponent >= 1


@lru_cache(maxsize=None)
def factorize(n: int) -> Factorization:
    """Return the prime factorization of n >= 1 (n = 1 gives no factors)."""
    if n < 1:
        raise ValueError(f"cannot factorize {n}: need a positive integer")
    m = n
    factors = []
    p = 2
    while p * p <= m:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            factors.append((p, e))
        p += 1 if p == 2 else 2
    if m > 1:
        factors.append((m, 1))
    return Factorization(n, tuple(factors))


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    p = 2
    while p * p <= n:
        if n % p == 0:
            return False
        p += 1 if p == 2 else 2
    return True


def valuation(p: int, n: int) -> int:
    """Largest k such that p**k divides n (p prime, n >= 1)."""
    if not is_prime(p):
        raise ValueError(f"valuation base {p} is not prime")
    if n < 1:
        raise ValueError(f"valuation of {n}: need a positive integer")
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k


def divisors(n: int) -> list[int]:
    """All divisors of n >= 1 in ascending order."""
    divs = [1]
    for p, e in factorize(n).factors:
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def prime_divisors(n: int) -> list[int]:
    """Distinct primes dividing n, ascending."""
    return [p for p, _ in factorize(n).factors]


def radical(n: int) -> int:
    """Product of the distinct primes dividing n (1 for n = 1)."""
    r = 1
    for p in prime_divisors(n):
        r *= p
    return r


def is_squarefree(n: int) -> bool:
    return all(e == 1 for _, e in factorize(n).factors)
