"""The base rings Z and Z/n and their principal ideals.

Every ideal of Z and of Z/n is principal, so an ideal is stored as a
canonical generator: |g| over Z, and a divisor of n over Z/n.  The zero
ideal of Z/n is canonicalized as gen = n so that "gen divides n" holds
uniformly; rendering prints it as (0).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .numutil import is_squarefree, prime_divisors, radical, valuation


class RingMismatchError(ValueError):
    """Two ideals from different rings were combined."""


@dataclass(frozen=True)
class Ring:
    """Z when modulus is None, otherwise Z/modulus with modulus >= 2."""

    modulus: int | None = None

    def __post_init__(self) -> None:
        if self.modulus is not None and self.modulus < 2:
            raise ValueError(f"modulus must be >= 2, got {self.modulus}")

    @property
    def is_modular(self) -> bool:
        return self.modulus is not None

    def __str__(self) -> str:
        return "Z" if self.modulus is None else f"Z/{self.modulus}"


ZZ = Ring()


@dataclass(frozen=True)
class Ideal:
    ring: Ring
    gen: int

    def __str__(self) -> str:
        return f"({display_gen(self)})"


def canonical_ideal(ring: Ring, g: int) -> Ideal:
    """The principal ideal generated by g, in canonical-generator form."""
    if ring.modulus is None:
        return Ideal(ring, abs(g))
    n = ring.modulus
    return Ideal(ring, math.gcd(g % n, n))  # gcd(0, n) = n: the zero ideal


def zero_ideal(ring: Ring) -> Ideal:
    return Ideal(ring, 0 if ring.modulus is None else ring.modulus)


def unit_ideal(ring: Ring) -> Ideal:
    return Ideal(ring, 1)


def is_zero_ideal(ideal: Ideal) -> bool:
    return ideal == zero_ideal(ideal.ring)


def display_gen(ideal: Ideal) -> int:
    """Generator as printed: the zero ideal of Z/n shows as 0, not n."""
    return 0 if is_zero_ideal(ideal) else ideal.gen


def _same_ring(a: Ideal, b: Ideal) -> Ring:
    if a.ring != b.ring:
        raise RingMismatchError(f"ideals live in {a.ring} and {b.ring}")
    return a.ring


def ideal_product(a: Ideal, b: Ideal) -> Ideal:
    ring = _same_ring(a, b)
    return canonical_ideal(ring, a.gen * b.gen)


def ideal_intersect(a: Ideal, b: Ideal) -> Ideal:
    ring = _same_ring(a, b)
    return canonical_ideal(ring, math.lcm(a.gen, b.gen))


def ideal_contains(outer: Ideal, inner: Ideal) -> bool:
    """Whether inner is a subset of outer (divisibility of canonical gens)."""
    _same_ring(outer, inner)
    if outer.gen == 0:
        return inner.gen == 0
    return inner.gen % outer.gen == 0


def is_essential_ideal(ideal: Ideal) -> bool:
    """A nonzero ideal meeting every nonzero ideal nontrivially.

    Over Z any nonzero ideal mZ is essential (mZ and kZ share mk).  Over Z/n
    the generator d must satisfy v_p(d) < v_p(n) for every prime p | n;
    otherwise the ideal misses the complementary p-part entirely.  The ring
    itself counts as essential.
    """
    ring = ideal.ring
    if ring.modulus is None:
        return ideal.gen != 0
    n = ring.modulus
    return all(valuation(p, ideal.gen) < valuation(p, n) for p in prime_divisors(n))


def jacobson_radical(ring: Ring) -> Ideal:
    """Intersection of the maximal ideals: 0 over Z, rad(n)*Z/n over Z/n."""
    if ring.modulus is None:
        return zero_ideal(ring)
    return canonical_ideal(ring, radical(ring.modulus))


def ring_socle(ring: Ring) -> Ideal:
    """Sum of the minimal ideals: 0 over Z, (n/rad(n))*Z/n over Z/n."""
    if ring.modulus is None:
        return zero_ideal(ring)
    n = ring.modulus
    return canonical_ideal(ring, n // radical(n))


def is_regular_ring(ring: Ring) -> bool:
    """Von Neumann regularity: for Z/n exactly the squarefree moduli."""
    if ring.modulus is None:
        return False
    return is_squarefree(ring.modulus)


def element_annihilator(ring: Ring, a: int) -> Ideal:
    """The ideal of all r with r*a = 0 in the ring."""
    if ring.modulus is None:
        return unit_ideal(ring) if a == 0 else zero_ideal(ring)
    n = ring.modulus
    return canonical_ideal(ring, n // math.gcd(a % n, n))


@dataclass(frozen=True)
class SingularSet:
    """Elements of the ring whose annihilator is an essential ideal.

    Over Z/n the members are listed explicitly; over Z only 0 qualifies and
    the set is reported symbolically.
    """

    ring: Ring
    members: tuple[int, ...]
    symbolic: bool = False


def ring_singular_set(ring: Ring) -> SingularSet:
    if ring.modulus is None:
        return SingularSet(ring, (0,), symbolic=True)
    members = tuple(
        a for a in range(ring.modulus)
        if is_essential_ideal(element_annihilator(ring, a))
    )
    return SingularSet(ring, members)


def quotient_radical_lift(ring: Ring, ideal: Ideal) -> Ideal:
    """Radical of the quotient ring R/I, lifted back to an ideal of R.

    R/I is isomorphic to Z/d for d = gen(I) (to Z itself when d = 0), whose
    radical is generated by the product of the distinct primes of d.  A lift
    equal to I itself means the quotient radical is zero.
    """
    if ideal.ring != ring:
        raise RingMismatchError(f"ideal of {ideal.ring} quotients {ring}")
    if ideal == unit_ideal(ring):
        raise ValueError("cannot quotient by the whole ring")
    d = ideal.gen
    if ring.modulus is None and d == 0:
        return zero_ideal(ring)
    return canonical_ideal(ring, radical(d))


def quotient_radical_is_zero(ring: Ring, ideal: Ideal) -> bool:
    return quotient_radical_lift(ring, ideal) == ideal
