"""Finite modules over Z and Z/n as direct sums of cyclic groups.

A module is presented by the list of its cyclic factor orders; elements are
coordinate tuples with componentwise arithmetic.  A pure free part (Z^k) is
carried symbolically: the only supported facts about it are the ones that
hold for every lattice of rank >= 2, everything else is rejected.

The colon ideal of x, written [x:M], is the set of ring elements r with
r*M contained in the cyclic submodule generated by x.  Two independent
routes compute it: a fast path working prime by prime on the primary
decomposition, and a brute-force path that enumerates the whole module.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product

from .numutil import divisors, prime_divisors, radical, valuation
from .rings import Ideal, Ring, canonical_ideal, is_essential_ideal, zero_ideal

Element = tuple[int, ...]

DEFAULT_ELEMENT_BOUND = 10**6


class InfiniteModuleError(ValueError):
    """An enumeration was requested on a module with a free part."""


class SizeBoundExceededError(ValueError):
    """An enumeration would exceed the configured element bound."""


@dataclass(frozen=True)
class Module:
    """Direct sum of cyclic groups of the given orders, plus optional Z^k."""

    ring: Ring
    factors: tuple[int, ...] = ()
    free_rank: int = 0

    def __post_init__(self) -> None:
        if any(f < 2 for f in self.factors):
            raise ValueError(f"cyclic factor orders must be >= 2: {self.factors}")
        if self.free_rank < 0:
            raise ValueError("free rank must be nonnegative")
        if self.free_rank and self.factors:
            raise ValueError("mixed torsion and free rank unsupported")
        if self.free_rank and self.ring.modulus is not None:
            raise ValueError("free rank requires the ring Z")
        if self.ring.modulus is not None:
            n = self.ring.modulus
            bad = [f for f in self.factors if n % f != 0]
            if bad:
                raise ValueError(f"factor orders {bad} do not divide modulus {n}")

    @property
    def is_finite(self) -> bool:
        return self.free_rank == 0

    def __str__(self) -> str:
        if self.free_rank:
            return f"F{self.free_rank}"
        return "+".join(f"C{f}" for f in self.factors) if self.factors else "0"


def module_order(module: Module) -> int:
    if not module.is_finite:
        raise InfiniteModuleError(f"{module} is infinite")
    return math.prod(module.factors)


def exponent(module: Module) -> int:
    if not module.is_finite:
        raise InfiniteModuleError(f"{module} is infinite")
    return math.lcm(*module.factors) if module.factors else 1


def zero_element(module: Module) -> Element:
    return (0,) * len(module.factors)


def _check_bound(module: Module, bound: int) -> None:
    if not module.is_finite:
        raise InfiniteModuleError(f"cannot enumerate infinite module {module}")
    if module_order(module) > bound:
        raise SizeBoundExceededError(
            f"|{module}| = {module_order(module)} exceeds element bound {bound}"
        )


def elements(module: Module, bound: int = DEFAULT_ELEMENT_BOUND):
    """All elements exactly once, in lexicographic coordinate order."""
    _check_bound(module, bound)
    return product(*(range(f) for f in module.factors))


def scalar_mul(module: Module, r: int, x: Element) -> Element:
    return tuple((r * c) % f for c, f in zip(x, module.factors))


def add(module: Module, x: Element, y: Element) -> Element:
    return tuple((a + b) % f for a, b, f in zip(x, y, module.factors))


def element_order(module: Module, x: Element) -> int:
    return math.lcm(*(f // math.gcd(c, f) for c, f in zip(x, module.factors)))


def cyclic_submodule(module: Module, x: Element) -> frozenset[Element]:
    """The submodule Rx = {r*x}; equals the integer multiples of x here."""
    if not module.is_finite:
        raise InfiniteModuleError(f"{module} is infinite")
    return frozenset(scalar_mul(module, k, x)
                     for k in range(element_order(module, x)))


def generated_submodule(module: Module, gens) -> frozenset[Element]:
    """Closure of the given elements under addition (hence under the action)."""
    if not module.is_finite:
        raise InfiniteModuleError(f"{module} is infinite")
    closed = {zero_element(module)}
    frontier = list(closed)
    gens = list(gens)
    while frontier:
        base = frontier.pop()
        for g in gens:
            nxt = add(module, base, g)
            if nxt not in closed:
                closed.add(nxt)
                frontier.append(nxt)
    return frozenset(closed)


def is_submodule(module: Module, subset) -> bool:
    sub = frozenset(subset)
    if zero_element(module) not in sub:
        return False
    return all(add(module, x, y) in sub for x in sub for y in sub)


def sorted_elements(subset) -> list[Element]:
    return sorted(subset)


# -- colon ideals -----------------------------------------------------------

def _primary_layout(module: Module) -> tuple[tuple[int, tuple[tuple[int, int], ...]], ...]:
    """Per prime p | exponent: the factor indices and p-exponents carrying p."""
    layout = []
    for p in prime_divisors(exponent(module)):
        cols = tuple((i, valuation(p, f)) for i, f in enumerate(module.factors)
                     if f % p == 0)
        layout.append((p, cols))
    return tuple(layout)


def colon_ideal(module: Module, x: Element) -> Ideal:
    """[x:M] via the primary decomposition, one prime at a time.

    For each prime p the p-part of M maps to coordinates mod p^e by the
    Chinese remainder splitting of each cyclic factor.  The least k with
    p^k * M_p inside the cyclic span of x_p is found by testing the scaled
    primary generators against the materialized span; the generators per
    prime multiply together into the canonical colon generator.
    """
    if not module.is_finite:
        raise InfiniteModuleError(
            f"{module} is infinite; only symbolic free-module facts exist")
    gen = 1
    for p, cols in _primary_layout(module):
        e_max = max(e for _, e in cols)
        mods = tuple(p**e for _, e in cols)
        x_p = tuple(x[i] % m for (i, _), m in zip(cols, mods))
        span = set()
        y = tuple(0 for _ in cols)
        while y not in span:
            span.add(y)
            y = tuple((a + b) % m for a, b, m in zip(y, x_p, mods))
        k = next(
            k for k in range(e_max + 1)
            if all(tuple(p**k % m if j == i else 0 for j, m in enumerate(mods)) in span
                   for i in range(len(cols)))
        )
        gen *= p**k
    return canonical_ideal(module.ring, gen)


def colon_ideal_brute(module: Module, x: Element,
                      bound: int = DEFAULT_ELEMENT_BOUND) -> Ideal:
    """[x:M] by full enumeration; the independent oracle for colon_ideal."""
    _check_bound(module, bound)
    span = cyclic_submodule(module, x)
    everything = list(elements(module, bound))
    if module.ring.modulus is None:
        candidates = divisors(exponent(module))
    else:
        candidates = divisors(module.ring.modulus)
    for m in candidates:
        if all(scalar_mul(module, m, z) in span for z in everything):
            return canonical_ideal(module.ring, m)
    raise AssertionError("unreachable: the exponent always annihilates into Rx")


def submodule_colon(module: Module, submodule_set) -> Ideal:
    """The ideal of all r with r*M inside the given submodule."""
    sub = frozenset(submodule_set)
    if not is_submodule(module, sub):
        raise ValueError("given set is not closed under addition")
    everything = list(elements(module))
    if module.ring.modulus is None:
        candidates = divisors(exponent(module))
    else:
        candidates = divisors(module.ring.modulus)
    for m in candidates:
        if all(scalar_mul(module, m, z) in sub for z in everything):
            return canonical_ideal(module.ring, m)
    raise AssertionError("unreachable: the exponent annihilates M")


def module_annihilator(module: Module) -> Ideal:
    """[0:M]: the exponent ideal for finite M, zero for a free module."""
    if not module.is_finite:
        return zero_ideal(module.ring)
    return canonical_ideal(module.ring, exponent(module))


def element_annihilator_in(module: Module, x: Element) -> Ideal:
    """The ideal of ring elements killing the single element x."""
    return canonical_ideal(module.ring, element_order(module, x))


def module_socle(module: Module) -> frozenset[Element]:
    """Everything killed by the squarefree part of the exponent.

    This is the sum of the simple submodules: the bottom p-torsion layer for
    each prime p dividing the exponent.
    """
    if not module.is_finite:
        raise InfiniteModuleError(f"{module} is infinite")
    r = radical(exponent(module))
    return frozenset(x for x in elements(module)
                     if scalar_mul(module, r, x) == zero_element(module))


def is_essential_submodule(module: Module, submodule_set) -> bool:
    """Whether the submodule meets every nonzero cyclic submodule.

    The span of z meets N nontrivially iff one of the prime-order layers of
    the span lies in N; a cyclic group has a unique subgroup of order p per
    prime p, generated by (order/p)*z.
    """
    sub = frozenset(submodule_set)
    if not is_submodule(module, sub):
        raise ValueError("given set is not closed under addition")
    return _essential_submodule_unchecked(module, sub)


def _essential_submodule_unchecked(module: Module, sub: frozenset[Element]) -> bool:
    zero = zero_element(module)
    for z in elements(module):
        if z == zero:
            continue
        order = element_order(module, z)
        if not any(scalar_mul(module, order // p, z) in sub
                   for p in prime_divisors(order)):
            return False
    return True


def cyclic_intersection(module: Module) -> frozenset[Element]:
    """Intersection of the cyclic spans of all nonzero elements."""
    if not module.is_finite:
        raise InfiniteModuleError(f"{module} is infinite")
    zero = zero_element(module)
    acc: frozenset[Element] | None = None
    for x in elements(module):
        if x == zero:
            continue
        acc = cyclic_submodule(module, x) if acc is None \
            else acc & cyclic_submodule(module, x)
        if acc == {zero}:
            break
    return acc if acc is not None else frozenset({zero})


def module_singular_subset(module: Module) -> frozenset[Element]:
    """Elements whose annihilator ideal is essential in the base ring."""
    if not module.is_finite:
        raise InfiniteModuleError(f"{module} is infinite")
    return frozenset(x for x in elements(module)
                     if is_essential_ideal(element_annihilator_in(module, x)))


# -- partition combinatorics -------------------------------------------------

def subgroup_types(parts: tuple[int, ...]) -> list[tuple[tuple[int, ...], int]]:
    """Subgroup types of a p-group of the given type, with multiplicities.

    Every componentwise sub-tuple mu <= parts names a subgroup type; zeros
    are dropped and the remainder sorted into a partition.  The same
    partition can arise from several sub-tuples, hence the multiplicities.
    The trivial subgroup appears as the empty partition.
    """
    if not parts or any(p < 1 for p in parts) or list(parts) != sorted(parts, reverse=True):
        raise ValueError(f"{parts} is not a partition (weakly decreasing, positive)")
    if sum(parts) > 20:
        raise ValueError("partition too large to enumerate")
    counts: dict[tuple[int, ...], int] = {}
    for mu in product(*(range(lam + 1) for lam in parts)):
        key = tuple(sorted((m for m in mu if m > 0), reverse=True))
        counts[key] = counts.get(key, 0) + 1
    ordered = sorted(counts, key=lambda t: (-sum(t), tuple(-p for p in t)))
    return [(t, counts[t]) for t in ordered]
