"""Full-, semi- and star-annihilator classes of module elements.

A nonzero x is a full annihilator when some nonzero y with [y:M] != R has
[x:M][y:M]M = 0; the semi class additionally needs [x:M] and [y:M] nonzero,
and the star class needs ann(M) properly inside both [x:M] and [y:M].
Zero belongs to all three classes; the "hat" sets strip it.

Witness searches return the lexicographically least certifying y, and the
witness stored on a classification certifies the strongest true flag.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .modules import (
    Element,
    InfiniteModuleError,
    Module,
    colon_ideal,
    elements,
    module_annihilator,
    zero_element,
)
from .numutil import is_prime
from .rings import Ideal, ideal_contains, ideal_product, unit_ideal, zero_ideal


@dataclass(frozen=True)
class Classification:
    element: Element
    colon: Ideal
    is_full: bool
    is_semi: bool
    is_star: bool
    witness: Element | None


@lru_cache(maxsize=None)
def colon_table(module: Module) -> dict[Element, Ideal]:
    """Colon ideal of every element, computed once per module."""
    return {x: colon_ideal(module, x) for x in elements(module)}


@lru_cache(maxsize=None)
def _witness_pool(module: Module) -> tuple[tuple[Element, Ideal], ...]:
    """Least nonzero representative of each distinct colon ideal value.

    Class membership depends on a witness y only through [y:M], so the
    exhaustive search over M reduces to these representatives.
    """
    table = colon_table(module)
    zero = zero_element(module)
    reps: dict[Ideal, Element] = {}
    for y in elements(module):
        if y != zero and table[y] not in reps:
            reps[table[y]] = y
    return tuple(sorted((y, c) for c, y in reps.items()))


def classify_element(module: Module, x: Element) -> Classification:
    if not module.is_finite:
        return _classify_free(module, x)
    ring = module.ring
    ann = module_annihilator(module)
    unit = unit_ideal(ring)
    zero_id = zero_ideal(ring)
    colon_x = colon_table(module)[x]
    if x == zero_element(module):
        return Classification(x, colon_x, True, True, True, None)

    full_w = semi_w = star_w = None
    for y, colon_y in _witness_pool(module):
        if colon_y == unit:
            continue
        if not ideal_contains(ann, ideal_product(colon_x, colon_y)):
            continue  # the product of the two colon ideals must kill M
        if full_w is None:
            full_w = y
        if semi_w is None and colon_y != zero_id:
            semi_w = y
        if star_w is None and ideal_contains(colon_y, ann) and colon_y != ann:
            star_w = y
            break  # a star witness also certifies the weaker classes

    is_full = full_w is not None
    is_semi = colon_x != zero_id and semi_w is not None
    is_star = (ideal_contains(colon_x, ann) and colon_x != ann
               and star_w is not None)
    witness = star_w if is_star else semi_w if is_semi else full_w if is_full else None
    return Classification(x, colon_x, is_full, is_semi, is_star, witness)


def _classify_free(module: Module, x: Element) -> Classification:
    """Symbolic rule for Z^k, k >= 2: every colon ideal is zero in Z.

    Nonzero elements are full annihilators only; the first standard basis
    vector serves as the canonical witness.
    """
    if module.free_rank < 2:
        raise InfiniteModuleError(
            "rank-1 free module has no symbolic classification rule")
    if len(x) != module.free_rank:
        raise ValueError(f"element has {len(x)} coordinates, expected {module.free_rank}")
    colon = zero_ideal(module.ring)
    if all(c == 0 for c in x):
        return Classification(x, colon, True, True, True, None)
    witness = (1,) + (0,) * (module.free_rank - 1)
    return Classification(x, colon, True, False, False, witness)


@lru_cache(maxsize=None)
def classification_table(module: Module) -> tuple[Classification, ...]:
    return tuple(classify_element(module, x) for x in elements(module))


def annihilator_sets(module: Module) -> tuple[tuple[Element, ...], ...]:
    """The hat sets: nonzero members of each class, lexicographically sorted."""
    zero = zero_element(module)
    table = [c for c in classification_table(module) if c.element != zero]
    return (
        tuple(c.element for c in table if c.is_full),
        tuple(c.element for c in table if c.is_semi),
        tuple(c.element for c in table if c.is_star),
    )


def full_semi_discrepancy(module: Module) -> tuple[Element, ...]:
    """Elements on which the full and semi classes disagree.

    Over Z the two classes coincide for every finite module (colon ideals
    are nonzero there); over Z/n an element whose colon ideal is the zero
    ideal can be full but not semi.  Callers surface these as findings.
    """
    zero = zero_element(module)
    return tuple(c.element for c in classification_table(module)
                 if c.element != zero and c.is_full != c.is_semi)


def is_simple_module(module: Module) -> bool:
    """No proper nonzero submodule: a single cyclic factor of prime order."""
    return (module.is_finite and len(module.factors) == 1
            and is_prime(module.factors[0]))
