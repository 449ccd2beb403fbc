import math

import pytest
from hypothesis import given, settings, strategies as st

from modann.modules import (
    InfiniteModuleError,
    Module,
    SizeBoundExceededError,
    colon_ideal,
    colon_ideal_brute,
    cyclic_intersection,
    cyclic_submodule,
    element_order,
    elements,
    exponent,
    generated_submodule,
    is_essential_submodule,
    module_annihilator,
    module_order,
    module_singular_subset,
    module_socle,
    scalar_mul,
    subgroup_types,
    submodule_colon,
    zero_element,
)
from modann.rings import Ideal, Ring, ZZ, ideal_contains, unit_ideal, zero_ideal

M42 = Module(ZZ, (4, 2))


# -- construction and enumeration ----------------------------------------------

def test_module_validation():
    with pytest.raises(ValueError):
        Module(ZZ, (1,))
    with pytest.raises(ValueError, match="mixed"):
        Module(ZZ, (4,), free_rank=1)
    with pytest.raises(ValueError, match="ring Z"):
        Module(Ring(6), free_rank=2)
    with pytest.raises(ValueError, match="divide"):
        Module(Ring(6), (4,))


def test_enumerate_examples():
    assert list(elements(Module(ZZ, (2, 2)))) == [(0, 0), (0, 1), (1, 0), (1, 1)]
    assert len(list(elements(M42))) == 8
    with pytest.raises(InfiniteModuleError):
        elements(Module(ZZ, free_rank=2))


def test_enumerate_respects_bound():
    with pytest.raises(SizeBoundExceededError):
        elements(Module(ZZ, (64, 64)), bound=1000)


def test_order_and_exponent():
    assert module_order(M42) == 8
    assert exponent(M42) == 4
    assert exponent(Module(ZZ, (6, 4))) == 12
    assert module_order(Module(ZZ)) == 1  # zero module


def test_scalar_examples():
    assert scalar_mul(M42, 3, (1, 1)) == (3, 1)
    assert scalar_mul(M42, 2, (1, 1)) == (2, 0)
    assert scalar_mul(M42, 0, (1, 1)) == (0, 0)


def test_element_order():
    assert element_order(M42, (1, 0)) == 4
    assert element_order(M42, (2, 1)) == 2
    assert element_order(M42, (0, 0)) == 1


# -- submodules ------------------------------------------------------------------

def test_cyclic_examples():
    assert cyclic_submodule(M42, (2, 0)) == {(0, 0), (2, 0)}
    assert cyclic_submodule(M42, (1, 1)) == {(0, 0), (1, 1), (2, 0), (3, 1)}
    assert cyclic_submodule(M42, (0, 0)) == {(0, 0)}


def test_generated_examples():
    assert generated_submodule(M42, []) == {(0, 0)}
    assert generated_submodule(M42, [(2, 0), (0, 1)]) == \
        {(0, 0), (2, 0), (0, 1), (2, 1)}
    assert generated_submodule(M42, [(1, 0)]) == cyclic_submodule(M42, (1, 0))


# -- colon ideals -----------------------------------------------------------------

def test_colon_vector_space_case():
    for p in (2, 3, 5):
        module = Module(ZZ, (p, p))
        for x in elements(module):
            if x != (0, 0):
                assert colon_ideal(module, x) == Ideal(ZZ, p)


def test_colon_homocyclic_case():
    module = Module(ZZ, (4, 4))
    for x in elements(module):
        assert colon_ideal(module, x) == Ideal(ZZ, 4)
    module = Module(ZZ, (9, 9))
    for x in elements(module):
        assert colon_ideal(module, x) == Ideal(ZZ, 9)


def test_colon_examples():
    assert colon_ideal(M42, (1, 0)) == Ideal(ZZ, 2)
    assert colon_ideal(M42, (0, 1)) == Ideal(ZZ, 4)
    assert colon_ideal(M42, (0, 0)) == module_annihilator(M42)


def test_colon_brute_examples():
    c6 = Module(ZZ, (6,))
    assert colon_ideal_brute(c6, (2,)) == Ideal(ZZ, 2)
    assert colon_ideal_brute(c6, (3,)) == Ideal(ZZ, 3)
    assert colon_ideal_brute(Module(ZZ, (2, 3)), (1, 0)) == Ideal(ZZ, 3)


def test_colon_rejects_infinite():
    free = Module(ZZ, free_rank=2)
    with pytest.raises(InfiniteModuleError):
        colon_ideal(free, (1, 0))
    with pytest.raises(InfiniteModuleError):
        colon_ideal_brute(free, (1, 0))


def test_submodule_colon_examples():
    assert submodule_colon(M42, {(0, 0)}) == Ideal(ZZ, 4)
    assert submodule_colon(M42, set(elements(M42))) == unit_ideal(ZZ)
    assert submodule_colon(M42, {(0, 0), (2, 0), (0, 1), (2, 1)}) == Ideal(ZZ, 2)
    with pytest.raises(ValueError, match="closed"):
        submodule_colon(M42, {(0, 0), (1, 0)})


def test_submodule_colon_monotone():
    subs = [
        generated_submodule(M42, gens)
        for gens in ([], [(2, 0)], [(2, 0), (0, 1)], [(1, 0), (0, 1)])
    ]
    for small in subs:
        for large in subs:
            if small <= large:
                assert ideal_contains(submodule_colon(M42, large),
                                      submodule_colon(M42, small))


def test_annihilator_examples():
    assert module_annihilator(M42) == Ideal(ZZ, 4)
    assert module_annihilator(Module(ZZ, (2, 2, 2))) == Ideal(ZZ, 2)
    assert module_annihilator(Module(ZZ, free_rank=2)) == zero_ideal(ZZ)


# -- socle, essentiality, singular subset ------------------------------------------

def minimal_submodule_sum(module):
    """Oracle: additive closure of the union of the minimal cyclic submodules."""
    minimal = set()
    for x in elements(module):
        order = element_order(module, x)
        if order > 1 and len([p for p, in _prime_pairs(order)]) == 1 and \
                all(order % (p * p) for p, in _prime_pairs(order)):
            minimal |= cyclic_submodule(module, x)
    return generated_submodule(module, minimal)


def _prime_pairs(n):
    from modann.numutil import prime_divisors
    return [(p,) for p in prime_divisors(n)]


def test_socle_examples():
    assert module_socle(M42) == {(0, 0), (2, 0), (0, 1), (2, 1)}
    c6 = Module(ZZ, (6,))
    assert module_socle(c6) == set(elements(c6))
    c7 = Module(ZZ, (7,))
    assert module_socle(c7) == set(elements(c7))


def test_socle_matches_minimal_submodule_oracle():
    for factors in [(4, 2), (6,), (8,), (2, 2, 2), (9, 3), (12, 2), (4, 4)]:
        module = Module(ZZ, factors)
        assert module_socle(module) == minimal_submodule_sum(module)


def test_essential_submodule_examples():
    assert is_essential_submodule(M42, module_socle(M42))
    assert not is_essential_submodule(M42, {(0, 0), (2, 0)})
    assert is_essential_submodule(M42, set(elements(M42)))
    with pytest.raises(ValueError, match="closed"):
        is_essential_submodule(M42, {(0, 0), (1, 0)})


def test_essential_submodule_matches_set_intersection_oracle():
    for factors in [(4, 2), (8,), (6,), (2, 2), (9, 3)]:
        module = Module(ZZ, factors)
        zero = zero_element(module)
        subs = {generated_submodule(module, (x, y))
                for x in elements(module) for y in elements(module)}
        for sub in subs:
            expected = all(
                cyclic_submodule(module, z) & sub != {zero}
                for z in elements(module) if z != zero
            )
            assert is_essential_submodule(module, sub) == expected


def test_socle_essential_for_nonzero_finite_modules():
    for factors in [(2,), (4, 2), (8,), (6,), (2, 2, 2), (9, 3), (25,)]:
        module = Module(ZZ, factors)
        assert is_essential_submodule(module, module_socle(module))


def test_cyclic_intersection_examples():
    assert cyclic_intersection(Module(ZZ, (8,))) == {(0,), (4,)}
    assert cyclic_intersection(M42) == {(0, 0)}
    assert cyclic_intersection(Module(ZZ, (6,))) == {(0,)}


def test_cyclic_intersection_of_cyclic_p_group_has_p_elements():
    for p, k in [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (5, 1), (7, 1)]:
        module = Module(ZZ, (p**k,))
        assert len(cyclic_intersection(module)) == p


def test_singular_subset_examples():
    r4 = Ring(4)
    assert module_singular_subset(Module(r4, (4,))) == {(0,), (2,)}
    r6 = Ring(6)
    assert module_singular_subset(Module(r6, (6,))) == {(0,)}
    assert module_singular_subset(M42) == set(elements(M42))


# -- partition types ----------------------------------------------------------------

def test_subgroup_types_examples():
    types = dict(subgroup_types((5, 1, 1)))
    assert types[(5, 1)] == 2
    assert types[(4, 1)] == 2
    assert types[(5, 1, 1)] == 1
    assert types[()] == 1

    assert dict(subgroup_types((1,))) == {(1,): 1, (): 1}

    types21 = dict(subgroup_types((2, 1)))
    assert types21 == {(2, 1): 1, (1, 1): 1, (2,): 1, (1,): 2, (): 1}


def test_subgroup_types_total_multiplicity():
    for parts in [(5, 1, 1), (2, 1), (3, 3), (4,), (2, 2, 1)]:
        total = sum(mult for _, mult in subgroup_types(parts))
        assert total == math.prod(p + 1 for p in parts)


def test_subgroup_types_rejects_bad_input():
    with pytest.raises(ValueError):
        subgroup_types((1, 2))
    with pytest.raises(ValueError):
        subgroup_types(())
    with pytest.raises(ValueError):
        subgroup_types((21,))


# -- oracle equivalence and invariants ------------------------------------------------

small_z_modules = st.lists(
    st.sampled_from([2, 3, 4, 5, 8, 9, 6, 12]), min_size=1, max_size=3,
).map(lambda fs: Module(ZZ, tuple(fs))).filter(lambda m: module_order(m) <= 256)


@settings(max_examples=60, deadline=None)
@given(small_z_modules, st.data())
def test_colon_fast_matches_brute_over_z(module, data):
    coords = tuple(
        data.draw(st.integers(min_value=0, max_value=f - 1)) for f in module.factors
    )
    assert colon_ideal(module, coords) == colon_ideal_brute(module, coords)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([4, 6, 8, 12, 18, 20, 30, 36]), st.data())
def test_colon_fast_matches_brute_over_zn(n, data):
    from modann.numutil import divisors
    ring = Ring(n)
    opts = [d for d in divisors(n) if d >= 2]
    factors = tuple(data.draw(st.lists(st.sampled_from(opts), min_size=1, max_size=2)))
    module = Module(ring, factors)
    coords = tuple(
        data.draw(st.integers(min_value=0, max_value=f - 1)) for f in module.factors
    )
    assert colon_ideal(module, coords) == colon_ideal_brute(module, coords)


@settings(max_examples=60, deadline=None)
@given(small_z_modules, st.data())
def test_colon_invariants(module, data):
    x = tuple(
        data.draw(st.integers(min_value=0, max_value=f - 1)) for f in module.factors
    )
    colon = colon_ideal(module, x)
    ann = module_annihilator(module)
    assert exponent(module) % colon.gen == 0
    assert ideal_contains(colon, ann)
    assert ideal_contains(unit_ideal(ZZ), colon)
    spans_all = cyclic_submodule(module, x) == set(elements(module))
    assert (colon == unit_ideal(ZZ)) == spans_all
