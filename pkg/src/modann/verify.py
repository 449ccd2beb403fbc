"""Machine checks of the structural theorems on concrete instances.

Each checker evaluates its hypotheses and conclusion separately and reports
one of HOLDS / VACUOUS / VIOLATION; checks that do not apply to an instance
(wrong ring kind, infinite module) are reported SKIPPED by the corpus
runner.  A VACUOUS report never asserts the conclusion: the interesting
values are logged in the details text for inspection instead.

Quantified premises of the form "every singular simple colon ideal is
injective" are treated as nonvacuous: instances without singular simple
colon ideals report VACUOUS rather than silently asserting conclusions
that only follow when such ideals exist.
"""

from __future__ import annotations

import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache

from .classify import annihilator_sets, colon_table, is_simple_module
from .modules import (
    Element,
    Module,
    _essential_submodule_unchecked,
    cyclic_intersection,
    cyclic_submodule,
    element_order,
    elements,
    generated_submodule,
    module_annihilator,
    module_order,
    module_singular_subset,
    module_socle,
    scalar_mul,
    zero_element,
)
from .numutil import divisors, is_prime, prime_divisors
from .rings import (
    Ideal,
    Ring,
    canonical_ideal,
    ideal_product,
    is_essential_ideal,
    is_regular_ring,
    jacobson_radical,
    quotient_radical_is_zero,
    ring_singular_set,
    zero_ideal,
)
from .specs import SpecError, parse_module, parse_ring

HOLDS = "HOLDS"
VACUOUS = "VACUOUS"
VIOLATION = "VIOLATION"
SKIPPED = "SKIPPED"


@dataclass(frozen=True)
class TheoremReport:
    theorem: str
    ring: str
    module: str
    hypotheses: tuple[tuple[str, bool], ...]
    conclusion: bool | None
    status: str
    details: str


def report_json_line(report: TheoremReport) -> str:
    return json.dumps({
        "theorem": report.theorem,
        "ring": report.ring,
        "module": report.module,
        "hypotheses": dict(report.hypotheses),
        "conclusion": report.conclusion,
        "status": report.status,
        "details": report.details,
    })


def _finish(theorem: str, ring: Ring, module: Module,
            hyps: tuple[tuple[str, bool], ...], conclusion: bool,
            details: str) -> TheoremReport:
    if all(v for _, v in hyps):
        status = HOLDS if conclusion else VIOLATION
        return TheoremReport(theorem, str(ring), str(module), hyps,
                             conclusion, status, details)
    return TheoremReport(theorem, str(ring), str(module), hyps,
                         None, VACUOUS, details)


# -- cached per-module facts --------------------------------------------------

@lru_cache(maxsize=None)
def _socle_essential_nonzero(module: Module) -> bool:
    socle = module_socle(module)
    return len(socle) > 1 and _essential_submodule_unchecked(module, socle)


@lru_cache(maxsize=None)
def _cyclic_core_nonzero(module: Module) -> bool:
    return len(cyclic_intersection(module)) > 1


def _hat_full(module: Module) -> tuple[Element, ...]:
    return annihilator_sets(module)[0]


def _distinct_hat_colons(module: Module) -> list[Ideal]:
    """Distinct colon ideals over the full hat set, ascending generator."""
    table = colon_table(module)
    return sorted({table[x] for x in _hat_full(module)}, key=lambda c: c.gen)


@lru_cache(maxsize=None)
def _all_submodules_cyclic(module: Module) -> bool:
    """Every pair-generated submodule is cyclic, hence every submodule is."""
    elems = list(elements(module))
    for i, x in enumerate(elems):
        for y in elems[i:]:
            sub = generated_submodule(module, (x, y))
            if not any(element_order(module, g) == len(sub) for g in sub):
                return False
    return True


# -- Baer's injectivity criterion ---------------------------------------------

def baer_is_injective(ring: Ring, target: Module) -> bool:
    """Whether every homomorphism from an ideal of Z/n into target extends.

    A homomorphism from dZ/n is fixed by the image e of d, constrained by
    (n/d)*e = 0; it extends to the ring iff some c in the target has d*c = e.
    """
    if not ring.is_modular:
        raise ValueError("Baer enumeration needs the finite ideal lattice of Z/n")
    if target.ring != ring:
        raise ValueError(f"target module lives over {target.ring}, not {ring}")
    n = ring.modulus
    elems = list(elements(target))
    zero = zero_element(target)
    for d in divisors(n):
        order_bound = n // d
        for e in elems:
            if scalar_mul(target, order_bound, e) != zero:
                continue
            if not any(scalar_mul(target, d, c) == e for c in elems):
                return False
    return True


def _singular_simple_colons(ring: Ring, module: Module) -> list[Ideal]:
    """Distinct hat colon ideals that are simple singular ring modules.

    dZ/n is isomorphic to Z/(n/d) as a module, so it is simple iff n/d is
    prime; singularity asks every element of it to have an essential
    annihilator, decided by the module-level singular subset.
    """
    n = ring.modulus
    found = []
    for colon in _distinct_hat_colons(module):
        quotient = n // colon.gen
        if quotient < 2 or not is_prime(quotient):
            continue
        as_module = Module(ring, (quotient,))
        if len(module_singular_subset(as_module)) == quotient:
            found.append(colon)
    return found


# -- individual theorem checks -------------------------------------------------

def check_essentiality_lemma(ring: Ring, module: Module) -> TheoremReport:
    """Over Z: colon ideals of hat elements are essential iff nonzero."""
    theorem = "essential-iff-nonzero"
    if ring.is_modular:
        raise ValueError("essential-iff-nonzero is a statement over the ring Z")
    if not module.is_finite:
        if module.free_rank < 2:
            raise ValueError("rank-1 free module is out of symbolic scope")
        colon = zero_ideal(ring)
        hyps = (("module nonzero", True),
                ("full-annihilator hat set nonempty", True))
        conclusion = is_essential_ideal(colon) == (colon.gen != 0)
        return _finish(theorem, ring, module, hyps, conclusion,
                       "free module: every colon ideal is (0), not essential")

    hat = _hat_full(module)
    nonzero = module_order(module) > 1
    hyps = (("module nonzero", nonzero),
            ("full-annihilator hat set nonempty", bool(hat)))
    table = colon_table(module)
    iff_ok = all(is_essential_ideal(table[x]) == (table[x].gen != 0) for x in hat)
    all_essential = True
    if nonzero and not is_simple_module(module):
        zero = zero_element(module)
        all_essential = all(is_essential_ideal(table[x])
                            for x in elements(module) if x != zero)
    gens = sorted({table[x].gen for x in hat})
    details = f"distinct hat colon generators: {gens}"
    if nonzero and not is_simple_module(module):
        details += f"; every nonzero colon essential: {all_essential}"
    return _finish(theorem, ring, module, hyps, iff_ok and all_essential, details)


def check_essential_colon(ring: Ring, module: Module) -> TheoremReport:
    """Essential cyclic span of a hat element forces an essential colon ideal."""
    theorem = "essential-colon"
    hat = _hat_full(module)
    table = colon_table(module)
    with_essential_span = []
    failing = []
    for x in hat:
        span = cyclic_submodule(module, x)
        if _essential_submodule_unchecked(module, span):
            with_essential_span.append(x)
            if not is_essential_ideal(table[x]):
                failing.append(x)
    hyps = (("full-annihilator hat set nonempty", bool(hat)),
            ("some hat element has essential cyclic span", bool(with_essential_span)))
    conclusion = not failing
    details = (f"{len(with_essential_span)} of {len(hat)} hat elements have "
               f"essential span")
    if failing:
        details += f"; non-essential colon at {failing[0]}"
    note = _noncyclic_ideal_image_note(ring, module)
    if note:
        details += "; " + note
    return _finish(theorem, ring, module, hyps, conclusion, details)


def _noncyclic_ideal_image_note(ring: Ring, module: Module) -> str:
    """Informational: divisor ideals I whose image IM is not cyclic."""
    gens = divisors(ring.modulus) if ring.is_modular else \
        divisors(module_annihilator(module).gen or 1)
    for m in gens:
        image = {scalar_mul(module, m, z) for z in elements(module)}
        if not any(element_order(module, g) == len(image) for g in image):
            return f"note: ideal ({m}) has non-cyclic image"
    return ""


def check_singular_quotient(ring: Ring, module: Module) -> TheoremReport:
    """R modulo a hat colon ideal is a singular module."""
    theorem = "singular-quotient"
    hyps = (("socle essential and nonzero", _socle_essential_nonzero(module)),
            ("cyclic-span intersection nonzero", _cyclic_core_nonzero(module)))
    table = colon_table(module)
    bad: tuple[Element, int] | None = None
    for x in _hat_full(module):
        d = table[x].gen
        for a in range(d):
            coset_ann = canonical_ideal(ring, d // math.gcd(a, d))
            if not is_essential_ideal(coset_ann):
                bad = (x, a)
                break
        if bad:
            break
    conclusion = bad is None
    details = "every quotient coset has an essential annihilator" if conclusion \
        else f"coset {bad[1]} of R/[{bad[0]}:M] has non-essential annihilator"
    return _finish(theorem, ring, module, hyps, conclusion, details)


def check_injectivity_criterion(ring: Ring, module: Module) -> TheoremReport:
    """Injectivity of singular simple colon ideals against ring regularity.

    Forward direction: if all singular simple colon ideals pass the Baer
    test, the ring singular set is trivial and the quotient radicals vanish.
    Equivalence: all-injective iff the ring is regular (with existence of
    singular simple colon ideals required for a non-vacuous premise).
    """
    theorem = "injectivity-criterion"
    if not ring.is_modular:
        raise ValueError("injectivity enumeration needs a modular ring")
    n = ring.modulus
    singular_simples = _singular_simple_colons(ring, module)
    baer = {c.gen: baer_is_injective(ring, Module(ring, (n // c.gen,)))
            for c in singular_simples}
    all_injective = bool(singular_simples) and all(baer.values())
    regular = is_regular_ring(ring)
    hyps = (("socle essential and nonzero", _socle_essential_nonzero(module)),
            ("cyclic-span intersection nonzero", _cyclic_core_nonzero(module)),
            ("singular simple colon ideals exist", bool(singular_simples)))
    singular_trivial = ring_singular_set(ring).members == (0,)
    radicals_vanish = all(quotient_radical_is_zero(ring, c)
                          for c in singular_simples)
    forward = (not all_injective) or (singular_trivial and radicals_vanish)
    conclusion = forward and (all_injective == regular)

    if singular_simples:
        details = (f"singular simple colon ideals {sorted(baer)} with Baer results "
                   f"{[baer[g] for g in sorted(baer)]}; ring regular: {regular}; "
                   f"ring singular set trivial: {singular_trivial}")
    else:
        simple_pass = {p: baer_is_injective(ring, Module(ring, (p,)))
                       for p in prime_divisors(n)}
        details = (f"no singular simple colon ideals; ring regular: {regular}; "
                   f"simple-module Baer results {simple_pass}; agreement with "
                   f"regularity: {all(simple_pass.values()) == regular}")
    return _finish(theorem, ring, module, hyps, conclusion, details)


def check_maximal_intersection(ring: Ring, module: Module) -> TheoremReport:
    """Under the injectivity premise: colon ideals are intersections of
    maximal ideals, the radical squares to zero, and colons are idempotent."""
    theorem = "maximal-intersection"
    if not ring.is_modular:
        raise ValueError("maximal-ideal enumeration needs a modular ring")
    n = ring.modulus
    singular_simples = _singular_simple_colons(ring, module)
    baer_all = all(baer_is_injective(ring, Module(ring, (n // c.gen,)))
                   for c in singular_simples)
    hyps = (("socle essential and nonzero", _socle_essential_nonzero(module)),
            ("cyclic-span intersection nonzero", _cyclic_core_nonzero(module)),
            ("singular simple colon ideals exist", bool(singular_simples)),
            ("all singular simple colon ideals Baer-injective",
             bool(singular_simples) and baer_all))
    radical = jacobson_radical(ring)
    radical_sq = ideal_product(radical, radical)
    parts = [f"J={radical} J^2={radical_sq}"]
    conclusion = radical_sq == zero_ideal(ring)
    for colon in _distinct_hat_colons(module):
        squared = ideal_product(colon, colon)
        caps = _maximal_ideal_intersection(ring, colon)
        conclusion = conclusion and squared == colon and caps == colon
        parts.append(f"{colon}: sq={squared} maxint={caps}")
    return _finish(theorem, ring, module, hyps, conclusion, "; ".join(parts))


def _maximal_ideal_intersection(ring: Ring, ideal: Ideal) -> Ideal:
    """Intersection of the maximal ideals of Z/n containing the ideal."""
    containing = [p for p in prime_divisors(ring.modulus) if ideal.gen % p == 0]
    return canonical_ideal(ring, math.prod(containing))


def check_regular_equivalence(ring: Ring, module: Module) -> TheoremReport:
    """Regularity, idempotency of all ideals, idempotency of hat colons."""
    theorem = "regular-equivalence"
    if not ring.is_modular:
        raise ValueError("divisor-ideal enumeration needs a modular ring")
    n = ring.modulus
    regular = is_regular_ring(ring)
    ideals_idem = all(
        ideal_product(c, c) == c
        for c in (canonical_ideal(ring, d) for d in divisors(n))
    )
    hat_colons = _distinct_hat_colons(module)
    colons_idem = all(ideal_product(c, c) == c for c in hat_colons)
    hyps = (("every submodule cyclic", _all_submodules_cyclic(module)),
            ("cyclic-span intersection nonzero", _cyclic_core_nonzero(module)))
    details = (f"regular: {regular}; all ideals idempotent: {ideals_idem}; "
               f"hat colon ideals idempotent: {colons_idem} "
               f"(over {len(hat_colons)} distinct colon ideals)")
    if regular != ideals_idem:
        # ring-level equivalence carries no module hypotheses
        return TheoremReport(theorem, str(ring), str(module), hyps,
                             False, VIOLATION, details)
    # the colon clause only constrains the ring when hat elements exist;
    # an empty hat set leaves it vacuous rather than asserting regularity
    conclusion = (not hat_colons) or colons_idem == regular
    return _finish(theorem, ring, module, hyps, conclusion, details)


# -- corpus runner -------------------------------------------------------------

CHECKS = {
    "essential-iff-nonzero": (check_essentiality_lemma,
                              lambda ring, module: not ring.is_modular,
                              "requires the ring Z"),
    "essential-colon": (check_essential_colon,
                        lambda ring, module: module.is_finite,
                        "requires a finite module"),
    "singular-quotient": (check_singular_quotient,
                          lambda ring, module: module.is_finite,
                          "requires a finite module"),
    "injectivity-criterion": (check_injectivity_criterion,
                              lambda ring, module: ring.is_modular and module.is_finite,
                              "requires a modular ring and finite module"),
    "maximal-intersection": (check_maximal_intersection,
                             lambda ring, module: ring.is_modular and module.is_finite,
                             "requires a modular ring and finite module"),
    "regular-equivalence": (check_regular_equivalence,
                            lambda ring, module: ring.is_modular and module.is_finite,
                            "requires a modular ring and finite module"),
}


def suite_ids(selector) -> list[str]:
    if selector in (None, "all"):
        return list(CHECKS)
    ids = list(selector)
    unknown = [t for t in ids if t not in CHECKS]
    if unknown:
        raise ValueError(f"unknown theorem ids: {unknown}; "
                         f"known: {sorted(CHECKS)}")
    return ids


def run_instance(entry: tuple[str, str], suite: list[str]) -> list[TheoremReport]:
    ring_spec, module_spec = entry
    try:
        ring = parse_ring(ring_spec)
        module = parse_module(module_spec, ring)
    except SpecError as exc:
        return [TheoremReport(tid, ring_spec, module_spec, (), None, SKIPPED,
                              f"parse failure: {exc}") for tid in suite]
    reports = []
    for tid in suite:
        func, applies, requirement = CHECKS[tid]
        if not applies(ring, module):
            reports.append(TheoremReport(tid, str(ring), str(module), (),
                                         None, SKIPPED, requirement))
            continue
        try:
            reports.append(func(ring, module))
        except ValueError as exc:
            reports.append(TheoremReport(tid, str(ring), str(module), (),
                                         None, SKIPPED, f"not evaluated: {exc}"))
    return reports


def run_corpus(corpus, suite=None, threads: int = 1) -> list[TheoremReport]:
    """Cross product of corpus instances and suite checks, in stable order."""
    ids = suite_ids(suite)
    entries = [tuple(entry) for entry in corpus]
    if threads > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            batches = list(pool.map(run_instance, entries, [ids] * len(entries)))
    else:
        batches = [run_instance(entry, ids) for entry in entries]
    return [report for batch in batches for report in batch]


def summarize(reports) -> dict[str, int]:
    counts = {HOLDS: 0, VACUOUS: 0, SKIPPED: 0, VIOLATION: 0}
    for report in reports:
        counts[report.status] += 1
    return counts


def has_violation(reports) -> bool:
    return any(report.status == VIOLATION for report in reports)
