"""Text grammar for rings and modules.

Rings: ``Z`` or ``Z/<n>`` with n >= 2.  Modules: ``C<n>`` terms (n >= 2)
joined by ``+``, or a single ``F<k>`` term (k >= 1) for a free module over
Z; whitespace is ignored.  Torsion and free terms cannot be mixed.
"""

from __future__ import annotations

from .modules import Module
from .rings import Ring, ZZ


class SpecError(ValueError):
    """A ring or module spec string failed to parse."""


def parse_ring(text: str) -> Ring:
    spec = "".join(text.split())
    if spec == "Z":
        return ZZ
    if spec.startswith("Z/"):
        digits = spec[2:]
        if not digits.isdigit():
            raise SpecError(f"malformed ring spec {text!r}: expected Z/<n>")
        n = int(digits)
        if n < 2:
            raise SpecError(f"ring modulus must be >= 2, got {n}")
        return Ring(n)
    raise SpecError(f"malformed ring spec {text!r}: expected Z or Z/<n>")


def parse_module(text: str, ring: Ring) -> Module:
    factors: list[int] = []
    free_rank = 0
    pos = 0
    for raw in text.split("+"):
        term = "".join(raw.split())
        at = pos + (raw.index(term[0]) if term else 0)
        pos += len(raw) + 1
        if not term:
            raise SpecError(f"empty term at position {at} in {text!r}")
        head, digits = term[0], term[1:]
        if head not in "CF" or not digits.isdigit():
            raise SpecError(
                f"expected C<n> or F<k> at position {at} in {text!r}")
        value = int(digits)
        if head == "C":
            if value < 2:
                raise SpecError(f"cyclic order must be >= 2 at position {at}")
            factors.append(value)
        else:
            if value < 1:
                raise SpecError(f"free rank must be >= 1 at position {at}")
            if free_rank:
                raise SpecError(f"second free-rank term at position {at}")
            free_rank = value
    if free_rank and factors:
        raise SpecError("mixed torsion and free rank unsupported")
    if free_rank and ring.is_modular:
        raise SpecError(f"free rank requires the ring Z, not {ring}")
    try:
        return Module(ring, tuple(factors), free_rank)
    except ValueError as exc:
        raise SpecError(str(exc)) from exc


def render_module(module: Module) -> str:
    return str(module)


def parse_element(text: str, module: Module) -> tuple[int, ...]:
    """Comma-separated coordinates, reduced into canonical range."""
    parts = [p.strip() for p in text.split(",")] if text.strip() else []
    try:
        coords = [int(p) for p in parts]
    except ValueError as exc:
        raise SpecError(f"malformed element {text!r}: expected integers") from exc
    width = module.free_rank if not module.is_finite else len(module.factors)
    if len(coords) != width:
        raise SpecError(
            f"element {text!r} has {len(coords)} coordinates, expected {width}")
    if module.is_finite:
        return tuple(c % f for c, f in zip(coords, module.factors))
    return tuple(coords)
