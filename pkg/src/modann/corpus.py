"""Built-in instance corpora.

The default corpus pairs every abelian group of order <= 64 with the ring Z,
and adds Z/n instances for n <= 60 whose modules are divisor chains of n
(invariant-factor presentations) of length at most two, capped at 512
elements.  Entries are (ring spec, module spec) strings in a fixed order.
"""

from __future__ import annotations

from .numutil import divisors, factorize

MAX_Z_ORDER = 64
MAX_MODULUS = 60
MAX_CHAIN_ORDER = 512


def partitions(n: int, max_part: int | None = None):
    """Weakly decreasing tuples summing to n, in reverse-lexicographic order."""
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part or n), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def abelian_module_specs(order: int) -> list[str]:
    """Primary-decomposition presentations of all abelian groups of the order."""
    specs = [[]]
    for p, e in factorize(order).factors:
        specs = [
            former + [f"C{p**part}" for part in parts]
            for former in specs
            for parts in partitions(e)
        ]
    return ["+".join(s) for s in specs]


def p_group_family(p: int, max_order: int) -> list[str]:
    """All p-group presentations C{p^l1}+... with total order <= max_order."""
    max_sum = 0
    while p ** (max_sum + 1) <= max_order:
        max_sum += 1
    return [
        "+".join(f"C{p**part}" for part in parts)
        for s in range(1, max_sum + 1)
        for parts in partitions(s)
    ]


def divisor_chains(n: int) -> list[tuple[int, ...]]:
    """Length <= 2 chains d2 | d1 | n with di >= 2 and product <= the cap."""
    divs = [d for d in divisors(n) if d >= 2]
    chains = [(d,) for d in divs]
    for d1 in divs:
        for d2 in divs:
            if d1 % d2 == 0 and d1 * d2 <= MAX_CHAIN_ORDER:
                chains.append((d1, d2))
    return chains


def default_corpus() -> list[tuple[str, str]]:
    entries = []
    for order in range(2, MAX_Z_ORDER + 1):
        for spec in abelian_module_specs(order):
            entries.append(("Z", spec))
    for n in range(2, MAX_MODULUS + 1):
        for chain in divisor_chains(n):
            entries.append((f"Z/{n}", "+".join(f"C{d}" for d in chain)))
    return entries
