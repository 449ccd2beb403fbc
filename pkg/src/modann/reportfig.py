"""Figures rendered next to the delimited report outputs."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)

_STATUS_COLORS = {
    "HOLDS": "#2a9d3a",
    "VACUOUS": "#8a8a8a",
    "SKIPPED": "#cfcfcf",
    "VIOLATION": "#d62728",
}


def save_colon_table_figure(module_stats, path: str) -> None:
    """Scatter of colon generators per module; marker size tracks counts.

    module_stats: list of (module spec, {display generator: (count, essential)}).
    """
    fig, ax = plt.subplots(figsize=(8, max(2.5, 0.45 * len(module_stats) + 1.2)))
    for row, (_, gens) in enumerate(module_stats):
        for gen, (count, essential) in sorted(gens.items()):
            ax.scatter(gen, row, s=30 + 6 * count,
                       color="#2a9d3a" if essential else "#d62728",
                       alpha=0.8, edgecolors="none")
    ax.set_yticks(range(len(module_stats)))
    ax.set_yticklabels([spec for spec, _ in module_stats], fontsize=8)
    ax.set_xlabel("colon ideal generator")
    ax.set_title("colon ideal generators by module\n"
                 "(green = essential, size = number of elements)")
    ax.grid(axis="x", alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_verify_figure(reports, path: str) -> None:
    """Stacked status counts per theorem for a verification report."""
    order: list[str] = []
    counts: dict[str, dict[str, int]] = {}
    for report in reports:
        if report.theorem not in counts:
            order.append(report.theorem)
            counts[report.theorem] = {s: 0 for s in _STATUS_COLORS}
        counts[report.theorem][report.status] += 1
    fig, ax = plt.subplots(figsize=(8, max(2.5, 0.5 * len(order) + 1.5)))
    offsets = [0] * len(order)
    for status, color in _STATUS_COLORS.items():
        widths = [counts[t][status] for t in order]
        ax.barh(range(len(order)), widths, left=offsets, color=color, label=status)
        offsets = [o + w for o, w in zip(offsets, widths)]
    ax.set_yticks(range(len(order)))
    ax.set_yticklabels(order, fontsize=9)
    ax.invert_yaxis()
    ax.set_xlabel("instances")
    ax.set_title("verification statuses by theorem")
    ax.legend(loc="lower right", fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
