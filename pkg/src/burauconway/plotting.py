"""Figures for scan reports."""

from __future__ import annotations

from collections import Counter

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402


def lead_histogram(records, path, title: str | None = None) -> None:
    """Bar chart of Conway leading coefficients; prime |lead| in red, squares in blue."""
    ok = [r for r in records if r.status == "ok"]
    counts = Counter(r.lead for r in ok)
    kinds = {r.lead: r for r in ok}
    leads = sorted(counts)

    fig, ax = plt.subplots(figsize=(8, 4.5))
    colors = []
    for lead in leads:
        rec = kinds[lead]
        if rec.lead_is_prime:
            colors.append("tab:red")
        elif rec.lead_is_square:
            colors.append("tab:blue")
        else:
            colors.append("0.6")
    ax.bar([str(x) for x in leads], [counts[x] for x in leads], color=colors)
    ax.set_xlabel("leading coefficient of C(z)")
    ax.set_ylabel("knots")
    if len(leads) > 20:
        for label in ax.get_xticklabels():
            label.set_rotation(90)
            label.set_fontsize(7)
    ax.set_title(title or f"{len(ok)} closures")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
