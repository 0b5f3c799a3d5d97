"""Figures for the bound tables and enumeration reports.

Everything renders through the Agg backend straight to a file, so the
module works headless.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .criteria import BoundRow  # noqa: E402
from .enumeration import EnumerationReport  # noqa: E402

STYLE = {
    "font.size": 10,
    "axes.labelsize": 10,
    "axes.titlesize": 11,
    "legend.fontsize": 8,
    "xtick.labelsize": 8,
    "ytick.labelsize": 8,
    "axes.spines.top": False,
    "axes.spines.right": False,
}


def plot_bounds(rows: list[BoundRow], path) -> None:
    """Naive vs sharp edge bounds (left) and the gap f(p) against p+1 (right)."""
    ps = [r.p for r in rows]
    with plt.rc_context(STYLE):
        fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(9, 3.6))
        ax1.plot(ps, [r.p * (r.p - 1) // 2 for r in rows], color="0.6", ls=":", label="C(p,2)")
        ax1.plot(ps, [r.sharp for r in rows], marker="o", ms=3, label="sharp bound")
        ax1.plot(ps, [r.naive for r in rows], marker="s", ms=3, label="naive bound p-1")
        ax1.set_xlabel("p (vertices)")
        ax1.set_ylabel("minimum edges q")
        ax1.legend(frameon=False)

        ax2.plot(ps, [r.f for r in rows], marker="o", ms=3, label="f(p)")
        ax2.plot(ps, [r.p + 1 for r in rows], ls="--", label="p+1")
        if 8 in ps:
            ax2.axvline(8, color="0.7", lw=0.8)
        ax2.set_xlabel("p (vertices)")
        ax2.set_ylabel("gap")
        ax2.legend(frameon=False)
        fig.tight_layout()
        fig.savefig(path, dpi=150)
        plt.close(fig)


def plot_enumeration(report: EnumerationReport, path) -> None:
    """Classes per edge count, with the two edge bounds marked, plus stage survivors."""
    qs = sorted(report.histogram)
    with plt.rc_context(STYLE):
        fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(9, 3.6), gridspec_kw={"width_ratios": [3, 2]})
        ax1.bar(qs, [report.histogram[q] for q in qs], color="0.8", label="all classes")
        ax1.bar(qs, [report.connected_histogram.get(q, 0) for q in qs], color="C0", width=0.5,
                label="connected")
        ax1.axvline(report.naive_bound - 0.5, color="C1", ls="--", label=f"q >= {report.naive_bound}")
        ax1.axvline(report.sharp_bound - 0.5, color="C3", ls="-", label=f"q >= {report.sharp_bound}")
        ax1.set_xlabel("edges q")
        ax1.set_ylabel("isomorphism classes")
        ax1.set_title(f"p = {report.p}")
        ax1.legend(frameon=False)

        names = [n for n, _ in report.stages]
        counts = [c for _, c in report.stages]
        ax2.barh(range(len(names)), counts, color="C0")
        ax2.set_yticks(range(len(names)), names)
        ax2.invert_yaxis()
        for i, c in enumerate(counts):
            ax2.text(c, i, f" {c}", va="center", fontsize=8)
        ax2.set_xlabel("survivors")
        fig.tight_layout()
        fig.savefig(path, dpi=150)
        plt.close(fig)
