"""Figures written next to reports.  Uses the non-interactive Agg backend."""
from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .. import planar  # noqa: E402
from ..core import MonomialIdeal  # noqa: E402

STATUS_COLORS = {"pass": "#4c9a5b", "fail": "#c0392b", "hypothesis": "#7f8c8d", "ceiling": "#d68910"}


def _save(fig, path: Path) -> Path:
    path = Path(path)
    fig.savefig(path, dpi=110, bbox_inches="tight", metadata={"Software": None})
    plt.close(fig)
    return path


def plot_report_counts(report, path) -> Path:
    counts = {k: v for k, v in report.counts.items() if k != "total"}
    fig, ax = plt.subplots(figsize=(5, 3))
    ax.bar(list(counts), list(counts.values()), color=[STATUS_COLORS[k] for k in counts])
    ax.set_yscale("symlog")
    ax.set_ylabel("cases")
    ax.set_title(f"{report.suite}: {report.counts['total']} cases")
    return _save(fig, path)


def plot_mu_series(values, path, title: str = "") -> Path:
    """mu(I^k) against k, with the linear bound k(mu(I) - 1) + 1 for reference."""
    ks = list(range(len(values)))
    fig, ax = plt.subplots(figsize=(5, 3.2))
    ax.plot(ks, values, "o-", label="mu(I^k)")
    if len(values) > 1:
        m = values[1]
        ax.plot(ks, [k * (m - 1) + 1 for k in ks], "--", color="gray", label="k(mu(I)-1)+1")
    ax.set_xlabel("k")
    ax.legend()
    if title:
        ax.set_title(title)
    return _save(fig, path)


def plot_triangle(I: MonomialIdeal, path, title: str = "") -> Path:
    """Exponents of the products u_i u_j, generators of I^2 filled, plus G(I)."""
    cells = planar.triangle(I)
    fig, ax = plt.subplots(figsize=(4.5, 4.5))
    gens = planar.ordered_generators(I)
    ax.step([g[0] for g in gens], [g[1] for g in gens], where="post", color="lightgray")
    ax.scatter([g[0] for g in gens], [g[1] for g in gens], s=18, color="gray", label="G(I)")
    plain = [p.monomial for p in cells if not p.marked]
    marked = [p.monomial for p in cells if p.marked]
    if plain:
        ax.scatter(*zip(*plain), facecolors="none", edgecolors="#34495e", label="u_i u_j")
    ax.scatter(*zip(*marked), color="#c0392b", label="G(I^2)")
    for p in cells:
        ax.annotate(f"{p.i}{p.j}", p.monomial, fontsize=6, xytext=(3, 3), textcoords="offset points")
    ax.set_xlabel("x exponent")
    ax.set_ylabel("y exponent")
    ax.legend(fontsize=7)
    ax.set_title(title or str(I), fontsize=8)
    return _save(fig, path)


def report_figures(report, directory) -> list[Path]:
    out = Path(directory)
    paths = [plot_report_counts(report, out / f"{report.suite}-counts.png")]
    for v in report.verdicts:
        ideals = v.ideals() if v.witness else ()
        if v.status == "fail" and len(ideals) == 1 and ideals[0].arity == 2 and len(ideals[0]) >= 2:
            paths.append(plot_triangle(ideals[0], out / f"{report.suite}-first-failure.png",
                                       f"{v.case}: {ideals[0]}"))
            break
    return paths
