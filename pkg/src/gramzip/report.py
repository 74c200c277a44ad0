"""Figure rendering for the stats and block-structure reports.

Figures are written straight to files; the Agg backend is forced so
rendering works in headless environments.
"""

from __future__ import annotations

import os
from typing import List

from .grammar import Certificate
from .randaccess import BlockReport


def _pyplot():
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    return plt


def save_certificate_figure(cert: Certificate, out_dir: str) -> str:
    """Bar chart of the pipeline stage sizes against the parse lower bound."""
    plt = _pyplot()
    labels = ["lz77\nphrases", "broken\nphrases", "cnf\nsize",
              "bisection\nsize", "best\nsize"]
    values = [cert.lz77_phrases, cert.broken_phrases, cert.cnf_size,
              cert.bisection_size, cert.best_size]
    fig, ax = plt.subplots(figsize=(6.4, 4.0))
    bars = ax.bar(labels, values, color="#4878b0")
    bars[4].set_color("#2a9d52")
    ax.axhline(cert.lz77_phrases, color="#b04848", linestyle="--",
               linewidth=1, label="parse count (lower bound on g)")
    ax.bar_label(bars, padding=2)
    ax.set_ylabel("symbols")
    ax.set_title(
        f"stage sizes, ratio upper bound "
        f"{float(cert.ratio_upper_bound):.3f}"
    )
    ax.legend(loc="upper left", fontsize=8)
    fig.tight_layout()
    path = os.path.join(out_dir, "stage_sizes.png")
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def save_block_report_figure(report: BlockReport, out_dir: str) -> str:
    """Retained block counts per level, with block lengths on the labels."""
    plt = _pyplot()
    levels = [str(lv) for lv, _, _ in report.per_level]
    retained = [c for _, _, c in report.per_level]
    lens = [blen for _, blen, _ in report.per_level]
    fig, ax = plt.subplots(figsize=(6.4, 4.0))
    bars = ax.bar(levels, retained, color="#4878b0")
    ax.bar_label(bars, padding=2)
    ax.set_xlabel("level (block length shown below)")
    ax.set_xticks(range(len(levels)))
    ax.set_xticklabels([f"{lv}\nlen={L}" for lv, L in zip(levels, lens)],
                       fontsize=8)
    ax.set_ylabel("retained blocks")
    ax.set_title(
        f"block retention, n={report.n}, b={report.base}, "
        f"~{report.estimated_bits} bits"
    )
    fig.tight_layout()
    path = os.path.join(out_dir, "block_retention.png")
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def render_report_figures(objs: List[object], out_dir: str) -> List[str]:
    """Render every report object it knows how to draw; returns file paths."""
    os.makedirs(out_dir, exist_ok=True)
    paths = []
    for obj in objs:
        if isinstance(obj, Certificate):
            paths.append(save_certificate_figure(obj, out_dir))
        elif isinstance(obj, BlockReport):
            paths.append(save_block_report_figure(obj, out_dir))
    return paths
