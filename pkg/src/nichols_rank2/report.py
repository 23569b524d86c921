"""Serialization of reports (text, JSON, CSV) and figures.

Figures are written with the non-interactive Agg backend, so they work in
batch runs without a display.
"""

from __future__ import annotations

import csv
import io
import json
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402


def to_json(obj) -> str:
    """Deterministic JSON: sorted keys, fixed indentation, trailing newline."""
    return json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def strip_timing(obj):
    """Copy of a report without timing fields, for byte comparison of runs."""
    if isinstance(obj, dict):
        return {k: strip_timing(v) for k, v in obj.items() if k != "seconds"}
    if isinstance(obj, list):
        return [strip_timing(v) for v in obj]
    return obj


def to_csv(rows: list, columns: list) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=columns, extrasaction="ignore", lineterminator="\n")
    w.writeheader()
    for r in rows:
        w.writerow({k: _cell(r.get(k)) for k in columns})
    return buf.getvalue()


def _cell(v):
    if isinstance(v, (list, tuple, dict)):
        return json.dumps(v, ensure_ascii=False, sort_keys=True)
    if isinstance(v, bool):
        return "pass" if v else "fail"
    return "" if v is None else v


def write_text(text: str, out: str | None):
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        print(text, end="" if text.endswith("\n") else "\n")


# -- figures ---------------------------------------------------------------------------

def plot_roots(roots: list, path, title: str = ""):
    """Positive roots m1*alpha1 + m2*alpha2 drawn as arrows in the (m1, m2) lattice."""
    fig, ax = plt.subplots(figsize=(4.5, 4.5))
    top = max(max(a, b) for a, b in roots) + 1
    for a, b in roots:
        ax.annotate("", xy=(a, b), xytext=(0, 0),
                    arrowprops=dict(arrowstyle="->", lw=1.4, color="tab:blue"))
        ax.text(a + 0.08, b + 0.08, f"({a},{b})", fontsize=9)
    ax.set_xlim(-0.3, top + 0.3)
    ax.set_ylim(-0.3, top + 0.3)
    ax.set_xticks(range(top + 1))
    ax.set_yticks(range(top + 1))
    ax.grid(True, lw=0.4, alpha=0.5)
    ax.set_aspect("equal")
    ax.set_xlabel("coefficient of α1")
    ax.set_ylabel("coefficient of α2")
    ax.set_title(title or f"{len(roots)} positive roots")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def plot_coefficients(coeffs: dict, path, title: str = "", oracle: dict | None = None):
    """Heatmap of bigraded coefficients; cells checked by the oracle get a marker."""
    d1 = max(a for a, _ in coeffs)
    d2 = max(b for _, b in coeffs)
    grid = np.zeros((d2 + 1, d1 + 1))
    for (a, b), c in coeffs.items():
        grid[b, a] = c
    fig, ax = plt.subplots(figsize=(min(10, 2 + 0.35 * d1), min(8, 2 + 0.35 * d2)))
    im = ax.imshow(np.log10(grid + 1), origin="lower", cmap="viridis", aspect="auto")
    fig.colorbar(im, ax=ax, label="log10(1 + dim)")
    if oracle:
        for (a, b), ok in oracle.items():
            if a <= d1 and b <= d2:
                ax.plot(a, b, marker="o" if ok else "x", ms=4,
                        color="white" if ok else "red", ls="none")
    ax.set_xlabel("degree in t1")
    ax.set_ylabel("degree in t2")
    ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
