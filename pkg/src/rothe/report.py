"""Report path: delimited summary tables plus matplotlib figures on disk."""

from __future__ import annotations

import csv
import itertools
from pathlib import Path

from .counting import Classification, classify, count_avoiders, gf_coefficients
from .diagram import dots_of, rothe_diagram
from .perms import Permutation, count_reduced_words, length
from .render import render_diagram_figure
from .tableau import count_srt


def _write_avoider_outputs(out_dir: Path, max_n: int, workers: int) -> list[Path]:
    series = gf_coefficients(max_n)
    rows = []
    for n in range(1, max_n + 1):
        brute = count_avoiders(n, cap=max(max_n, 10), workers=workers)
        rows.append((n, brute, series[n - 1], brute == series[n - 1]))

    csv_path = out_dir / "avoiders.csv"
    with csv_path.open("w", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(["n", "brute_force", "series", "match"])
        writer.writerows(rows)

    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(5, 3.4))
    ns = [r[0] for r in rows]
    ax.semilogy(ns, [r[1] for r in rows], "o-", label="exhaustive scan")
    ax.semilogy(ns, [r[2] for r in rows], "x--", label="series coefficients")
    ax.set_xlabel("n")
    ax.set_ylabel("four-pattern avoiders in $S_n$")
    ax.legend()
    fig_path = out_dir / "avoiders.png"
    fig.savefig(fig_path, bbox_inches="tight", dpi=150)
    plt.close(fig)
    return [csv_path, fig_path]


def _write_count_outputs(out_dir: Path, max_n: int) -> list[Path]:
    rows = []
    for n in range(1, max_n + 1):
        for word in itertools.permutations(range(1, n + 1)):
            w = Permutation(word)
            rows.append(
                (
                    n,
                    str(w),
                    length(w),
                    count_srt(w),
                    count_reduced_words(w),
                    classify(w).value,
                )
            )

    csv_path = out_dir / "srt_vs_reduced.csv"
    with csv_path.open("w", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(["n", "perm", "length", "srt", "reduced_words", "class"])
        writer.writerows(rows)

    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(5, 4.2))
    for cls, marker, color in (
        (Classification.EQUALITY.value, "o", "#2c7fb8"),
        (Classification.STRICT.value, "x", "#d95f0e"),
    ):
        xs = [r[4] for r in rows if r[5] == cls]
        ys = [r[3] for r in rows if r[5] == cls]
        ax.loglog(xs, ys, marker, linestyle="", label=cls, color=color, alpha=0.6)
    lim = max(r[4] for r in rows)
    ax.loglog([1, lim], [1, lim], "-", color="0.6", linewidth=0.8)
    ax.set_xlabel("reduced words of $w$")
    ax.set_ylabel("standard Rothe tableaux of $w$")
    ax.legend()
    fig_path = out_dir / "srt_vs_reduced.png"
    fig.savefig(fig_path, bbox_inches="tight", dpi=150)
    plt.close(fig)
    return [csv_path, fig_path]


def _write_showcase(out_dir: Path) -> list[Path]:
    w = Permutation.from_text("426315")
    path = out_dir / "rothe_426315.png"
    render_diagram_figure(rothe_diagram(w), path, dots=dots_of(w))
    return [path]


def write_report(out_dir, max_n: int = 5, avoider_n: int = 8, workers: int = 1):
    """Write all report tables and figures; returns the created paths."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    paths = []
    paths += _write_count_outputs(out, max_n)
    paths += _write_avoider_outputs(out, avoider_n, workers)
    paths += _write_showcase(out)
    return paths
