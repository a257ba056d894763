"""Text grids and matplotlib figure rendering for diagrams and tableaux."""

from __future__ import annotations

from .diagram import Diagram, dots_of, rothe_diagram
from .perms import Permutation
from .tableau import Tableau


def diagram_text(D: Diagram, dots=None) -> str:
    """Grid with one character per column: cell, dot, or blank."""
    dots = frozenset(dots or ())
    lines = []
    for r in range(1, D.n + 1):
        row = []
        for c in range(1, D.n + 1):
            if (r, c) in D.cells:
                row.append("□")
            elif (r, c) in dots:
                row.append("·")
            else:
                row.append(" ")
        lines.append("".join(row).rstrip())
    return "\n".join(lines)


def rothe_text(w: Permutation) -> str:
    return diagram_text(rothe_diagram(w), dots_of(w))


def tableau_text(T: Tableau) -> str:
    """Human-readable grid of labels, gaps left blank."""
    if T.size == 0:
        return "(empty)"
    labels = T.labels
    max_row = max(r for r, _ in labels)
    max_col = max(c for _, c in labels)
    width = max(len(str(v)) for v in labels.values())
    lines = []
    for r in range(1, max_row + 1):
        row = []
        for c in range(1, max_col + 1):
            value = labels.get((r, c))
            row.append(str(value).rjust(width) if value is not None else " " * width)
        lines.append(" ".join(row).rstrip())
    return "\n".join(lines)


def _axes_for_grid(n):
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(max(2.0, 0.45 * n), max(2.0, 0.45 * n)))
    ax.set_xlim(0, n)
    ax.set_ylim(0, n)
    ax.invert_yaxis()
    ax.set_aspect("equal")
    ax.set_xticks(range(n + 1))
    ax.set_yticks(range(n + 1))
    ax.grid(True, linewidth=0.3, color="0.8")
    ax.tick_params(labelbottom=False, labelleft=False, length=0)
    return fig, ax


def render_diagram_figure(D: Diagram, path, dots=None, labels=None) -> None:
    """Draw a diagram (optionally with permutation dots and cell labels) to a file."""
    from matplotlib.patches import Rectangle

    fig, ax = _axes_for_grid(max(D.n, 1))
    for r, c in sorted(D.cells):
        ax.add_patch(
            Rectangle((c - 1, r - 1), 1, 1, facecolor="#9ecae1", edgecolor="black")
        )
        if labels and (r, c) in labels:
            ax.text(c - 0.5, r - 0.5, str(labels[(r, c)]), ha="center", va="center")
    for r, c in sorted(dots or ()):
        ax.plot(c - 0.5, r - 0.5, "ko", markersize=5)
    fig.savefig(path, bbox_inches="tight", dpi=150)
    _close(fig)


def render_tableau_figure(T: Tableau, path) -> None:
    render_diagram_figure(T.shape, path, labels=T.labels)


def _close(fig) -> None:
    import matplotlib.pyplot as plt

    plt.close(fig)
