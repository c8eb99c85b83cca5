"""Report rendering: delimited chain/solution tables plus figures.

Writes CSV files with exact values (big integers and rationals as
strings) and matplotlib figures showing how fast the chain values and
the certified solutions grow.  The figures plot decimal digit counts,
since the values themselves leave floating-point range almost
immediately.
"""

from __future__ import annotations

import csv
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from .chain import ChainNode
from .exact import format_rational
from .solutions import IntegerSolution


def _digits(n: int) -> int:
    return len(str(abs(n))) if n else 1


def write_chain_csv(nodes: list[ChainNode], path: Path) -> None:
    with path.open("w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["index", "t", "u", "produced_by"])
        for node in nodes:
            writer.writerow(
                [node.index, format_rational(node.t), format_rational(node.u), node.produced_by]
            )


def write_solutions_csv(sols: list[IntegerSolution], path: Path) -> None:
    with path.open("w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["X", "Y", "R", "S", "a", "b"])
        for s in sols:
            writer.writerow([s.X, s.Y, s.R, s.S, s.a, s.b])


def plot_chain_growth(nodes: list[ChainNode], path: Path) -> None:
    """Digit counts of t and u numerators/denominators per chain index."""
    idx = [n.index for n in nodes]
    fig, ax = plt.subplots(figsize=(7, 4.5))
    ax.plot(idx, [_digits(n.t.numerator) for n in nodes], "o-", label="digits num(t)")
    ax.plot(idx, [_digits(n.t.denominator) for n in nodes], "s--", label="digits den(t)")
    ax.plot(idx, [_digits(n.u.numerator) for n in nodes], "^-", label="digits num(u)")
    ax.plot(idx, [_digits(n.u.denominator) for n in nodes], "v--", label="digits den(u)")
    ax.set_xlabel("chain index")
    ax.set_ylabel("decimal digits")
    ax.set_title("Growth of chain values")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def plot_solution_growth(sols: list[IntegerSolution], path: Path) -> None:
    """Digit counts of X, Y and the certificate roots a, b per solution."""
    idx = list(range(len(sols)))
    fig, ax = plt.subplots(figsize=(7, 4.5))
    ax.plot(idx, [_digits(s.X) for s in sols], "o-", label="digits X")
    ax.plot(idx, [_digits(s.Y) for s in sols], "s-", label="digits Y")
    ax.plot(idx, [_digits(s.a) for s in sols], "^--", label="digits a")
    ax.plot(idx, [_digits(s.b) for s in sols], "v--", label="digits b")
    ax.set_xlabel("solution index")
    ax.set_ylabel("decimal digits")
    ax.set_title("Growth of certified integer solutions")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def render_report(
    nodes: list[ChainNode], sols: list[IntegerSolution], out_dir: Path
) -> list[Path]:
    """Write all report artifacts into out_dir and return their paths."""
    out_dir.mkdir(parents=True, exist_ok=True)
    paths = [
        out_dir / "chain.csv",
        out_dir / "solutions.csv",
        out_dir / "chain_growth.png",
        out_dir / "solution_growth.png",
    ]
    write_chain_csv(nodes, paths[0])
    write_solutions_csv(sols, paths[1])
    plot_chain_growth(nodes, paths[2])
    plot_solution_growth(sols, paths[3])
    return paths
