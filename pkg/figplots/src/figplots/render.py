"""Render the two comparison figures from the simulator's CSV files.

No physics is recomputed here: the CSV columns written by the `gravent`
CLI are the single source of numerical truth, and this package only
checks their headers and plots them.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

POTENTIAL_HEADER = ("r_m", "phi_newton_J_per_kg", "phi_idg_J_per_kg")
ENTROPY_HEADER = ("min_sep_m", "S_newton_bits", "S_idg_bits")

KINDS = {"potential": POTENTIAL_HEADER, "entropy": ENTROPY_HEADER}


@dataclass(frozen=True)
class FigureSpec:
    kind: str
    csv_path: str
    out_path: str

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown figure kind {self.kind!r}; expected one of {sorted(KINDS)}")
        suffix = Path(self.out_path).suffix.lower()
        if suffix not in (".svg", ".png"):
            raise ValueError(f"output must end in .svg or .png, got {self.out_path!r}")


def load_series(csv_path: str, expected_header) -> np.ndarray:
    """Parse a CLI CSV into a (rows, 3) float array, verifying the header."""
    path = Path(csv_path)
    if not path.is_file():
        raise ValueError(f"input CSV {csv_path} does not exist")
    lines = [line for line in path.read_text(encoding="utf-8").split("\n") if line.strip()]
    if not lines:
        raise ValueError(f"input CSV {csv_path} is empty")
    header = tuple(lines[0].split(","))
    if header != tuple(expected_header):
        raise ValueError(
            f"unexpected header in {csv_path}: {header}, wanted {tuple(expected_header)}"
        )
    if len(lines) < 2:
        raise ValueError(f"input CSV {csv_path} has a header but no data rows")
    try:
        data = np.array([[float(cell) for cell in line.split(",")] for line in lines[1:]])
    except ValueError as exc:
        raise ValueError(f"malformed numeric cell in {csv_path}: {exc}") from exc
    if data.shape[1] != len(expected_header):
        raise ValueError(f"wrong column count in {csv_path}")
    return data


def render(figure_spec: FigureSpec) -> str:
    """Write the requested figure; returns the output path."""
    data = load_series(figure_spec.csv_path, KINDS[figure_spec.kind])
    fig, ax = plt.subplots(figsize=(6.4, 4.2))
    try:
        if figure_spec.kind == "potential":
            ax.plot(data[:, 0], data[:, 1], label=r"$\Phi_{N}$ (Newtonian)", color="tab:blue")
            ax.plot(
                data[:, 0],
                data[:, 2],
                label=r"$\Phi_{IDG}$ (non-local)",
                color="tab:orange",
                linestyle="--",
            )
            ax.set_xscale("log")
            ax.set_xlabel("distance r (m)")
            ax.set_ylabel("potential energy per unit test mass (J/kg)")
            ax.set_title("Newtonian vs non-local gravitational potential")
        else:
            ax.plot(data[:, 0], data[:, 1], label=r"$S$, Newtonian", color="tab:blue")
            ax.plot(data[:, 0], data[:, 2], label=r"$S$, IDG", color="tab:orange", linestyle="--")
            ax.set_xlabel("minimum interferometer separation (m)")
            ax.set_ylabel("entanglement entropy (bits)")
            ax.set_title("Entropy vs minimum separation")
        ax.legend()
        ax.grid(True, alpha=0.3)
        fig.tight_layout()
        fig.savefig(figure_spec.out_path)
    finally:
        plt.close(fig)
    return figure_spec.out_path
