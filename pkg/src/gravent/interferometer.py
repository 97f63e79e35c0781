"""Geometry and phase evolution of the two adjacent matter-wave interferometers.

Each of the two masses is split into a near ('l'/'L') and a far ('r'/'R')
arm; the four branch combinations accumulate gravitational phases set by
their pair distances. Positions lie on a line: x_l = 0, x_r = delta_x,
x_L = d, x_R = d + delta_x, so the arm-pair distances are d, d + delta_x
and the minimum separation d - delta_x.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .potentials import PotentialModel, linearity_check, potential_per_unit_mass
from .units import CODATA, PhysicalConstants


@dataclass(frozen=True)
class ExperimentConfig:
    """Masses, geometry, interaction time and the active gravitational law.

    Defaults are the proposed experiment operating point: 1e-14 kg masses, 2.5e-4 m
    superposition, 2e-4 m minimum separation (d = 4.5e-4 m), 2.5 s.
    """

    mass_kg: float = 1e-14
    tau_s: float = 2.5
    d_m: float = 4.5e-4
    delta_x_m: float = 2.5e-4
    model: PotentialModel = field(default_factory=PotentialModel.newtonian)
    constants: PhysicalConstants = CODATA

    def __post_init__(self):
        if not self.mass_kg > 0.0:
            raise ValueError(f"mass must be positive, got {self.mass_kg}")
        if self.tau_s < 0.0:
            raise ValueError(f"interaction time must be non-negative, got {self.tau_s}")
        if self.delta_x_m < 0.0:
            raise ValueError(f"superposition size must be non-negative, got {self.delta_x_m}")
        if not self.d_m > self.delta_x_m:
            raise ValueError(
                f"arm distance d={self.d_m} must exceed the superposition size "
                f"delta_x={self.delta_x_m}"
            )
        if not linearity_check(self.model, self.d_m - self.delta_x_m, self.mass_kg, self.constants):
            raise ValueError("configuration leaves the weak-field regime at minimum separation")

    @property
    def min_separation_m(self) -> float:
        return self.d_m - self.delta_x_m


@dataclass(frozen=True)
class BranchGeometry:
    """Mass-mass distance for each of the four branch combinations."""

    r_lL: float
    r_lR: float
    r_rL: float
    r_rR: float

    def as_tuple(self) -> tuple[float, float, float, float]:
        return (self.r_lL, self.r_lR, self.r_rL, self.r_rR)


def branch_distances(config: ExperimentConfig) -> BranchGeometry:
    """Pair distances: r_lL = r_rR = d, r_lR = d + delta_x, r_rL = d - delta_x."""
    d = config.d_m
    dx = config.delta_x_m
    return BranchGeometry(r_lL=d, r_lR=d + dx, r_rL=d - dx, r_rR=d)


def branch_phase(r: float, config: ExperimentConfig) -> float:
    """Phase -m Phi(r) tau / hbar accumulated over the interaction time.

    Positive for an attractive potential; for the Newtonian model it equals
    G m^2 tau / (hbar r).
    """
    phi = potential_per_unit_mass(config.model, r, config.mass_kg, config.constants)
    return -config.mass_kg * phi * config.tau_s / config.constants.hbar


def evolve(config: ExperimentConfig) -> np.ndarray:
    """Joint two-qubit state after the interaction, basis (lL, lR, rL, rR).

    Amplitudes are e^{i phi(r_ab)} / 2; the opposite sign convention is a
    global conjugation that no entanglement measure can see.
    """
    geometry = branch_distances(config)
    phases = np.array([branch_phase(r, config) for r in geometry.as_tuple()])
    return 0.5 * np.exp(1j * phases)


def delta_phases(config: ExperimentConfig) -> tuple[float, float]:
    """Observable phase differences (dphi_LR, dphi_RL) against the common branch.

    dphi_LR = phi(d + delta_x) - phi(d) and dphi_RL = phi(d - delta_x) - phi(d).
    """
    phi_d = branch_phase(config.d_m, config)
    return (
        branch_phase(config.d_m + config.delta_x_m, config) - phi_d,
        branch_phase(config.d_m - config.delta_x_m, config) - phi_d,
    )


def residual_entangling_phase(config: ExperimentConfig) -> float:
    """The single phase Delta that controls all the generated entanglement.

    Delta = dphi_RL + dphi_LR; the evolved state is local-unitary
    equivalent to (|00> + |01> + |10> + e^{i Delta} |11>) / 2.
    """
    lr, rl = delta_phases(config)
    return lr + rl


def coherent_state_evolution(config: ExperimentConfig) -> tuple[float, np.ndarray]:
    """Evolution when both arms of each interferometer are populated at once.

    Every pair distance then contributes, including the two
    intra-interferometer separations r_lr = r_LR = delta_x, and the result
    is a single global phase on an unchanged product state: no entanglement
    is generated. Returns (global_phase, state).
    """
    if config.delta_x_m == 0.0:
        raise ValueError("coherent-state evolution needs a non-zero superposition size")
    geometry = branch_distances(config)
    pair_distances = list(geometry.as_tuple()) + [config.delta_x_m, config.delta_x_m]
    global_phase = sum(branch_phase(r, config) for r in pair_distances)
    state = np.exp(1j * global_phase) * np.full(4, 0.5, dtype=complex)
    return global_phase, state
