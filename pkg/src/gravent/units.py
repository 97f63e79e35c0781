"""Physical constants (SI, plus eV-based lengths) shared by all modules."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class PhysicalConstants:
    """CODATA 2018 values. Override fields only for limit studies (e.g. G -> 0)."""

    G: float = 6.67430e-11         # m^3 kg^-1 s^-2
    hbar: float = 1.054571817e-34  # J s
    c: float = 2.99792458e8        # m/s
    hbar_c: float = 1.97326980e-7  # eV m


CODATA = PhysicalConstants()


def ev_to_inverse_meters(energy_ev: float, constants: PhysicalConstants = CODATA) -> float:
    """Convert an energy scale in eV to an inverse length in 1/m."""
    if not energy_ev > 0.0:
        raise ValueError(f"energy must be positive, got {energy_ev}")
    return energy_ev / constants.hbar_c


def ev_to_length(energy_ev: float, constants: PhysicalConstants = CODATA) -> float:
    """Length scale hbar*c / E in meters set by an energy scale in eV."""
    if not energy_ev > 0.0:
        raise ValueError(f"energy must be positive, got {energy_ev}")
    return constants.hbar_c / energy_ev
