"""Closed-form gravitational potentials per unit test mass.

Two laws are supported: the standard Newtonian -G m / r and the
infinite-derivative-gravity (IDG) form -(G m / r) erf(M_s r / 2), which is
finite at the origin and indistinguishable from Newton beyond a few
non-local lengths 1/M_s. The error function is implemented here so the
potential evaluation does not pull in an external special-function stack.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .units import CODATA, PhysicalConstants, ev_to_inverse_meters

NEWTONIAN = "newtonian"
IDG = "idg"

_TWO_OVER_SQRT_PI = 2.0 / math.sqrt(math.pi)


@dataclass(frozen=True)
class PotentialModel:
    """Which gravitational law is active; ``ms`` is the non-locality scale in 1/m."""

    variant: str
    ms: float | None = None

    def __post_init__(self):
        if self.variant not in (NEWTONIAN, IDG):
            raise ValueError(f"unknown potential variant {self.variant!r}")
        if self.variant == IDG and not (self.ms is not None and self.ms > 0.0):
            raise ValueError("IDG requires a positive non-locality scale ms")

    @classmethod
    def newtonian(cls) -> "PotentialModel":
        return cls(NEWTONIAN)

    @classmethod
    def idg(cls, ms: float) -> "PotentialModel":
        return cls(IDG, ms=float(ms))

    @classmethod
    def idg_from_ev(cls, ms_ev: float, constants: PhysicalConstants = CODATA) -> "PotentialModel":
        """IDG model with the scale given as an energy in eV (e.g. 0.004)."""
        return cls.idg(ev_to_inverse_meters(ms_ev, constants))


def erf(x: float) -> float:
    """Error function, absolute error below 1e-14.

    Uses the scaled Maclaurin series (all terms positive, so no
    cancellation) for |x| < 3 and the Laplace continued fraction for the
    complement above.
    """
    x = float(x)
    if math.isnan(x):
        raise ValueError("erf is undefined for NaN input")
    if x == 0.0:
        return 0.0
    ax = abs(x)
    if ax < 3.0:
        return math.copysign(_erf_series(ax), x)
    return math.copysign(1.0 - _erfc_continued_fraction(ax), x)


def _erf_series(x: float) -> float:
    # erf(x) = (2/sqrt(pi)) x e^{-x^2} sum_n (2x^2)^n / (2n+1)!!
    q = 2.0 * x * x
    term = 1.0
    total = 1.0
    n = 0
    while term > 1e-18 * total:
        n += 1
        term *= q / (2 * n + 1)
        total += term
        if n > 300:
            raise RuntimeError(f"erf series failed to converge at x={x}")
    return _TWO_OVER_SQRT_PI * x * math.exp(-x * x) * total


def _erfc_continued_fraction(x: float) -> float:
    # erfc(x) = e^{-x^2}/sqrt(pi) * 1/(x+ (1/2)/(x+ (2/2)/(x+ ...))), x >= 3
    tiny = 1e-300
    f = tiny
    c = f
    d = 0.0
    for n in range(1, 300):
        a = 1.0 if n == 1 else (n - 1) / 2.0
        d = x + a * d
        if d == 0.0:
            d = tiny
        c = x + a / c
        if c == 0.0:
            c = tiny
        d = 1.0 / d
        delta = c * d
        f *= delta
        if abs(delta - 1.0) < 1e-16:
            break
    else:
        raise RuntimeError(f"erfc continued fraction failed to converge at x={x}")
    return math.exp(-x * x) / math.sqrt(math.pi) * f


def potential_per_unit_mass(
    model: PotentialModel,
    r: float,
    m_source: float,
    constants: PhysicalConstants = CODATA,
) -> float:
    """Gravitational potential in J/kg at distance r (m) from a point source (kg).

    Always negative; the IDG value is bounded in magnitude by the Newtonian
    one at equal r and tends to the finite plateau -G m M_s / sqrt(pi) as
    r -> 0 instead of diverging.
    """
    if not r > 0.0:
        raise ValueError(f"r must be positive, got {r}")
    if not m_source > 0.0:
        raise ValueError(f"source mass must be positive, got {m_source}")
    phi = -constants.G * m_source / r
    if model.variant == IDG:
        phi *= erf(0.5 * model.ms * r)
    return phi


def idg_plateau(m_source: float, ms: float, constants: PhysicalConstants = CODATA) -> float:
    """Small-r limit -G m M_s / sqrt(pi) of the IDG potential, in J/kg.

    Negative (attractive): the small-argument expansion of the erf form
    forces the sign, keeping the potential continuous at the origin.
    """
    if not m_source >= 0.0:
        raise ValueError(f"source mass must be non-negative, got {m_source}")
    if not ms > 0.0:
        raise ValueError(f"ms must be positive, got {ms}")
    return -constants.G * m_source * ms / math.sqrt(math.pi)


def linearity_check(
    model: PotentialModel,
    r: float,
    m_source: float,
    constants: PhysicalConstants = CODATA,
) -> bool:
    """True iff the dimensionless potential satisfies 2|Phi|/c^2 < 1 at r."""
    if not r > 0.0:
        raise ValueError(f"r must be positive, got {r}")
    if m_source == 0.0:
        return True
    phi = potential_per_unit_mass(model, r, m_source, constants)
    return 2.0 * abs(phi) / constants.c**2 < 1.0


def smeared_delta(x: float, alpha: float) -> float:
    """Gaussian profile (1/sqrt(2 alpha)) exp(-x^2 / (4 alpha)) in 1/m.

    This is a point source smeared over the scale sqrt(alpha); its integral
    over the whole line is sqrt(2 pi).
    """
    if not alpha > 0.0:
        raise ValueError(f"alpha must be positive, got {alpha}")
    return math.exp(-x * x / (4.0 * alpha)) / math.sqrt(2.0 * alpha)
