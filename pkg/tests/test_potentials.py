import math

import numpy as np
import pytest
from scipy.integrate import quad

from gravent import (
    CODATA,
    PhysicalConstants,
    PotentialModel,
    erf,
    ev_to_inverse_meters,
    idg_plateau,
    linearity_check,
    potential_per_unit_mass,
    smeared_delta,
)

MS_REF = ev_to_inverse_meters(0.004)  # 2.0271e4 1/m


class TestErf:
    def test_zero(self):
        assert erf(0.0) == 0.0

    def test_saturates(self):
        assert abs(erf(6.0) - 1.0) < 1e-15
        assert abs(erf(-6.0) + 1.0) < 1e-15

    def test_frozen_value(self):
        # independent oracle: mpmath.erf('2.027') at 30 digits
        assert erf(2.027) == pytest.approx(0.995851072213988217, abs=1e-14)
        assert abs(erf(2.027) - 0.99586) < 2e-5  # matches the rounded quote

    def test_against_stdlib_grid(self):
        # math.erf is an independent libm implementation
        for x in np.concatenate(
            [np.linspace(-8, 8, 801), np.linspace(-0.01, 0.01, 101), [2.999999, 3.000001]]
        ):
            assert abs(erf(float(x)) - math.erf(float(x))) < 1e-14

    def test_odd_and_bounded(self, rng):
        for x in rng.uniform(-30, 30, size=200):
            assert erf(-x) == -erf(x)
            assert abs(erf(x)) < 1.0 or abs(x) > 5.9

    def test_monotone(self):
        # strictly increasing where float64 can resolve it, never decreasing
        grid = np.linspace(-6, 6, 500)
        values = [erf(float(x)) for x in grid]
        assert all(b >= a for a, b in zip(values, values[1:]))
        core = [erf(float(x)) for x in np.linspace(-4, 4, 500)]
        assert all(b > a for a, b in zip(core, core[1:]))

    def test_nan_rejected(self):
        with pytest.raises(ValueError):
            erf(float("nan"))


class TestPotentialModel:
    def test_idg_needs_positive_scale(self):
        with pytest.raises(ValueError):
            PotentialModel("idg")
        with pytest.raises(ValueError):
            PotentialModel.idg(-1.0)

    def test_unknown_variant(self):
        with pytest.raises(ValueError):
            PotentialModel("yukawa")


class TestPotential:
    def test_newtonian_hand_value(self):
        phi = potential_per_unit_mass(PotentialModel.newtonian(), 2e-4, 1e-14)
        assert phi == pytest.approx(-3.33715e-21, rel=1e-12)

    def test_idg_recovers_newtonian_far_out(self):
        # M_s r = 20 puts erf at its saturated value
        r = 20.0 / MS_REF
        newton = potential_per_unit_mass(PotentialModel.newtonian(), r, 1e-14)
        idg = potential_per_unit_mass(PotentialModel.idg(MS_REF), r, 1e-14)
        assert idg == pytest.approx(newton, rel=1e-6)

    def test_idg_small_r_plateau(self):
        # limit G m M_s / sqrt(pi), attractive
        phi = potential_per_unit_mass(PotentialModel.idg(MS_REF), 1e-10, 1e-14)
        assert phi == pytest.approx(-7.633159008408865e-21, rel=1e-6)
        assert phi == pytest.approx(idg_plateau(1e-14, MS_REF), rel=1e-6)

    def test_always_negative_and_idg_weaker(self, rng):
        model = PotentialModel.idg(MS_REF)
        for r in np.logspace(-8, 0, 60):
            newton = potential_per_unit_mass(PotentialModel.newtonian(), float(r), 1e-14)
            idg = potential_per_unit_mass(model, float(r), 1e-14)
            assert newton < 0 and idg < 0
            ratio = idg / newton  # equals erf(M_s r / 2)
            assert 0.0 < ratio <= 1.0
            if MS_REF * r / 2 < 5.0:  # below erf's float64 saturation
                assert ratio < 1.0

    def test_ratio_tends_to_one(self):
        model = PotentialModel.idg(MS_REF)
        r = 1.0  # far beyond the non-local range
        newton = potential_per_unit_mass(PotentialModel.newtonian(), r, 1e-14)
        idg = potential_per_unit_mass(model, r, 1e-14)
        assert idg / newton == pytest.approx(1.0, abs=1e-15)

    def test_one_percent_agreement_beyond_4_over_ms(self):
        model = PotentialModel.idg(MS_REF)
        for r in np.linspace(4.0 / MS_REF * 1.0001, 40.0 / MS_REF, 50):
            newton = potential_per_unit_mass(PotentialModel.newtonian(), float(r), 1e-14)
            idg = potential_per_unit_mass(model, float(r), 1e-14)
            assert abs(idg - newton) < 1e-2 * abs(newton)

    def test_idg_continuous_toward_origin(self):
        model = PotentialModel.idg(MS_REF)
        radii = np.logspace(-12, -5, 40)
        values = [potential_per_unit_mass(model, float(r), 1e-14) for r in radii]
        assert all(math.isfinite(v) for v in values)
        plateau = idg_plateau(1e-14, MS_REF)
        assert values[0] == pytest.approx(plateau, rel=1e-9)

    def test_domain_errors(self):
        with pytest.raises(ValueError):
            potential_per_unit_mass(PotentialModel.newtonian(), 0.0, 1e-14)
        with pytest.raises(ValueError):
            potential_per_unit_mass(PotentialModel.newtonian(), -1.0, 1e-14)
        with pytest.raises(ValueError):
            potential_per_unit_mass(PotentialModel.newtonian(), 1.0, 0.0)


class TestPlateau:
    def test_frozen_value(self):
        assert idg_plateau(1e-14, MS_REF) == pytest.approx(-7.633159008408865e-21, rel=1e-12)

    def test_linear_in_mass_and_scale(self):
        base = idg_plateau(1e-14, MS_REF)
        assert idg_plateau(0.0, MS_REF) == 0.0
        assert idg_plateau(1e-14, 2 * MS_REF) == pytest.approx(2 * base, rel=1e-15)
        assert idg_plateau(2e-14, MS_REF) == pytest.approx(2 * base, rel=1e-15)


class TestLinearity:
    def test_reference_configuration_is_linear(self):
        # 2 Phi / c^2 is about 7e-38 here
        assert linearity_check(PotentialModel.newtonian(), 2e-4, 1e-14)

    def test_solar_mass_at_1km_is_not(self):
        assert not linearity_check(PotentialModel.newtonian(), 1e3, 1.98892e30)

    def test_zero_mass_limit(self):
        assert linearity_check(PotentialModel.newtonian(), 1e-9, 0.0)


class TestSmearedDelta:
    def test_peak_value(self):
        alpha = 3.7e-9
        assert smeared_delta(0.0, alpha) == pytest.approx(1.0 / math.sqrt(2 * alpha), rel=1e-15)

    def test_even(self, rng):
        alpha = 1.3e-6
        for x in rng.normal(scale=1e-3, size=50):
            assert smeared_delta(x, alpha) == smeared_delta(-x, alpha)

    def test_integral_is_sqrt_2pi(self):
        # independent quadrature oracle over the whole line
        alpha = 2.1e-7
        value, _ = quad(lambda x: smeared_delta(x, alpha), -np.inf, np.inf)
        assert value == pytest.approx(math.sqrt(2 * math.pi), rel=1e-10)

    def test_alpha_must_be_positive(self):
        with pytest.raises(ValueError):
            smeared_delta(0.0, 0.0)
        with pytest.raises(ValueError):
            smeared_delta(0.0, -1e-9)


def test_g_to_zero_limit_gives_vanishing_potential():
    constants = PhysicalConstants(G=0.0)
    phi = potential_per_unit_mass(PotentialModel.newtonian(), 1e-4, 1e-14, constants)
    assert phi == 0.0
