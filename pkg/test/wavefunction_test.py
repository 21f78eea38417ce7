"""
Tests of ground states, classification, residuals and energy ladders.
"""

from unittest import TestCase
from unittest.mock import patch

import numpy as np
import numpy.testing as npt
from scipy import integrate

from central_susy import (
    CentralPoschlTeller,
    CoulombRIndep,
    GeneralBessel,
    HarmonicG1,
    PhysicsConfig,
    RadialGrid,
    Status,
    UpsideDownGm1,
    classify,
    energy_ladder,
    f2_roots,
    ground_state,
    localization_constant,
    make_grid,
    residual_order,
    schrodinger_residual,
    w_tilde,
)
from central_susy.exceptions import (
    ConfigurationError,
    GridTooCoarseError,
    NormalizationError,
    RegimeError,
)
from central_susy.families import Asymptote
from central_susy.wavefunction import Measure, boundary_limit

CFG = PhysicsConfig()
FINE = RadialGrid(1e-3, 20.0, 4000)
COARSE = RadialGrid(1e-3, 20.0, 401)


def norm_integral(gs):
    weight = 2.0 if gs.measure is Measure.RADIAL else 0.0

    def integrand(r):
        return r ** weight * float(gs.radial(np.array([r]))[0]) ** 2

    head, _ = integrate.quad(integrand, 1e-12, 50.0, epsabs=0.0, epsrel=1e-11, limit=200)
    tail, _ = integrate.quad(integrand, 50.0, np.inf, epsabs=1e-14, limit=200)
    return head + tail


class ClassifyTest(TestCase):
    def test_unbroken(self):
        for fam in (HarmonicG1(1.0), CentralPoschlTeller(1.0), CoulombRIndep(1.0)):
            for ell in range(5):
                status = classify(fam, ell, CFG)
                assert status.status is Status.UNBROKEN, (fam, ell)
                assert [reason.u_limit for reason in status.reasons] == ["0", "0"]

    def test_sign_alternating(self):
        fam = UpsideDownGm1(omega=1.0)
        assert classify(fam, 0, CFG).status is Status.UNBROKEN
        odd = classify(fam, 1, CFG)
        assert odd.status is Status.BROKEN
        assert odd.reasons[1].u_limit == "inf"
        assert odd.reasons[1].w_tilde_limit == "-inf"
        assert odd.remainder > 0
        assert "negative remainder" in str(classify(fam, 2, CFG))

    def test_harmonic_offset(self):
        # u ~ r^(ℓ+1−C) at the origin
        status = classify(HarmonicG1(omega=1.0, C=1.5), 0, CFG)
        assert status.status is Status.BROKEN
        assert status.reasons[0].u_limit == "inf"
        status = classify(HarmonicG1(omega=1.0, C=1.0), 0, CFG)
        assert status.status is Status.BROKEN
        assert status.reasons[0].u_limit == "finite"
        assert classify(HarmonicG1(omega=1.0, C=0.5), 0, CFG).status is Status.UNBROKEN

    def test_spontaneously_broken(self):
        status = classify(GeneralBessel(G=3.0, R=0.0), 0, CFG)
        assert status.status is Status.SPONTANEOUSLY_BROKEN
        assert status.reasons == ()
        assert "isospectral" in str(status)

    def test_bessel_power_tail(self):
        status = classify(GeneralBessel(G=3.0, R=1.0), 0, CFG)
        assert status.status is Status.BROKEN
        assert not status.reasons[1].square_integrable

    def test_boundary_limits(self):
        origin = boundary_limit("origin", Asymptote("power", 3.0))
        assert (origin.u_limit, origin.w_tilde_limit) == ("0", "+inf")
        origin = boundary_limit("origin", Asymptote("power", 1.0))
        assert origin.w_tilde_limit == "finite"
        tail = boundary_limit("infinity", Asymptote("exponential", 2.0))
        assert (tail.u_limit, tail.w_tilde_limit, tail.square_integrable) == ("0", "+inf", True)
        tail = boundary_limit("infinity", Asymptote("power", -0.25))
        assert tail.u_limit == "0" and not tail.square_integrable
        with self.assertRaises(ConfigurationError):
            boundary_limit("origin", Asymptote("gaussian", 1.0))


class WTildeTest(TestCase):
    def test_poschl_teller(self):
        r = np.linspace(0.01, 10.0, 200)
        fam = CentralPoschlTeller(k0=1.0)
        for ell in (2, 6, 10):
            npt.assert_allclose(
                w_tilde(fam, ell, r), (ell + 2) * np.log(np.cosh(r)) - ell * np.log(r), rtol=1e-12
            )


class GroundStateTest(TestCase):
    def test_harmonic_radial_constant(self):
        cfg = PhysicsConfig(hbar=1.0, mass=1.0)
        gs = ground_state(HarmonicG1(omega=1.0), 0, FINE, cfg)
        assert gs.measure is Measure.RADIAL
        npt.assert_allclose(gs.N, 2.0 / np.pi ** 0.25, rtol=1e-9)

    def test_poschl_teller_plain_constants(self):
        fam = CentralPoschlTeller(k0=1.0)
        grid = RadialGrid(0.01, 6.0, 1000)
        for ell, expected in ((2, 5.76), (6, 42.24), (10, 255.01)):
            gs = ground_state(fam, ell, grid, CFG, measure="plain")
            assert gs.measure is Measure.PLAIN
            npt.assert_allclose(gs.N, expected, rtol=5e-3)

    def test_unit_norm(self):
        for fam, ell in (
            (CentralPoschlTeller(k0=1.0), 2),
            (CentralPoschlTeller(k0=0.5, C=0.3), 4),
            (CoulombRIndep(kappa=1.0), 1),
            (HarmonicG1(omega=2.0), 3),
        ):
            gs = ground_state(fam, ell, FINE, CFG)
            npt.assert_allclose(norm_integral(gs), 1.0, rtol=1e-8)
        gs = ground_state(CentralPoschlTeller(k0=1.0), 6, FINE, CFG, measure="plain")
        npt.assert_allclose(norm_integral(gs), 1.0, rtol=1e-8)

    def test_sampled_arrays(self):
        gs = ground_state(CentralPoschlTeller(k0=1.0), 2, FINE, CFG)
        npt.assert_array_equal(gs.r, FINE.points)
        npt.assert_allclose(gs.u, gs.r * gs.R_radial)
        npt.assert_allclose(gs.R_radial, gs.N * np.exp(-gs.W_tilde))

    def test_power_law_at_origin(self):
        grid = make_grid(1e-3, 20.0, 2000, "logarithmic")
        first_decade = grid.points[grid.points <= 1e-2]
        for fam in (HarmonicG1(1.0), CentralPoschlTeller(1.0), CoulombRIndep(1.0)):
            for ell in (0, 1, 3):
                gs = ground_state(fam, ell, grid, CFG)
                u = gs.reduced(first_decade)
                slope = np.polyfit(np.log(first_decade), np.log(u), 1)[0]
                npt.assert_allclose(slope, ell + 1.0, rtol=0.02, err_msg=repr((fam, ell)))

    def test_broken_refused(self):
        with self.assertRaises(NormalizationError) as ctx:
            ground_state(UpsideDownGm1(omega=1.0), 1, FINE, CFG)
        assert ctx.exception.status.status is Status.BROKEN
        with self.assertRaises(NormalizationError):
            ground_state(GeneralBessel(G=3.0, R=0.0), 0, FINE, CFG)

    def test_unknown_measure(self):
        with self.assertRaises(ConfigurationError):
            ground_state(HarmonicG1(omega=1.0), 0, FINE, CFG, measure="volume")


class ResidualTest(TestCase):
    def test_small_residual(self):
        cases = [
            (CentralPoschlTeller(k0=1.0), (2, 6, 10)),
            (HarmonicG1(omega=1.0), (0, 1, 2, 3)),
            (CoulombRIndep(kappa=1.0), (0, 2)),
            (UpsideDownGm1(omega=1.0), (0, 2)),
        ]
        for fam, ells in cases:
            for ell in ells:
                gs = ground_state(fam, ell, FINE, CFG)
                assert schrodinger_residual(gs, FINE, CFG) < 1e-6, (fam, ell)

    def test_fourth_order(self):
        cases = [
            (HarmonicG1(omega=1.0), (0, 1, 2)),
            (CentralPoschlTeller(k0=1.0), (2, 6, 10)),
        ]
        for fam, ells in cases:
            for ell in ells:
                gs = ground_state(fam, ell, COARSE, CFG)
                assert residual_order(gs, COARSE, CFG) > 3.5, (fam, ell)

    def test_independent_of_normalization(self):
        gs = ground_state(CentralPoschlTeller(k0=1.0), 2, COARSE, CFG)
        scaled = gs.with_normalization(7.0 * gs.N)
        npt.assert_allclose(
            schrodinger_residual(scaled, COARSE, CFG),
            schrodinger_residual(gs, COARSE, CFG),
            rtol=1e-6,
        )

    def test_wrong_potential_detected(self):
        gs = ground_state(CentralPoschlTeller(k0=1.0), 2, FINE, CFG)
        residual = schrodinger_residual(gs, FINE, CFG, family=CentralPoschlTeller(k0=1.01))
        assert residual > 1e-3

    def test_grid_requirements(self):
        gs = ground_state(CentralPoschlTeller(k0=1.0), 2, FINE, CFG)
        with self.assertRaises(ConfigurationError):
            schrodinger_residual(gs, make_grid(1e-3, 20.0, 400, "logarithmic"), CFG)
        with self.assertRaises(ConfigurationError):
            schrodinger_residual(gs, RadialGrid(1.0, 2.0, 4), CFG)

    def test_too_coarse(self):
        gs = ground_state(CentralPoschlTeller(k0=1.0), 2, COARSE, CFG)
        with patch("central_susy.wavefunction._residual", side_effect=[1e-3, 2e-3]):
            with self.assertRaises(GridTooCoarseError):
                schrodinger_residual(gs, COARSE, CFG, check_convergence=True)
        with patch("central_susy.wavefunction._residual", side_effect=[1e-3, 1e-4]):
            assert schrodinger_residual(gs, COARSE, CFG, check_convergence=True) == 1e-3


class EnergyLadderTest(TestCase):
    def test_coulomb(self):
        fam = CoulombRIndep(kappa=1.0)
        for ell in range(4):
            levels = energy_ladder(fam, ell, 8, CFG, physical=True)
            expected = [
                -CFG.mass / (2 * CFG.hbar ** 2) / (ell + n + 1.0) ** 2 for n in range(9)
            ]
            npt.assert_allclose(levels, expected, rtol=1e-12)

    def test_harmonic(self):
        levels = energy_ladder(HarmonicG1(omega=1.0), 1, 4, CFG)
        npt.assert_allclose(levels, [0.0, 2.0, 4.0, 6.0, 8.0])
        physical = energy_ladder(HarmonicG1(omega=1.0), 1, 2, CFG, physical=True)
        npt.assert_allclose(physical, [2.5, 4.5, 6.5])

    def test_poschl_teller(self):
        levels = energy_ladder(CentralPoschlTeller(k0=1.0), 0, 3, CFG)
        npt.assert_allclose(levels, [0.0, 3.0, 8.0, 15.0])

    def test_bad_level(self):
        with self.assertRaises(ConfigurationError):
            energy_ladder(HarmonicG1(omega=1.0), 0, -1, CFG)
        with self.assertRaises(ConfigurationError):
            energy_ladder(HarmonicG1(omega=1.0), 0, 1.5, CFG)


class LocalizationTest(TestCase):
    def test_node_at_five(self):
        C = localization_constant(1.0, 1.0, 5.0)
        roots = f2_roots(1.0, 1.0, C, 0.1, 10.0)
        assert np.min(np.abs(roots - 5.0)) < 1e-9

    def test_bessel_family_pole(self):
        C = localization_constant(1.0, 1.0, 5.0)
        fam = GeneralBessel(G=5.0, R=1.5, C=C)
        coef = fam.coefficients(0, CFG)
        npt.assert_allclose([coef.A_ell, coef.B_ell], [1.0, 1.0], rtol=1e-14)
        r = RadialGrid(0.1, 10.0, 991).points
        values = fam.evaluate(r, 0, CFG)
        i = int(np.argmin(np.abs(r - 5.0)))
        assert values.pole[i]
        assert np.any(np.abs(r[values.pole] - 5.0) < 1e-9)

    def test_bad_scale(self):
        with self.assertRaises(ConfigurationError):
            f2_roots(1.0, 0.0, 0.0, 0.1, 1.0)

    def test_node_on_zero_of_y(self):
        with patch("central_susy.specfun.bessel_y", return_value=0.0):
            with self.assertRaises(RegimeError):
                localization_constant(0.5, 1.0, 2.0)
