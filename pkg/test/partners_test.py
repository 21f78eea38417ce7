"""
Tests of the superpartner potentials and shape invariance.
"""

from unittest import TestCase

import numpy as np
import numpy.testing as npt

from central_susy import (
    CentralPoschlTeller,
    CoulombRIndep,
    GeneralBessel,
    HarmonicG1,
    PhysicsConfig,
    RadialGrid,
    Tolerances,
    UpsideDownGm1,
    erratum_report,
    full_W,
    partners_closed_form,
    partners_from_W,
    remainder_profile,
    shape_invariance_check,
)
from central_susy.exceptions import PoleError
from central_susy.specfun import cylinder_zeros

CFG = PhysicsConfig()
GRID = RadialGrid(1e-2, 20.0, 1000)
ANALYTIC = [
    HarmonicG1(omega=1.0),
    HarmonicG1(omega=0.7, C=0.3),
    UpsideDownGm1(omega=1.0),
    CentralPoschlTeller(k0=1.0),
    CentralPoschlTeller(k0=0.6, C=0.4),
    CoulombRIndep(kappa=1.0),
]


class PartnersFromWTest(TestCase):
    def test_difference_is_derivative(self):
        s = CFG.sqrt_prefactor
        for fam in ANALYTIC:
            pair = partners_from_W(fam, 2, GRID, CFG)
            W_prime = full_W(fam, 2, GRID.points, CFG).W_prime
            npt.assert_allclose(pair.V2 - pair.V1, 2.0 * s * W_prime, rtol=1e-11)

    def test_centrifugal_coefficients(self):
        grid = RadialGrid(1e-4, 1e-3, 50)
        r = grid.points
        # a C/r term in w changes the 1/r² coefficient
        regular = [f for f in ANALYTIC if not (isinstance(f, HarmonicG1) and f.C != 0)]
        for fam in regular:
            for ell in (0, 1, 2, 5):
                pair = partners_from_W(fam, ell, grid, CFG)
                # r²V/(ħ²/2m) = a + b·r + c·r² near the origin
                a1 = np.polyfit(r, r ** 2 * pair.V1 / CFG.hbar2_over_2m, 2)[-1]
                a2 = np.polyfit(r, r ** 2 * pair.V2 / CFG.hbar2_over_2m, 2)[-1]
                npt.assert_allclose(a1, ell * (ell + 1.0), rtol=1e-6, atol=1e-6)
                npt.assert_allclose(a2, (ell + 1.0) * (ell + 2.0), rtol=1e-6, atol=1e-6)

    def test_pole_raises(self):
        fam = GeneralBessel(G=3.0, R=1.0)
        coef = fam.coefficients(0, CFG)
        zero = cylinder_zeros(coef.A_ell, 0.0, 0.5, 6.0)[0] / coef.B_ell
        grid = RadialGrid(zero - 1.0, zero + 1.0, 3)
        with self.assertRaises(PoleError) as ctx:
            partners_from_W(fam, 0, grid, CFG)
        npt.assert_allclose(ctx.exception.radius, zero, rtol=1e-12)


class ShapeInvarianceTest(TestCase):
    def test_analytic_families(self):
        tol = Tolerances()
        for fam in ANALYTIC:
            for ell in range(7):
                report = shape_invariance_check(fam, ell, GRID, CFG, tol)
                assert report.passed, (fam, ell, report.rel_deviation)
                assert report.agrees_with_analytic(1e-8), (fam, ell, report.R_inferred)

    def test_known_remainders(self):
        report = shape_invariance_check(CentralPoschlTeller(k0=1.0), 0, GRID, CFG)
        npt.assert_allclose(report.R_inferred, 3.0, rtol=1e-10)
        report = shape_invariance_check(UpsideDownGm1(omega=1.0), 1, GRID, CFG)
        npt.assert_allclose(report.R_inferred, 5.0, rtol=1e-10)
        report = shape_invariance_check(HarmonicG1(omega=1.0), 3, GRID, CFG)
        npt.assert_allclose(report.R_inferred, 2.0, rtol=1e-10)

    def test_general_bessel(self):
        fam = GeneralBessel(G=3.0, R=1.0)
        grid = RadialGrid(0.05, 4.0, 500)
        report = shape_invariance_check(fam, 0, grid, CFG)
        assert report.passed
        npt.assert_allclose(report.R_inferred, 1.0, rtol=1e-8)

    def test_perturbed_k0_fails(self):
        fam = CentralPoschlTeller(k0=1.0)
        report = shape_invariance_check(
            fam, 2, GRID, CFG, v2_family=CentralPoschlTeller(k0=1.01)
        )
        assert not report.passed
        assert report.rel_deviation > 1e-4

    def test_tolerance_controls_verdict(self):
        fam = CentralPoschlTeller(k0=1.0)
        loose = Tolerances(rel_constancy=1.0)
        report = shape_invariance_check(
            fam, 2, GRID, CFG, loose, v2_family=CentralPoschlTeller(k0=1.01)
        )
        assert report.passed


class RemainderProfileTest(TestCase):
    def test_constant_profile(self):
        for fam in ANALYTIC:
            profile = remainder_profile(fam, 1, GRID, CFG)
            assert profile.index.name == "r"
            assert len(profile) == len(GRID)
            npt.assert_allclose(profile.to_numpy(), fam.remainder(1, CFG), rtol=1e-9)

    def test_general_bessel_profile(self):
        fam = GeneralBessel(G=3.0, R=1.0)
        profile = remainder_profile(fam, 0, RadialGrid(0.05, 4.0, 300), CFG)
        npt.assert_allclose(profile.to_numpy(), 1.0, rtol=1e-9)
        fam = GeneralBessel(G=2.0, R=0.5, C=-0.2)
        profile = remainder_profile(fam, 1, RadialGrid(0.05, 2.0, 300), CFG)
        npt.assert_allclose(profile.to_numpy(), 0.5, rtol=1e-8)


class ClosedFormTest(TestCase):
    def test_matches_construction(self):
        for fam in ANALYTIC:
            for ell in (0, 1, 2, 5):
                pair = partners_from_W(fam, ell, GRID, CFG)
                V1, V2 = partners_closed_form(fam, ell, pair.r, CFG)
                scale = max(np.max(np.abs(pair.V1)), 1.0)
                npt.assert_allclose(V1, pair.V1, rtol=0, atol=1e-9 * scale)
                scale = max(np.max(np.abs(pair.V2)), 1.0)
                npt.assert_allclose(V2, pair.V2, rtol=0, atol=1e-9 * scale)

    def test_printed_forms_that_are_exact(self):
        for fam in (HarmonicG1(omega=1.0), CoulombRIndep(kappa=1.0)):
            ok = partners_closed_form(fam, 2, GRID.points, CFG)
            printed = partners_closed_form(fam, 2, GRID.points, CFG, as_printed=True)
            npt.assert_array_equal(ok[0], printed[0])
            npt.assert_array_equal(ok[1], printed[1])


class ErratumReportTest(TestCase):
    def test_report(self):
        families = [
            HarmonicG1(omega=1.0),
            UpsideDownGm1(omega=1.0),
            CentralPoschlTeller(k0=1.0),
            CoulombRIndep(kappa=1.0),
        ]
        with self.assertLogs("central_susy.partners", level="WARNING"):
            report = erratum_report(families, [0, 1, 2], GRID, CFG)
        assert list(report.columns) == [
            "family", "ell", "potential", "max_abs_diff", "max_rel_diff",
            "constant_offset", "erratum",
        ]
        assert len(report) == 4 * 3 * 2
        flagged = report.groupby("family")["erratum"].any()
        assert not flagged["harmonic"]
        assert not flagged["coulomb"]
        assert flagged["updown"]
        assert flagged["cpt"]

    def test_sign_alternating_offset(self):
        report = erratum_report([UpsideDownGm1(omega=1.0)], [0, 1], GRID, CFG)
        v1 = report[report["potential"] == "V1"].set_index("ell")["constant_offset"]
        # printed +(−1)^ℓ ħω(ℓ+3/2) against the constructed −(−1)^ℓ ħω(ℓ+3/2)
        npt.assert_allclose(v1[0.0], 3.0, rtol=1e-9)
        npt.assert_allclose(v1[1.0], -5.0, rtol=1e-9)
