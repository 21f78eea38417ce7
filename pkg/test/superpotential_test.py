"""
Tests of the full superpotential and the central potentials it implies.
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
    central_potential,
    central_w_family,
    central_w_general,
    centrifugal_potential,
    full_W,
    remainder_of,
)
from central_susy.exceptions import PoleError
from central_susy.specfun import cylinder_zeros

R = np.linspace(0.05, 10.0, 500)


class FullWTest(TestCase):
    def test_centrifugal_part(self):
        cfg = PhysicsConfig(hbar=1.0, mass=2.0)
        fam = CentralPoschlTeller(k0=0.8)
        sample = full_W(fam, 3, R, cfg)
        s = 1.0 / np.sqrt(4.0)
        npt.assert_allclose(sample.W, s * (sample.w - 4.0 / R))
        dw = fam.evaluate(R, 3, cfg).dw
        npt.assert_allclose(sample.W_prime, s * (dw + 4.0 / R ** 2))
        assert sample.ell == 3
        assert not sample.has_pole
        assert sample.first_pole is None
        assert sample.require_no_pole() is sample

    def test_scalar_radius(self):
        sample = full_W(HarmonicG1(omega=1.0), 0, 2.0)
        assert sample.r.shape == (1,)

    def test_general_only(self):
        with self.assertRaises(TypeError):
            central_w_general(HarmonicG1(omega=1.0), 0, R)
        sample = central_w_general(GeneralBessel(G=3.0, R=1.0), 0, np.array([0.5, 1.0]))
        npt.assert_allclose(
            sample.w, central_w_family(GeneralBessel(G=3.0, R=1.0), 0, np.array([0.5, 1.0])).w
        )

    def test_pole_sample(self):
        fam = GeneralBessel(G=3.0, R=1.0)
        coef = fam.coefficients(0, PhysicsConfig())
        zero = cylinder_zeros(coef.A_ell, 0.0, 0.5, 6.0)[0] / coef.B_ell
        sample = full_W(fam, 0, np.array([1.0, zero, 4.0 * zero]))
        assert sample.has_pole
        npt.assert_allclose(sample.first_pole, zero)
        assert np.isnan(sample.W[1])
        with self.assertRaises(PoleError) as ctx:
            sample.require_no_pole()
        npt.assert_allclose(ctx.exception.radius, zero)

    def test_remainder_of(self):
        npt.assert_allclose(remainder_of(CentralPoschlTeller(k0=1.0), 0), 3.0)


class CentralPotentialTest(TestCase):
    def test_centrifugal(self):
        npt.assert_allclose(centrifugal_potential(2, R), 6.0 / R ** 2)
        cfg = PhysicsConfig(hbar=2.0, mass=1.0)
        npt.assert_allclose(centrifugal_potential(1, R, cfg), 2.0 * 2.0 / R ** 2)

    def test_harmonic_is_oscillator(self):
        cfg = PhysicsConfig(hbar=1.0, mass=1.0)
        fam = HarmonicG1(omega=1.5)
        for ell in (0, 1, 4):
            npt.assert_allclose(
                central_potential(fam, ell, R, cfg), 0.5 * 1.5 ** 2 * R ** 2, rtol=1e-12, atol=1e-12
            )

    def test_coulomb(self):
        cfg = PhysicsConfig(hbar=1.0, mass=1.0)
        fam = CoulombRIndep(kappa=2.0)
        for ell in range(6):
            npt.assert_allclose(central_potential(fam, ell, R, cfg), -2.0 / R, rtol=1e-12)

    def test_poschl_teller(self):
        fam = CentralPoschlTeller(k0=1.0)
        ell = 2
        expected = -20.0 / np.cosh(R) ** 2 - 24.0 * np.tanh(R) / R
        npt.assert_allclose(central_potential(fam, ell, R), expected, rtol=1e-12, atol=1e-12)
