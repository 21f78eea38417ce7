"""
Families of central superpotentials.

Each family is a :class:`~central_susy.model.Model` that knows its
central superpotential w(r,ℓ) and its analytic derivative, its
parameter-shift ratio G(ℓ) = g(ℓ+1)/g(ℓ), its remainder R_ℓ, the
antiderivative w̃ = ∫w dr, the energy shift built into V₁ and the
leading-order behaviour of the ground state u = r·exp(−W̃) at both ends
of [0, ∞).

Five families are provided:

* :class:`GeneralBessel`: the Bessel-function solution for G(ℓ) > 1
* :class:`HarmonicG1`: G = 1, the 3D harmonic oscillator
* :class:`UpsideDownGm1`: G = −1, sign-alternating remainder
* :class:`CentralPoschlTeller`: G = (ℓ+1)/(ℓ+2), tanh superpotential
* :class:`CoulombRIndep`: r-independent w, the Coulomb potential
"""

import logging
from abc import abstractmethod
from dataclasses import dataclass
from typing import Dict, List, Type, Union

import numpy as np
from scipy import integrate

from central_susy import specfun
from central_susy.config import PhysicsConfig
from central_susy.ell_maps import EllMap, as_ell_map
from central_susy.exceptions import ConfigurationError, DomainError, RegimeError
from central_susy.model import Model

logger = logging.getLogger(__name__)

ArrayLike = Union[float, np.ndarray]

POLE_THRESHOLD: float = 1e-12
"""A Bessel denominator D is a pole when |D| < POLE_THRESHOLD·(|numerator| + 1)."""


@dataclass(frozen=True)
class CentralValues:
    """w, w′ and a pole mask sampled on an array of radii."""

    r: np.ndarray
    w: np.ndarray
    dw: np.ndarray
    pole: np.ndarray


@dataclass(frozen=True)
class Asymptote:
    """
    Leading behaviour of u(r) = r·exp(−W̃(r,ℓ)) at one end of [0, ∞).

    ``kind`` is one of

    * ``"power"``: u ~ r**rate
    * ``"exponential"``: u ~ exp(−rate·r)
    * ``"gaussian"``: u ~ exp(−rate·r²)
    """

    kind: str
    rate: float


@dataclass(frozen=True)
class BesselCoefficients:
    """
    Order and scale of the Bessel solution.

    Args:
      A_ell (float): order A_ℓ (dimensionless)
      B_ell (float): scale B_ℓ (1/length)
    """

    A_ell: float
    B_ell: float


def coefficients(G: float, R_ell: float, ell: float, cfg: PhysicsConfig) -> BesselCoefficients:
    """
    A_ℓ = ((G−1)/(G+1))·(2ℓ+3)/2 and B_ℓ = √(((G−1)/(G+1))·2mR_ℓ/ħ²).

    Args:
      G (float): parameter-shift ratio G(ℓ), not −1
      R_ell (float): remainder R_ℓ
      ell (float): angular momentum
      cfg (PhysicsConfig): unit system

    Output:
      the coefficients; raises :class:`RegimeError` for G = −1 or when B
      would be imaginary
    """
    if G == -1:
        raise RegimeError("G(ell) = -1 makes the Bessel coefficients singular")
    ratio = (G - 1.0) / (G + 1.0)
    radicand = ratio * R_ell / cfg.hbar2_over_2m
    if radicand < 0:
        raise RegimeError(
            f"B_ell is imaginary for G={G}, R={R_ell}: ((G-1)/(G+1))*R_ell < 0"
        )
    return BesselCoefficients(A_ell=ratio * (2.0 * ell + 3.0) / 2.0, B_ell=np.sqrt(radicand))


def _positive(name: str, value: float) -> float:
    value = float(value)
    if not np.isfinite(value) or value <= 0:
        raise ConfigurationError(f"{name} must be positive, got {value}")
    return value


def _log_cosh(x: np.ndarray) -> np.ndarray:
    """ln cosh x without overflow."""
    ax = np.abs(x)
    return ax + np.log1p(np.exp(-2.0 * ax)) - np.log(2.0)


def as_radii(r: ArrayLike) -> np.ndarray:
    """Validate radii (all strictly positive) and return them as an array."""
    r = np.asarray(r, dtype=float)
    if np.any(~(r > 0)):
        raise DomainError("radii must be strictly positive")
    return r


class Family(Model):
    """
    Abstract class for a family of central superpotentials.
    """

    family_id: str = ""
    """Short name used on the command line and in reports."""

    @abstractmethod
    def G(self, ell: float) -> float:
        """Parameter-shift ratio G(ℓ) = g(ℓ+1)/g(ℓ)."""
        raise NotImplementedError  # pragma: no cover

    @abstractmethod
    def remainder(self, ell: float, cfg: PhysicsConfig) -> float:
        """The analytic remainder R_ℓ."""
        raise NotImplementedError  # pragma: no cover

    @abstractmethod
    def evaluate(self, r: ArrayLike, ell: float, cfg: PhysicsConfig) -> CentralValues:
        """w(r,ℓ) and the analytic w′(r,ℓ) on an array of radii."""
        raise NotImplementedError  # pragma: no cover

    @abstractmethod
    def w_tilde(self, r: ArrayLike, ell: float, cfg: PhysicsConfig) -> np.ndarray:
        """An antiderivative w̃(r,ℓ) = ∫w dr (additive constant is arbitrary)."""
        raise NotImplementedError  # pragma: no cover

    @abstractmethod
    def ground_energy(self, ell: float, cfg: PhysicsConfig) -> float:
        """E₀ℓ such that V₁(r,ℓ) = V(r) − E₀ℓ + V_Cef(r,ℓ)."""
        raise NotImplementedError  # pragma: no cover

    @abstractmethod
    def asymptotics(self, ell: float, cfg: PhysicsConfig) -> Dict[str, Asymptote]:
        """Leading behaviour of u at ``"origin"`` and ``"infinity"``."""
        raise NotImplementedError  # pragma: no cover


class HarmonicG1(Family):
    """
    G(ℓ) = 1: w(r) = (m/2ħ²)Rr + C/r with R = 2ħω, i.e. w = (mω/ħ)r + C/r.
    The central potential is ½mω²r².

    Args:
      omega (float): angular frequency, > 0
      C (float, optional): integration constant; default 0
    """

    family_id = "harmonic"
    prefix = "harmonic_"

    def __init__(self, omega: float, C: float = 0.0):
        self.omega = _positive("omega", omega)
        self.C = float(C)

    @property
    def parameter_names(self) -> List[str]:
        return ["omega", "C"]

    def _a(self, cfg: PhysicsConfig) -> float:
        return cfg.mass * self.omega / cfg.hbar

    def G(self, ell: float) -> float:
        return 1.0

    def remainder(self, ell: float, cfg: PhysicsConfig) -> float:
        return 2.0 * cfg.hbar * self.omega

    def evaluate(self, r: ArrayLike, ell: float, cfg: PhysicsConfig) -> CentralValues:
        r = as_radii(r)
        # (m/2ħ²)·R with R = 2ħω
        a = cfg.m_over_hbar2 / 2.0 * self.remainder(ell, cfg)
        w = a * r + self.C / r
        dw = a - self.C / r ** 2
        return CentralValues(r, w, dw, np.zeros(r.shape, dtype=bool))

    def w_tilde(self, r: ArrayLike, ell: float, cfg: PhysicsConfig) -> np.ndarray:
        r = as_radii(r)
        return cfg.m_over_hbar2 / 4.0 * self.remainder(ell, cfg) * r ** 2 + self.C * np.log(r)

    def ground_energy(self, ell: float, cfg: PhysicsConfig) -> float:
        return cfg.hbar * self.omega * (ell + 1.5 - self.C)

    def asymptotics(self, ell: float, cfg: PhysicsConfig) -> Dict[str, Asymptote]:
        return {
            "origin": Asymptote("power", ell + 1.0 - self.C),
            "infinity": Asymptote("gaussian", self._a(cfg) / 2.0),
        }


def parity(ell: float) -> int:
    """(−1)^ℓ for integer-valued ℓ; half-integer ℓ is a regime error."""
    if abs(ell - round(ell)) > 1e-12:
        raise RegimeError(f"(-1)^ell needs an integer ell, got {ell}")
    return -1 if int(round(ell)) % 2 else 1


class UpsideDownGm1(Family):
    """
    G(ℓ) = −1: w(r,ℓ) = (−1)^ℓ (mω/ħ) r, so that g(ℓ+1) = −g(ℓ).

    The remainder R_ℓ = −(−1)^ℓ (2ℓ+3) ħω is negative for even ℓ and
    positive for odd ℓ; successive remainders satisfy
    R_{ℓ+1}/R_ℓ = −(2ℓ+5)/(2ℓ+3).

    Args:
      omega (float): angular frequency, > 0
    """

    family_id = "updown"
    prefix = "updown_"

    def __init__(self, omega: float):
        self.omega = _positive("omega", omega)

    @property
    def parameter_names(self) -> List[str]:
        return ["omega"]

    def _a(self, cfg: PhysicsConfig) -> float:
        return cfg.mass * self.omega / cfg.hbar

    def G(self, ell: float) -> float:
        return -1.0

    def remainder(self, ell: float, cfg: PhysicsConfig) -> float:
        return -parity(ell) * (2.0 * ell + 3.0) * cfg.hbar * self.omega

    def evaluate(self, r: ArrayLike, ell: float, cfg: PhysicsConfig) -> CentralValues:
        r = as_radii(r)
        slope = parity(ell) * self._a(cfg)
        return CentralValues(
            r, slope * r, np.full(r.shape, slope), np.zeros(r.shape, dtype=bool)
        )

    def w_tilde(self, r: ArrayLike, ell: float, cfg: PhysicsConfig) -> np.ndarray:
        r = as_radii(r)
        return parity(ell) * self._a(cfg) / 2.0 * r ** 2

    def ground_energy(self, ell: float, cfg: PhysicsConfig) -> float:
        return parity(ell) * cfg.hbar * self.omega * (ell + 1.5)

    def asymptotics(self, ell: float, cfg: PhysicsConfig) -> Dict[str, Asymptote]:
        return {
            "origin": Asymptote("power", ell + 1.0),
            "infinity": Asymptote("gaussian", parity(ell) * self._a(cfg) / 2.0),
        }


class CentralPoschlTeller(Family):
    """
    G(ℓ) = (ℓ+1)/(ℓ+2): w(r,ℓ) = k_{0ℓ}(ℓ+2)·tanh(k_{0ℓ}(r+C)) with
    R_ℓ = (ħ²k²_{0ℓ}/2m)(2ℓ+3).

    Args:
      k0 (Union[float, EllMap]): wave number k_{0ℓ} > 0, constant or a map
      C (float, optional): length offset; default 0
    """

    family_id = "cpt"
    prefix = "cpt_"

    def __init__(self, k0: Union[float, EllMap], C: float = 0.0):
        self.k0 = as_ell_map(k0)
        self.C = float(C)

    @property
    def parameter_names(self) -> List[str]:
        return ["k0", "C"]

    def wave_number(self, ell: float) -> float:
        return _positive("k0", self.k0(ell))

    def G(self, ell: float) -> float:
        return (ell + 1.0) / (ell + 2.0)

    def remainder(self, ell: float, cfg: PhysicsConfig) -> float:
        k = self.wave_number(ell)
        return cfg.hbar2_over_2m * k ** 2 * (2.0 * ell + 3.0)

    def evaluate(self, r: ArrayLike, ell: float, cfg: PhysicsConfig) -> CentralValues:
        r = as_radii(r)
        k = self.wave_number(ell)
        x = k * (r + self.C)
        w = k * (ell + 2.0) * np.tanh(x)
        dw = k ** 2 * (ell + 2.0) / np.cosh(x) ** 2
        return CentralValues(r, w, dw, np.zeros(r.shape, dtype=bool))

    def w_tilde(self, r: ArrayLike, ell: float, cfg: PhysicsConfig) -> np.ndarray:
        r = as_radii(r)
        return (ell + 2.0) * _log_cosh(self.wave_number(ell) * (r + self.C))

    def ground_energy(self, ell: float, cfg: PhysicsConfig) -> float:
        return -cfg.hbar2_over_2m * self.wave_number(ell) ** 2 * (ell + 2.0) ** 2

    def asymptotics(self, ell: float, cfg: PhysicsConfig) -> Dict[str, Asymptote]:
        return {
            "origin": Asymptote("power", ell + 1.0),
            "infinity": Asymptote("exponential", (ell + 2.0) * self.wave_number(ell)),
        }


class CoulombRIndep(Family):
    """
    r-independent central superpotential w(ℓ) = (ℓ+2)√(2mR_ℓ/(ħ²(2ℓ+3)))
    with the remainder chosen as

    R_ℓ = (m(2ℓ+3)/2ħ²)·(κ/((ℓ+1)(ℓ+2)))²,

    which gives w(ℓ) = (m/ħ²)κ/(ℓ+1) and the Coulomb potential −κ/r.

    Args:
      kappa (float): Coulomb strength Z₁Z₂e²/(4πε₀), > 0
    """

    family_id = "coulomb"
    prefix = "coulomb_"

    def __init__(self, kappa: float):
        self.kappa = _positive("kappa", kappa)

    @property
    def parameter_names(self) -> List[str]:
        return ["kappa"]

    @staticmethod
    def _check_ell(ell: float) -> None:
        if ell <= -1:
            raise RegimeError(f"the Coulomb family needs ell > -1, got {ell}")

    def G(self, ell: float) -> float:
        return (ell + 1.0) / (ell + 2.0)

    def remainder(self, ell: float, cfg: PhysicsConfig) -> float:
        self._check_ell(ell)
        return (
            cfg.mass * (2.0 * ell + 3.0) / (2.0 * cfg.hbar ** 2)
            * (self.kappa / ((ell + 1.0) * (ell + 2.0))) ** 2
        )

    def w_value(self, ell: float, cfg: PhysicsConfig) -> float:
        R = self.remainder(ell, cfg)
        return (ell + 2.0) * np.sqrt(R / (cfg.hbar2_over_2m * (2.0 * ell + 3.0)))

    def evaluate(self, r: ArrayLike, ell: float, cfg: PhysicsConfig) -> CentralValues:
        r = as_radii(r)
        return CentralValues(
            r,
            np.full(r.shape, self.w_value(ell, cfg)),
            np.zeros(r.shape),
            np.zeros(r.shape, dtype=bool),
        )

    def w_tilde(self, r: ArrayLike, ell: float, cfg: PhysicsConfig) -> np.ndarray:
        return self.w_value(ell, cfg) * as_radii(r)

    def ground_energy(self, ell: float, cfg: PhysicsConfig) -> float:
        self._check_ell(ell)
        return -cfg.mass / (2.0 * cfg.hbar ** 2) * (self.kappa / (ell + 1.0)) ** 2

    def asymptotics(self, ell: float, cfg: PhysicsConfig) -> Dict[str, Asymptote]:
        return {
            "origin": Asymptote("power", ell + 1.0),
            "infinity": Asymptote("exponential", self.w_value(ell, cfg)),
        }


class GeneralBessel(Family):
    """
    The general central superpotential for G(ℓ) > 1 and R_ℓ > 0:

    w(r,ℓ) = (B_ℓ/(G−1))·Z(A_ℓ+1, B_ℓr)/Z(A_ℓ, B_ℓr)

    with the cylinder function Z(ν, x) = J(ν, x) + C·Y(ν, x).

    R_ℓ = 0 is allowed and gives w ≡ 0, the free particle.

    Args:
      G (Union[float, EllMap]): parameter-shift ratio G(ℓ)
      R (Union[float, EllMap]): remainder R_ℓ
      C (float, optional): integration constant; default 0
    """

    family_id = "general"
    prefix = "general_"

    def __init__(
        self, G: Union[float, EllMap], R: Union[float, EllMap], C: float = 0.0
    ):
        self.G_map = as_ell_map(G)
        self.R_map = as_ell_map(R)
        self.C = float(C)

    @property
    def parameter_names(self) -> List[str]:
        return ["G", "R", "C"]

    @property
    def parameters(self):
        return {"G": self.G_map, "R": self.R_map, "C": self.C}

    def G(self, ell: float) -> float:
        return self.G_map(ell)

    def _check_regime(self, ell: float) -> None:
        G, R = self.G_map(ell), self.R_map(ell)
        if not G > 1:
            raise RegimeError(f"the Bessel solution needs G(ell) > 1, got G={G} at ell={ell}")
        if R < 0:
            raise RegimeError(f"the Bessel solution needs R_ell >= 0, got R={R} at ell={ell}")

    def remainder(self, ell: float, cfg: PhysicsConfig) -> float:
        return self.R_map(ell)

    def is_free(self, ell: float) -> bool:
        """R_ℓ = 0: B_ℓ = 0 and w vanishes identically."""
        return self.R_map(ell) == 0

    def coefficients(self, ell: float, cfg: PhysicsConfig) -> BesselCoefficients:
        coef = coefficients(self.G_map(ell), self.R_map(ell), ell, cfg)
        self._check_regime(ell)
        return coef

    def evaluate(self, r: ArrayLike, ell: float, cfg: PhysicsConfig) -> CentralValues:
        r = as_radii(r)
        coef = self.coefficients(ell, cfg)
        if self.is_free(ell):
            zeros = np.zeros(r.shape)
            return CentralValues(r, zeros, zeros.copy(), np.zeros(r.shape, dtype=bool))
        A, B, C = coef.A_ell, coef.B_ell, self.C
        scale = B / (self.G_map(ell) - 1.0)
        x = B * r
        num = specfun.cylinder(A + 1.0, x, C)
        den = specfun.cylinder(A, x, C)
        dnum = specfun.cylinder_derivative(A + 1.0, x, C)
        dden = specfun.cylinder_derivative(A, x, C)
        pole = np.abs(den) < POLE_THRESHOLD * (np.abs(num) + 1.0)
        with np.errstate(divide="ignore", invalid="ignore"):
            w = scale * num / den
            dw = scale * B * (dnum * den - num * dden) / den ** 2
        w = np.where(pole, np.nan, w)
        dw = np.where(pole, np.nan, dw)
        return CentralValues(r, w, dw, pole)

    def w_tilde(self, r: ArrayLike, ell: float, cfg: PhysicsConfig) -> np.ndarray:
        """
        w̃ = (A_ℓ ln r − ln|J(A_ℓ, B_ℓr) + C·Y(A_ℓ, B_ℓr)|)/(G−1), which is
        +∞ at the poles of w.
        """
        r = as_radii(r)
        coef = self.coefficients(ell, cfg)
        if self.is_free(ell):
            return np.zeros(r.shape)
        x = coef.B_ell * r
        num = specfun.cylinder(coef.A_ell + 1.0, x, self.C)
        den = specfun.cylinder(coef.A_ell, x, self.C)
        pole = np.abs(den) < POLE_THRESHOLD * (np.abs(num) + 1.0)
        with np.errstate(divide="ignore"):
            value = (coef.A_ell * np.log(r) - np.log(np.abs(den))) / (self.G_map(ell) - 1.0)
        return np.where(pole, np.inf, value)

    def w_tilde_quadrature(
        self,
        r: ArrayLike,
        ell: float,
        cfg: PhysicsConfig,
        reference: float = 1.0,
    ) -> np.ndarray:
        """
        ∫_reference^r w dr by adaptive quadrature, accumulated along the
        sorted radii so each integral spans only a short interval. Valid
        only on a pole-free interval containing ``reference``.

        This is the independent check of the closed form :meth:`w_tilde`:
        the two agree up to the constant w̃(reference). It is slow and is
        not used on the evaluation path.
        """
        r = as_radii(r)
        if self.is_free(ell):
            self._check_regime(ell)
            return np.zeros(r.shape)
        flat = np.atleast_1d(r).ravel()
        order = np.argsort(flat)
        knots = np.concatenate(([reference], flat[order]))
        knots.sort(kind="stable")
        start = int(np.searchsorted(knots, reference))

        def integrand(t: float) -> float:
            values = self.evaluate(np.array([t]), ell, cfg)
            return float(values.w[0])

        cumulative = np.zeros(knots.size)
        for i in range(start + 1, knots.size):
            piece, _ = integrate.quad(
                integrand, knots[i - 1], knots[i], epsabs=0.0, epsrel=1e-12
            )
            cumulative[i] = cumulative[i - 1] + piece
        for i in range(start - 1, -1, -1):
            piece, _ = integrate.quad(
                integrand, knots[i], knots[i + 1], epsabs=0.0, epsrel=1e-12
            )
            cumulative[i] = cumulative[i + 1] - piece
        out = np.empty(flat.size)
        out[order] = np.interp(flat[order], knots, cumulative)
        return out.reshape(np.shape(r))

    def ground_energy(self, ell: float, cfg: PhysicsConfig) -> float:
        # no closed form separates V from E₀ℓ; the whole V₁ − V_Cef is reported
        return 0.0

    def asymptotics(self, ell: float, cfg: PhysicsConfig) -> Dict[str, Asymptote]:
        coef = self.coefficients(ell, cfg)
        q = self.G_map(ell) - 1.0
        if self.C == 0:
            origin = ell + 1.0
        else:
            origin = ell + 1.0 - 2.0 * coef.A_ell / q
        infinity = ell + 1.0 - coef.A_ell / q - 0.5 / q
        return {"origin": Asymptote("power", origin), "infinity": Asymptote("power", infinity)}


FAMILIES: Dict[str, Type[Family]] = {
    cls.family_id: cls
    for cls in (GeneralBessel, HarmonicG1, UpsideDownGm1, CentralPoschlTeller, CoulombRIndep)
}
"""Family classes keyed by :attr:`Family.family_id`."""
