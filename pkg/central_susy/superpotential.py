"""
The full superpotential W(r,ℓ) = (ħ/√2m)(w(r,ℓ) − (ℓ+1)/r) built from a
family's central superpotential w and the centrifugal superpotential
−(ℓ+1)/r.
"""

import logging
from dataclasses import dataclass
from typing import Optional, Union

import numpy as np

from central_susy.config import PhysicsConfig
from central_susy.exceptions import PoleError
from central_susy.families import (  # noqa: F401
    POLE_THRESHOLD,
    BesselCoefficients,
    CentralValues,
    Family,
    GeneralBessel,
    coefficients,
)

logger = logging.getLogger(__name__)

ArrayLike = Union[float, np.ndarray]


@dataclass(frozen=True)
class SuperpotentialSample:
    """
    w, W and W′ sampled on an array of radii.

    Args:
      ell (float): angular momentum used for the centrifugal part
      r (np.ndarray): radii
      w (np.ndarray): central superpotential (1/length)
      W (np.ndarray): full superpotential (√energy)
      W_prime (np.ndarray): dW/dr (√energy/length)
      pole (np.ndarray): True where w has a pole; w, W and W′ are NaN there
    """

    ell: float
    r: np.ndarray
    w: np.ndarray
    W: np.ndarray
    W_prime: np.ndarray
    pole: np.ndarray

    @property
    def has_pole(self) -> bool:
        return bool(np.any(self.pole))

    @property
    def first_pole(self) -> Optional[float]:
        """Smallest flagged radius, or None."""
        if not self.has_pole:
            return None
        return float(self.r[self.pole].min())

    def require_no_pole(self) -> "SuperpotentialSample":
        """Returns ``self``; raises :class:`PoleError` if any sample is a pole."""
        if self.has_pole:
            raise PoleError(self.first_pole)
        return self


def compose(
    values: CentralValues, ell: float, cfg: PhysicsConfig
) -> SuperpotentialSample:
    """
    Attach the centrifugal superpotential to sampled central values:
    W = s(w − (ℓ+1)/r), W′ = s(w′ + (ℓ+1)/r²) with s = ħ/√2m.
    """
    s = cfg.sqrt_prefactor
    r = values.r
    W = s * (values.w - (ell + 1.0) / r)
    W_prime = s * (values.dw + (ell + 1.0) / r ** 2)
    return SuperpotentialSample(ell, r, values.w, W, W_prime, values.pole)


def central_w_general(
    fam: GeneralBessel, ell: float, r: ArrayLike, cfg: PhysicsConfig = PhysicsConfig()
) -> SuperpotentialSample:
    """
    Evaluate the Bessel central superpotential.

    Args:
      fam (GeneralBessel): the family
      ell (float): angular momentum
      r (Union[float, np.ndarray]): radii, > 0
      cfg (PhysicsConfig, optional): unit system

    Output:
      the sample; poles are flagged, not raised
    """
    if not isinstance(fam, GeneralBessel):
        raise TypeError(f"expected GeneralBessel, got {type(fam).__name__}")
    return central_w_family(fam, ell, r, cfg)


def central_w_family(
    fam: Family, ell: float, r: ArrayLike, cfg: PhysicsConfig = PhysicsConfig()
) -> SuperpotentialSample:
    """
    Evaluate any family's central superpotential together with W and W′.
    """
    sample = compose(fam.evaluate(np.atleast_1d(r), ell, cfg), ell, cfg)
    if sample.has_pole:
        logger.debug("%r: %d pole samples at ell=%g", fam, int(sample.pole.sum()), ell)
    return sample


def full_W(
    fam: Family, ell: float, r: ArrayLike, cfg: PhysicsConfig = PhysicsConfig()
) -> SuperpotentialSample:
    """
    W(r,ℓ) = (ħ/√2m)(w(r,ℓ) − (ℓ+1)/r) with its analytic derivative.
    """
    return central_w_family(fam, ell, r, cfg)


def remainder_of(fam: Family, ell: float, cfg: PhysicsConfig = PhysicsConfig()) -> float:
    """The family's analytic remainder R_ℓ."""
    return fam.remainder(ell, cfg)


def centrifugal_potential(
    ell: float, r: ArrayLike, cfg: PhysicsConfig = PhysicsConfig()
) -> np.ndarray:
    """V_Cef(r,ℓ) = ħ²ℓ(ℓ+1)/(2mr²)."""
    r = np.atleast_1d(np.asarray(r, dtype=float))
    return cfg.hbar2_over_2m * ell * (ell + 1.0) / r ** 2


def central_potential(
    fam: Family, ell: float, r: ArrayLike, cfg: PhysicsConfig = PhysicsConfig()
) -> np.ndarray:
    """
    V(r) = V₁(r,ℓ) − V_Cef(r,ℓ) + E₀ℓ. With V₁ = W² − (ħ/√2m)W′ this is
    (ħ²/2m)[w² − w′ − 2(ℓ+1)w/r] + E₀ℓ, evaluated in that form so the
    centrifugal terms never have to cancel numerically.
    """
    values = fam.evaluate(np.atleast_1d(r), ell, cfg)
    w, dw = values.w, values.dw
    regular = cfg.hbar2_over_2m * (w ** 2 - dw - 2.0 * (ell + 1.0) * w / values.r)
    return regular + fam.ground_energy(ell, cfg)
