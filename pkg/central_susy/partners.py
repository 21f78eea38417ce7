"""
Superpartner potentials and the shape-invariance check.

The partners are V₁,₂ = W² ∓ (ħ/√2m)W′. Expanding W gives

V₁(r,ℓ) = (ħ²/2m)[w² − w′ − 2(ℓ+1)w/r + ℓ(ℓ+1)/r²]
V₂(r,ℓ) = (ħ²/2m)[w² + w′ − 2(ℓ+1)w/r + (ℓ+1)(ℓ+2)/r²]

Shape invariance compares V₂(r,ℓ) with V₁(r,ℓ+1) of the next member of
the hierarchy, whose central part is G(ℓ)·w(r,ℓ). The difference must be
the r-independent remainder R_ℓ.
"""

import logging
from dataclasses import dataclass
from typing import Callable, Dict, Iterable, Optional, Tuple, Type, Union

import numpy as np
import pandas as pd

from central_susy.config import PhysicsConfig, Tolerances
from central_susy.exceptions import PoleError
from central_susy.families import (
    CentralPoschlTeller,
    CentralValues,
    CoulombRIndep,
    Family,
    GeneralBessel,
    HarmonicG1,
    UpsideDownGm1,
    as_radii,
    parity,
)
from central_susy.grid import RadialGrid
from central_susy.superpotential import (
    full_W,
    remainder_of,
    SuperpotentialSample,
)

logger = logging.getLogger(__name__)

ArrayLike = Union[float, np.ndarray]

CONSTANCY_EPS: float = 1e-30


@dataclass(frozen=True)
class PartnerPair:
    """
    Superpartner potentials sampled on a grid.

    Args:
      family (Family): the family
      ell (float): angular momentum
      r (np.ndarray): radii
      V1 (np.ndarray): W² − (ħ/√2m)W′
      V2 (np.ndarray): W² + (ħ/√2m)W′
    """

    family: Family
    ell: float
    r: np.ndarray
    V1: np.ndarray
    V2: np.ndarray


@dataclass(frozen=True)
class InvarianceReport:
    """
    Measured constancy of V₂(r,ℓ) − V₁(r,ℓ+1) over a grid.

    Args:
      family (Family): the family
      ell (float): angular momentum
      R_inferred (float): mean of the difference over the grid
      R_analytic (float): the family's analytic remainder
      max_abs_deviation (float): largest |difference − mean|
      rel_deviation (float): (max − min)/(|mean| + 1e−30)
      passed (bool): rel_deviation < the constancy tolerance
    """

    family: Family
    ell: float
    R_inferred: float
    R_analytic: float
    max_abs_deviation: float
    rel_deviation: float
    passed: bool

    def agrees_with_analytic(self, rel: float = 1e-8) -> bool:
        """R_inferred matches R_analytic to relative tolerance ``rel``."""
        scale = max(abs(self.R_analytic), CONSTANCY_EPS)
        return abs(self.R_inferred - self.R_analytic) <= rel * scale


def _pair_from_sample(
    fam: Family, sample: SuperpotentialSample, cfg: PhysicsConfig
) -> PartnerPair:
    s = cfg.sqrt_prefactor
    W2 = sample.W ** 2
    return PartnerPair(
        fam, sample.ell, sample.r, W2 - s * sample.W_prime, W2 + s * sample.W_prime
    )


def partners_from_W(
    fam: Family, ell: float, grid: RadialGrid, cfg: PhysicsConfig = PhysicsConfig()
) -> PartnerPair:
    """
    Build V₁ = W² − (ħ/√2m)W′ and V₂ = W² + (ħ/√2m)W′ with the analytic W′.

    Args:
      fam (Family): the family
      ell (float): angular momentum
      grid (RadialGrid): sample radii
      cfg (PhysicsConfig, optional): unit system

    Output:
      the pair; raises :class:`~central_susy.exceptions.PoleError` naming
      the first pole on the grid
    """
    sample = full_W(fam, ell, grid.points, cfg).require_no_pole()
    return _pair_from_sample(fam, sample, cfg)


def _require_no_pole(values: CentralValues) -> CentralValues:
    if np.any(values.pole):
        raise PoleError(float(values.r[values.pole].min()))
    return values


def _regular_parts(
    w: np.ndarray, dw: np.ndarray, ell: float, r: np.ndarray, cfg: PhysicsConfig
) -> Tuple[np.ndarray, np.ndarray]:
    """
    The w-dependent parts of (V₁, V₂), i.e. the partners without their
    centrifugal terms ħ²ℓ(ℓ+1)/2mr² and ħ²(ℓ+1)(ℓ+2)/2mr².
    """
    k = cfg.hbar2_over_2m
    cross = 2.0 * (ell + 1.0) * w / r
    return k * (w ** 2 - dw - cross), k * (w ** 2 + dw - cross)


def shape_invariance_check(
    fam: Family,
    ell: float,
    grid: RadialGrid,
    cfg: PhysicsConfig = PhysicsConfig(),
    tol: Tolerances = Tolerances(),
    v2_family: Optional[Family] = None,
) -> InvarianceReport:
    """
    Measure how constant V₂(r,ℓ) − V₁(r,ℓ+1) is over a grid.

    Args:
      fam (Family): the family
      ell (float): angular momentum
      grid (RadialGrid): sample radii
      cfg (PhysicsConfig, optional): unit system
      tol (Tolerances, optional): ``rel_constancy`` decides ``passed``
      v2_family (Family, optional): family used for V₂ only; defaults to
        ``fam``. A perturbed copy turns the check into a negative control.

    Output:
      the report; poles on the grid raise
      :class:`~central_susy.exceptions.PoleError`
    """
    r = grid.points
    v2_family = fam if v2_family is None else v2_family
    here = _require_no_pole(v2_family.evaluate(r, ell, cfg))
    base = _require_no_pole(fam.evaluate(r, ell, cfg))
    G = fam.G(ell)
    _, V2 = _regular_parts(here.w, here.dw, ell, r, cfg)
    V1_next, _ = _regular_parts(G * base.w, G * base.dw, ell + 1.0, r, cfg)
    # the centrifugal terms (ℓ+1)(ℓ+2)/r² of both potentials cancel exactly
    diff = V2 - V1_next
    mean = float(np.mean(diff))
    spread = float(diff.max() - diff.min())
    rel = spread / (abs(mean) + CONSTANCY_EPS)
    report = InvarianceReport(
        family=fam,
        ell=ell,
        R_inferred=mean,
        R_analytic=remainder_of(fam, ell, cfg),
        max_abs_deviation=float(np.max(np.abs(diff - mean))),
        rel_deviation=rel,
        passed=rel < tol.rel_constancy,
    )
    logger.debug(
        "%r ell=%g: R=%.12g rel_deviation=%.3g passed=%s",
        fam, ell, report.R_inferred, rel, report.passed,
    )
    return report


def remainder_profile(
    fam: Family, ell: float, grid: RadialGrid, cfg: PhysicsConfig = PhysicsConfig()
) -> pd.Series:
    """
    The remainder evaluated pointwise from w, w′ and G(ℓ):

    R_ℓ(r) = (ħ²/2m)[(1 − G²)w² + (1 + G)w′ − 2w((ℓ+1) − G(ℓ+2))/r]

    Output:
      series of R_ℓ(r) indexed by ``r``
    """
    r = grid.points
    values = _require_no_pole(fam.evaluate(r, ell, cfg))
    G = fam.G(ell)
    w, dw = values.w, values.dw
    profile = cfg.hbar2_over_2m * (
        (1.0 - G ** 2) * w ** 2
        + (1.0 + G) * dw
        - 2.0 * w * ((ell + 1.0) - G * (ell + 2.0)) / r
    )
    return pd.Series(profile, index=pd.Index(r, name="r"), name="R")


def _expanded(
    fam: Family, ell: float, r: np.ndarray, cfg: PhysicsConfig
) -> Tuple[np.ndarray, np.ndarray]:
    values = fam.evaluate(r, ell, cfg)
    V1, V2 = _regular_parts(values.w, values.dw, ell, r, cfg)
    k = cfg.hbar2_over_2m
    return V1 + k * ell * (ell + 1.0) / r ** 2, V2 + k * (ell + 1.0) * (ell + 2.0) / r ** 2


def _harmonic(fam: HarmonicG1, ell, r, cfg, as_printed):
    C = fam.C
    k = cfg.hbar2_over_2m
    hw = cfg.hbar * fam.omega
    oscillator = 0.5 * cfg.mass * fam.omega ** 2 * r ** 2
    V1 = (
        oscillator
        + k * (C * (C + 1.0) + (ell + 1.0) * (ell - 2.0 * C)) / r ** 2
        - hw * (ell + 1.5 - C)
    )
    V2 = (
        oscillator
        + k * (C * (C + 1.0) + (ell + 2.0) * (ell + 1.0 - 2.0 * C)) / r ** 2
        - hw * (ell + 0.5 - C)
    )
    return V1, V2


def _upside_down(fam: UpsideDownGm1, ell, r, cfg, as_printed):
    k = cfg.hbar2_over_2m
    hw = cfg.hbar * fam.omega
    # printed with +(−1)^ℓ; the Riccati construction gives −(−1)^ℓ
    sign = parity(ell) if as_printed else -parity(ell)
    oscillator = 0.5 * cfg.mass * fam.omega ** 2 * r ** 2
    V1 = oscillator + k * ell * (ell + 1.0) / r ** 2 + sign * hw * (ell + 1.5)
    V2 = oscillator + k * (ell + 1.0) * (ell + 2.0) / r ** 2 + sign * hw * (ell + 0.5)
    return V1, V2


def _poschl_teller(fam: CentralPoschlTeller, ell, r, cfg, as_printed):
    k = cfg.hbar2_over_2m
    k0 = fam.wave_number(ell)
    x = k0 * (r + fam.C)
    sech2 = 1.0 / np.cosh(x) ** 2
    tanh_over_r = np.tanh(x) / r
    if as_printed:
        sech_sign, tanh_scale = 1.0, k0 ** 2
    else:
        sech_sign, tanh_scale = -1.0, k0
    tail = 2.0 * k * tanh_scale * (ell + 1.0) * (ell + 2.0) * tanh_over_r
    shift = k * k0 ** 2 * (ell + 2.0) ** 2
    V1 = (
        sech_sign * k * k0 ** 2 * (ell + 2.0) * (ell + 3.0) * sech2
        - tail
        + k * ell * (ell + 1.0) / r ** 2
        + shift
    )
    V2 = (
        sech_sign * k * k0 ** 2 * (ell + 1.0) * (ell + 2.0) * sech2
        - tail
        + k * (ell + 1.0) * (ell + 2.0) / r ** 2
        + shift
    )
    return V1, V2


def _coulomb(fam: CoulombRIndep, ell, r, cfg, as_printed):
    k = cfg.hbar2_over_2m
    shift = cfg.mass / (2.0 * cfg.hbar ** 2) * (fam.kappa / (ell + 1.0)) ** 2
    V1 = -fam.kappa / r + k * ell * (ell + 1.0) / r ** 2 + shift
    V2 = -fam.kappa / r + k * (ell + 1.0) * (ell + 2.0) / r ** 2 + shift
    return V1, V2


def _general(fam: GeneralBessel, ell, r, cfg, as_printed):
    return _expanded(fam, ell, r, cfg)


_CLOSED_FORMS: Dict[Type[Family], Callable] = {
    HarmonicG1: _harmonic,
    UpsideDownGm1: _upside_down,
    CentralPoschlTeller: _poschl_teller,
    CoulombRIndep: _coulomb,
    GeneralBessel: _general,
}


def partners_closed_form(
    fam: Family,
    ell: float,
    r: ArrayLike,
    cfg: PhysicsConfig = PhysicsConfig(),
    as_printed: bool = False,
) -> Tuple[np.ndarray, np.ndarray]:
    """
    The family's closed-form superpartners (V₁, V₂), constant shift included.

    Args:
      fam (Family): the family
      ell (float): angular momentum
      r (Union[float, np.ndarray]): radii, > 0
      cfg (PhysicsConfig, optional): unit system
      as_printed (bool, optional): evaluate the forms as originally
        published, misprints included (the sign of the sign-alternating
        constant; sech² signs and the tanh/r power of k₀ for the central
        Pöschl-Teller). The default gives the corrected forms, which agree
        with :func:`partners_from_W`.

    Output:
      (V₁, V₂) arrays
    """
    r = np.atleast_1d(as_radii(r))
    return _CLOSED_FORMS[type(fam)](fam, ell, r, cfg, as_printed)


def erratum_report(
    families: Iterable[Family],
    ells: Iterable[float],
    grid: RadialGrid,
    cfg: PhysicsConfig = PhysicsConfig(),
    rel_tol: float = 1e-9,
) -> pd.DataFrame:
    """
    Compare the printed closed forms with the W² ∓ (ħ/√2m)W′ construction.

    Output:
      one row per (family, ℓ, potential) with columns ``family``, ``ell``,
      ``potential``, ``max_abs_diff``, ``max_rel_diff``, ``constant_offset``
      (the difference if it does not depend on r, else NaN) and
      ``erratum``
    """
    rows = []
    ells = list(ells)
    for fam in families:
        for ell in ells:
            pair = partners_from_W(fam, ell, grid, cfg)
            printed = partners_closed_form(fam, ell, pair.r, cfg, as_printed=True)
            for name, built, shown in zip(("V1", "V2"), (pair.V1, pair.V2), printed):
                diff = shown - built
                scale = float(np.max(np.abs(built)))
                max_abs = float(np.max(np.abs(diff)))
                is_constant = float(diff.max() - diff.min()) <= rel_tol * max(scale, 1.0)
                erratum = max_abs > rel_tol * max(scale, 1.0)
                rows.append(
                    {
                        "family": fam.family_id,
                        "ell": float(ell),
                        "potential": name,
                        "max_abs_diff": max_abs,
                        "max_rel_diff": max_abs / scale if scale > 0 else 0.0,
                        "constant_offset": float(np.mean(diff)) if is_constant else np.nan,
                        "erratum": bool(erratum),
                    }
                )
                if erratum:
                    logger.warning(
                        "printed %s of %s at ell=%g differs from the construction "
                        "by up to %.6g",
                        name, fam.family_id, ell, max_abs,
                    )
    return pd.DataFrame(
        rows,
        columns=[
            "family", "ell", "potential", "max_abs_diff", "max_rel_diff",
            "constant_offset", "erratum",
        ],
    )
