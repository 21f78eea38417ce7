"""
Data behind the four figures of the central Pöschl-Teller and Bessel
localization examples. Each builder returns :class:`pandas.DataFrame`
objects keyed by the file stem they are written under.
"""

import logging
from dataclasses import dataclass
from typing import Dict, Tuple

import numpy as np
import pandas as pd

from central_susy import specfun
from central_susy.config import PhysicsConfig
from central_susy.families import POLE_THRESHOLD, CentralPoschlTeller
from central_susy.grid import RadialGrid
from central_susy.superpotential import central_potential, centrifugal_potential, full_W
from central_susy.wavefunction import ground_state, localization_constant, w_tilde

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FigureSpec:
    """
    Frozen parameters of one figure. All figures use ħ² = 2m = 1.

    Args:
      figure_id (int): 1, 2, 3 or 4
      grid (RadialGrid): radii the curves are sampled on
      ells (Tuple[int, ...]): angular momenta (figures 1-3)
      k0 (float): wave number of the central Pöschl-Teller family
      C (float): offset of the central Pöschl-Teller family
      A (float): Bessel order (figure 4)
      B (float): Bessel scale (figure 4)
      R_node (float): radius where f₂ vanishes (figure 4)
    """

    figure_id: int
    grid: RadialGrid
    ells: Tuple[int, ...] = (2, 6, 10)
    k0: float = 1.0
    C: float = 0.0
    A: float = 1.0
    B: float = 1.0
    R_node: float = 5.0

    @property
    def family(self) -> CentralPoschlTeller:
        return CentralPoschlTeller(k0=self.k0, C=self.C)


FIGURES: Dict[int, FigureSpec] = {
    1: FigureSpec(1, RadialGrid(0.01, 10.0, 1000)),
    2: FigureSpec(2, RadialGrid(0.01, 10.0, 1000)),
    3: FigureSpec(3, RadialGrid(0.01, 6.0, 1000)),
    4: FigureSpec(4, RadialGrid(0.1, 10.0, 991)),
}
"""The four figures, keyed by number."""

FIGURE_CONFIG = PhysicsConfig(hbar=1.0, mass=0.5)


def figure1(spec: FigureSpec) -> Dict[str, pd.DataFrame]:
    """V(r,ℓ) + V_Cef(r,ℓ) and W(r,ℓ) for each ℓ."""
    r = spec.grid.points
    columns = {"r": r}
    for ell in spec.ells:
        potential = central_potential(spec.family, ell, r, FIGURE_CONFIG)
        columns[f"V_total_ell{ell}"] = potential + centrifugal_potential(ell, r, FIGURE_CONFIG)
        columns[f"W_ell{ell}"] = full_W(spec.family, ell, r, FIGURE_CONFIG).W
    return {"figure1": pd.DataFrame(columns)}


def figure2(spec: FigureSpec) -> Dict[str, pd.DataFrame]:
    """W̃(r,ℓ) = (ℓ+2) ln cosh(k₀(r+C)) − ℓ ln r for each ℓ."""
    r = spec.grid.points
    columns = {"r": r}
    for ell in spec.ells:
        columns[f"W_tilde_ell{ell}"] = w_tilde(spec.family, ell, r, FIGURE_CONFIG)
    return {"figure2": pd.DataFrame(columns)}


def figure3(spec: FigureSpec) -> Dict[str, pd.DataFrame]:
    """
    Normalized R₀ℓ(r) for each ℓ, plus a table of the normalization
    constants. The constants use the plain measure ∫R²dr.
    """
    r = spec.grid.points
    columns = {"r": r}
    constants = []
    for ell in spec.ells:
        gs = ground_state(spec.family, ell, spec.grid, FIGURE_CONFIG, measure="plain")
        columns[f"R_ell{ell}"] = gs.R_radial
        constants.append({"ell": ell, "N": gs.N, "measure": gs.measure.value})
        logger.info("figure 3: ell=%d N=%.2f", ell, gs.N)
    return {
        "figure3": pd.DataFrame(columns),
        "figure3_normalization": pd.DataFrame(constants, columns=["ell", "N", "measure"]),
    }


def localization_profile(A: float, B: float, C: float, r: np.ndarray) -> pd.DataFrame:
    """
    f₁ = J(A+1, Br) + C·Y(A+1, Br), f₂ = J(A, Br) + C·Y(A, Br) and f₁/f₂.
    The ratio is left empty where f₂ is a pole by the usual threshold.
    """
    f1 = specfun.cylinder(A + 1.0, B * r, C)
    f2 = specfun.cylinder(A, B * r, C)
    pole = np.abs(f2) < POLE_THRESHOLD * (np.abs(f1) + 1.0)
    with np.errstate(divide="ignore", invalid="ignore"):
        ratio = np.where(pole, np.nan, f1 / f2)
    return pd.DataFrame({"r": r, "f1": f1, "f2": f2, "f1_over_f2": ratio, "pole": pole})


def figure4(spec: FigureSpec) -> Dict[str, pd.DataFrame]:
    """f₁, f₂ and f₁/f₂ with C chosen so that f₂(R_node) = 0."""
    C = localization_constant(spec.A, spec.B, spec.R_node)
    logger.info(
        "figure 4: C = -J(%g,%g)/Y(%g,%g) = %.17g",
        spec.A, spec.B * spec.R_node, spec.A, spec.B * spec.R_node, C,
    )
    return {"figure4": localization_profile(spec.A, spec.B, C, spec.grid.points)}


_BUILDERS = {1: figure1, 2: figure2, 3: figure3, 4: figure4}


def figure_data(figure_id: int) -> Dict[str, pd.DataFrame]:
    """Tables for one figure, keyed by file stem."""
    if figure_id not in FIGURES:
        raise KeyError(f"unknown figure {figure_id}; choose from {sorted(FIGURES)}")
    return _BUILDERS[figure_id](FIGURES[figure_id])
