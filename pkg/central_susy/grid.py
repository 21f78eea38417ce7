"""
Radial grids. The origin is never sampled: the centrifugal term and the
superpotential ansatz are singular at r = 0, so the behaviour there is
handled analytically elsewhere.
"""

from dataclasses import dataclass
from enum import Enum

import numpy as np

from central_susy.exceptions import ConfigurationError


class Spacing(str, Enum):
    UNIFORM = "uniform"
    LOGARITHMIC = "logarithmic"


@dataclass(frozen=True)
class RadialGrid:
    """
    Discretization of [r_min, r_max].

    Args:
      r_min (float): first point, strictly positive
      r_max (float): last point
      n_points (int): number of points, at least 2
      spacing (Spacing): uniform (constant step) or logarithmic
        (constant ratio)
    """

    r_min: float
    r_max: float
    n_points: int
    spacing: Spacing = Spacing.UNIFORM

    def __post_init__(self):
        if not self.r_min > 0:
            raise ConfigurationError(
                f"r_min must be > 0 (the 1/r^2 term is undefined at r=0), got {self.r_min}"
            )
        if not self.r_max > self.r_min:
            raise ConfigurationError(
                f"r_max must exceed r_min, got r_min={self.r_min}, r_max={self.r_max}"
            )
        if int(self.n_points) != self.n_points or self.n_points < 2:
            raise ConfigurationError(f"n_points must be an integer >= 2, got {self.n_points}")
        object.__setattr__(self, "spacing", Spacing(self.spacing))

    @property
    def points(self) -> np.ndarray:
        """The sample radii, strictly increasing, endpoints included exactly."""
        if self.spacing is Spacing.UNIFORM:
            r = np.linspace(self.r_min, self.r_max, int(self.n_points))
        else:
            r = np.geomspace(self.r_min, self.r_max, int(self.n_points))
        r[0], r[-1] = self.r_min, self.r_max
        return r

    @property
    def step(self) -> float:
        """Constant step of a uniform grid."""
        if self.spacing is not Spacing.UNIFORM:
            raise ConfigurationError("only uniform grids have a constant step")
        return (self.r_max - self.r_min) / (self.n_points - 1)

    def refined(self) -> "RadialGrid":
        """The grid with the step halved (same endpoints)."""
        return RadialGrid(self.r_min, self.r_max, 2 * self.n_points - 1, self.spacing)

    def __len__(self) -> int:
        return int(self.n_points)


def make_grid(
    r_min: float, r_max: float, n: int, spacing: str = "uniform"
) -> RadialGrid:
    """
    Build a :class:`RadialGrid`.

    Args:
      r_min (float): smallest radius, > 0
      r_max (float): largest radius, > r_min
      n (int): number of points, >= 2
      spacing (str, optional): ``"uniform"`` or ``"logarithmic"``

    Output:
      the grid
    """
    try:
        spacing = Spacing(spacing)
    except ValueError:
        raise ConfigurationError(f"unknown spacing {spacing!r}") from None
    return RadialGrid(float(r_min), float(r_max), n, spacing)
