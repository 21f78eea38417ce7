"""
Unit system and numerical tolerances shared by every other module.

The default unit system is ħ² = 2m = 1 (ħ = 1, m = 1/2), so that
ħ²/2m = 1 exactly. Every formula in the package still carries explicit
ħ and m factors, so any other choice works as well.
"""

import logging
from dataclasses import dataclass, fields, replace
from pathlib import Path
from typing import Tuple, Union

import numpy as np
import pandas as pd

from central_susy.exceptions import ConfigurationError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PhysicsConfig:
    """
    Unit system of a calculation.

    Args:
      hbar (float, optional): reduced Planck constant; default 1
      mass (float, optional): particle mass; default 1/2
    """

    hbar: float = 1.0
    mass: float = 0.5

    def __post_init__(self):
        for name in ("hbar", "mass"):
            value = getattr(self, name)
            if not np.isfinite(value) or value <= 0:
                raise ConfigurationError(f"{name} must be positive, got {value}")

    @property
    def hbar2_over_2m(self) -> float:
        """The kinetic prefactor ħ²/2m."""
        return self.hbar ** 2 / (2.0 * self.mass)

    @property
    def sqrt_prefactor(self) -> float:
        """ħ/√(2m), the prefactor of the superpotential."""
        return self.hbar / np.sqrt(2.0 * self.mass)

    @property
    def m_over_hbar2(self) -> float:
        """m/ħ², which appears in every closed-form superpotential."""
        return self.mass / self.hbar ** 2


@dataclass(frozen=True)
class Tolerances:
    """
    Numerical tolerance policy.

    Args:
      rel_constancy (float): maximum relative spread of a remainder over a
        grid for the shape-invariance check to pass
      residual_abs (float): bound on the normalized Schrödinger residual
      quadrature_rel (float): relative tolerance of normalization integrals
      fd_step_scale (float): relative step of finite-difference oracles
    """

    rel_constancy: float = 1e-8
    residual_abs: float = 1e-6
    quadrature_rel: float = 1e-10
    fd_step_scale: float = 1e-5

    def __post_init__(self):
        for f in fields(self):
            value = getattr(self, f.name)
            if not np.isfinite(value) or value <= 0:
                raise ConfigurationError(f"{f.name} must be positive, got {value}")


_PHYSICS_KEYS = {f.name for f in fields(PhysicsConfig)}
_TOLERANCE_KEYS = {f.name for f in fields(Tolerances)}


def load_config(
    path: Union[str, Path],
    cfg: PhysicsConfig = PhysicsConfig(),
    tol: Tolerances = Tolerances(),
) -> Tuple[PhysicsConfig, Tolerances]:
    """
    Read a plain-text ``key=value`` configuration file. Lines starting
    with ``#`` are ignored.

    Args:
      path (Union[str, Path]): file to read
      cfg (PhysicsConfig, optional): values not present in the file
      tol (Tolerances, optional): values not present in the file

    Returns:
      the updated (PhysicsConfig, Tolerances) pair
    """
    try:
        df = pd.read_csv(
            path,
            sep="=",
            names=["key", "value"],
            comment="#",
            skipinitialspace=True,
            dtype={"key": str, "value": float},
        )
    except (ValueError, TypeError, pd.errors.ParserError) as err:
        raise ConfigurationError(f"malformed configuration file {path}: {err}") from err
    df["key"] = df["key"].str.strip()
    unknown = set(df["key"]) - _PHYSICS_KEYS - _TOLERANCE_KEYS
    if unknown:
        raise ConfigurationError(f"unknown configuration keys {sorted(unknown)}")
    values = dict(zip(df["key"], df["value"]))
    logger.debug("read %d configuration values from %s", len(values), path)
    cfg = replace(cfg, **{k: v for k, v in values.items() if k in _PHYSICS_KEYS})
    tol = replace(tol, **{k: v for k, v in values.items() if k in _TOLERANCE_KEYS})
    return cfg, tol
