"""
D-dimensional generalization. Every formula carries over with the
replacement ℓ → ℓ + (D−3)/2, so the centrifugal superpotential becomes
−(ℓ + (D−1)/2)/r. At D = 3 each function here returns exactly what its
three-dimensional counterpart returns.
"""

from dataclasses import dataclass

from central_susy.config import PhysicsConfig, Tolerances
from central_susy.exceptions import DomainError
from central_susy.families import Asymptote, Family
from central_susy.grid import RadialGrid
from central_susy.partners import (
    InvarianceReport,
    PartnerPair,
    partners_from_W,
    shape_invariance_check,
)
from central_susy.superpotential import SuperpotentialSample, full_W
from central_susy.wavefunction import Status, SusyStatus, boundary_limit, classify


def _check_dimension(D: int) -> int:
    if int(D) != D:
        raise DomainError(f"D must be an integer, got {D}")
    if D < 3:
        raise DomainError(f"only D >= 3 is supported, got D={D}")
    return int(D)


@dataclass(frozen=True)
class DimensionalContext:
    """
    Angular momentum in D dimensions.

    Args:
      D (int): number of dimensions, >= 3
      ell (float): angular momentum quantum number
    """

    D: int
    ell: float

    def __post_init__(self):
        object.__setattr__(self, "D", _check_dimension(self.D))

    @property
    def ell_effective(self) -> float:
        return map_ell(self.ell, self.D)


def map_ell(ell: float, D: int) -> float:
    """ℓ + (D−3)/2."""
    D = _check_dimension(D)
    return ell + (D - 3) / 2.0


def full_W_ddim(
    fam: Family, ell: float, D: int, r, cfg: PhysicsConfig = PhysicsConfig()
) -> SuperpotentialSample:
    """W(r,ℓ,D) = (ħ/√2m)(w(r,ℓ,D) − (ℓ + (D−1)/2)/r)."""
    return full_W(fam, map_ell(ell, D), r, cfg)


def partners_ddim(
    fam: Family, ell: float, D: int, grid: RadialGrid, cfg: PhysicsConfig = PhysicsConfig()
) -> PartnerPair:
    return partners_from_W(fam, map_ell(ell, D), grid, cfg)


def shape_invariance_check_ddim(
    fam: Family,
    ell: float,
    D: int,
    grid: RadialGrid,
    cfg: PhysicsConfig = PhysicsConfig(),
    tol: Tolerances = Tolerances(),
) -> InvarianceReport:
    return shape_invariance_check(fam, map_ell(ell, D), grid, cfg, tol)


def classify_ddim(
    fam: Family, ell: float, D: int, cfg: PhysicsConfig = PhysicsConfig()
) -> SusyStatus:
    return classify(fam, map_ell(ell, D), cfg)


def ddim_broken_check(ell_prime: float, D: int) -> SusyStatus:
    """
    Harmonic ground state in D dimensions written with ℓ′ = ℓ − C and
    C = −(D−3)/2: R₀ ~ r^{ℓ′ − (D−3)/2} at the origin, which diverges, and
    SUSY is broken, for ℓ′ < (D−3)/2.
    """
    D = _check_dimension(D)
    threshold = (D - 3) / 2.0
    exponent = ell_prime - threshold
    # u = r·R
    origin = boundary_limit("origin", Asymptote("power", exponent + 1.0))
    if ell_prime < threshold:
        return SusyStatus(
            Status.BROKEN,
            (origin,),
            note=f"R ~ r^{exponent:.6g} diverges at the origin (ell' < {threshold:g})",
        )
    return SusyStatus(
        Status.UNBROKEN,
        (origin,),
        note=f"R ~ r^{exponent:.6g} is finite at the origin (ell' >= {threshold:g})",
    )
