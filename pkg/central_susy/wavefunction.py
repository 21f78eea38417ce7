"""
Ground states R₀ℓ(r) = u₀ℓ(r)/r = N·exp(−W̃(r,ℓ)) with W̃ = w̃ − ℓ ln r,
their normalization and classification, residuals of the radial
Schrödinger equation, energy ladders built from remainders and the
Bessel localization construction.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import List, Optional, Tuple

import numpy as np
from scipy import integrate

from central_susy import specfun
from central_susy.config import PhysicsConfig, Tolerances
from central_susy.exceptions import (
    ConfigurationError,
    GridTooCoarseError,
    NormalizationError,
    RegimeError,
)
from central_susy.families import Asymptote, Family, as_radii
from central_susy.grid import RadialGrid, Spacing
from central_susy.partners import partners_closed_form
from central_susy.superpotential import remainder_of

logger = logging.getLogger(__name__)

TAIL_FRACTION: float = 1e-12
"""Neglected tail of a normalization integral, relative to the accumulated part."""

PROBE_RADII = np.geomspace(1e-3, 1e2, 1001)
"""Radii scanned to locate the peak of the ground state before integrating."""


class Status(str, Enum):
    UNBROKEN = "Unbroken"
    BROKEN = "Broken"
    SPONTANEOUSLY_BROKEN = "SpontaneouslyBroken"


class Measure(str, Enum):
    """
    Normalization measure: ``radial`` is ∫u²dr = ∫R²r²dr, ``plain`` is ∫R²dr.
    """

    RADIAL = "radial"
    PLAIN = "plain"


@dataclass(frozen=True)
class BoundaryLimit:
    """
    Limits of u and W̃ at one end of [0, ∞).

    Args:
      boundary (str): ``"origin"`` or ``"infinity"``
      asymptote (Asymptote): leading behaviour of u
      u_limit (str): ``"0"``, ``"finite"`` or ``"inf"``
      w_tilde_limit (str): ``"+inf"``, ``"-inf"`` or ``"finite"``
      square_integrable (bool): u² is integrable near this end
    """

    boundary: str
    asymptote: Asymptote
    u_limit: str
    w_tilde_limit: str
    square_integrable: bool

    def __str__(self) -> str:
        a = self.asymptote
        if a.kind == "power":
            shape = f"u ~ r^{a.rate:.6g}"
        elif a.kind == "exponential":
            shape = f"u ~ exp(-{a.rate:.6g} r)"
        else:
            shape = f"u ~ exp(-{a.rate:.6g} r^2)"
        return f"{self.boundary}: {shape}, u -> {self.u_limit}, W~ -> {self.w_tilde_limit}"


@dataclass(frozen=True)
class SusyStatus:
    """
    Classification of a family at one ℓ.

    Args:
      status (Status): the verdict
      reasons (Tuple[BoundaryLimit, ...]): limits at both boundaries;
        empty when the remainder vanishes
      remainder (float): R_ℓ, NaN when no family is involved
      note (str): free-text explanation
    """

    status: Status
    reasons: Tuple[BoundaryLimit, ...] = ()
    remainder: float = np.nan
    note: str = ""

    def __str__(self) -> str:
        parts = [self.status.value]
        if np.isfinite(self.remainder):
            parts.append(f"R_ell={self.remainder:.6g}")
            if self.remainder < 0:
                parts.append("negative remainder")
        if self.note:
            parts.append(self.note)
        parts.extend(str(reason) for reason in self.reasons)
        return "; ".join(parts)


def boundary_limit(boundary: str, asymptote: Asymptote) -> BoundaryLimit:
    kind, rate = asymptote.kind, asymptote.rate
    if boundary == "origin":
        if kind != "power":
            raise ConfigurationError(f"unsupported behaviour at the origin: {kind}")
        u_limit = "0" if rate > 0 else ("finite" if rate == 0 else "inf")
        # W̃ = ln r − ln u + const ~ (1 − p) ln r as r → 0⁺
        w_limit = "+inf" if rate > 1 else ("finite" if rate == 1 else "-inf")
        return BoundaryLimit(boundary, asymptote, u_limit, w_limit, rate > -0.5)
    if kind == "power":
        u_limit = "0" if rate < 0 else ("finite" if rate == 0 else "inf")
        w_limit = "+inf" if rate < 1 else ("finite" if rate == 1 else "-inf")
        return BoundaryLimit(boundary, asymptote, u_limit, w_limit, rate < -0.5)
    if rate > 0:
        return BoundaryLimit(boundary, asymptote, "0", "+inf", True)
    if rate < 0:
        return BoundaryLimit(boundary, asymptote, "inf", "-inf", False)
    return BoundaryLimit(boundary, asymptote, "finite", "finite", False)


def classify(fam: Family, ell: float, cfg: PhysicsConfig = PhysicsConfig()) -> SusyStatus:
    """
    Decide from the leading asymptotics of u = r·exp(−W̃) whether the
    zero-energy ground state exists.

    * SpontaneouslyBroken when R_ℓ = 0
    * Unbroken when u → 0 and u² is integrable at both r → 0⁺ and r → ∞
    * Broken otherwise
    """
    R = remainder_of(fam, ell, cfg)
    if R == 0:
        return SusyStatus(Status.SPONTANEOUSLY_BROKEN, (), R, "superpartners are isospectral")
    table = fam.asymptotics(ell, cfg)
    reasons = tuple(boundary_limit(b, table[b]) for b in ("origin", "infinity"))
    ok = all(reason.u_limit == "0" and reason.square_integrable for reason in reasons)
    return SusyStatus(Status.UNBROKEN if ok else Status.BROKEN, reasons, R)


def w_tilde(fam: Family, ell: float, r, cfg: PhysicsConfig = PhysicsConfig()) -> np.ndarray:
    """
    W̃(r,ℓ) = w̃(r,ℓ) − ℓ ln r, with w̃ = ∫w dr.

    Args:
      fam (Family): the family
      ell (float): angular momentum
      r (Union[float, np.ndarray]): radii, > 0
      cfg (PhysicsConfig, optional): unit system
    """
    r = np.atleast_1d(as_radii(r))
    return fam.w_tilde(r, ell, cfg) - ell * np.log(r)


@dataclass(frozen=True)
class GroundState:
    """
    A normalized ground state.

    Args:
      family (Family): the family
      ell (float): angular momentum
      N (float): normalization constant
      measure (Measure): measure the constant was computed for
      cfg (PhysicsConfig): unit system
      grid (RadialGrid): grid the arrays below are sampled on
      status (SusyStatus): classification behind the state
    """

    family: Family
    ell: float
    N: float
    measure: Measure
    cfg: PhysicsConfig
    grid: RadialGrid
    status: SusyStatus = field(repr=False)

    def radial(self, r) -> np.ndarray:
        """R(r) = N·exp(−W̃(r,ℓ))."""
        return self.N * np.exp(-w_tilde(self.family, self.ell, r, self.cfg))

    def reduced(self, r) -> np.ndarray:
        """u(r) = r·R(r)."""
        r = np.atleast_1d(as_radii(r))
        return r * self.radial(r)

    @property
    def r(self) -> np.ndarray:
        return self.grid.points

    @property
    def W_tilde(self) -> np.ndarray:
        return w_tilde(self.family, self.ell, self.r, self.cfg)

    @property
    def R_radial(self) -> np.ndarray:
        return self.radial(self.r)

    @property
    def u(self) -> np.ndarray:
        return self.reduced(self.r)

    def with_normalization(self, N: float) -> "GroundState":
        """The same state with another constant (used to test N-independence)."""
        return GroundState(
            self.family, self.ell, float(N), self.measure, self.cfg, self.grid, self.status
        )


def _tail_bound(asymptote: Asymptote, density: float, radius: float, weight: float) -> float:
    """Bound on ∫_radius^∞ of a density with the given u-asymptote."""
    if asymptote.kind == "exponential":
        return density / (2.0 * asymptote.rate)
    if asymptote.kind == "gaussian":
        return density / (4.0 * asymptote.rate * radius)
    exponent = 2.0 * asymptote.rate - 2.0 + weight
    return density * radius / (-exponent - 1.0)


def ground_state(
    fam: Family,
    ell: float,
    grid: RadialGrid,
    cfg: PhysicsConfig = PhysicsConfig(),
    tol: Tolerances = Tolerances(),
    measure: str = "radial",
) -> GroundState:
    """
    Normalize exp(−W̃) on [0, ∞).

    The integral runs from 0 to a truncation radius that is doubled until
    the analytic tail bound falls below :data:`TAIL_FRACTION` of the
    accumulated integral.

    Args:
      fam (Family): the family
      ell (float): angular momentum
      grid (RadialGrid): radii the state is sampled on
      cfg (PhysicsConfig, optional): unit system
      tol (Tolerances, optional): ``quadrature_rel`` is the quadrature
        tolerance
      measure (str, optional): ``"radial"`` (∫u²dr, the default) or
        ``"plain"`` (∫R²dr)

    Output:
      the ground state; raises :class:`NormalizationError` when SUSY is
      broken or quadrature fails
    """
    try:
        measure = Measure(measure)
    except ValueError:
        raise ConfigurationError(f"unknown measure {measure!r}") from None
    status = classify(fam, ell, cfg)
    if status.status is not Status.UNBROKEN:
        raise NormalizationError(
            f"{fam!r} at ell={ell} is {status.status.value}; no normalizable ground state",
            status=status,
        )
    # integrand r^weight·exp(−2W̃), shifted by its maximum on the probe radii
    weight = 2.0 if measure is Measure.RADIAL else 0.0

    def log_density(r: np.ndarray) -> np.ndarray:
        return weight * np.log(r) - 2.0 * w_tilde(fam, ell, r, cfg)

    probe = log_density(PROBE_RADII)
    peak = int(np.nanargmax(np.where(np.isfinite(probe), probe, -np.inf)))
    r_peak, shift = float(PROBE_RADII[peak]), float(probe[peak])

    def density(r: float) -> float:
        return float(np.exp(log_density(np.array([r]))[0] - shift))

    infinity = status.reasons[1].asymptote
    r_cut = max(2.0 * r_peak, 1.0)
    total = 0.0
    lower = 0.0
    for _ in range(64):
        points = [r_peak] if lower < r_peak < r_cut else None
        result = integrate.quad(
            density,
            lower,
            r_cut,
            points=points,
            epsabs=0.0,
            epsrel=tol.quadrature_rel,
            limit=500,
            full_output=1,
        )
        if len(result) > 3:
            raise NormalizationError(
                f"quadrature did not converge for {fam!r} at ell={ell}: {result[3]}",
                status=status,
            )
        total += result[0]
        lower = r_cut
        bound = _tail_bound(infinity, density(r_cut), r_cut, weight)
        if bound < TAIL_FRACTION * total:
            break
        r_cut *= 2.0
    else:
        raise NormalizationError(f"tail of {fam!r} at ell={ell} does not decay", status=status)
    logger.debug(
        "%r ell=%g: truncated at r=%.6g (peak %.6g), integral %.17g",
        fam, ell, r_cut, r_peak, total,
    )
    # ∫ N² r^weight e^{−2W̃} dr = N² e^{shift} total = 1
    N = float(np.exp(-shift / 2.0) / np.sqrt(total))
    return GroundState(fam, ell, N, measure, cfg, grid, status)


def _second_derivative(u: np.ndarray, h: float) -> np.ndarray:
    """Fourth-order five-point central difference at the interior points."""
    stencil = -u[:-4] + 16.0 * u[1:-3] - 30.0 * u[2:-2] + 16.0 * u[3:-1] - u[4:]
    return stencil / (12.0 * h ** 2)


def _residual(
    gs: GroundState, grid: RadialGrid, cfg: PhysicsConfig, family: Family
) -> float:
    if grid.spacing is not Spacing.UNIFORM:
        raise ConfigurationError("the residual needs a uniform grid")
    if len(grid) < 5:
        raise ConfigurationError("the residual needs at least 5 grid points")
    r = grid.points
    u = gs.reduced(r)
    V1, _ = partners_closed_form(family, gs.ell, r[2:-2], cfg)
    lhs = cfg.hbar2_over_2m * _second_derivative(u, grid.step)
    return float(np.max(np.abs(lhs - V1 * u[2:-2])) / np.max(np.abs(u)))


def schrodinger_residual(
    gs: GroundState,
    grid: RadialGrid,
    cfg: PhysicsConfig = PhysicsConfig(),
    family: Optional[Family] = None,
    tol: Tolerances = Tolerances(),
    check_convergence: bool = False,
) -> float:
    """
    max over interior points of |(ħ²/2m)u″ − V₁u| / max|u|.

    Args:
      gs (GroundState): the state
      grid (RadialGrid): uniform grid for the finite differences
      cfg (PhysicsConfig, optional): unit system
      family (Family, optional): family whose V₁ is used; defaults to
        ``gs.family``
      tol (Tolerances, optional): ``residual_abs`` bounds an acceptable
        residual when ``check_convergence`` is set
      check_convergence (bool, optional): also evaluate on the grid with
        half the step and raise :class:`GridTooCoarseError` if the
        residual is above tolerance and does not decrease

    Output:
      the normalized residual
    """
    family = gs.family if family is None else family
    residual = _residual(gs, grid, cfg, family)
    if check_convergence and residual > tol.residual_abs:
        finer = _residual(gs, grid.refined(), cfg, family)
        if not finer < residual:
            raise GridTooCoarseError(
                f"residual {residual:.3g} does not decrease under step halving ({finer:.3g})"
            )
    return residual


def residual_order(
    gs: GroundState, grid: RadialGrid, cfg: PhysicsConfig = PhysicsConfig()
) -> float:
    """Observed order log₂(residual(h)/residual(h/2)) of the finite differences."""
    coarse = _residual(gs, grid, cfg, gs.family)
    fine = _residual(gs, grid.refined(), cfg, gs.family)
    return float(np.log2(coarse / fine))


def energy_ladder(
    fam: Family,
    ell: float,
    n_max: int,
    cfg: PhysicsConfig = PhysicsConfig(),
    physical: bool = False,
) -> List[float]:
    """
    E₀ = 0 and E_n = Σ_{k<n} R_{ℓ+k}, the spectrum of V₁(·,ℓ).

    Args:
      fam (Family): the family
      ell (float): angular momentum
      n_max (int): highest level, >= 0
      cfg (PhysicsConfig, optional): unit system
      physical (bool, optional): add back E₀ℓ to give the spectrum of the
        central potential plus centrifugal barrier
    """
    if int(n_max) != n_max or n_max < 0:
        raise ConfigurationError(f"n_max must be a non-negative integer, got {n_max}")
    offset = fam.ground_energy(ell, cfg) if physical else 0.0
    levels = [offset]
    total = 0.0
    for k in range(int(n_max)):
        total += remainder_of(fam, ell + k, cfg)
        levels.append(offset + total)
    return levels


def localization_constant(A: float, B: float, R_node: float) -> float:
    """
    C = −J(A, B·R_node)/Y(A, B·R_node), which puts a zero of
    f₂ = J(A, Br) + C·Y(A, Br), and hence a pole of w, at R_node.
    """
    x = B * R_node
    y = specfun.bessel_y(A, x)
    if y == 0:
        raise RegimeError(f"Y_{A} vanishes at B*R_node={x}; cannot place the node")
    return -specfun.bessel_j(A, x) / y


def f2_roots(A: float, B: float, C: float, r_min: float, r_max: float) -> np.ndarray:
    """All radii in [r_min, r_max] where J(A, Br) + C·Y(A, Br) vanishes."""
    if not B > 0:
        raise ConfigurationError(f"B must be positive, got {B}")
    return specfun.cylinder_zeros(A, C, B * r_min, B * r_max) / B
