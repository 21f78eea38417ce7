"""
The verification suite: for each family and angular momentum it runs the
shape-invariance check, the pointwise remainder profile, the cross-check
of the closed-form partners against the W² ∓ (ħ/√2m)W′ construction, the
SUSY classification and, for unbroken states, normalization and the
Schrödinger residual.
"""

import logging
from dataclasses import dataclass
from typing import Iterable, List

import numpy as np
import pandas as pd

from central_susy.config import PhysicsConfig, Tolerances
from central_susy.exceptions import CentralSusyError
from central_susy.families import Family
from central_susy.grid import RadialGrid
from central_susy.partners import (
    partners_closed_form,
    partners_from_W,
    remainder_profile,
    shape_invariance_check,
)
from central_susy.wavefunction import (
    Status,
    classify,
    ground_state,
    schrodinger_residual,
)

logger = logging.getLogger(__name__)

CROSS_CHECK_REL: float = 1e-9
"""Relative agreement required between closed-form and constructed partners."""

RESIDUAL_GRID = RadialGrid(1e-3, 20.0, 4000)
"""Uniform grid for the finite-difference residual."""

COLUMNS = ["family", "ell", "check", "value", "threshold", "passed", "detail"]


@dataclass(frozen=True)
class VerificationReport:
    """
    Rows of individual checks.

    Args:
      table (pd.DataFrame): one row per check with columns
        ``family, ell, check, value, threshold, passed, detail``
    """

    table: pd.DataFrame

    @property
    def passed(self) -> bool:
        return bool(self.table["passed"].all())

    @property
    def failures(self) -> pd.DataFrame:
        return self.table[~self.table["passed"]]

    def summary(self) -> str:
        lines = []
        for row in self.table.itertuples(index=False):
            mark = "ok  " if row.passed else "FAIL"
            value = "" if pd.isna(row.value) else f" {row.value:.3e}"
            line = f"[{mark}] {row.family} ell={row.ell:g} {row.check}{value} {row.detail}"
            lines.append(line.rstrip())
        lines.append(
            f"{len(self.table) - len(self.failures)}/{len(self.table)} checks passed"
        )
        return "\n".join(lines)


def _row(fam, ell, check, value=np.nan, threshold=np.nan, passed=True, detail=""):
    return {
        "family": fam.family_id,
        "ell": float(ell),
        "check": check,
        "value": float(value),
        "threshold": float(threshold),
        "passed": bool(passed),
        "detail": detail,
    }


def _check_family(
    fam: Family, ell: float, grid: RadialGrid, cfg: PhysicsConfig, tol: Tolerances
) -> List[dict]:
    rows = []

    report = shape_invariance_check(fam, ell, grid, cfg, tol)
    rows.append(
        _row(
            fam, ell, "shape_invariance", report.rel_deviation, tol.rel_constancy,
            report.passed, f"R_inferred={report.R_inferred:.12g}",
        )
    )
    rows.append(
        _row(
            fam, ell, "remainder_matches", abs(report.R_inferred - report.R_analytic),
            tol.rel_constancy * abs(report.R_analytic),
            report.agrees_with_analytic(tol.rel_constancy),
            f"R_analytic={report.R_analytic:.12g}",
        )
    )

    profile = remainder_profile(fam, ell, grid, cfg).to_numpy()
    spread = float(np.ptp(profile) / (abs(np.mean(profile)) + 1e-30))
    rows.append(
        _row(
            fam, ell, "remainder_profile", spread, tol.rel_constancy,
            spread < tol.rel_constancy,
        )
    )

    pair = partners_from_W(fam, ell, grid, cfg)
    closed = partners_closed_form(fam, ell, pair.r, cfg)
    worst = 0.0
    for built, shown in zip((pair.V1, pair.V2), closed):
        scale = max(float(np.max(np.abs(built))), 1.0)
        worst = max(worst, float(np.max(np.abs(built - shown))) / scale)
    rows.append(
        _row(fam, ell, "closed_form", worst, CROSS_CHECK_REL, worst < CROSS_CHECK_REL)
    )

    status = classify(fam, ell, cfg)
    rows.append(_row(fam, ell, "classification", detail=str(status)))
    if status.status is not Status.UNBROKEN:
        skipped = f"skipped: {status.status.value}"
        rows.append(_row(fam, ell, "normalization", detail=skipped))
        return rows

    gs = ground_state(fam, ell, RESIDUAL_GRID, cfg, tol)
    rows.append(_row(fam, ell, "normalization", gs.N, detail="radial measure"))
    residual = schrodinger_residual(gs, RESIDUAL_GRID, cfg)
    rows.append(
        _row(
            fam, ell, "schrodinger_residual", residual, tol.residual_abs,
            residual < tol.residual_abs,
        )
    )
    return rows


def run_verification(
    families: Iterable[Family],
    ells: Iterable[float],
    grid: RadialGrid,
    cfg: PhysicsConfig = PhysicsConfig(),
    tol: Tolerances = Tolerances(),
) -> VerificationReport:
    """
    Run every check for every (family, ℓ). A check that raises is recorded
    as a failure with the error message; Broken and SpontaneouslyBroken
    states are reported, not failed.
    """
    rows: List[dict] = []
    ells = list(ells)
    for fam in families:
        for ell in ells:
            try:
                rows.extend(_check_family(fam, ell, grid, cfg, tol))
            except CentralSusyError as err:
                logger.warning("%s ell=%g: %s", fam.family_id, ell, err)
                detail = f"{type(err).__name__}: {err}"
                rows.append(_row(fam, ell, "error", passed=False, detail=detail))
    return VerificationReport(pd.DataFrame(rows, columns=COLUMNS))
