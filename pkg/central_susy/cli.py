"""
Command-line front end.

Subcommands::

  central-susy families
  central-susy eval --family cpt --ell 2 --k0 1 --rmax 10 --n 1000 --out cpt.csv
  central-susy figure 3 --out figures/
  central-susy verify --family all --ell 0..6
  central-susy classify --family updown --ell 2

Exit codes: 0 success, 1 failed check or I/O error, 2 usage error.
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional, Sequence

import pandas as pd

from central_susy import dataio
from central_susy.config import PhysicsConfig, Tolerances, load_config
from central_susy.ddim import classify_ddim, ddim_broken_check, full_W_ddim, map_ell
from central_susy.exceptions import (
    CentralSusyError,
    ConfigurationError,
    DomainError,
    RegimeError,
)
from central_susy.families import (
    FAMILIES,
    CentralPoschlTeller,
    CoulombRIndep,
    Family,
    GeneralBessel,
    HarmonicG1,
    UpsideDownGm1,
)
from central_susy.figures import FIGURES, figure_data
from central_susy.grid import make_grid
from central_susy.partners import erratum_report
from central_susy.superpotential import central_potential, centrifugal_potential
from central_susy.verification import run_verification

logger = logging.getLogger("central_susy")

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2

ANALYTIC_FAMILIES = ("harmonic", "updown", "cpt", "coulomb")


class UsageError(Exception):
    """Bad command-line input."""


def parse_ells(text: str) -> List[float]:
    """``"3"``, ``"0,2,4"`` or an inclusive range ``"0..6"``."""
    try:
        if ".." in text:
            lo, hi = text.split("..")
            return [float(ell) for ell in range(int(lo), int(hi) + 1)]
        return [float(part) for part in text.split(",")]
    except ValueError:
        raise UsageError(f"cannot parse angular momenta {text!r}") from None


def build_family(args: argparse.Namespace) -> Family:
    """Construct the family named by ``--family`` from the parameter flags."""
    family_id = args.family
    if family_id == "harmonic":
        return HarmonicG1(omega=args.omega, C=args.C)
    if family_id == "updown":
        return UpsideDownGm1(omega=args.omega)
    if family_id == "cpt":
        return CentralPoschlTeller(k0=args.k0, C=args.C)
    if family_id == "coulomb":
        return CoulombRIndep(kappa=args.kappa)
    if family_id == "general":
        if args.G is None or args.R is None:
            raise UsageError("--family general needs --G and --R")
        return GeneralBessel(G=args.G, R=args.R, C=args.C)
    raise UsageError(f"unknown family {family_id!r}")


def _configuration(args: argparse.Namespace):
    cfg, tol = PhysicsConfig(), Tolerances()
    if args.config is not None:
        cfg, tol = load_config(args.config, cfg, tol)
    if getattr(args, "rel_constancy", None) is not None:
        tol = Tolerances(
            rel_constancy=args.rel_constancy,
            residual_abs=tol.residual_abs,
            quadrature_rel=tol.quadrature_rel,
            fd_step_scale=tol.fd_step_scale,
        )
    return cfg, tol


def _grid(args: argparse.Namespace):
    return make_grid(args.rmin, args.rmax, args.n, args.spacing)


def cmd_families(args: argparse.Namespace) -> int:
    for family_id, cls in FAMILIES.items():
        doc = (cls.__doc__ or "").strip().splitlines()[0]
        print(f"{family_id:10s} {cls.__name__:22s} {doc}")
    return EXIT_OK


def cmd_eval(args: argparse.Namespace) -> int:
    cfg, _ = _configuration(args)
    fam = build_family(args)
    grid = _grid(args)
    ell = map_ell(args.ell, args.D)
    sample = full_W_ddim(fam, args.ell, args.D, grid.points, cfg)
    s = cfg.sqrt_prefactor
    df = pd.DataFrame(
        {
            "r": sample.r,
            "w": sample.w,
            "W": sample.W,
            "V1": sample.W ** 2 - s * sample.W_prime,
            "V2": sample.W ** 2 + s * sample.W_prime,
            "V_central": central_potential(fam, ell, sample.r, cfg),
            "V_centrifugal": centrifugal_potential(ell, sample.r, cfg),
            "pole": sample.pole.astype(int),
        }
    )
    if sample.has_pole:
        logger.warning(
            "%d pole(s) on the grid, first at r=%.17g",
            int(sample.pole.sum()),
            sample.first_pole,
        )
    _emit(df, args.out)
    return EXIT_OK


def _emit(df: pd.DataFrame, out: Optional[str]) -> None:
    if out is None or out == "-":
        sys.stdout.write(dataio.to_csv_text(df))
    else:
        dataio.write_csv(df, out)


def cmd_figure(args: argparse.Namespace) -> int:
    out = Path(args.out)
    tables = figure_data(args.figure_id)
    for stem, df in tables.items():
        path = dataio.write_csv(df, out / f"{stem}.csv")
        print(f"wrote {path}")
    if args.figure_id == 3:
        for row in tables["figure3_normalization"].itertuples(index=False):
            print(f"ell={row.ell:d} N={row.N:.2f}")
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    cfg, tol = _configuration(args)
    grid = _grid(args)
    ells = parse_ells(args.ell)
    if args.family == "all":
        ns = argparse.Namespace(**vars(args))
        families = []
        for family_id in ANALYTIC_FAMILIES:
            ns.family = family_id
            families.append(build_family(ns))
    else:
        families = [build_family(args)]
    report = run_verification(families, ells, grid, cfg, tol)
    print(report.summary())
    if args.out is not None:
        out = Path(args.out)
        dataio.write_csv(report.table, out / "verification.csv")
        errata = erratum_report(
            [f for f in families if not isinstance(f, GeneralBessel)], ells, grid, cfg
        )
        dataio.write_csv(errata, out / "errata.csv")
    if not report.passed:
        print(f"{len(report.failures)} check(s) failed", file=sys.stderr)
        return EXIT_FAILED
    return EXIT_OK


def cmd_classify(args: argparse.Namespace) -> int:
    cfg, _ = _configuration(args)
    fam = build_family(args)
    if isinstance(fam, HarmonicG1) and args.D > 3:
        status = ddim_broken_check(args.ell, args.D)
        label = f"{fam.family_id} ell'={args.ell:g} D={args.D}"
    else:
        status = classify_ddim(fam, args.ell, args.D, cfg)
        label = f"{fam.family_id} ell={args.ell:g} D={args.D}"
    print(f"{label}: {status.status.value}")
    print(f"  {status}")
    return EXIT_OK


def _add_family_flags(p: argparse.ArgumentParser) -> None:
    choices = list(FAMILIES)
    p.add_argument("--family", required=True, choices=choices, help="family id")
    p.add_argument("--omega", type=float, default=1.0, help="oscillator frequency")
    p.add_argument("--k0", type=float, default=1.0, help="Pöschl-Teller wave number")
    p.add_argument("--kappa", type=float, default=1.0, help="Coulomb strength")
    p.add_argument("--G", type=float, default=None, help="shift ratio G (general)")
    p.add_argument("--R", type=float, default=None, help="remainder R (general)")
    p.add_argument("--C", type=float, default=0.0, help="integration constant")


def _add_grid_flags(p: argparse.ArgumentParser, rmin: float, rmax: float, n: int) -> None:
    p.add_argument("--rmin", type=float, default=rmin)
    p.add_argument("--rmax", type=float, default=rmax)
    p.add_argument("--n", type=int, default=n)
    p.add_argument("--spacing", choices=["uniform", "logarithmic"], default="uniform")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="central-susy",
        description="Shape-invariant central potentials from a unified superpotential",
    )
    p.add_argument("-v", "--verbose", action="store_true", help="debug logging")
    p.add_argument("--config", default=None, help="key=value configuration file")
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("families", help="list the families")
    sp.set_defaults(func=cmd_families)

    sp = sub.add_parser("eval", help="sample superpotential and partners to CSV")
    _add_family_flags(sp)
    sp.add_argument("--ell", type=float, required=True)
    sp.add_argument("--D", type=int, default=3)
    _add_grid_flags(sp, 0.01, 10.0, 1000)
    sp.add_argument("--out", default=None, help="CSV file; stdout if omitted")
    sp.set_defaults(func=cmd_eval)

    sp = sub.add_parser("figure", help="write the data of one figure")
    sp.add_argument("figure_id", type=int, choices=sorted(FIGURES))
    sp.add_argument("--out", default=".", help="output directory")
    sp.set_defaults(func=cmd_figure)

    sp = sub.add_parser("verify", help="run the verification suite")
    sp.add_argument("--family", required=True, choices=["all"] + list(FAMILIES))
    for name, default in (("--omega", 1.0), ("--k0", 1.0), ("--kappa", 1.0), ("--C", 0.0)):
        sp.add_argument(name, type=float, default=default)
    sp.add_argument("--G", type=float, default=None)
    sp.add_argument("--R", type=float, default=None)
    sp.add_argument("--ell", default="0..6", help="e.g. 2, 0,2,4 or 0..6")
    sp.add_argument("--rel-constancy", type=float, default=None, dest="rel_constancy")
    _add_grid_flags(sp, 0.01, 20.0, 1000)
    sp.add_argument(
        "--out", default=None, help="directory for verification.csv and errata.csv"
    )
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("classify", help="broken/unbroken SUSY classification")
    _add_family_flags(sp)
    sp.add_argument("--ell", type=float, required=True)
    sp.add_argument("--D", type=int, default=3)
    sp.set_defaults(func=cmd_classify)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    try:
        return args.func(args)
    except (UsageError, ConfigurationError, DomainError, RegimeError) as err:
        print(f"central-susy: error: {err}", file=sys.stderr)
        return EXIT_USAGE
    except (CentralSusyError, OSError) as err:
        print(f"central-susy: error: {err}", file=sys.stderr)
        return EXIT_FAILED


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
