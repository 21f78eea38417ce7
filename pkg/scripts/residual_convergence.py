#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Residual of the radial Schrödinger equation for the ground state of each
analytic family as the grid step is halved. Prints one line per grid and
plots log(residual) against log(step).
"""
import argparse

import matplotlib.pyplot as plt
import numpy as np

from central_susy import (CentralPoschlTeller,
                          CoulombRIndep,
                          HarmonicG1,
                          PhysicsConfig,
                          RadialGrid,
                          ground_state,
                          schrodinger_residual)


def main():
    p = argparse.ArgumentParser(description="residual under step halving")
    p.add_argument("-ell", type=float, default=2.0, help="angular momentum")
    p.add_argument("-nHalvings", type=int, default=5, help="number of halvings")
    p.add_argument("-rmax", type=float, default=20.0)
    p.add_argument("-plot", action="store_true")
    args = p.parse_args()

    cfg = PhysicsConfig()
    families = [HarmonicG1(omega=1.0), CentralPoschlTeller(k0=1.0), CoulombRIndep(kappa=1.0)]

    fig, ax = plt.subplots()
    for fam in families:
        grid = RadialGrid(1e-3, args.rmax, 101)
        gs = ground_state(fam, args.ell, grid, cfg)
        steps, residuals = [], []
        for _ in range(args.nHalvings + 1):
            residual = schrodinger_residual(gs, grid, cfg)
            steps.append(grid.step)
            residuals.append(residual)
            print(f"{fam.family_id:10s} n={len(grid):6d} h={grid.step:.3e} residual={residual:.3e}")
            grid = grid.refined()
        orders = np.log2(np.array(residuals[:-1]) / np.array(residuals[1:]))
        print(f"{fam.family_id:10s} observed orders: {np.round(orders, 2)}")
        ax.loglog(steps, residuals, marker="o", label=fam.family_id)

    ax.set_xlabel("step h")
    ax.set_ylabel("max residual / max|u|")
    ax.legend(frameon=False)
    if args.plot:
        plt.show()


if __name__ == "__main__":
    main()
