"""
Example script showing how to build the figure data of the central
Pöschl-Teller and Bessel localization examples and view them.
"""

import matplotlib.pyplot as plt
import numpy as np

from central_susy.figures import figure_data

# Plot formatting
plt.rc("font", size=14, family="serif")

ELLS = (2, 6, 10)


def get_potential_fig():
    df = figure_data(1)["figure1"]
    fig, ax = plt.subplots(ncols=2, sharex=True, figsize=(10, 4))
    for ell in ELLS:
        ax[0].plot(df["r"], df[f"V_total_ell{ell}"], label=rf"$\ell={ell}$")
        ax[1].plot(df["r"], df[f"W_ell{ell}"])
    ax[0].set_ylim(-30, 60)
    ax[0].set_ylabel(r"$V(r) + V_{\rm Cef}(r,\ell)$")
    ax[1].set_ylabel(r"$W(r,\ell)$")
    ax[1].yaxis.tick_right()
    ax[1].yaxis.set_label_position("right")
    for a in ax:
        a.set_xlabel(r"$r$")
    ax[0].legend(frameon=False)
    plt.subplots_adjust(wspace=0.1)
    return fig, ax


def get_ground_state_fig():
    w_tilde = figure_data(2)["figure2"]
    tables = figure_data(3)
    states, constants = tables["figure3"], tables["figure3_normalization"]
    fig, ax = plt.subplots(ncols=2, figsize=(10, 4))
    for ell, N in zip(constants["ell"], constants["N"]):
        ax[0].plot(w_tilde["r"], w_tilde[f"W_tilde_ell{ell}"], label=rf"$\ell={ell}$")
        ax[1].plot(states["r"], states[f"R_ell{ell}"], label=rf"$N={N:.2f}$")
    ax[0].set_ylabel(r"$\tilde W(r,\ell)$")
    ax[1].set_ylabel(r"$R_{0\ell}(r)$")
    for a in ax:
        a.set_xlabel(r"$r$")
        a.legend(frameon=False)
    return fig, ax


def get_localization_fig():
    df = figure_data(4)["figure4"]
    fig, ax = plt.subplots()
    ax.plot(df["r"], df["f1"], label=r"$f_1$")
    ax.plot(df["r"], df["f2"], label=r"$f_2$")
    # f1/f2 is empty at the pole
    ratio = np.clip(df["f1_over_f2"], -5, 5)
    ax.plot(df["r"], ratio, ls="--", c="k", label=r"$f_1/f_2$")
    ax.axvline(5.0, c="gray", lw=0.5)
    ax.set_xlabel(r"$r$")
    ax.legend(frameon=False)
    return fig, ax


fig, ax = get_potential_fig()
# fig.savefig("potentials.png", dpi=300, bbox_inches="tight")
plt.show()
plt.clf()

fig, ax = get_ground_state_fig()
plt.show()
plt.clf()

_ = get_localization_fig()
plt.show()
