"""Figure rendering for the CLI report paths.

Figures are written straight to files; no interactive backend is ever used.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402


def save_spectrum_figure(rows, path):
    """Scatter of dimensionless energies vs l, one marker set per degree n.

    ``rows`` are (n, l, root_index, beta_float, epsilon_float) tuples.
    """
    fig, ax = plt.subplots(figsize=(6, 4))
    degrees = sorted({r[0] for r in rows})
    for n in degrees:
        pts = [(r[1], r[4]) for r in rows if r[0] == n]
        ax.plot([p[0] for p in pts], [p[1] for p in pts], "o", label=f"n = {n}")
    ax.set_xlabel("l")
    ax.set_ylabel(r"$\epsilon = E/\hbar\omega$")
    ax.set_title("Closed-form levels of the Coulomb + oscillator potential")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_wavefunction_figure(table, path):
    """Radial function u(x) and polynomial factor v alongside each other."""
    fig, (ax1, ax2) = plt.subplots(2, 1, figsize=(6, 6), sharex=True)
    ax1.plot(table.x, table.u, lw=1.2)
    ax1.axhline(0.0, color="0.7", lw=0.6)
    ax1.set_ylabel("u(x)")
    ax2.plot(table.x, table.v, lw=1.2, color="tab:orange")
    ax2.axhline(0.0, color="0.7", lw=0.6)
    ax2.set_xlabel("x (oscillator units)")
    ax2.set_ylabel("v")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_series_figure(rows, path):
    """Tail ratio of the untruncated series against its 2*rho1/i asymptote.

    ``rows`` are (i, c_i, ratio_or_None, asymptote_or_None) tuples.
    """
    idx = [r[0] for r in rows if r[2] is not None]
    ratio = [abs(r[2]) for r in rows if r[2] is not None]
    asym = [r[3] for r in rows if r[2] is not None]
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.loglog(idx, ratio, ".", ms=3, label=r"$|c_{i+1}/c_{i-1}|$")
    ax.loglog(idx, asym, "-", lw=1, label=r"$2\rho_1/i$")
    ax.set_xlabel("i")
    ax.set_ylabel("tail ratio")
    ax.set_title("Divergence signature of the untruncated series")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
