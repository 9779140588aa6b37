"""Independent numerical oracles for the closed-form spectrum.

Everything here works in oscillator units x = r*sqrt(m*omega/hbar),
eps = E/(hbar*omega), where the radial problem reads

    u'' = [x^2 + l(l+1)/x^2 - 2*sqrt(beta)/x - 2*eps] u

and the analytic bound states carry the Gaussian factor exactly e^{-x^2/2}
(at a truncation point rho1*rho^2 = x^2, since rho^2 = 2*eps*x^2 and
rho1 = 1/(2*eps)).  Two structurally different solvers are provided:
Numerov shooting with log-derivative matching, and a symmetric tridiagonal
finite-difference eigensolver.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np
from scipy.integrate import simpson
from scipy.linalg import eigvalsh_tridiagonal

from .truncation import QesSolution


@dataclass(frozen=True)
class RadialGrid:
    x_min: float = 1e-6
    x_max: float = 10.0
    step: float = 1e-3

    def __post_init__(self):
        if self.x_min <= 0 or self.x_max <= self.x_min or self.step <= 0:
            raise ValueError("need 0 < x_min < x_max and step > 0")
        if (self.x_max - self.x_min) / self.step < 1e3:
            raise ValueError("grid too coarse: need at least 10^3 steps")

    @property
    def n_points(self):
        return int(round((self.x_max - self.x_min) / self.step)) + 1

    def points(self):
        return self.x_min + self.step * np.arange(self.n_points)


@dataclass(frozen=True)
class ShootResult:
    epsilon: float
    node_count: int
    mismatch: float
    grid: RadialGrid


@dataclass(frozen=True)
class WavefunctionTable:
    x: np.ndarray
    u: np.ndarray
    v: np.ndarray
    norm: float


def dimensionless_ode_rhs(x: float, epsilon: float, beta: float, l: int) -> float:
    """f(x) in u'' = f(x) u, oscillator units."""
    if x <= 0:
        raise ValueError("x must be positive")
    return x * x + l * (l + 1) / (x * x) - 2.0 * math.sqrt(beta) / x - 2.0 * epsilon


def _f_array(xs, epsilon, beta, l):
    sb = math.sqrt(beta)
    return xs * xs + l * (l + 1) / (xs * xs) - 2.0 * sb / xs - 2.0 * epsilon


def _numerov_sweep(fs, h, u0, u1):
    """Integrate u'' = f u forward over fs from two starting values."""
    w = 1.0 - (h * h / 12.0) * fs
    wl = w.tolist()
    u = [0.0] * len(fs)
    u[0], u[1] = u0, u1
    for i in range(1, len(fs) - 1):
        u[i + 1] = ((12.0 - 10.0 * wl[i]) * u[i] - wl[i - 1] * u[i - 1]) / wl[i + 1]
    return np.asarray(u)


def _match_index(fs):
    """Index of the outermost classical turning point (last f < 0)."""
    neg = np.nonzero(fs < 0)[0]
    if neg.size == 0:
        return len(fs) // 2
    return min(int(neg[-1]), len(fs) - 3)


def _series_start(x, epsilon, beta, l):
    """Small-x value of u from a four-term power series.

    In oscillator units the substitution u = x^{l+1} e^{-x^2/2} w(x) turns
    the radial equation into the same three-term recursion with
    rho0 -> 2*sqrt(beta), rho1 -> 1 and a -> -2*epsilon + (2l+3); four terms
    of w leave a relative start error of O(x^4), so the outward sweep keeps
    the integrator's fourth-order accuracy.
    """
    r0 = 2.0 * math.sqrt(beta)
    a = -2.0 * epsilon + (2 * l + 3)
    d1 = -r0 / (2 * (l + 1))
    d2 = (a - r0 * d1) / (2 * (2 * l + 3))
    d3 = ((a + 2.0) * d1 - r0 * d2) / (3 * (2 * l + 4))
    w = 1.0 + x * (d1 + x * (d2 + x * d3))
    return x ** (l + 1) * math.exp(-x * x / 2.0) * w


def _shoot_once(xs, h, epsilon, beta, l):
    """Outward/inward Numerov sweeps; returns (mismatch, u_out, u_in, m)."""
    fs = _f_array(xs, epsilon, beta, l)
    m = max(_match_index(fs), 2)
    u_out = _numerov_sweep(fs[: m + 2], h,
                           _series_start(xs[0], epsilon, beta, l),
                           _series_start(xs[1], epsilon, beta, l))
    fr = fs[m - 1:][::-1]
    xr = xs[m - 1:][::-1]
    u_rev = _numerov_sweep(fr, h, math.exp(-xr[0] ** 2 / 2), math.exp(-xr[1] ** 2 / 2))
    u_in = u_rev[::-1]
    # log-derivative difference at the match point, scale-free
    k = m - (m - 1)  # index of xs[m] inside u_in
    d_out = (u_out[m + 1] - u_out[m - 1]) / (2 * h)
    d_in = (u_in[k + 1] - u_in[k - 1]) / (2 * h)
    denom = abs(u_out[m] * u_in[k])
    mismatch = (d_out * u_in[k] - d_in * u_out[m]) / denom if denom > 0 else math.inf
    return mismatch, u_out, u_in, m


def numerov_shoot(beta, l, epsilon_bracket, grid=RadialGrid(), tol=1e-8,
                  max_iter=200) -> ShootResult:
    """Bisect the log-derivative mismatch over an epsilon bracket.

    The bracket must straddle a sign change of the mismatch (odd number of
    eigenvalues inside).
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    xs = grid.points()
    h = grid.step
    lo, hi = epsilon_bracket
    f_lo = _shoot_once(xs, h, lo, beta, l)[0]
    f_hi = _shoot_once(xs, h, hi, beta, l)[0]
    if math.copysign(1, f_lo) == math.copysign(1, f_hi):
        raise ValueError(f"no eigenvalue in bracket ({lo}, {hi}): "
                         f"mismatch {f_lo:.3g} .. {f_hi:.3g} does not change sign")
    mid = 0.5 * (lo + hi)
    f_mid = math.inf
    for _ in range(max_iter):
        mid = 0.5 * (lo + hi)
        f_mid, u_out, u_in, m = _shoot_once(xs, h, mid, beta, l)
        if abs(f_mid) < tol or hi - lo < 1e-14:
            break
        if math.copysign(1, f_mid) == math.copysign(1, f_lo):
            lo, f_lo = mid, f_mid
        else:
            hi = mid
    else:
        raise RuntimeError(f"shooting failed to converge: bracket ({lo}, {hi}), "
                           f"last mismatch {f_mid:.3g}")
    if abs(f_mid) >= tol and hi - lo >= 1e-14:
        raise RuntimeError(f"shooting stalled: |mismatch| = {abs(f_mid):.3g} >= tol")
    nodes = int(np.count_nonzero(np.diff(np.sign(u_out[1:m + 1])) != 0))
    return ShootResult(epsilon=mid, node_count=nodes, mismatch=f_mid, grid=grid)


def numerov_eigenfunction(beta, l, epsilon, grid=RadialGrid()):
    """Glued outward/inward solution at a converged epsilon, unit-normalized."""
    xs = grid.points()
    _, u_out, u_in, m = _shoot_once(xs, grid.step, epsilon, beta, l)
    scale = u_out[m] / u_in[1]
    u = np.concatenate([u_out[:m], scale * u_in[1:]])
    u /= math.sqrt(simpson(u * u, x=xs))
    return xs, u


def matrix_spectrum(beta, l, grid=RadialGrid(), k_levels=1, tol=1e-5):
    """Lowest k_levels eigenvalues of the finite-difference Hamiltonian.

    Second-order central differences with Dirichlet walls at x = 0 and
    x = x_max; the symmetric tridiagonal matrix is diagonalized by LAPACK
    bisection.  The wall sits at the origin, not at grid.x_min: u(0) = 0 is
    exact, whereas forcing u(x_min) = 0 at x_min > 0 floors the eigenvalue
    error at about u'(0)^2 * x_min regardless of step.
    """
    if k_levels < 1:
        raise ValueError("k_levels must be >= 1")
    if grid.step ** 2 > tol:
        warnings.warn(f"grid step {grid.step} too coarse for an O(step^2) "
                      f"error below {tol}", stacklevel=2)
    h = grid.step
    xs = h * np.arange(1, int(round(grid.x_max / h)))
    sb = math.sqrt(beta)
    v = 0.5 * xs * xs + l * (l + 1) / (2 * xs * xs) - sb / xs
    diag = 1.0 / (h * h) + v
    off = np.full(len(xs) - 1, -0.5 / (h * h))
    vals = eigvalsh_tridiagonal(diag, off, select="i",
                                select_range=(0, k_levels - 1), lapack_driver="stebz")
    return [float(e) for e in vals]


def eval_wavefunction(sol: QesSolution, grid=RadialGrid()) -> WavefunctionTable:
    """Sample the analytic u(x) = x^{l+1} e^{-x^2/2} v(sqrt(2 eps) x), normalized.

    `grid` is a RadialGrid or any array of strictly positive sample points.
    """
    xs = grid.points() if isinstance(grid, RadialGrid) else np.asarray(grid, dtype=float)
    if xs.ndim != 1 or len(xs) < 3 or xs[0] <= 0:
        raise ValueError("need at least 3 strictly positive sample points")
    eps = float(sol.epsilon)
    rho = math.sqrt(2.0 * eps) * xs
    v = np.polynomial.polynomial.polyval(rho, sol.coefficient_floats())
    u = xs ** (sol.l + 1) * np.exp(-xs * xs / 2.0) * v
    norm = math.sqrt(simpson(u * u, x=xs))
    return WavefunctionTable(x=xs, u=u / norm, v=v, norm=norm)


def ode_residual_numeric(sol: QesSolution, grid=RadialGrid()) -> float:
    """Max relative residual of the transformed ODE along the grid.

    Evaluates rho v'' + 2(l+1 - rho1 rho^2) v' + [rho0 - rho a] v with exact
    polynomial derivatives; nonzero only through floating evaluation.
    """
    eps = float(sol.epsilon)
    rho = math.sqrt(2.0 * eps) * grid.points()
    cs = sol.coefficient_floats()
    pv = np.polynomial.polynomial
    v = pv.polyval(rho, cs)
    v1 = pv.polyval(rho, pv.polyder(cs)) if len(cs) > 1 else np.zeros_like(rho)
    v2 = pv.polyval(rho, pv.polyder(cs, 2)) if len(cs) > 2 else np.zeros_like(rho)
    rho1 = float(sol.rho1)
    a = -1.0 + (2 * sol.l + 3) * rho1
    t1 = rho * v2
    t2 = 2.0 * (sol.l + 1 - rho1 * rho * rho) * v1
    t3 = (sol.rho0 - rho * a) * v
    scale = max(np.max(np.abs(t1)), np.max(np.abs(t2)), np.max(np.abs(t3)), 1.0)
    return float(np.max(np.abs(t1 + t2 + t3)) / scale)
