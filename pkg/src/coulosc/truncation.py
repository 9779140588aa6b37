"""Degree-n truncation constraints, their exact beta roots, and assembled states.

Terminating v(rho) at polynomial degree n pins the energy to
eps = n + l + 3/2 (oscillator condition a + 2 rho1 n = 0) and leaves one
constraint: the symbolic coefficient c_{n+1}(beta) must vanish.  Its positive
real roots are the admissible coupling ratios; each yields one closed-form
bound state.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import ratpoly, recursion
from .ratpoly import IsolatedRoot
from .recursion import BetaPoly

#: enclosure roots: |c_{n+1}| at the interval midpoint must be below this
ENCLOSURE_ZERO_TOL = Fraction(1, 10**25)


@dataclass(frozen=True)
class ConstraintPoly:
    """The symbolic c_{n+1} whose beta-roots admit a degree-n polynomial v.

    The overall rho0^parity factor is recorded but excluded from
    root-finding since rho0 > 0.
    """

    n: int
    l: int
    poly: BetaPoly


@dataclass(frozen=True)
class QesSolution:
    """One closed-form bound state.

    ``coefficients[i]`` is the rational factor of c_i = coefficients[i] *
    rho0^(i mod 2), with rho0^2 = 4*beta/(2n+2l+3).  ``epsilon`` is the
    dimensionless energy E/(hbar*omega) = n + l + 3/2, exact.
    """

    n: int
    l: int
    beta: IsolatedRoot
    epsilon: Fraction
    coefficients: tuple

    @property
    def rho0(self) -> float:
        return math.sqrt(4 * float(self.beta) / (2 * self.n + 2 * self.l + 3))

    @property
    def rho1(self) -> Fraction:
        return Fraction(1, 2 * self.n + 2 * self.l + 3)

    def coefficient_floats(self):
        """The real coefficients c_i of v(rho), parity factor applied."""
        r0 = self.rho0
        return [float(c) * (r0 if i % 2 else 1.0) for i, c in enumerate(self.coefficients)]


def constraint_polynomial(n: int, l: int) -> ConstraintPoly:
    """Build P_{n,l}(beta) = symbolic c_{n+1}; degree floor((n+1)/2) in beta."""
    cs = recursion.coefficients_symbolic(n, l, n + 2)
    poly = cs[n + 1]
    if poly.is_zero:
        raise RuntimeError(f"constraint c_{n+1} identically zero for n={n}, l={l}")
    return ConstraintPoly(n=n, l=l, poly=poly)


def isolate_roots(cp: ConstraintPoly) -> list[IsolatedRoot]:
    """All real roots with beta > 0, exact where rational, ascending."""
    if cp.poly.is_zero:
        raise ValueError("constraint polynomial is identically zero")
    return ratpoly.isolate_positive_roots(list(cp.poly.coeffs))


def solve_qes(n: int, l: int) -> list[QesSolution]:
    """One QesSolution per positive beta root of the degree-n constraint."""
    cp = constraint_polynomial(n, l)
    cs = recursion.coefficients_symbolic(n, l, n + 2)
    eps = general_energy(n, l)
    out = []
    for root in isolate_roots(cp):
        b = root.midpoint()
        coeffs = tuple(cs[i].poly_at(b) for i in range(n + 1))
        for j in (n + 1, n + 2):
            val = cs[j].poly_at(b)
            if root.is_rational:
                if val != 0:
                    raise RuntimeError(f"c_{j} nonzero at exact root beta={b}")
            elif abs(val) >= ENCLOSURE_ZERO_TOL:
                raise RuntimeError(f"c_{j} not small at enclosure root beta~{float(b)}")
        out.append(QesSolution(n=n, l=l, beta=root, epsilon=eps, coefficients=coeffs))
    return out


def energy_degree1(l: int, beta) -> float:
    """Degree-1 eigenvalue in units of hbar*omega: (2l+3)/2 + beta/(l+1)."""
    if beta < 0:
        raise ValueError("beta must be non-negative")
    if isinstance(beta, (int, Fraction)):
        return Fraction(2 * l + 3, 2) + Fraction(beta, l + 1)
    return (2 * l + 3) / 2 + beta / (l + 1)


def energy_degree2(l: int, beta) -> float:
    """Degree-2 eigenvalue in units of hbar*omega."""
    if beta < 0:
        raise ValueError("beta must be non-negative")
    if isinstance(beta, (int, Fraction)):
        return Fraction(3 * (2 * l + 3) * (l + 2), 2 * (3 * l + 4)) + Fraction(beta, 3 * l + 4)
    return 3 * (2 * l + 3) * (l + 2) / (2 * (3 * l + 4)) + beta / (3 * l + 4)


def general_energy(n: int, l: int) -> Fraction:
    """eps = n + l + 3/2, exact, for any truncation degree n >= 1."""
    if n < 1 or l < 0:
        raise ValueError("need n >= 1 and l >= 0")
    return Fraction(2 * (n + l) + 3, 2)


def residual_coefficients(n: int, l: int) -> list[BetaPoly]:
    """Exact residual of the transformed ODE for the truncated v.

    Substituting v = sum_{j<=n} c_j rho^j into
    rho v'' + 2(l+1 - rho1 rho^2) v' + [rho0 - rho a] v
    gives, at power rho^i,

        (i+1)(2l+2+i) c_{i+1} + rho0 c_i - [a + 2 rho1 (i-1)] c_{i-1}

    with c_j = 0 for j > n.  Every returned BetaPoly must be a polynomial
    multiple of the constraint P_{n,l} (zero once beta is a root).
    """
    rho1, a, rho0sq = recursion.truncation_substitutions(n, l)
    cs = recursion.coefficients_symbolic(n, l, n + 2)
    zero = BetaPoly(0, ())

    def c(j):
        if j < 0 or j > n:
            return zero
        return cs[j]

    out = []
    for i in range(n + 3):
        parity = (i + 1) % 2
        acc = ratpoly.scale(list(c(i + 1).coeffs), Fraction((i + 1) * (2 * l + 2 + i)))
        ci = c(i)
        if not ci.is_zero:
            if ci.parity == 1:
                term = ratpoly.scale(ratpoly.shift(list(ci.coeffs), 1), rho0sq)
            else:
                term = list(ci.coeffs)
            acc = ratpoly.add(acc, term)
        acc = ratpoly.sub(acc, ratpoly.scale(list(c(i - 1).coeffs), a + 2 * rho1 * (i - 1)))
        out.append(BetaPoly(parity, tuple(ratpoly.trim(acc))))
    return out
