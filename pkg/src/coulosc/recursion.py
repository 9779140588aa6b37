"""Three-term recursion for the series factor v(rho) of the radial solution.

The coefficients obey

    c_{i+1} = ([a + 2 rho1 (i-1)] c_{i-1} - rho0 c_i) / ((i+1)(2l+2+i))

with c_0 = 1 and c_1 = -rho0 / (2(l+1)).  Two representations are provided:

* a floating-point path for arbitrary (rho0, rho1, l), used for divergence
  diagnostics of the untruncated series, and
* an exact symbolic path valid once the energy is pinned to
  eps = n + l + 3/2, where every coefficient becomes
  rho0^(i mod 2) times a rational polynomial in beta (the parity of c_i
  equals i mod 2, by induction on the recursion).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import ratpoly
from .model import DimensionlessParams


@dataclass(frozen=True)
class BetaPoly:
    """A coefficient c_i in the form rho0**parity * poly(beta).

    Valid under the truncation substitutions rho1 = 1/(2n+2l+3) and
    rho0^2 = 4*beta/(2n+2l+3).  ``coeffs`` holds ascending powers of beta
    with trailing zeros stripped; the zero polynomial has empty coeffs.
    """

    parity: int
    coeffs: tuple

    def __post_init__(self):
        if self.parity not in (0, 1):
            raise ValueError("parity must be 0 or 1")

    @property
    def is_zero(self):
        return not self.coeffs

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def poly_at(self, beta):
        """Evaluate the polynomial factor (without the rho0 parity factor)."""
        return ratpoly.evaluate(list(self.coeffs), beta)


def _mk(parity, coeffs):
    return BetaPoly(parity, tuple(ratpoly.trim(coeffs)))


def seed_c1(dp: DimensionlessParams) -> float:
    """First coefficient past the c_0 = 1 normalization."""
    return -dp.rho0 / (2 * (dp.l + 1))


def next_coefficient(i: int, c_prev: float, c_curr: float, dp: DimensionlessParams) -> float:
    """One step of the recursion: c_{i+1} from c_{i-1} and c_i, i >= 1."""
    if i < 1:
        raise ValueError("recursion step requires i >= 1")
    num = (dp.a + 2 * dp.rho1 * (i - 1)) * c_prev - dp.rho0 * c_curr
    return num / ((i + 1) * (2 * dp.l + 2 + i))


@dataclass(frozen=True)
class SeriesTail:
    """Floating coefficients c_0..c_N of v(rho) for given (rho0, rho1, l)."""

    l: int
    rho0: float
    rho1: float
    coefficients: tuple


def coefficients_float(dp: DimensionlessParams, n_terms: int) -> SeriesTail:
    """Compute c_0..c_{n_terms} in binary64."""
    if n_terms < 1:
        raise ValueError("need n_terms >= 1")
    cs = [1.0, seed_c1(dp)]
    for i in range(1, n_terms):
        cs.append(next_coefficient(i, cs[i - 1], cs[i], dp))
    return SeriesTail(l=dp.l, rho0=dp.rho0, rho1=dp.rho1, coefficients=tuple(cs))


def tail_ratio(st: SeriesTail, i: int) -> float:
    """Same-parity ratio c_{i+1}/c_{i-1}; tends to 2*rho1/i for large i.

    That limit is the signature of e^{rho1 rho^2} growth of the untruncated
    series, which is what forces truncation in the first place.
    """
    c_prev = st.coefficients[i - 1]
    if c_prev == 0:
        raise ZeroDivisionError(f"c_{i-1} = 0; series terminated or parity-degenerate")
    return st.coefficients[i + 1] / c_prev


def truncation_substitutions(n: int, l: int):
    """Exact (rho1, a, rho0^2/beta) under eps = n + l + 3/2.

    With the energy pinned, 2*eps = 2n+2l+3 =: D and rho1 = 1/D,
    a = -2n/D, rho0^2 = 4*beta/D.
    """
    d = 2 * n + 2 * l + 3
    return Fraction(1, d), Fraction(-2 * n, d), Fraction(4, d)


def coefficients_symbolic(n: int, l: int, upto: int) -> list[BetaPoly]:
    """Exact c_0..c_upto as BetaPoly under the degree-n truncation energy."""
    if n < 1 or l < 0:
        raise ValueError("need n >= 1 and l >= 0")
    if upto < n + 2:
        raise ValueError("need upto >= n + 2 to see the constraint coefficients")
    rho1, a, rho0sq = truncation_substitutions(n, l)
    cs = [_mk(0, [Fraction(1)]), _mk(1, [Fraction(-1, 2 * (l + 1))])]
    for i in range(1, upto):
        factor = a + 2 * rho1 * (i - 1)
        denom = Fraction((i + 1) * (2 * l + 2 + i))
        prev, curr = cs[i - 1], cs[i]
        term1 = ratpoly.scale(list(prev.coeffs), factor)
        if curr.parity == 1:
            # rho0 * (rho0 * q(beta)) = rho0sq * beta * q(beta), parity 0
            term2 = ratpoly.scale(ratpoly.shift(list(curr.coeffs), 1), rho0sq)
        else:
            term2 = list(curr.coeffs)
        new = ratpoly.scale(ratpoly.sub(term1, term2), 1 / denom)
        cs.append(_mk((i + 1) % 2, new))
    return cs
