"""Physical parameterization of the Coulomb + isotropic oscillator problem.

Lab-unit inputs live here, together with the reduction to the dimensionless
parameters (rho0, rho1, a, l) that every downstream computation consumes.
Defaults use hbar = m = omega = 1, which leaves the coupling ratio beta as
the only physical knob.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


@dataclass(frozen=True)
class PhysicalParams:
    """Problem statement in lab units: V(r) = -alpha/r + (1/2) m omega^2 r^2."""

    mass: float = 1.0
    omega: float = 1.0
    alpha: float = 1.0
    hbar: float = 1.0

    def __post_init__(self):
        if self.mass <= 0:
            raise ValueError("mass must be positive")
        if self.omega <= 0:
            raise ValueError("omega must be positive")
        if self.hbar <= 0:
            raise ValueError("hbar must be positive")
        if self.alpha < 0:
            raise ValueError("alpha must be non-negative")


@dataclass(frozen=True)
class DimensionlessParams:
    """Reduced ODE parameters.

    rho0 is the dimensionless Coulomb strength, rho1 the oscillator strength;
    the combination a = -1 + (2l+3)*rho1 is derived, never set independently.
    """

    rho0: float
    rho1: float
    l: int

    def __post_init__(self):
        if self.rho0 < 0:
            raise ValueError("rho0 must be non-negative")
        if self.rho1 <= 0:
            raise ValueError("rho1 must be positive")
        if self.l < 0:
            raise ValueError("l must be a non-negative integer")

    @property
    def a(self):
        return -1.0 + (2 * self.l + 3) * self.rho1


def beta(p: PhysicalParams) -> float:
    """Ratio of the hydrogenic energy scale m*alpha^2/hbar^2 to hbar*omega."""
    return (p.mass * p.alpha**2 / p.hbar**2) / (p.hbar * p.omega)


def reduce(p: PhysicalParams, energy: float, l: int) -> DimensionlessParams:
    """Map lab units at a trial energy E > 0 to (rho0, rho1, l).

    Uses k = sqrt(2mE)/hbar, rho0 = 2 m alpha/(hbar^2 k), rho1 = m omega/(hbar k^2);
    equivalently rho1 = hbar*omega/(2E) and rho0^2 = 2 m alpha^2/(hbar^2 E).
    """
    if energy <= 0:
        raise ValueError("energy must be positive for this potential")
    if l < 0:
        raise ValueError("l must be a non-negative integer")
    k = math.sqrt(2 * p.mass * energy) / p.hbar
    rho0 = 2 * p.mass * p.alpha / (p.hbar**2 * k)
    rho1 = p.mass * p.omega / (p.hbar * k**2)
    return DimensionlessParams(rho0=rho0, rho1=rho1, l=l)


def effective_potential(p: PhysicalParams, l: int, r: float) -> float:
    """Coulomb + oscillator + centrifugal barrier at radius r > 0."""
    if r <= 0:
        raise ValueError("r must be positive")
    return (-p.alpha / r
            + 0.5 * p.mass * p.omega**2 * r**2
            + p.hbar**2 * l * (l + 1) / (2 * p.mass * r**2))


@dataclass(frozen=True)
class EffectivePotentialSample:
    r: float
    value: float


def sample_effective_potential(p, l, radii):
    """Tabulate the effective potential over an iterable of radii."""
    return [EffectivePotentialSample(r, effective_potential(p, l, r)) for r in radii]
