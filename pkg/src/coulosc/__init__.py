"""Closed-form bound states of the combined Coulomb + oscillator potential.

Series-truncation solver for the radial problem with
V(r) = -alpha/r + (1/2) m omega^2 r^2: exact three-term recursion, truncation
constraints on the coupling ratio beta, assembled eigenpairs, and independent
numerical verification.
"""

from .model import DimensionlessParams, PhysicalParams, beta, effective_potential, reduce
from .recursion import BetaPoly, SeriesTail, coefficients_float, coefficients_symbolic
from .truncation import (
    ConstraintPoly,
    QesSolution,
    constraint_polynomial,
    energy_degree1,
    energy_degree2,
    general_energy,
    isolate_roots,
    solve_qes,
)
from .verify import (
    RadialGrid,
    ShootResult,
    WavefunctionTable,
    eval_wavefunction,
    matrix_spectrum,
    numerov_shoot,
)

__all__ = [
    "BetaPoly",
    "ConstraintPoly",
    "DimensionlessParams",
    "PhysicalParams",
    "QesSolution",
    "RadialGrid",
    "SeriesTail",
    "ShootResult",
    "WavefunctionTable",
    "beta",
    "coefficients_float",
    "coefficients_symbolic",
    "constraint_polynomial",
    "effective_potential",
    "energy_degree1",
    "energy_degree2",
    "eval_wavefunction",
    "general_energy",
    "isolate_roots",
    "matrix_spectrum",
    "numerov_shoot",
    "reduce",
    "solve_qes",
]

__version__ = "0.1.0"
