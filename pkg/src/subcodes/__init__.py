"""Subsystem code construction, distance optimization and lattice scanning."""

from .codegen import ConjugalPair, EliminationTrace, SubsystemCode, compute_subsystem_code, gaussian_eliminate
from .optimize import (
    DistanceProfile,
    PseudoGenerator,
    PseudoGeneratorSet,
    compute_pseudogenerators,
    find_weight_minimizer,
    optimize_logical_qubits,
    pseudo_product,
)
from .pauli import PauliOperator, anti, format_pauli, multiply, parse_pauli, single_qubit, weight

__version__ = "0.1.0"

__all__ = [
    "PauliOperator",
    "multiply",
    "anti",
    "weight",
    "single_qubit",
    "parse_pauli",
    "format_pauli",
    "ConjugalPair",
    "SubsystemCode",
    "EliminationTrace",
    "gaussian_eliminate",
    "compute_subsystem_code",
    "PseudoGenerator",
    "PseudoGeneratorSet",
    "DistanceProfile",
    "compute_pseudogenerators",
    "pseudo_product",
    "find_weight_minimizer",
    "optimize_logical_qubits",
]
