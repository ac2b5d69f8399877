"""Three-qubit entanglement measures and control through Pluecker q-vectors."""
from .errors import ConsistencyError, TrivecError, ValidationError, VerificationError
from .oracle import OracleReport, oracle_report
from .pluecker import PVector, QVector, pluecker_pvector, qvector, qvectors
from .recipes import ControlStep, Expectation, Recipe, builtin_recipes, run
from .so6 import GeneratorTable, PairHamiltonian, build_generator_table, evolve_dual, lift, so6_to_su4
from .state import ThreeQubitState, apply_unitary, partition_matrix, reduced_density
from .tangles import TangleReport, tangle_report
from .vectors import GaugedTriple, VectorTriple, extract_triple, fix_gauge

__all__ = [
    "ConsistencyError", "TrivecError", "ValidationError", "VerificationError",
    "OracleReport", "oracle_report",
    "PVector", "QVector", "pluecker_pvector", "qvector", "qvectors",
    "ControlStep", "Expectation", "Recipe", "builtin_recipes", "run",
    "GeneratorTable", "PairHamiltonian", "build_generator_table", "evolve_dual", "lift", "so6_to_su4",
    "ThreeQubitState", "apply_unitary", "partition_matrix", "reduced_density",
    "TangleReport", "tangle_report",
    "GaugedTriple", "VectorTriple", "extract_triple", "fix_gauge",
]
