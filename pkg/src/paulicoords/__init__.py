"""Pauli-string coefficient transforms for square operators.

The dense path turns an n x n matrix into its 4^Q Pauli-string coefficients
in 4^Q log2(2^Q) arithmetic operations; the sparse path tracks nonzero
coordinates only and reports workload statistics.  A brute-force trace
oracle, a restricted-Fock-space boson model, an eigensolver with a residual
contract, a scaling bench, file formats, a CLI, and a scikit-learn style
transformer round out the package.
"""

from .boson import BosonConfig, DEMO_CONFIG, FockBasis, first_order_energy, \
    fock_basis, hamiltonian_matrix, hamiltonian_parts, interaction_coefficient, \
    mode_energy
from .dense import CoordinateVector, EmbedConfig, InputMatrix, PauliTermList, \
    embed, finalize, forward, forward_iterations, inverse
from .eigen import Spectrum, eigen_hermitian, expectation, ground_energy_sweep
from .errors import (DimensionError, DomainError, FormatError, NumericError,
                     PauliCoordsError, ResourceLimitError, StageError)
from .estimator import PauliDecomposer, check_square_matrix
from .index import (count_y_crumbs, deinterlace, interlace, num_qubits_for,
                    partner, pauli_label, self_sign)
from .oracle import oracle_decompose, oracle_reconstruct, pauli_matrix
from .sparse import (SparseCoordinateMap, WorkloadStats, random_support,
                     sparse_forward, workload_bound)

__version__ = "0.1.0"

__all__ = [
    "BosonConfig", "DEMO_CONFIG", "FockBasis", "first_order_energy", "fock_basis",
    "hamiltonian_matrix", "hamiltonian_parts", "interaction_coefficient", "mode_energy",
    "CoordinateVector", "EmbedConfig", "InputMatrix", "PauliTermList",
    "embed", "finalize", "forward", "forward_iterations", "inverse",
    "Spectrum", "eigen_hermitian", "expectation", "ground_energy_sweep",
    "DimensionError", "DomainError", "FormatError", "NumericError",
    "PauliCoordsError", "ResourceLimitError", "StageError",
    "PauliDecomposer", "check_square_matrix",
    "count_y_crumbs", "deinterlace", "interlace", "num_qubits_for",
    "partner", "pauli_label", "self_sign",
    "oracle_decompose", "oracle_reconstruct", "pauli_matrix",
    "SparseCoordinateMap", "WorkloadStats", "random_support",
    "sparse_forward", "workload_bound",
    "__version__",
]
