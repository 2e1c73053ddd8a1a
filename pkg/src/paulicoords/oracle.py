"""Brute-force reference path: explicit Pauli-string matrices and trace inner products.

Ground truth for tests.  Deliberately shares nothing with the fast modules
beyond the label convention: strings are built by naive Kronecker products
and coefficients by c_r = Tr(S_r A) / N, which costs O(N^4) overall.  Size
caps keep runs interactive; do not lift them, speed is the fast path's job.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from . import index
from .dense import PauliTermList
from .errors import DimensionError, ResourceLimitError

ORACLE_MAX_QUBITS = 8

SINGLE_QUBIT = (
    np.eye(2, dtype=np.complex128),
    np.array([[0, 1], [1, 0]], dtype=np.complex128),
    np.array([[0, -1j], [1j, 0]], dtype=np.complex128),
    np.array([[1, 0], [0, -1]], dtype=np.complex128),
)


def _check_oracle_size(qubits: int) -> None:
    if qubits > ORACLE_MAX_QUBITS:
        raise ResourceLimitError(
            f"oracle is capped at {ORACLE_MAX_QUBITS} qubits, got {qubits}")


def pauli_matrix(r: int, qubits: int) -> np.ndarray:
    """Dense matrix of one Pauli string, highest crumb as the leftmost factor."""
    index.check_qubits(qubits)
    _check_oracle_size(qubits)
    if not 0 <= r < index.coordinate_count(qubits):
        raise DimensionError(f"index {r} out of range for {qubits} qubits")
    out = SINGLE_QUBIT[(r >> (2 * (qubits - 1))) & 3]
    for q in range(qubits - 2, -1, -1):
        out = np.kron(out, SINGLE_QUBIT[(r >> (2 * q)) & 3])
    return out


@lru_cache(maxsize=4)
def _basis_stack(qubits: int) -> np.ndarray:
    """All 4^Q string matrices stacked; cached for the small sizes tests sweep."""
    return np.stack([pauli_matrix(r, qubits) for r in range(index.coordinate_count(qubits))])


def oracle_decompose(a) -> PauliTermList:
    """Coefficients by trace inner product: c_r = Tr(S_r A) / N, for every r."""
    a = np.asarray(a, dtype=np.complex128)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DimensionError(f"need a square matrix, got shape {a.shape}")
    side = a.shape[0]
    if side < 2 or side & (side - 1):
        raise DimensionError(f"side must be a power of two >= 2, got {side}")
    qubits = side.bit_length() - 1
    _check_oracle_size(qubits)
    if qubits <= 5:
        coeffs = np.einsum("rij,ji->r", _basis_stack(qubits), a) / side
    else:
        coeffs = np.array([np.sum(pauli_matrix(r, qubits) * a.T) / side
                           for r in range(index.coordinate_count(qubits))])
    every = np.arange(index.coordinate_count(qubits), dtype=np.uint64)
    return PauliTermList(qubits, every, coeffs)


def oracle_reconstruct(terms: PauliTermList) -> np.ndarray:
    """Sum of coefficient-weighted string matrices."""
    _check_oracle_size(terms.qubits)
    side = 1 << terms.qubits
    out = np.zeros((side, side), dtype=np.complex128)
    for r, c in terms.items():
        out += c * pauli_matrix(r, terms.qubits)
    return out
