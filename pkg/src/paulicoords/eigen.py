"""Dense Hermitian eigensolver with a residual contract, plus Pauli expectations.

The solver is LAPACK via numpy.linalg.eigh; the contract enforced here is
the residual bound ||A v - w v|| <= 1e-8 ||A|| for every returned pair, not
any particular algorithm.  Pauli-term expectation values act on statevectors
through bit operations alone (X flips a bit, Z signs it, Y does both with a
phase), so they never materialize an operator matrix.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import index
from .boson import BosonConfig, hamiltonian_parts
from .dense import PauliTermList
from .errors import DimensionError, DomainError, NumericError, ResourceLimitError

MAX_EIGEN_DIM = 2048
HERMITIAN_ATOL = 1e-10
RESIDUAL_RTOL = 1e-8


@dataclass
class Spectrum:
    """Ascending eigenvalues and, optionally, the ground-state vector."""

    eigenvalues: np.ndarray
    ground_state: np.ndarray | None = None


def eigen_hermitian(a, want_ground_state: bool = True) -> Spectrum:
    """Full spectrum of a Hermitian matrix, verified against the residual bound."""
    a = np.asarray(a, dtype=np.complex128)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DimensionError(f"need a square matrix, got shape {a.shape}")
    if a.shape[0] > MAX_EIGEN_DIM:
        raise ResourceLimitError(f"dimension {a.shape[0]} exceeds cap {MAX_EIGEN_DIM}")
    scale = max(1.0, float(np.abs(a).max(initial=0.0)))
    if float(np.abs(a - a.conj().T).max(initial=0.0)) > HERMITIAN_ATOL * scale:
        raise DomainError("matrix is not Hermitian within tolerance")
    try:
        values, vectors = np.linalg.eigh(a)
    except np.linalg.LinAlgError as exc:
        raise NumericError(f"eigensolver failed to converge: {exc}") from exc
    operator_norm = float(np.abs(values).max(initial=0.0))
    residuals = np.linalg.norm(a @ vectors - vectors * values, axis=0)
    if np.any(residuals > RESIDUAL_RTOL * max(operator_norm, np.finfo(float).tiny)):
        raise NumericError(f"residual {residuals.max():.3e} exceeds "
                           f"{RESIDUAL_RTOL:.0e} * ||A|| = {RESIDUAL_RTOL * operator_norm:.3e}")
    ground = vectors[:, 0] if want_ground_state else None
    return Spectrum(eigenvalues=values, ground_state=ground)


def ground_energy_sweep(cfg: BosonConfig, couplings) -> list[tuple[float, float]]:
    """Ground-state energy E L per coupling value, by exact diagonalization."""
    h0, v1 = hamiltonian_parts(cfg)
    free = np.diag(h0)
    out = []
    for lam in couplings:
        spectrum = eigen_hermitian(free + float(lam) * v1, want_ground_state=False)
        out.append((float(lam), float(spectrum.eigenvalues[0])))
    return out


def _popcount_phase(state_bits: np.ndarray, sign_mask: int) -> np.ndarray:
    signed = np.bitwise_count(state_bits & np.uint64(sign_mask))
    return np.where(signed & np.uint64(1), -1.0, 1.0)


def apply_pauli_string(r: int, qubits: int, psi: np.ndarray) -> np.ndarray:
    """S_r applied to a statevector via bit operations."""
    if not 0 <= r < index.coordinate_count(qubits):
        raise DomainError(f"index {r} out of range for {qubits} qubits")
    psi = np.asarray(psi, dtype=np.complex128)
    if psi.shape != (1 << qubits,):
        raise DimensionError(f"statevector must have length {1 << qubits}")
    flip_mask = 0
    sign_mask = 0
    y_count = 0
    for q in range(qubits):
        crumb = (r >> (2 * q)) & 3
        if crumb in (1, 2):
            flip_mask |= 1 << q
        if crumb in (2, 3):
            sign_mask |= 1 << q
        if crumb == 2:
            y_count += 1
    source = np.arange(1 << qubits, dtype=np.uint64) ^ np.uint64(flip_mask)
    phase = (1j ** y_count) * _popcount_phase(source, sign_mask)
    return phase * psi[source]


def expectation(terms: PauliTermList, psi: np.ndarray) -> complex:
    """Sum of coefficient-weighted string expectations <psi|S_r|psi>."""
    psi = np.asarray(psi, dtype=np.complex128)
    if psi.shape != (1 << terms.qubits,):
        raise DimensionError(
            f"statevector must have length {1 << terms.qubits} for {terms.qubits} qubits")
    total = 0j
    for r, coeff in terms.items():
        total += coeff * np.vdot(psi, apply_pauli_string(r, terms.qubits, psi))
    return complex(total)
