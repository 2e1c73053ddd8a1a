"""Dense in-place transform between matrix entries and Pauli-string coefficients.

The pipeline is: embed the n x n input into the 4^Q coordinate array (one
slot per matrix entry of the padded 2^Q side), run Q paired-update
iterations in place, then scale by 2^-Q and the per-index phase i^k(r)
(k = number of Y crumbs).  Each iteration couples every coordinate with the
partner obtained by flipping both bits of one crumb; one iteration per
qubit gives the 4^Q log-side operation count.  The same iterations run the
inverse because the per-qubit update squares to twice the identity.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from . import index
from .errors import DimensionError, DomainError, StageError

#: i^k for k mod 4, and its reciprocal, indexed by Y-crumb count.
PHASE = np.array([1, 1j, -1, -1j], dtype=np.complex128)
PHASE_INV = np.array([1, -1j, -1, 1j], dtype=np.complex128)

#: Permutation tables and phase vectors are memoized up to this register size
#: (4^10 entries); beyond it they are recomputed per call to bound cache memory.
_CACHE_QUBITS = 10


def _morton_gather_tables(qubits: int) -> tuple[np.ndarray, np.ndarray]:
    """(rows, cols) such that matrix[rows, cols].ravel() lists entries in
    coordinate order.

    Built tiled: an aligned 2^k x 2^k tile maps onto one contiguous block of
    4^k coordinates, so both the gather here and the matching scatter stay
    cache-friendly instead of striding randomly across the whole matrix.
    """
    if qubits <= _CACHE_QUBITS:
        return _morton_gather_tables_cached(qubits)
    return _build_morton_gather_tables(qubits)


@lru_cache(maxsize=3)
def _morton_gather_tables_cached(qubits: int) -> tuple[np.ndarray, np.ndarray]:
    return _build_morton_gather_tables(qubits)


def _build_morton_gather_tables(qubits: int) -> tuple[np.ndarray, np.ndarray]:
    tile_qubits = min(qubits, 5)
    tile = 1 << tile_qubits
    block_count = 1 << (2 * (qubits - tile_qubits))
    block_i, block_j = index.deinterlace_array(np.arange(block_count, dtype=np.uint64))
    inner_i, inner_j = index.deinterlace_array(np.arange(tile * tile, dtype=np.uint64))
    rows = (block_i[:, None] * tile + inner_i[None, :]).astype(np.intp)
    cols = (block_j[:, None] * tile + inner_j[None, :]).astype(np.intp)
    return rows, cols


def _phase_vectors(qubits: int) -> tuple[np.ndarray, np.ndarray]:
    """(i^k, i^-k) per coordinate, k the Y-crumb count."""
    if qubits <= _CACHE_QUBITS:
        return _phase_vectors_cached(qubits)
    return _build_phase_vectors(qubits)


@lru_cache(maxsize=3)
def _phase_vectors_cached(qubits: int) -> tuple[np.ndarray, np.ndarray]:
    return _build_phase_vectors(qubits)


def _build_phase_vectors(qubits: int) -> tuple[np.ndarray, np.ndarray]:
    k = index.count_y_array(np.arange(index.coordinate_count(qubits), dtype=np.uint64),
                            qubits) & np.uint64(3)
    return PHASE[k], PHASE_INV[k]


@dataclass
class InputMatrix:
    """Square matrix over the real or complex field, dense or in COO triplets."""

    n: int
    dense: np.ndarray | None = None
    coo: tuple[np.ndarray, np.ndarray, np.ndarray] | None = None
    is_complex: bool = True

    @classmethod
    def from_dense(cls, a) -> "InputMatrix":
        a = np.asarray(a)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise DimensionError(f"input matrix must be square, got shape {a.shape}")
        if a.shape[0] < 1:
            raise DimensionError("input matrix must be at least 1 x 1")
        is_complex = np.iscomplexobj(a)
        return cls(n=a.shape[0], dense=np.ascontiguousarray(a, dtype=np.complex128),
                   is_complex=is_complex)

    @classmethod
    def from_coo(cls, n, rows, cols, values) -> "InputMatrix":
        rows = np.asarray(rows, dtype=np.int64)
        cols = np.asarray(cols, dtype=np.int64)
        values = np.asarray(values, dtype=np.complex128)
        if not (rows.shape == cols.shape == values.shape):
            raise DimensionError("COO arrays must have matching lengths")
        if n < 1:
            raise DimensionError("input matrix must be at least 1 x 1")
        if rows.size and (rows.min() < 0 or rows.max() >= n or cols.min() < 0 or cols.max() >= n):
            raise DomainError(f"COO indices out of range for n={n}")
        if len({(i, j) for i, j in zip(rows.tolist(), cols.tolist())}) != rows.size:
            raise DomainError("duplicate (row, col) pair in COO input")
        is_complex = bool(np.any(values.imag != 0))
        return cls(n=n, coo=(rows, cols, values), is_complex=is_complex)

    def to_dense(self) -> np.ndarray:
        if self.dense is not None:
            return self.dense.copy()
        rows, cols, values = self.coo
        out = np.zeros((self.n, self.n), dtype=np.complex128)
        out[rows, cols] = values
        return out

    def nnz(self) -> int:
        if self.dense is not None:
            return int(np.count_nonzero(self.dense))
        return int(np.count_nonzero(self.coo[2]))


@dataclass
class EmbedConfig:
    """Embedding parameters: diagonal padding value and optional register override."""

    pad_delta: complex = 0.0
    qubits: int | None = None

    def resolve_qubits(self, n: int) -> int:
        needed = index.num_qubits_for(n)
        if self.qubits is None:
            return needed
        if self.qubits < needed:
            raise DimensionError(
                f"{n} x {n} matrix does not fit a {self.qubits}-qubit register "
                f"(needs at least {needed})")
        return index.check_qubits(self.qubits)


@dataclass
class CoordinateVector:
    """Flat array of 4^Q coordinates, mutated in place across the Q iterations."""

    qubits: int
    data: np.ndarray
    stage: int = 0

    def __post_init__(self):
        index.check_qubits(self.qubits)
        if self.data.shape != (index.coordinate_count(self.qubits),):
            raise DimensionError(
                f"coordinate array must have length {index.coordinate_count(self.qubits)}")


@dataclass
class PauliTermList:
    """Final output: coordinate indices paired with complex coefficients.

    Indices are kept sorted, which coincides with lexicographic label order
    (I < X < Y < Z matches crumb values 0 < 1 < 2 < 3, highest crumb first).
    """

    qubits: int
    indices: np.ndarray
    coefficients: np.ndarray
    threshold: float = 0.0

    def __post_init__(self):
        index.check_qubits(self.qubits)
        self.indices = np.asarray(self.indices, dtype=np.uint64)
        self.coefficients = np.asarray(self.coefficients, dtype=np.complex128)
        if self.indices.shape != self.coefficients.shape or self.indices.ndim != 1:
            raise DimensionError("indices and coefficients must be 1-d and matching")
        if self.indices.size:
            if np.any(self.indices[1:] <= self.indices[:-1]):
                order = np.argsort(self.indices, kind="stable")
                self.indices = self.indices[order]
                self.coefficients = self.coefficients[order]
                if np.any(self.indices[1:] == self.indices[:-1]):
                    raise DomainError("duplicate term index")
            if int(self.indices[-1]) >= index.coordinate_count(self.qubits):
                raise DomainError("term index out of range for the register size")

    def __len__(self) -> int:
        return int(self.indices.size)

    def items(self):
        for r, c in zip(self.indices.tolist(), self.coefficients.tolist()):
            yield int(r), c

    def labels(self):
        return [(index.pauli_label(r, self.qubits), c) for r, c in self.items()]

    def coefficient_vector(self) -> np.ndarray:
        out = np.zeros(index.coordinate_count(self.qubits), dtype=np.complex128)
        out[self.indices] = self.coefficients
        return out

    @classmethod
    def from_pairs(cls, pairs, qubits=None, threshold=0.0) -> "PauliTermList":
        """Build from (label or index, coefficient) pairs; qubits inferred from labels."""
        indices, coeffs = [], []
        for key, c in pairs:
            if isinstance(key, str):
                r, q = index.label_to_index(key)
                if qubits is None:
                    qubits = q
                elif qubits != q:
                    raise DomainError(f"label {key!r} has {q} letters, expected {qubits}")
            else:
                r = int(key)
            indices.append(r)
            coeffs.append(complex(c))
        if qubits is None:
            raise DomainError("qubit count required when no labels are given")
        return cls(qubits, np.array(indices, dtype=np.uint64),
                   np.array(coeffs, dtype=np.complex128), threshold)


def embed(matrix, config: EmbedConfig | None = None) -> CoordinateVector:
    """Copy matrix entries into coordinate slots; pad the enlarged diagonal with delta."""
    cfg = config if config is not None else EmbedConfig()
    m = matrix if isinstance(matrix, InputMatrix) else InputMatrix.from_dense(matrix)
    qubits = cfg.resolve_qubits(m.n)
    side = 1 << qubits
    delta = complex(cfg.pad_delta)
    if m.dense is not None:
        if m.n == side and delta == 0:
            padded = m.dense
        else:
            padded = np.zeros((side, side), dtype=np.complex128)
            padded[:m.n, :m.n] = m.dense
            if delta != 0 and m.n < side:
                padded[range(m.n, side), range(m.n, side)] = delta
        rows, cols = _morton_gather_tables(qubits)
        data = padded[rows, cols].reshape(-1)
    else:
        data = np.zeros(index.coordinate_count(qubits), dtype=np.complex128)
        rows, cols, values = m.coo
        data[index.interlace_array(rows, cols)] = values
        if delta != 0 and m.n < side:
            tail = np.arange(m.n, side)
            data[index.interlace_array(tail, tail)] = delta
    return CoordinateVector(qubits=qubits, data=data, stage=0)


def _paired_update_all(data: np.ndarray, qubits: int) -> None:
    """Run all Q in-place iterations: sum at the 0/1 crumb, difference at 3/2.

    One scratch quarter is reused across iterations; repeatedly allocating
    multi-megabyte temporaries costs more than the arithmetic at large Q.
    """
    scratch = np.empty(4 ** (qubits - 1), dtype=np.complex128)
    for q in range(qubits):
        view = data.reshape(4 ** (qubits - 1 - q), 4, 4 ** q)
        held = scratch.reshape(view.shape[0], view.shape[2])
        for low, high in ((0, 3), (1, 2)):
            np.copyto(held, view[:, high])
            np.subtract(view[:, low], held, out=view[:, high])
            view[:, low] += held


def forward_iterations(c: CoordinateVector) -> CoordinateVector:
    """Apply the Q paired-update iterations in place (stage 0 -> Q)."""
    if c.stage != 0:
        raise StageError(f"forward iterations need stage 0, got {c.stage}")
    _paired_update_all(c.data, c.qubits)
    c.stage = c.qubits
    return c


def finalize(c: CoordinateVector, threshold: float = 0.0) -> PauliTermList:
    """Scale stage-Q coordinates by 2^-Q i^k(r) and drop terms below threshold."""
    if c.stage != c.qubits:
        raise StageError(f"finalize needs stage {c.qubits}, got {c.stage}")
    every = np.arange(index.coordinate_count(c.qubits), dtype=np.uint64)
    phase, _ = _phase_vectors(c.qubits)
    coeffs = c.data * phase
    coeffs *= 2.0 ** -c.qubits
    if threshold > 0:
        keep = np.abs(coeffs) >= threshold
        every, coeffs = every[keep], coeffs[keep]
    return PauliTermList(c.qubits, every, coeffs, threshold)


def forward(matrix, config: EmbedConfig | None = None, threshold: float = 0.0) -> PauliTermList:
    """Full dense pipeline: embed, iterate, finalize."""
    return finalize(forward_iterations(embed(matrix, config)), threshold)


def inverse(terms, qubits: int | None = None) -> np.ndarray:
    """Rebuild the embedded 2^Q x 2^Q matrix from coefficients.

    Accepts a :class:`PauliTermList` or a full coefficient array of length
    4^Q.  Multiplies by i^-k(r), reruns the same Q iterations (the paired
    update squares to 2I per qubit, so no further scaling is needed), and
    scatters coordinates back to matrix positions.
    """
    if isinstance(terms, PauliTermList):
        qubits = terms.qubits
        coeffs = terms.coefficient_vector()
    else:
        coeffs = np.asarray(terms, dtype=np.complex128)
        if qubits is None:
            size = coeffs.size
            qubits = max(1, (size.bit_length() - 1) // 2)
        if coeffs.shape != (index.coordinate_count(qubits),):
            raise DimensionError(
                f"coefficient array must have length {index.coordinate_count(qubits)}")
    _, phase_inv = _phase_vectors(qubits)
    data = coeffs * phase_inv
    _paired_update_all(data, qubits)
    side = 1 << qubits
    rows, cols = _morton_gather_tables(qubits)
    out = np.empty((side, side), dtype=np.complex128)
    out[rows, cols] = data.reshape(rows.shape)
    return out
