"""Bit arithmetic for crumb-packed coordinate indices.

A coordinate index packs Q two-bit units ("crumbs"), one per qubit, with
crumb q occupying bits 2q (low) and 2q+1 (high).  Collected across crumbs,
the high bits form the row index i of a matrix entry and the low bits form
the column index j, so a coordinate index is the bit interleave (Morton
code) of (i, j).  Crumb values 0, 1, 2, 3 select the single-qubit operators
I, X, Y, Z; qubit Q-1 is written leftmost in labels.

All functions are pure.  The ``*_array`` variants operate on numpy uint64
arrays and back the transform kernels; they skip range validation.
"""

from __future__ import annotations

import numpy as np

from .errors import DomainError

#: Largest supported register; keeps every index inside one 64-bit word.
MAX_QUBITS = 32

_M1 = 0x5555555555555555
_M2 = 0x3333333333333333
_M4 = 0x0F0F0F0F0F0F0F0F
_M8 = 0x00FF00FF00FF00FF
_M16 = 0x0000FFFF0000FFFF
_M32 = 0x00000000FFFFFFFF


def _spread(x):
    """Spread the low 32 bits of x onto the even bit positions of a 64-bit word."""
    x = x & _M32
    x = (x | (x << 16)) & _M16
    x = (x | (x << 8)) & _M8
    x = (x | (x << 4)) & _M4
    x = (x | (x << 2)) & _M2
    x = (x | (x << 1)) & _M1
    return x


def _compact(x):
    """Inverse of :func:`_spread`: gather even bit positions into the low 32 bits."""
    x = x & _M1
    x = (x ^ (x >> 1)) & _M2
    x = (x ^ (x >> 2)) & _M4
    x = (x ^ (x >> 4)) & _M8
    x = (x ^ (x >> 8)) & _M16
    x = (x ^ (x >> 16)) & _M32
    return x


def check_qubits(qubits: int) -> int:
    if not 1 <= qubits <= MAX_QUBITS:
        raise DomainError(f"qubit count must be in 1..{MAX_QUBITS}, got {qubits}")
    return qubits


def num_qubits_for(dimension: int) -> int:
    """Smallest register size whose 2^Q side holds an n x n matrix (at least 1)."""
    if dimension < 1:
        raise DomainError(f"matrix dimension must be positive, got {dimension}")
    return max(1, (dimension - 1).bit_length())


def coordinate_count(qubits: int) -> int:
    """Number of coordinates, 4^Q."""
    return 1 << (2 * check_qubits(qubits))


def interlace(i: int, j: int, qubits: int) -> int:
    """Pack row i and column j into a coordinate index: crumb q = 2*i_q + j_q."""
    side = 1 << check_qubits(qubits)
    if not (0 <= i < side and 0 <= j < side):
        raise DomainError(f"indices ({i}, {j}) out of range for side {side}")
    return int((_spread(i) << 1) | _spread(j))


def deinterlace(r: int, qubits: int) -> tuple[int, int]:
    """Recover (row, column) from a coordinate index."""
    _check_index(r, qubits)
    return int(_compact(r >> 1)), int(_compact(r))


def partner(r: int, q: int, qubits: int) -> int:
    """Index coupled to r in iteration q: both bits of crumb q flipped (3 - r_q)."""
    _check_index(r, qubits)
    if not 0 <= q < qubits:
        raise DomainError(f"qubit position {q} out of range for {qubits} qubits")
    return r ^ (3 << (2 * q))


def count_y_crumbs(r: int, qubits: int) -> int:
    """Number of crumbs equal to 2 (binary pattern 10), the Y count of the label."""
    _check_index(r, qubits)
    mask = _M1 & ((1 << (2 * qubits)) - 1)
    return ((r >> 1) & ~r & mask).bit_count()


def self_sign(r: int, q: int) -> int:
    """Diagonal coefficient of the paired update: +1 for crumbs 0,1 and -1 for 2,3."""
    if not 0 <= q < MAX_QUBITS:
        raise DomainError(f"qubit position {q} out of range")
    return -1 if (r >> (2 * q + 1)) & 1 else 1


LETTERS = "IXYZ"


def pauli_label(r: int, qubits: int) -> str:
    """Label string over {I,X,Y,Z}, highest crumb (qubit Q-1) written first."""
    _check_index(r, qubits)
    return "".join(LETTERS[(r >> (2 * q)) & 3] for q in range(qubits - 1, -1, -1))


def label_to_index(label: str) -> tuple[int, int]:
    """Parse a label back into (index, qubits).  Inverse of :func:`pauli_label`."""
    if not label:
        raise DomainError("empty Pauli label")
    r = 0
    for ch in label:
        pos = LETTERS.find(ch)
        if pos < 0:
            raise DomainError(f"invalid Pauli letter {ch!r} in label {label!r}")
        r = (r << 2) | pos
    return r, len(label)


def is_diagonal_index(r: int, qubits: int) -> bool:
    """True when every crumb is 0 or 3, i.e. the entry sits on the matrix diagonal."""
    _check_index(r, qubits)
    mask = _M1 & ((1 << (2 * qubits)) - 1)
    return (r ^ (r >> 1)) & mask == 0


def _check_index(r: int, qubits: int) -> None:
    if not 0 <= r < coordinate_count(qubits):
        raise DomainError(f"coordinate index {r} out of range for {qubits} qubits")


# ---------------------------------------------------------------------------
# Array variants (uint64 in, uint64 out; no validation).

def interlace_array(i, j):
    i = np.asarray(i, dtype=np.uint64)
    j = np.asarray(j, dtype=np.uint64)
    return (_spread(i) << np.uint64(1)) | _spread(j)


def deinterlace_array(r):
    r = np.asarray(r, dtype=np.uint64)
    return _compact(r >> np.uint64(1)), _compact(r)


def count_y_array(r, qubits: int):
    r = np.asarray(r, dtype=np.uint64)
    mask = np.uint64(_M1 & ((1 << (2 * qubits)) - 1))
    return np.bitwise_count((r >> np.uint64(1)) & ~r & mask)
