"""Forward transform over a sparse coordinate map, tracking only nonzeros.

Each iteration rebuilds the support: coordinates whose partner is absent
spawn two outputs (their own sign-flipped copy and an unmodified copy at
the partner slot), while coupled pairs collapse into a single sum/difference
update.  Couplings and cancellations can only shrink the work, so the
measured coordinate count never exceeds the analytic bound.  Counting
semantics: one write event per produced nonzero per iteration.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import index
from .dense import EmbedConfig, InputMatrix, PHASE, PauliTermList, embed
from .errors import DomainError

#: A produced value below this fraction of its pair magnitude counts as an
#: exact cancellation and is pruned.
PRUNE_RELATIVE = 1e-15


@dataclass
class SparseCoordinateMap:
    """Map from coordinate index to complex value, nonzeros only."""

    qubits: int
    entries: dict[int, complex] = field(default_factory=dict)
    stage: int = 0

    def __post_init__(self):
        index.check_qubits(self.qubits)
        top = index.coordinate_count(self.qubits)
        for r in self.entries:
            if not 0 <= r < top:
                raise DomainError(f"coordinate index {r} out of range for {self.qubits} qubits")

    def __len__(self) -> int:
        return len(self.entries)

    @classmethod
    def from_matrix(cls, matrix, config: EmbedConfig | None = None) -> "SparseCoordinateMap":
        """Embed a matrix keeping only nonzero coordinates (including pad entries)."""
        cfg = config if config is not None else EmbedConfig()
        m = matrix if isinstance(matrix, InputMatrix) else InputMatrix.from_dense(matrix)
        qubits = cfg.resolve_qubits(m.n)
        entries: dict[int, complex] = {}
        if m.dense is not None:
            rows, cols = np.nonzero(m.dense)
            values = m.dense[rows, cols]
        else:
            rows, cols, values = m.coo
        keys = index.interlace_array(rows, cols)
        for r, v in zip(keys.tolist(), values.tolist()):
            if v != 0:
                entries[int(r)] = complex(v)
        delta = complex(cfg.pad_delta)
        if delta != 0:
            side = 1 << qubits
            tail = np.arange(m.n, side)
            for r in index.interlace_array(tail, tail).tolist():
                entries[int(r)] = delta
        return cls(qubits=qubits, entries=entries, stage=0)

    def to_coordinate_array(self) -> np.ndarray:
        out = np.zeros(index.coordinate_count(self.qubits), dtype=np.complex128)
        for r, v in self.entries.items():
            out[r] = v
        return out


@dataclass
class WorkloadStats:
    """Per-iteration produced-coordinate counts and the matching analytic bound."""

    per_iteration: list[int]
    total: int
    bound: float


def workload_bound(l: int, qubits: int) -> float:
    """Worst-case total coordinate count for l initial nonzeros.

    2(N-1)l while the support can still double every iteration (l <= N);
    once saturation kicks in (l >= N) the count is N^2 (log2(l/N) + 2(1 -
    l/N^2)).  Both forms give 2N(N-1) at l = N.
    """
    index.check_qubits(qubits)
    side = 1 << qubits
    total = index.coordinate_count(qubits)
    if not 0 <= l <= total:
        raise DomainError(f"initial nonzero count {l} out of range 0..{total}")
    if l <= side:
        return float(2 * (side - 1) * l)
    density = l / total
    return total * (np.log2(l / side) + 2.0 * (1.0 - density))


def random_support(l: int, qubits: int, seed: int = 0) -> SparseCoordinateMap:
    """l distinct coordinates at seeded random indices with generic nonzero values.

    Values are uniform on [0.5, 1.5) rather than all ones: equal values
    cancel pairwise under the difference update, which would distort the
    produced-coordinate counts the exact-regime analysis predicts.
    """
    index.check_qubits(qubits)
    total = index.coordinate_count(qubits)
    if not 0 <= l <= total:
        raise DomainError(f"support size {l} out of range 0..{total}")
    rng = np.random.default_rng(seed)
    if l == total:
        keys = np.arange(total, dtype=np.uint64)
    else:
        keys = rng.choice(total, size=l, replace=False).astype(np.uint64)
    values = rng.uniform(0.5, 1.5, size=l)
    entries = {int(r): complex(v) for r, v in zip(keys.tolist(), values.tolist())}
    return SparseCoordinateMap(qubits=qubits, entries=entries, stage=0)


def sparse_forward(smap: SparseCoordinateMap,
                   threshold: float = 0.0) -> tuple[PauliTermList, WorkloadStats]:
    """Run the transform on the nonzero support and count every write."""
    qubits = smap.qubits
    keys = np.fromiter(smap.entries.keys(), dtype=np.uint64, count=len(smap.entries))
    vals = np.fromiter(smap.entries.values(), dtype=np.complex128, count=len(smap.entries))
    live = vals != 0
    keys, vals = keys[live], vals[live]
    initial = int(keys.size)

    per_iteration: list[int] = []
    for q in range(qubits):
        if keys.size == 0:
            per_iteration.append(0)
            continue
        mask = np.uint64(3 << (2 * q))
        order = np.argsort(keys)
        keys, vals = keys[order], vals[order]
        partners = keys ^ mask
        pos = np.searchsorted(keys, partners)
        pos = np.minimum(pos, keys.size - 1)
        coupled = keys[pos] == partners
        high = ((keys >> np.uint64(2 * q + 1)) & np.uint64(1)).astype(bool)

        out_keys, out_vals = [], []
        pair_low = coupled & ~high
        if pair_low.any():
            low_keys = keys[pair_low]
            a = vals[pair_low]
            b = vals[pos[pair_low]]
            total = a + b
            diff = a - b
            scale = PRUNE_RELATIVE * (np.abs(a) + np.abs(b))
            keep = np.abs(total) > scale
            out_keys.append(low_keys[keep])
            out_vals.append(total[keep])
            keep = np.abs(diff) > scale
            out_keys.append(low_keys[keep] ^ mask)
            out_vals.append(diff[keep])
        single = ~coupled
        if single.any():
            sk = keys[single]
            sv = vals[single]
            out_keys.append(sk)
            out_vals.append(np.where(high[single], -sv, sv))
            out_keys.append(sk ^ mask)
            out_vals.append(sv)
        keys = np.concatenate(out_keys) if out_keys else keys[:0]
        vals = np.concatenate(out_vals) if out_vals else vals[:0]
        per_iteration.append(int(keys.size))

    stats = WorkloadStats(per_iteration=per_iteration,
                          total=int(sum(per_iteration)),
                          bound=workload_bound(initial, qubits))
    k = index.count_y_array(keys, qubits)
    coeffs = vals * PHASE[k & np.uint64(3)] * 2.0 ** -qubits
    if threshold > 0:
        keep = np.abs(coeffs) >= threshold
        keys, coeffs = keys[keep], coeffs[keep]
    return PauliTermList(qubits, keys, coeffs, threshold), stats
