"""Scaling harness: produced-coordinate counts across register sizes and sparsity.

Counts are the primary metric; wall time is recorded per row but only for
context, never asserted.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .errors import DomainError, ResourceLimitError
from .sparse import random_support, sparse_forward, workload_bound

#: 4^Q coordinates at Q=12 is the memory ceiling for the harness.
MAX_BENCH_QUBITS = 12

REGIMES = ("1", "N", "N2")


@dataclass
class BenchRow:
    qubits: int
    support: int
    measured: int
    bound: float
    seed: int
    seconds: float


def regime_support(regime: str, qubits: int) -> int:
    """Initial nonzero count for a named regime: 1, N, or N^2."""
    if regime == "1":
        return 1
    if regime == "N":
        return 1 << qubits
    if regime == "N2":
        return 1 << (2 * qubits)
    raise DomainError(f"unknown regime {regime!r}; expected one of {REGIMES}")


def scaling_experiment(q_values, regimes=REGIMES, seeds=(0,)) -> list[BenchRow]:
    """One transform per (qubits, regime, seed); returns measured counts and bounds."""
    q_values = list(q_values)
    for qubits in q_values:
        if qubits > MAX_BENCH_QUBITS:
            raise ResourceLimitError(
                f"bench is capped at {MAX_BENCH_QUBITS} qubits, got {qubits}")
    rows = []
    for qubits in q_values:
        for regime in regimes:
            support = regime_support(regime, qubits)
            for seed in seeds:
                smap = random_support(support, qubits, seed=seed)
                started = time.perf_counter()
                _, stats = sparse_forward(smap)
                elapsed = time.perf_counter() - started
                rows.append(BenchRow(qubits=qubits, support=support,
                                     measured=stats.total,
                                     bound=workload_bound(support, qubits),
                                     seed=seed, seconds=elapsed))
    return rows


def write_csv(rows, fh) -> None:
    fh.write("Q,l,L_measured,L_bound,seed\n")
    for row in rows:
        bound = int(row.bound) if float(row.bound).is_integer() else row.bound
        fh.write(f"{row.qubits},{row.support},{row.measured},{bound},{row.seed}\n")
