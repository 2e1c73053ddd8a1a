"""Command-line front end: decompose, reconstruct, bench, boson.

Data goes to stdout only with ``--out -``; diagnostics always go to stderr.
Exit codes: 2 parse/config failure, 3 dimension error, 4 resource guard.
"""

from __future__ import annotations

import contextlib
import functools
import sys

import click
import numpy as np

from . import bench as bench_mod
from . import index
from .boson import hamiltonian_parts, first_order_energy
from .dense import EmbedConfig, InputMatrix, PauliTermList, forward, inverse
from .eigen import eigen_hermitian
from .errors import (DimensionError, DomainError, FormatError, NumericError,
                     ResourceLimitError, StageError)
from .estimator import choose_path
from .fileio import (read_boson_config, read_matrix, read_terms, write_matrix,
                     write_terms)
from .sparse import SparseCoordinateMap, WorkloadStats, sparse_forward, workload_bound


@contextlib.contextmanager
def _open_out(path: str):
    if path == "-":
        yield sys.stdout
    else:
        with open(path, "w") as fh:
            yield fh


def _exit_codes(fn):
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except FormatError as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(2)
        except (DomainError, DimensionError) as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(3)
        except (ResourceLimitError, NumericError, StageError) as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(4)
    return wrapper


def _parse_delta(text: str) -> complex:
    parts = text.split(",")
    try:
        if len(parts) == 1:
            return complex(float(parts[0]))
        if len(parts) == 2:
            return complex(float(parts[0]), float(parts[1]))
    except ValueError:
        pass
    raise FormatError(f"bad --pad-delta value {text!r}; expected <re> or <re>,<im>")


def _parse_grid(text: str) -> list[float]:
    if ":" in text:
        pieces = text.split(":")
        if len(pieces) != 3:
            raise FormatError(f"bad grid {text!r}; expected start:stop:step or a comma list")
        try:
            start, stop, step = (float(p) for p in pieces)
        except ValueError:
            raise FormatError(f"bad grid {text!r}") from None
        if step <= 0:
            raise FormatError("grid step must be positive")
        count = int(round((stop - start) / step)) + 1
        return [start + k * step for k in range(count) if start + k * step <= stop + 1e-12]
    try:
        return [float(p) for p in text.split(",") if p.strip()]
    except ValueError:
        raise FormatError(f"bad grid {text!r}") from None


@click.group()
def main():
    """Pauli-string coefficient transforms for square operators."""


@main.command()
@click.argument("input_path", type=click.Path(exists=True, dir_okay=False))
@click.option("--out", default="-", show_default=True, help="Output path, - for stdout.")
@click.option("--pad-delta", default="0", show_default=True,
              help="Diagonal padding value, <re> or <re>,<im>.")
@click.option("--qubits", type=int, default=None, help="Register size override.")
@click.option("--threshold", type=float, default=1e-12, show_default=True,
              help="Drop coefficients below this magnitude.")
@click.option("--sparse", "path_mode", flag_value="sparse", help="Force the sparse kernel.")
@click.option("--dense", "path_mode", flag_value="dense", help="Force the dense kernel.")
@click.option("--auto", "path_mode", flag_value="auto", default=True,
              help="Pick the kernel from the input density (default).")
@click.option("--count-work", is_flag=True, help="Append workload stats as comments.")
@_exit_codes
def decompose(input_path, out, pad_delta, qubits, threshold, path_mode, count_work):
    """Transform a matrix file into a sorted Pauli term list."""
    with open(input_path) as fh:
        matrix = read_matrix(fh)
    delta = _parse_delta(pad_delta)
    cfg = EmbedConfig(pad_delta=delta, qubits=qubits)
    resolved = cfg.resolve_qubits(matrix.n)
    if path_mode == "auto":
        padded = matrix.nnz() + ((1 << resolved) - matrix.n if delta != 0 else 0)
        path_mode = choose_path(padded, resolved)
    stats = None
    if path_mode == "sparse":
        terms, stats = sparse_forward(SparseCoordinateMap.from_matrix(matrix, cfg),
                                      threshold=threshold)
    else:
        terms = forward(matrix, cfg, threshold=threshold)
        if count_work:
            per_iteration = [index.coordinate_count(resolved)] * resolved
            stats = WorkloadStats(per_iteration=per_iteration,
                                  total=sum(per_iteration),
                                  bound=workload_bound(index.coordinate_count(resolved),
                                                       resolved))
    metadata = {"qubits": terms.qubits, "pad_delta": pad_delta,
                "threshold": threshold, "path": path_mode}
    with _open_out(out) as fh:
        write_terms(fh, terms, metadata=metadata, workload=stats if count_work else None)
    click.echo(f"decomposed {matrix.n} x {matrix.n} matrix into {len(terms)} terms "
               f"on {terms.qubits} qubits ({path_mode} path)", err=True)


@main.command()
@click.argument("terms_path", type=click.Path(exists=True, dir_okay=False))
@click.option("--out", default="-", show_default=True, help="Output path, - for stdout.")
@click.option("--qubits", type=int, default=None,
              help="Register size (required for an empty term file).")
@_exit_codes
def reconstruct(terms_path, out, qubits):
    """Rebuild the dense embedded matrix from a Pauli term list."""
    with open(terms_path) as fh:
        terms = read_terms(fh, qubits=qubits)
    matrix = inverse(terms)
    with _open_out(out) as fh:
        write_matrix(fh, InputMatrix.from_dense(matrix), fmt="dense")
    click.echo(f"reconstructed {matrix.shape[0]} x {matrix.shape[1]} matrix "
               f"from {len(terms)} terms", err=True)


@main.command(name="bench")
@click.option("--qmax", type=int, default=8, show_default=True,
              help="Largest register size to sweep (from 1).")
@click.option("--regimes", default="1,N,N2", show_default=True,
              help="Comma list from {1, N, N2}.")
@click.option("--seeds", type=int, default=10, show_default=True,
              help="Number of seeds (0..seeds-1) per point.")
@click.option("--out", default="-", show_default=True, help="CSV path, - for stdout.")
@_exit_codes
def bench(qmax, regimes, seeds, out):
    """Measure produced-coordinate counts across size and sparsity regimes."""
    if qmax < 1:
        raise DomainError("--qmax must be at least 1")
    regime_list = [r.strip() for r in regimes.split(",") if r.strip()]
    for regime in regime_list:
        if regime not in bench_mod.REGIMES:
            raise DomainError(f"unknown regime {regime!r}; pick from {bench_mod.REGIMES}")
    rows = bench_mod.scaling_experiment(range(1, qmax + 1), regimes=regime_list,
                                        seeds=range(seeds))
    with _open_out(out) as fh:
        bench_mod.write_csv(rows, fh)
    click.echo(f"ran {len(rows)} measurements up to {qmax} qubits", err=True)


@main.command()
@click.argument("config_path", type=click.Path(exists=True, dir_okay=False))
@click.option("--lambda-grid", "grid", default="0:5:0.25", show_default=True,
              help="Coupling grid, start:stop:step or a comma list.")
@click.option("--out", default="-", show_default=True, help="CSV path, - for stdout.")
@_exit_codes
def boson(config_path, grid, out):
    """Ground-state energies of the interacting boson model across couplings.

    Each point builds the Fock-space Hamiltonian, runs it through the
    transform and back, and diagonalizes the reconstructed operator.
    """
    with open(config_path) as fh:
        cfg = read_boson_config(fh)
    couplings = _parse_grid(grid)
    if not couplings:
        raise FormatError("coupling grid is empty")
    h0, v1 = hamiltonian_parts(cfg)
    n = h0.size
    cfg_embed = EmbedConfig(pad_delta=cfg.pad_delta)
    qubits = cfg_embed.resolve_qubits(n)
    nonzeros = int(np.count_nonzero(np.diag(h0) + v1))
    click.echo(f"n={n}, Q={qubits}, nonzeros={nonzeros}", err=True)
    slope = first_order_energy(cfg.with_coupling(1.0))
    rows = []
    for lam in couplings:
        hamiltonian = np.diag(h0) + lam * v1
        terms = forward(hamiltonian, cfg_embed)
        rebuilt = inverse(terms)
        spectrum = eigen_hermitian(rebuilt, want_ground_state=False)
        rows.append((lam, float(spectrum.eigenvalues[0]), slope * lam))
    with _open_out(out) as fh:
        fh.write("lambda,E_exact_L,E_perturbative_L\n")
        for lam, exact, perturbative in rows:
            fh.write(f"{lam!r},{exact!r},{perturbative!r}\n")
    click.echo(f"swept {len(rows)} couplings from {couplings[0]} to {couplings[-1]}",
               err=True)


if __name__ == "__main__":
    main()
