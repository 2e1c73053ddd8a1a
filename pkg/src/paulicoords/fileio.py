"""Text formats: matrices (dense or COO), Pauli term lists, boson configs.

Dense matrix files:    header ``dense <n>``, then n rows of n whitespace-
separated entries, each a single complex token (``1.5``, ``1+2j``, ``-3j``).
COO matrix files:      header ``coo <n> <nnz>``, then nnz lines ``i j re im``.
Term files:            one ``<label> <re> <im>`` line per term, labels over
{I,X,Y,Z} sorted lexicographically; ``#`` lines are comments.
Boson configs:         whitespace-separated ``key=value`` tokens with keys
Lx Ly Lz Mx My Mz Nmax and optional mass lambda delta.
"""

from __future__ import annotations

import numpy as np

from .boson import BosonConfig
from .dense import InputMatrix, PauliTermList
from .errors import FormatError


def format_complex_token(value) -> str:
    value = complex(value)
    if value.imag == 0:
        return repr(value.real)
    sign = "+" if value.imag >= 0 else "-"
    return f"{value.real!r}{sign}{abs(value.imag)!r}j"


def _parse_complex_token(token: str, line: int) -> complex:
    try:
        return complex(token)
    except ValueError:
        raise FormatError(f"bad complex entry {token!r}", line=line) from None


def _parse_float(token: str, line: int, what: str) -> float:
    try:
        return float(token)
    except ValueError:
        raise FormatError(f"bad {what} {token!r}", line=line) from None


def _parse_int(token: str, line: int, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise FormatError(f"bad {what} {token!r}", line=line) from None


def read_matrix(fh) -> InputMatrix:
    lines = fh.read().splitlines()
    row_at = 0
    while row_at < len(lines) and not lines[row_at].strip():
        row_at += 1
    if row_at == len(lines):
        raise FormatError("empty matrix file", line=1)
    header = lines[row_at].split()
    header_line = row_at + 1
    if header[0] == "dense":
        if len(header) != 2:
            raise FormatError("dense header must be 'dense <n>'", line=header_line)
        n = _parse_int(header[1], header_line, "dimension")
        entries = []
        consumed = 0
        for offset, raw in enumerate(lines[row_at + 1:], start=header_line + 1):
            if not raw.strip():
                continue
            tokens = raw.split()
            if len(tokens) != n:
                raise FormatError(f"expected {n} entries, got {len(tokens)}", line=offset)
            entries.append([_parse_complex_token(tok, offset) for tok in tokens])
            consumed += 1
            if consumed == n:
                break
        if consumed != n:
            raise FormatError(f"expected {n} rows, got {consumed}", line=len(lines))
        return InputMatrix.from_dense(np.array(entries, dtype=np.complex128))
    if header[0] == "coo":
        if len(header) != 3:
            raise FormatError("coo header must be 'coo <n> <nnz>'", line=header_line)
        n = _parse_int(header[1], header_line, "dimension")
        nnz = _parse_int(header[2], header_line, "entry count")
        rows, cols, values = [], [], []
        for offset, raw in enumerate(lines[row_at + 1:], start=header_line + 1):
            if not raw.strip():
                continue
            tokens = raw.split()
            if len(tokens) != 4:
                raise FormatError("coo entry must be 'i j re im'", line=offset)
            rows.append(_parse_int(tokens[0], offset, "row"))
            cols.append(_parse_int(tokens[1], offset, "column"))
            values.append(complex(_parse_float(tokens[2], offset, "real part"),
                                  _parse_float(tokens[3], offset, "imaginary part")))
            if len(rows) == nnz:
                break
        if len(rows) != nnz:
            raise FormatError(f"expected {nnz} entries, got {len(rows)}", line=len(lines))
        try:
            return InputMatrix.from_coo(n, rows, cols, values)
        except ValueError as exc:
            raise FormatError(str(exc), line=header_line) from exc
    raise FormatError(f"unknown matrix format {header[0]!r}", line=header_line)


def write_matrix(fh, matrix: InputMatrix, fmt: str | None = None) -> None:
    if fmt is None:
        fmt = "coo" if matrix.coo is not None else "dense"
    if fmt == "dense":
        dense = matrix.to_dense()
        fh.write(f"dense {matrix.n}\n")
        for row in dense:
            fh.write(" ".join(format_complex_token(v) for v in row) + "\n")
    elif fmt == "coo":
        if matrix.coo is not None:
            rows, cols, values = matrix.coo
        else:
            rows, cols = np.nonzero(matrix.dense)
            values = matrix.dense[rows, cols]
        fh.write(f"coo {matrix.n} {len(rows)}\n")
        for i, j, v in zip(rows, cols, values):
            v = complex(v)
            fh.write(f"{int(i)} {int(j)} {v.real!r} {v.imag!r}\n")
    else:
        raise ValueError(f"unknown matrix format {fmt!r}")


def read_terms(fh, qubits: int | None = None) -> PauliTermList:
    pairs = []
    width = None
    for number, raw in enumerate(fh.read().splitlines(), start=1):
        text = raw.strip()
        if not text or text.startswith("#"):
            continue
        tokens = text.split()
        if len(tokens) != 3:
            raise FormatError("term line must be '<label> <re> <im>'", line=number)
        label = tokens[0]
        if any(ch not in "IXYZ" for ch in label):
            raise FormatError(f"bad Pauli label {label!r}", line=number)
        if width is None:
            width = len(label)
        elif len(label) != width:
            raise FormatError(
                f"label {label!r} has {len(label)} letters, expected {width}", line=number)
        pairs.append((label, complex(_parse_float(tokens[1], number, "real part"),
                                     _parse_float(tokens[2], number, "imaginary part"))))
    if not pairs:
        if qubits is None:
            raise FormatError("empty term file needs an explicit qubit count", line=1)
        return PauliTermList(qubits, np.array([], dtype=np.uint64),
                             np.array([], dtype=np.complex128))
    if qubits is not None and width != qubits:
        raise FormatError(f"labels have {width} letters but {qubits} qubits were requested",
                          line=1)
    try:
        return PauliTermList.from_pairs(pairs)
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


def write_terms(fh, terms: PauliTermList, metadata: dict | None = None,
                workload=None) -> None:
    for key, value in (metadata or {}).items():
        fh.write(f"# {key}={value}\n")
    if workload is not None:
        for q, produced in enumerate(workload.per_iteration):
            fh.write(f"# work: iteration {q} wrote {produced}\n")
        bound = int(workload.bound) if float(workload.bound).is_integer() else workload.bound
        fh.write(f"# work: total={workload.total} bound={bound}\n")
    for label, coeff in terms.labels():
        fh.write(f"{label} {coeff.real!r} {coeff.imag!r}\n")


_CONFIG_KEYS = {
    "Lx": float, "Ly": float, "Lz": float,
    "Mx": int, "My": int, "Mz": int,
    "mass": float, "Nmax": int, "lambda": float, "delta": float,
}
_REQUIRED_KEYS = ("Lx", "Ly", "Lz", "Mx", "My", "Mz", "Nmax")


def read_boson_config(fh) -> BosonConfig:
    values: dict[str, float] = {}
    for number, raw in enumerate(fh.read().splitlines(), start=1):
        text = raw.split("#", 1)[0].strip()
        if not text:
            continue
        for token in text.split():
            if "=" not in token:
                raise FormatError(f"expected key=value, got {token!r}", line=number)
            key, _, value = token.partition("=")
            if key not in _CONFIG_KEYS:
                raise FormatError(f"unknown config key {key!r}", line=number)
            if key in values:
                raise FormatError(f"duplicate config key {key!r}", line=number)
            try:
                values[key] = _CONFIG_KEYS[key](value)
            except ValueError:
                raise FormatError(f"bad value for {key}: {value!r}", line=number) from None
    missing = [key for key in _REQUIRED_KEYS if key not in values]
    if missing:
        raise FormatError(f"missing config keys: {', '.join(missing)}")
    try:
        return BosonConfig(
            box=(values["Lx"], values["Ly"], values["Lz"]),
            modes_per_axis=(values["Mx"], values["My"], values["Mz"]),
            mass=values.get("mass", 0.0),
            coupling=values.get("lambda", 0.0),
            max_particles=values["Nmax"],
            pad_delta=values.get("delta", 0.0),
        )
    except ValueError as exc:
        raise FormatError(str(exc)) from exc
