"""Scikit-learn style facade over the coordinate transform.

``PauliDecomposer`` is a stateless transformer in the sklearn sense: ``fit``
validates the operator and freezes the register size, ``transform`` maps a
square operator matrix to its full coefficient vector (length 4^Q), and
``inverse_transform`` rebuilds the embedded matrix exactly.  Inheriting
``BaseEstimator`` provides get_params/set_params so the transform composes
with pipelines and parameter search.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.exceptions import NotFittedError

from . import index
from .dense import EmbedConfig, InputMatrix, PauliTermList, forward, inverse
from .errors import DimensionError, DomainError
from .sparse import SparseCoordinateMap, sparse_forward

#: Above this embedded density the coordinate-tracking overhead stops paying off.
AUTO_DENSITY_CUTOFF = 1.0 / 8.0


def check_square_matrix(x) -> np.ndarray:
    """Validate and return a finite, square, complex128 2-d array."""
    x = np.asarray(x)
    if x.ndim != 2 or x.shape[0] != x.shape[1]:
        raise DimensionError(f"expected a square matrix, got shape {x.shape}")
    if x.shape[0] < 1:
        raise DimensionError("matrix must be at least 1 x 1")
    x = np.asarray(x, dtype=np.complex128)
    if not np.all(np.isfinite(x.real)) or not np.all(np.isfinite(x.imag)):
        raise DomainError("matrix entries must be finite")
    return x


def choose_path(nonzeros: int, qubits: int) -> str:
    """Pick 'sparse' below the density cutoff, 'dense' otherwise."""
    return "sparse" if nonzeros / index.coordinate_count(qubits) <= AUTO_DENSITY_CUTOFF \
        else "dense"


class PauliDecomposer(BaseEstimator, TransformerMixin):
    """Transform a square operator matrix into Pauli-string coefficients.

    Parameters
    ----------
    pad_delta : complex, default 0.0
        Value placed on the enlarged diagonal when the input is smaller
        than the 2^Q register side.
    qubits : int or None, default None
        Register size override; must be at least ceil(log2 n).
    threshold : float, default 0.0
        Coefficients with magnitude below this are dropped (zeroed in the
        transform output).
    path : {'auto', 'dense', 'sparse'}, default 'auto'
        Kernel choice; 'auto' tracks nonzeros only for sparse inputs.
    """

    def __init__(self, pad_delta=0.0, qubits=None, threshold=0.0, path="auto"):
        self.pad_delta = pad_delta
        self.qubits = qubits
        self.threshold = threshold
        self.path = path

    def _embed_config(self) -> EmbedConfig:
        return EmbedConfig(pad_delta=self.pad_delta, qubits=self.qubits)

    def fit(self, X, y=None):
        """Validate the operator and freeze the register size."""
        X = check_square_matrix(X)
        self.dim_ = X.shape[0]
        self.qubits_ = self._embed_config().resolve_qubits(self.dim_)
        return self

    def _check_fitted(self):
        if not hasattr(self, "qubits_"):
            raise NotFittedError("this PauliDecomposer is not fitted yet; call fit first")

    def decompose(self, X) -> PauliTermList:
        """Term-list view of the transform (indices, labels, coefficients)."""
        self._check_fitted()
        X = check_square_matrix(X)
        if X.shape[0] != self.dim_:
            raise DimensionError(f"fitted for {self.dim_} x {self.dim_} operators, "
                                 f"got {X.shape[0]} x {X.shape[0]}")
        matrix = InputMatrix.from_dense(X)
        cfg = EmbedConfig(pad_delta=self.pad_delta, qubits=self.qubits_)
        path = self.path
        if path == "auto":
            padded = matrix.nnz() + ((1 << self.qubits_) - matrix.n
                                     if complex(self.pad_delta) != 0 else 0)
            path = choose_path(padded, self.qubits_)
        if path == "sparse":
            terms, _ = sparse_forward(SparseCoordinateMap.from_matrix(matrix, cfg),
                                      threshold=self.threshold)
            return terms
        if path == "dense":
            return forward(matrix, cfg, threshold=self.threshold)
        raise DomainError(f"unknown path {self.path!r}; expected auto, dense or sparse")

    def transform(self, X) -> np.ndarray:
        """Full coefficient vector of length 4^Q (thresholded entries are zero)."""
        return self.decompose(X).coefficient_vector()

    def inverse_transform(self, coefficients) -> np.ndarray:
        """Rebuild the embedded 2^Q x 2^Q matrix from a coefficient vector."""
        self._check_fitted()
        return inverse(np.asarray(coefficients, dtype=np.complex128), qubits=self.qubits_)
