"""Shared independent oracles and small utilities for the test suite."""

import numpy as np
from scipy.integrate import simpson

from paulicoords.dense import PauliTermList


def sine_product_integral(m1, m2, m3, m4, panels=4096):
    """Composite-Simpson integral of sin(m1 pi x) ... sin(m4 pi x) over [0, 1].

    Independent ground truth for the per-axis conservation factors, which
    claim the integral equals factor / 16 on a unit side.
    """
    x = np.linspace(0.0, 1.0, panels + 1)
    y = np.ones_like(x)
    for m in (m1, m2, m3, m4):
        y = y * np.sin(m * np.pi * x)
    return float(simpson(y, x=x))


def random_complex_matrix(rng, side):
    return rng.standard_normal((side, side)) + 1j * rng.standard_normal((side, side))


def random_hermitian_matrix(rng, side):
    a = random_complex_matrix(rng, side)
    return (a + a.conj().T) / 2


def coefficient_vectors_close(a: PauliTermList, b: PauliTermList, tol):
    assert a.qubits == b.qubits
    return np.max(np.abs(a.coefficient_vector() - b.coefficient_vector()), initial=0.0) <= tol
