import numpy as np
import pytest

from paulicoords import index
from paulicoords.dense import (CoordinateVector, EmbedConfig, InputMatrix,
                               PauliTermList, embed, finalize, forward,
                               forward_iterations, inverse)
from paulicoords.errors import DimensionError, DomainError, StageError
from paulicoords.oracle import oracle_decompose, pauli_matrix

from helpers import random_complex_matrix, random_hermitian_matrix


class TestEmbed:
    def test_one_by_one_promoted(self):
        c = embed([[5.0]], EmbedConfig(pad_delta=0.0, qubits=1))
        assert c.qubits == 1
        assert c.data.tolist() == [5.0, 0.0, 0.0, 0.0]

    def test_two_by_two_layout(self):
        c = embed(np.array([[1, 2], [3, 4]]))
        assert c.data.tolist() == [1, 2, 3, 4]

    def test_pad_delta_on_new_diagonal(self):
        a = np.ones((15, 15))
        c = embed(a, EmbedConfig(pad_delta=100.0))
        assert c.qubits == 4
        assert c.data[index.interlace(15, 15, 4)] == 100.0
        assert c.data[index.interlace(15, 14, 4)] == 0.0

    def test_coo_matches_dense(self):
        rng = np.random.default_rng(0)
        a = np.zeros((5, 5), dtype=complex)
        rows, cols = [0, 2, 4, 1], [3, 2, 0, 1]
        vals = rng.standard_normal(4) + 1j * rng.standard_normal(4)
        a[rows, cols] = vals
        sparse_in = InputMatrix.from_coo(5, rows, cols, vals)
        cfg = EmbedConfig(pad_delta=2.0 - 1.0j)
        assert np.array_equal(embed(sparse_in, cfg).data, embed(a, cfg).data)

    def test_qubit_override_too_small(self):
        with pytest.raises(DimensionError):
            embed(np.eye(5), EmbedConfig(qubits=2))

    def test_duplicate_coo_rejected(self):
        with pytest.raises(DomainError):
            InputMatrix.from_coo(2, [0, 0], [1, 1], [1.0, 2.0])


class TestForwardIterations:
    def test_single_qubit_closed_form(self):
        a, b, c_, d = 1.7, -0.3 + 2j, 0.9j, -4.1
        vec = CoordinateVector(1, np.array([a, b, c_, d], dtype=complex))
        out = forward_iterations(vec)
        assert out.stage == 1
        assert np.allclose(out.data, [a + d, b + c_, b - c_, a - d], atol=0)

    def test_identity_collapses(self):
        vec = CoordinateVector(1, np.array([1, 0, 0, 1], dtype=complex))
        assert forward_iterations(vec).data.tolist() == [2, 0, 0, 0]

    def test_zeros_stay_zero(self):
        for qubits in (1, 2, 3):
            vec = CoordinateVector(qubits, np.zeros(4 ** qubits, dtype=complex))
            assert not forward_iterations(vec).data.any()

    def test_stage_guard(self):
        vec = CoordinateVector(1, np.zeros(4, dtype=complex), stage=1)
        with pytest.raises(StageError):
            forward_iterations(vec)


class TestFinalize:
    def test_single_qubit_coefficients(self):
        a, b, c_, d = 0.2, 1.0 - 1.0j, 3.5j, -0.8
        terms = forward(np.array([[a, b], [c_, d]]))
        expected = [(a + d) / 2, (b + c_) / 2, 1j * (b - c_) / 2, (a - d) / 2]
        assert np.allclose(terms.coefficient_vector(), expected, atol=1e-15)

    def test_pauli_y_input(self):
        terms = forward(np.array([[0, -1j], [1j, 0]]))
        assert np.allclose(terms.coefficient_vector(), [0, 0, 1, 0], atol=1e-15)

    def test_identity_four(self):
        terms = forward(np.eye(4), threshold=1e-12)
        assert terms.labels() == [("II", (1 + 0j))]

    def test_stage_guard(self):
        vec = embed(np.eye(2))
        with pytest.raises(StageError):
            finalize(vec)


class TestForward:
    def test_diagonal_only_iz_labels(self):
        terms = forward(np.diag(np.arange(1.0, 9.0)), threshold=1e-12)
        labels = [label for label, _ in terms.labels()]
        assert all(set(label) <= {"I", "Z"} for label in labels)
        identity_coeff = dict(terms.labels())["III"]
        assert abs(identity_coeff - np.mean(np.arange(1.0, 9.0))) < 1e-12

    def test_worked_example(self):
        terms = forward(np.array([[1.0, 2.0], [3.0, 4.0]]))
        assert np.allclose(terms.coefficient_vector(), [2.5, 2.5, -0.5j, -1.5], atol=1e-15)

    def test_matches_oracle_random(self):
        rng = np.random.default_rng(42)
        for qubits in (1, 2, 3):
            side = 1 << qubits
            for _ in range(5):
                a = random_complex_matrix(rng, side)
                fast = forward(a).coefficient_vector()
                slow = oracle_decompose(a).coefficient_vector()
                assert np.max(np.abs(fast - slow)) < 1e-13

    def test_basis_property(self):
        for qubits in (1, 2):
            for r in range(4 ** qubits):
                terms = forward(pauli_matrix(r, qubits))
                vec = terms.coefficient_vector()
                assert abs(vec[r] - 1) < 1e-12
                vec[r] = 0
                assert np.max(np.abs(vec)) < 1e-12

    def test_linearity(self):
        rng = np.random.default_rng(9)
        a = random_complex_matrix(rng, 8)
        b = random_complex_matrix(rng, 8)
        alpha, beta = 0.7 - 0.2j, -1.4 + 0.5j
        combined = forward(alpha * a + beta * b).coefficient_vector()
        split = alpha * forward(a).coefficient_vector() + beta * forward(b).coefficient_vector()
        assert np.max(np.abs(combined - split)) < 1e-12

    def test_hermitian_gives_real_coefficients(self):
        rng = np.random.default_rng(10)
        a = random_hermitian_matrix(rng, 16)
        coeffs = forward(a).coefficient_vector()
        assert np.max(np.abs(coeffs.imag)) < 1e-12

    def test_trace_identity(self):
        rng = np.random.default_rng(12)
        a = random_complex_matrix(rng, 5)
        cfg = EmbedConfig(pad_delta=3.0 + 1.0j)
        terms = forward(a, cfg)
        embedded_trace = np.trace(a) + 3 * (3.0 + 1.0j)
        assert abs(terms.coefficient_vector()[0] - embedded_trace / 8) < 1e-12

    def test_embedding_spectrum(self):
        rng = np.random.default_rng(13)
        a = random_hermitian_matrix(rng, 3)
        cfg = EmbedConfig(pad_delta=7.0)
        rebuilt = inverse(forward(a, cfg))
        values = np.linalg.eigvalsh(rebuilt)
        expected = np.sort(np.concatenate([np.linalg.eigvalsh(a), [7.0]]))
        assert np.max(np.abs(values - expected)) < 1e-12


class TestInverse:
    def test_identity_term(self):
        assert np.allclose(inverse(PauliTermList.from_pairs([("I", 1.0)])), np.eye(2), atol=0)

    def test_y_term(self):
        assert np.allclose(inverse(PauliTermList.from_pairs([("Y", 1.0)])),
                           [[0, -1j], [1j, 0]], atol=0)

    def test_round_trip_sixteen(self):
        rng = np.random.default_rng(14)
        a = random_complex_matrix(rng, 16)
        assert np.max(np.abs(inverse(forward(a)) - a)) < 1e-12

    def test_round_trip_with_padding(self):
        rng = np.random.default_rng(15)
        a = random_complex_matrix(rng, 5)
        cfg = EmbedConfig(pad_delta=2.5)
        rebuilt = inverse(forward(a, cfg))
        assert np.max(np.abs(rebuilt[:5, :5] - a)) < 1e-12
        assert np.max(np.abs(np.diag(rebuilt)[5:] - 2.5)) < 1e-12

    def test_accepts_raw_coefficient_array(self):
        coeffs = np.zeros(4, dtype=complex)
        coeffs[2] = 1.0  # Y slot
        assert np.allclose(inverse(coeffs), [[0, -1j], [1j, 0]], atol=0)

    def test_rejects_bad_length(self):
        with pytest.raises(DimensionError):
            inverse(np.ones(5, dtype=complex), qubits=1)


class TestPauliTermList:
    def test_rejects_duplicate_indices(self):
        with pytest.raises(DomainError):
            PauliTermList(1, np.array([2, 2], dtype=np.uint64),
                          np.array([1.0, 2.0], dtype=complex))

    def test_sorted_by_label(self):
        terms = PauliTermList.from_pairs([("Z", 1.0), ("I", 2.0), ("Y", 3.0)])
        assert [label for label, _ in terms.labels()] == ["I", "Y", "Z"]

    def test_mismatched_label_lengths(self):
        with pytest.raises(DomainError):
            PauliTermList.from_pairs([("XI", 1.0), ("X", 2.0)])
