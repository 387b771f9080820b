""" Dense operators, partial traces, spectral ordering and Haar sampling """

# Import necessary libraries
import pytest
import numpy as np
from fractions import Fraction

# Import custom modules
from utils.errors import ContractError, UsageError
from config.settings import RuntimeSettings
from linalg_core.operators import (
    denseOperator, hermEig, kron, mixtureOf, numericRank, partialTrace, partialTraceOperator, randomDensity,
    randomPureState, stateVector,
)
from linalg_core.haar import conjugate, haarDistance, haarUnitary, splitStreams
from linalg_core.serialization import operatorFromJson, operatorToJson, tableToCsv
from linalg_core.symmetrizers import subsetSymmetrizer

def test_partial_trace_of_product_state(rng):
    a = randomDensity(2, rng)
    b = randomDensity(3, rng)
    rho = np.kron(a, b)
    np.testing.assert_allclose(partialTrace(rho, [0], (2, 3)), a, atol=1e-12)
    np.testing.assert_allclose(partialTrace(rho, [1], (2, 3)), b, atol=1e-12)

def test_bell_marginal_is_maximally_mixed(bellDensity):
    np.testing.assert_allclose(partialTrace(bellDensity, [1], (2, 2)), np.eye(2) / 2, atol=1e-12)

def test_partial_trace_operator_keeps_factor_dims(rng):
    a, b, c = randomDensity(2, rng), randomDensity(3, rng), randomDensity(2, rng)
    rho = denseOperator(np.kron(np.kron(a, b), c), (2, 3, 2))
    outer = partialTraceOperator(rho, [2, 0])
    assert outer.factor_dims == (2, 2)
    np.testing.assert_allclose(outer.matrix, np.kron(a, c), atol=1e-12)
    middle = partialTraceOperator(rho, [1])
    assert middle.factor_dims == (3,)
    np.testing.assert_allclose(middle.matrix, b, atol=1e-12)

def test_partial_trace_operator_rejects_empty_keep(bellDensity):
    with pytest.raises(UsageError):
        partialTraceOperator(denseOperator(bellDensity, (2, 2)), [])

def test_mixture_of_pure_states_is_a_density(rng):
    vectors = [randomPureState(5, rng) for _ in range(3)]
    rho = mixtureOf(vectors, rng)
    assert np.trace(rho).real == pytest.approx(1.0)
    values, _ = hermEig(rho)
    assert values[-1] > -1e-12
    assert numericRank(rho, threshold=1e-9) == 3

def test_kron_multiplies_factor_dims(rng):
    out = kron(denseOperator(randomDensity(2, rng)), denseOperator(randomDensity(3, rng)))
    assert out.factor_dims == (2, 3)
    assert out.dim == 6

def test_dense_operator_rejects_mismatched_factors():
    with pytest.raises(ContractError):
        denseOperator(np.eye(4), (2, 3))

def test_state_vector_checks_norm():
    with pytest.raises(ContractError):
        stateVector([1.0, 1.0])

def test_herm_eig_orders_non_increasing(rng):
    rho = randomDensity(6, rng)
    values, vectors = hermEig(rho)
    assert np.all(np.diff(values) <= 1e-12)
    np.testing.assert_allclose(vectors @ np.diag(values) @ vectors.conj().T, rho, atol=1e-10)

def test_herm_eig_rejects_non_hermitian():
    with pytest.raises(ContractError):
        hermEig(np.array([[0, 1], [0, 0]], dtype=complex))

def test_haar_unitary_is_unitary_and_seeded():
    u = haarUnitary(5, seed=7)
    np.testing.assert_allclose(u @ u.conj().T, np.eye(5), atol=1e-12)
    np.testing.assert_allclose(haarUnitary(5, seed=7), u)

def test_special_unitary_has_unit_determinant():
    u = haarUnitary(4, seed=3, special=True)
    assert abs(np.linalg.det(u) - 1) < 1e-10

def test_conjugation_keeps_the_spectrum(rng):
    rho = randomDensity(4, rng)
    moved = conjugate(haarUnitary(4, rng), rho)
    np.testing.assert_allclose(hermEig(moved)[0], hermEig(rho)[0], atol=1e-12)

def test_haar_distance_is_frobenius():
    u = haarUnitary(3, seed=5)
    assert haarDistance(u, u) == 0.0
    assert haarDistance(u, -u) == pytest.approx(2 * np.sqrt(3))

def test_split_streams_are_deterministic():
    first = [g.random() for g in splitStreams(11, 3)]
    second = [g.random() for g in splitStreams(11, 3)]
    assert first == second
    assert len(set(first)) == 3

def test_split_streams_needs_a_shard():
    with pytest.raises(UsageError):
        splitStreams(0, 0)

def test_symmetrizer_is_a_projector_of_the_right_rank():
    P = subsetSymmetrizer((2, 2, 2), range(3)).toDense()
    np.testing.assert_allclose(P @ P, P, atol=1e-12)
    assert numericRank(P) == 4
    assert subsetSymmetrizer((2, 2), range(2)).exactTrace() == Fraction(3)

def test_operator_json_keeps_entries(rng):
    op = denseOperator(randomDensity(3, rng), hermitian=True)
    back = operatorFromJson(operatorToJson(op), hermitian=True)
    np.testing.assert_allclose(back.matrix, op.matrix)

def test_operator_json_checks_entry_count():
    with pytest.raises(ContractError):
        operatorFromJson({"dim": 2, "entries": [[1, 0]]})

def test_csv_table_has_header():
    text = tableToCsv([{"p_max": 0.5, "mc_fraction": 0.25}])
    assert text.splitlines()[0] == "p_max,mc_fraction"

def test_thread_cap_reads_environment(monkeypatch):
    monkeypatch.setenv("QCORR_THREADS", "3")
    RuntimeSettings.reset()
    assert RuntimeSettings.threadCap() == 3
    monkeypatch.setenv("QCORR_THREADS", "zero")
    RuntimeSettings.reset()
    assert RuntimeSettings.threadCap() == 1
