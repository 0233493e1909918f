import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from bayesreal import qlinalg
from bayesreal.errors import DegenerateStateError, InvalidDimensionError, InvalidStateError
from conftest import complex_vectors, random_operator, random_state


def test_projector_onto_up_state():
    np.testing.assert_allclose(qlinalg.projector([1, 0]), [[1, 0], [0, 0]])


def test_tensor_ordering_puts_particle_two_first():
    up, down = np.array([1, 0]), np.array([0, 1])
    # index 2i+j: particle (2) in i, particle (1) in j
    np.testing.assert_array_equal(qlinalg.tensor(up, down), [0, 1, 0, 0])
    np.testing.assert_array_equal(qlinalg.tensor(down, up), [0, 0, 1, 0])


def test_trace_of_identity():
    assert qlinalg.trace_product([qlinalg.identity(2)]) == 2
    assert qlinalg.trace_product([qlinalg.identity(4), qlinalg.identity(4)]) == 4


def test_apply_identity():
    v = np.array([0.6, 0.8j])
    np.testing.assert_array_equal(qlinalg.apply(qlinalg.identity(2), v), v)


@pytest.mark.parametrize("dim", [2, 4])
def test_projector_idempotent_and_hermitian(rng, dim):
    for _ in range(200):
        p = qlinalg.projector(random_state(rng, dim))
        np.testing.assert_allclose(p @ p, p, atol=1e-12)
        np.testing.assert_allclose(p, qlinalg.dagger(p), atol=1e-12)
        assert qlinalg.is_projector(p)


def test_trace_is_cyclic(rng):
    for _ in range(200):
        a, b = random_operator(rng, 4), random_operator(rng, 4)
        assert abs(qlinalg.trace_product([a, b]) - qlinalg.trace_product([b, a])) < 1e-12 * max(1, abs(np.trace(a @ b)))


def test_inner_product_factorises(rng):
    for _ in range(200):
        a, b, c, d = (random_state(rng, 2) for _ in range(4))
        lhs = qlinalg.inner(qlinalg.tensor(a, b), qlinalg.tensor(c, d))
        assert abs(lhs - qlinalg.inner(a, c) * qlinalg.inner(b, d)) < 1e-12


@given(complex_vectors, complex_vectors, st.complex_numbers(max_magnitude=10, allow_nan=False, allow_infinity=False))
def test_tensor_bilinear(a, b, alpha):
    np.testing.assert_allclose(qlinalg.tensor(alpha * a, b), alpha * qlinalg.tensor(a, b), atol=1e-12 * (1 + abs(alpha)) * 400)


@given(complex_vectors)
def test_normalize_then_project(v):
    p = qlinalg.projector(v, normalize_first=True)
    assert abs(np.trace(p) - 1) < 1e-12
    assert qlinalg.is_projector(p, atol=1e-10)


def test_inner_is_antilinear_in_first_slot():
    assert qlinalg.inner([1j, 0], [1, 0]) == -1j


def test_zero_vector_is_rejected():
    with pytest.raises(DegenerateStateError):
        qlinalg.projector([0, 0])
    with pytest.raises(DegenerateStateError):
        qlinalg.normalize([0, 0, 0, 0])


def test_unnormalized_projector_input_is_rejected():
    with pytest.raises(InvalidStateError):
        qlinalg.projector([1, 1])


@pytest.mark.parametrize("bad", [[1, 0, 0], np.zeros(8), np.eye(3)])
def test_unsupported_dimensions(bad):
    with pytest.raises(InvalidDimensionError):
        if np.ndim(bad) == 1:
            qlinalg.as_state(bad)
        else:
            qlinalg.as_operator(bad)


def test_mismatched_dimensions():
    with pytest.raises(InvalidDimensionError):
        qlinalg.inner([1, 0], [1, 0, 0, 0])
    with pytest.raises(InvalidDimensionError):
        qlinalg.trace_product([np.eye(2), np.eye(4)])
    with pytest.raises(InvalidDimensionError):
        qlinalg.apply(np.eye(4), [1, 0])
    with pytest.raises(InvalidDimensionError):
        qlinalg.trace_product([])


def test_non_finite_entries():
    with pytest.raises(InvalidStateError):
        qlinalg.as_state([np.nan, 1])
    with pytest.raises(InvalidStateError):
        qlinalg.as_operator([[np.inf, 0], [0, 1]])
