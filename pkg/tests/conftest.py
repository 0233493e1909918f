import numpy as np
import pytest
from hypothesis import strategies as st


@pytest.fixture
def rng():
    return np.random.default_rng(20261017)


def random_state(rng, dim):
    v = rng.normal(size=dim) + 1j * rng.normal(size=dim)
    return v / np.linalg.norm(v)


def random_operator(rng, dim):
    return rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))


finite = st.floats(min_value=-10, max_value=10, allow_nan=False, allow_infinity=False)
complex_vectors = st.lists(st.tuples(finite, finite), min_size=2, max_size=2).map(
    lambda pairs: np.array([complex(a, b) for a, b in pairs])
).filter(lambda v: np.linalg.norm(v) > 1e-3)
