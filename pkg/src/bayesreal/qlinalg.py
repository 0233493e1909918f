"""
Dense complex linear algebra for one- and two-particle dichotomic systems.

States are 1-D complex arrays of length 2 or 4 and operators are square
complex arrays of the same sizes. Two-particle amplitudes use the index
``2*i + j`` where ``i`` labels particle (2) and ``j`` labels particle (1),
so ``tensor(a, b)`` is the ket ``|a^(2)>|b^(1)>``.
"""

from __future__ import annotations

from functools import reduce
from typing import Sequence

import numpy as np

from .errors import DegenerateStateError, InvalidDimensionError, InvalidStateError

SUPPORTED_DIMS = (2, 4)
NORM_TOL = 1e-12


def as_state(v, dim: int | None = None) -> np.ndarray:
    """Validate and convert ``v`` to a complex state vector."""
    arr = np.asarray(v, dtype=complex)
    if arr.ndim != 1 or arr.shape[0] not in SUPPORTED_DIMS:
        raise InvalidDimensionError(f"state must have length 2 or 4, got shape {arr.shape}")
    if dim is not None and arr.shape[0] != dim:
        raise InvalidDimensionError(f"expected dimension {dim}, got {arr.shape[0]}")
    if not np.all(np.isfinite(arr)):
        raise InvalidStateError("state has non-finite amplitudes")
    return arr


def as_operator(a, dim: int | None = None) -> np.ndarray:
    """Validate and convert ``a`` to a complex square operator."""
    arr = np.asarray(a, dtype=complex)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] not in SUPPORTED_DIMS:
        raise InvalidDimensionError(f"operator must be 2x2 or 4x4, got shape {arr.shape}")
    if dim is not None and arr.shape[0] != dim:
        raise InvalidDimensionError(f"expected dimension {dim}, got {arr.shape[0]}")
    if not np.all(np.isfinite(arr)):
        raise InvalidStateError("operator has non-finite entries")
    return arr


def inner(a, b) -> complex:
    """<a|b>, antilinear in the first argument."""
    a, b = as_state(a), as_state(b)
    if a.shape != b.shape:
        raise InvalidDimensionError("inner product of states with different dimensions")
    return complex(np.vdot(a, b))


def norm_squared(v) -> float:
    v = as_state(v)
    return float(np.vdot(v, v).real)


def is_normalized(v, atol: float = NORM_TOL) -> bool:
    return abs(norm_squared(v) - 1.0) <= atol


def normalize(v) -> np.ndarray:
    v = as_state(v)
    n2 = float(np.vdot(v, v).real)
    if n2 == 0.0:
        raise DegenerateStateError("cannot normalize the zero vector")
    return v / np.sqrt(n2)


def tensor(a, b) -> np.ndarray:
    """Two-particle ket from single-particle kets; ``a`` is particle (2)."""
    a, b = as_state(a, 2), as_state(b, 2)
    return np.kron(a, b)


def kron(a, b) -> np.ndarray:
    """Two-particle operator ``a (x) b`` with ``a`` acting on particle (2)."""
    a, b = as_operator(a, 2), as_operator(b, 2)
    return np.kron(a, b)


def projector(v, normalize_first: bool = False) -> np.ndarray:
    """Rank-one projector ``|v><v|``.

    ``v`` must be normalized unless ``normalize_first`` is set.
    """
    v = as_state(v)
    n2 = float(np.vdot(v, v).real)
    if n2 == 0.0:
        raise DegenerateStateError("projector onto the zero vector")
    if normalize_first:
        v = v / np.sqrt(n2)
    elif abs(n2 - 1.0) > NORM_TOL:
        raise InvalidStateError(f"state is not normalized (<v|v> = {n2!r})")
    return np.outer(v, v.conj())


def dagger(a) -> np.ndarray:
    return as_operator(a).conj().T


def trace_product(ops: Sequence) -> complex:
    """Tr(op_1 op_2 ... op_k)."""
    if len(ops) == 0:
        raise InvalidDimensionError("trace of an empty product")
    mats = [as_operator(op) for op in ops]
    dim = mats[0].shape[0]
    if any(m.shape[0] != dim for m in mats):
        raise InvalidDimensionError("operators in the product have different dimensions")
    return complex(np.trace(reduce(np.matmul, mats)))


def apply(op, v) -> np.ndarray:
    """Matrix-vector product; no normalization is applied."""
    op, v = as_operator(op), as_state(v)
    if op.shape[0] != v.shape[0]:
        raise InvalidDimensionError(f"operator of dim {op.shape[0]} applied to state of dim {v.shape[0]}")
    return op @ v


def identity(dim: int) -> np.ndarray:
    if dim not in SUPPORTED_DIMS:
        raise InvalidDimensionError(f"unsupported dimension {dim}")
    return np.eye(dim, dtype=complex)


def is_projector(p, atol: float = NORM_TOL) -> bool:
    """True when ``p`` is idempotent and self-adjoint within ``atol``."""
    p = as_operator(p)
    return bool(np.allclose(p @ p, p, rtol=0.0, atol=atol) and np.allclose(p, p.conj().T, rtol=0.0, atol=atol))
