"""
Quantum conditional probabilities and the two Bayes-theorem tests of realism.

The conditional probability of event B given event A in state rho is
computed with the projection (Lueders) rule::

    w(B | A) = Tr(P_B U P_A rho P_A U^+ P_B) / Tr(P_A rho P_A)

where ``U`` is an optional evolution between the two measurements. Under
realism the static residual

    w(S1|S3) w(S2|S1 & S3) - w(S2|S3) w(S1|S2 & S3)

vanishes, and the dynamic margin

    w(S2(t)|S3) - w(S1(t0)|S3) w(S2(t)|S1(t0) & S3)

is non-negative.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from . import qlinalg
from .errors import InvalidParameterError, InvariantViolation, ZeroConditionError

#: conditioning events with probability at or below this are rejected
CONDITION_FLOOR = 1e-12
#: rounding slack tolerated outside [0, 1] before clipping
RANGE_SLACK = 1e-12
_PROJECTOR_ATOL = 1e-10


@dataclass(frozen=True)
class BayesResidual:
    lhs: float
    rhs: float
    residual: float


@dataclass(frozen=True)
class InequalityMargin:
    """Both sides of ``lhs <= rhs``; a negative margin means realism fails."""

    lhs: float
    rhs: float
    margin: float

    @property
    def violated(self) -> bool:
        return self.margin < 0.0


class Intersection(NamedTuple):
    projector: np.ndarray
    weight: float

    @property
    def scaled(self) -> np.ndarray:
        """The unnormalized projector ``weight * projector``."""
        return self.weight * self.projector


def clip_probability(value: float, what: str = "probability") -> float:
    """Clip rounding noise into [0, 1]; anything further out is a bug."""
    if not np.isfinite(value) or value < -RANGE_SLACK or value > 1.0 + RANGE_SLACK:
        raise InvariantViolation(f"{what} = {value!r} is outside [0, 1]")
    return float(min(max(value, 0.0), 1.0))


def check_probability(value: float, name: str) -> float:
    """Validate a caller-supplied probability."""
    value = float(value)
    if not np.isfinite(value) or value < -RANGE_SLACK or value > 1.0 + RANGE_SLACK:
        raise InvalidParameterError(f"{name} = {value!r} is not a probability")
    return min(max(value, 0.0), 1.0)


def _unscale(p: np.ndarray, name: str) -> np.ndarray:
    # A positive multiple s*P of a projector has Tr(p^2)/Tr(p) = s.
    tr = np.trace(p).real
    if tr <= 0.0:
        raise InvalidParameterError(f"{name} is not a positive multiple of a projector")
    scale = np.trace(p @ p).real / tr
    unit = p / scale
    if not qlinalg.is_projector(unit, atol=_PROJECTOR_ATOL):
        raise InvalidParameterError(f"{name} is not a positive multiple of a projector")
    return unit


def von_neumann_conditional(rho0, p_a, p_b, evolution=None) -> float:
    """Probability of ``p_b`` (after ``evolution``) given ``p_a`` in state ``rho0``.

    Both projector arguments may be positive multiples of projectors, such
    as the unnormalized intersection projectors; the scale cancels.
    """
    rho0 = qlinalg.as_operator(rho0)
    dim = rho0.shape[0]
    p_a = _unscale(qlinalg.as_operator(p_a, dim), "p_a")
    p_b = _unscale(qlinalg.as_operator(p_b, dim), "p_b")
    u = qlinalg.identity(dim) if evolution is None else qlinalg.as_operator(evolution, dim)

    conditioned = p_a @ rho0 @ p_a
    denominator = np.trace(conditioned).real
    if denominator <= CONDITION_FLOOR:
        raise ZeroConditionError(f"conditioning event has probability {denominator:.3e}")
    numerator = qlinalg.trace_product([p_b, u, conditioned, qlinalg.dagger(u), p_b]).real
    return clip_probability(numerator / denominator, "conditional probability")


def intersection_projector(psi, p_event) -> Intersection:
    """Projector onto the component of pure state ``psi`` lying in ``p_event``.

    ``P_{S & S3} = weight * projector`` with ``weight = ||P_S psi||^2``.
    """
    psi = qlinalg.as_state(psi)
    if not qlinalg.is_normalized(psi):
        raise InvalidParameterError("psi must be a normalized pure state")
    component = qlinalg.apply(p_event, psi)
    weight = qlinalg.norm_squared(component)
    if weight <= CONDITION_FLOOR:
        raise ZeroConditionError(f"event has probability {weight:.3e} in this state")
    return Intersection(qlinalg.projector(component, normalize_first=True), weight)


def static_bayes_residual(w_s1_s3, w_s2_given_s1s3, w_s2_s3, w_s1_given_s2s3) -> BayesResidual:
    lhs = check_probability(w_s1_s3, "w(S1|S3)") * check_probability(w_s2_given_s1s3, "w(S2|S1&S3)")
    rhs = check_probability(w_s2_s3, "w(S2|S3)") * check_probability(w_s1_given_s2s3, "w(S1|S2&S3)")
    return BayesResidual(lhs, rhs, lhs - rhs)


def dynamic_bayes_margin(w_s1_s3, w_s2_given_s1s3, w_s2_s3) -> InequalityMargin:
    """Time-dependent inequality ``w(S1|S3) w(S2(t)|S1&S3) <= w(S2(t)|S3)``.

    The remaining factor w(S1(t0) | S2(t) & S3) only enters through its
    bound ``<= 1`` and is never evaluated.
    """
    lhs = check_probability(w_s1_s3, "w(S1|S3)") * check_probability(w_s2_given_s1s3, "w(S2|S1&S3)")
    rhs = check_probability(w_s2_s3, "w(S2|S3)")
    return InequalityMargin(lhs, rhs, rhs - lhs)
