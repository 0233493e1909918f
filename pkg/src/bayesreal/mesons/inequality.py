"""
Realism tests for flavour-entangled meson pairs.

Every choice of events S1(t0) = S2(t) = {X^(2), Y^(1)} turns the
time-dependent inequality into ``F_N(t) <= 1`` for one of eight functions.
The static equality reduces to ``|1 +- p/q|^2 = 2``.
"""

from __future__ import annotations

import math
from typing import NamedTuple

import numpy as np

from .. import qlinalg
from ..conditional import InequalityMargin, dynamic_bayes_margin, intersection_projector, von_neumann_conditional
from ..errors import InvalidParameterError
from .params import MesonParams, MixingCoefficients, mixing_from_params
from .states import MesonEvent, bell_state, evolution_operator, event_vector, g_functions

F_INDICES = tuple(range(1, 9))


def f_function(index: int, t, params: MesonParams):
    """F_N at time ``t`` (seconds; scalar or array). F_N(0) = 1 for every N."""
    if index not in F_INDICES:
        raise InvalidParameterError(f"F index must be 1..8, got {index!r}")
    t = np.asarray(t, dtype=float)
    gp, gm = g_functions(t, params)
    qp = params.q_over_p
    c = 0.5 * (qp + 1 / qp)
    gamma, dgamma = params.gamma_mean, params.delta_gamma

    if index in (1, 2, 7):
        mixed = np.abs(gp - c * gm) ** 2
    elif index in (3, 4, 8):
        mixed = np.abs(gp + c * gm) ** 2
    else:
        mixed = np.abs(gp) ** 2

    if index in (1, 3):
        value = mixed * np.abs(gp) ** 2 * np.exp(2 * gamma * t)
    elif index in (2, 4, 5):
        value = mixed * np.exp((gamma - dgamma / 2) * t)
    else:
        value = mixed * np.exp((gamma + dgamma / 2) * t)
    return float(value) if value.ndim == 0 else value


def f_function_z(index: int, z, params: MesonParams):
    """F_N at ``z = Gamma t`` lifetimes."""
    return f_function(index, params.time_from_z(np.asarray(z, dtype=float)), params)


def static_equality_residual(variant: str, mix: MixingCoefficients) -> float:
    """``|1 + p/q|^2 - 2`` (``"plus"``) or ``|1 - p/q|^2 - 2`` (``"minus"``)."""
    if variant in ("plus", "+"):
        return abs(1 + mix.p_over_q) ** 2 - 2
    if variant in ("minus", "-"):
        return abs(1 - mix.p_over_q) ** 2 - 2
    raise InvalidParameterError(f"variant must be 'plus' or 'minus', got {variant!r}")


def guaranteed_violation_time(params: MesonParams) -> float:
    """2 ln 3 / |delta_gamma| in seconds.

    Past this time the CP-conserving form of the F1 inequality fails for
    every phase of the cos(delta_m t) oscillation.
    """
    if params.delta_gamma == 0:
        raise InvalidParameterError("guaranteed violation time needs a non-zero delta_gamma")
    return 2 * math.log(3) / abs(params.delta_gamma)


class TableRow(NamedTuple):
    event: MesonEvent
    index: int
    expected: str


_E = MesonEvent.of
EVENT_TABLE: tuple[TableRow, ...] = (
    TableRow(_E("M1", "M"), 1, "violates for B_s"),
    TableRow(_E("M1", "Mbar"), 1, "violates for B_s"),
    TableRow(_E("M1", "MH"), 2, "violates for B_s"),
    TableRow(_E("M2", "M"), 3, "violates for K and D"),
    TableRow(_E("M2", "Mbar"), 3, "violates for K and D"),
    TableRow(_E("M2", "MH"), 4, "violates for K and D"),
    TableRow(_E("M", "MH"), 5, "violates for K, D and B_s"),
    TableRow(_E("Mbar", "MH"), 5, "violates for K, D and B_s"),
    TableRow(_E("M", "ML"), 6, "never violates"),
    TableRow(_E("Mbar", "ML"), 6, "never violates"),
    TableRow(_E("M1", "ML"), 7, "never violates"),
    TableRow(_E("M2", "ML"), 8, "never violates"),
)


def event_margin(event: MesonEvent, t: float, params: MesonParams, alpha: float = 0.0) -> InequalityMargin:
    """Time-dependent inequality for S1(t0) = S2(t) = ``event``, by explicit matrices.

    The ratio ``lhs / rhs`` reproduces the F_N listed for the event in
    :data:`EVENT_TABLE`.
    """
    event = MesonEvent.of(*event)
    mix = mixing_from_params(params)
    psi0 = bell_state()
    rho0 = qlinalg.projector(psi0)
    p_event = qlinalg.projector(event_vector(event, mix, alpha))
    u = evolution_operator(t, params, alpha)
    pair_u = qlinalg.kron(u, u)

    w_s1_s3 = von_neumann_conditional(rho0, rho0, p_event)
    w_s2_given = von_neumann_conditional(rho0, intersection_projector(psi0, p_event).scaled, p_event, evolution=pair_u)
    w_s2_s3 = qlinalg.trace_product([p_event, pair_u @ rho0 @ qlinalg.dagger(pair_u)]).real
    return dynamic_bayes_margin(w_s1_s3, w_s2_given, w_s2_s3)

