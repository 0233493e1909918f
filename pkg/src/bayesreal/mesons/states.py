"""
Flavour, CP and mass bases of a neutral meson and their time evolution.

Single-meson kets are written in the flavour basis ``(|M>, |Mbar>)``. The
pair is produced in the antisymmetric Bell state; as everywhere in the
package, the first tensor factor is particle (2).
"""

from __future__ import annotations

import enum
import math
from typing import Callable, NamedTuple

import numpy as np

from .. import qlinalg
from ..errors import InvalidParameterError, UnsupportedEventError
from .params import MesonParams, MixingCoefficients, mixing_from_params


class Basis(str, enum.Enum):
    M = "M"
    MBAR = "Mbar"
    M1 = "M1"
    M2 = "M2"
    ML = "ML"
    MH = "MH"

    @classmethod
    def parse(cls, text) -> "Basis":
        if isinstance(text, cls):
            return text
        try:
            return cls(text)
        except ValueError:
            names = ", ".join(b.value for b in cls)
            raise UnsupportedEventError(f"unknown basis state {text!r}; expected one of {names}") from None


class MesonEvent(NamedTuple):
    """Joint outcome ``{particle2, particle1}``."""

    particle2: Basis
    particle1: Basis

    @classmethod
    def of(cls, particle2, particle1) -> "MesonEvent":
        return cls(Basis.parse(particle2), Basis.parse(particle1))

    def __str__(self) -> str:
        return f"{{{self.particle2.value}(2), {self.particle1.value}(1)}}"


def basis_vector(kind, mix: MixingCoefficients, alpha: float = 0.0) -> np.ndarray:
    """Flavour-basis components of one basis ket.

    ``alpha`` is the unobservable CP phase, ``CP|M> = e^{i alpha}|Mbar>``.
    """
    kind = Basis.parse(kind)
    phase = complex(math.cos(alpha), math.sin(alpha))
    s = 1 / math.sqrt(2)
    if kind is Basis.M:
        return np.array([1.0, 0.0], dtype=complex)
    if kind is Basis.MBAR:
        return np.array([0.0, 1.0], dtype=complex)
    if kind is Basis.M1:
        return np.array([s, s * phase])
    if kind is Basis.M2:
        return np.array([s, -s * phase])
    if kind is Basis.ML:
        return np.array([mix.p, phase * mix.q])
    return np.array([mix.p, -phase * mix.q])


def bell_state() -> np.ndarray:
    """(|M>|Mbar> - |Mbar>|M>) / sqrt(2)."""
    m = np.array([1.0, 0.0], dtype=complex)
    mbar = np.array([0.0, 1.0], dtype=complex)
    return (qlinalg.tensor(m, mbar) - qlinalg.tensor(mbar, m)) / math.sqrt(2)


def event_vector(event: MesonEvent, mix: MixingCoefficients, alpha: float = 0.0) -> np.ndarray:
    return qlinalg.tensor(basis_vector(event.particle2, mix, alpha), basis_vector(event.particle1, mix, alpha))


# -- static probabilities -----------------------------------------------------

_STATIC: dict[tuple[Basis, Basis], Callable[[MixingCoefficients], float]] = {
    (Basis.M1, Basis.MBAR): lambda mx: 0.25,
    (Basis.M1, Basis.M): lambda mx: 0.25,
    (Basis.M2, Basis.MBAR): lambda mx: 0.25,
    (Basis.M2, Basis.M): lambda mx: 0.25,
    (Basis.M1, Basis.MH): lambda mx: 0.25 * abs(mx.p + mx.q) ** 2,
    (Basis.M2, Basis.MH): lambda mx: 0.25 * abs(mx.p - mx.q) ** 2,
    (Basis.M1, Basis.ML): lambda mx: 0.25 * abs(mx.p - mx.q) ** 2,
    (Basis.M2, Basis.ML): lambda mx: 0.25 * abs(mx.p + mx.q) ** 2,
    (Basis.MH, Basis.MBAR): lambda mx: 0.5 * abs(mx.p) ** 2,
    (Basis.MH, Basis.M): lambda mx: 0.5 * abs(mx.q) ** 2,
    (Basis.MBAR, Basis.ML): lambda mx: 0.5 * abs(mx.p) ** 2,
    (Basis.M, Basis.ML): lambda mx: 0.5 * abs(mx.q) ** 2,
}

STATIC_EVENTS = tuple(MesonEvent(*pair) for pair in _STATIC)


def static_probability(event: MesonEvent, mix: MixingCoefficients) -> float:
    """Closed-form w(event, t0) in the Bell state."""
    event = MesonEvent.of(*event)
    try:
        return float(_STATIC[tuple(event)](mix))
    except KeyError:
        raise UnsupportedEventError(f"no closed form for event {event}") from None


def event_probability(event: MesonEvent, mix: MixingCoefficients, alpha: float = 0.0, state=None) -> float:
    """|<event|state>|^2 by explicit vectors; ``state`` defaults to the Bell state."""
    event = MesonEvent.of(*event)
    psi = bell_state() if state is None else state
    return abs(qlinalg.inner(event_vector(event, mix, alpha), psi)) ** 2


# -- evolution ---------------------------------------------------------------


def _check_time(t) -> np.ndarray:
    t = np.asarray(t, dtype=float)
    if np.any(~np.isfinite(t)) or np.any(t < 0):
        raise InvalidParameterError("time must be finite and non-negative")
    return t


def g_functions(tau, params: MesonParams):
    """``(g_+(tau), g_-(tau))`` with the common mass phase dropped.

    g_pm = (e^{-i E_H tau} +- e^{-i E_L tau}) / 2 where
    E_H = dM/2 - i Gamma_H/2 and E_L = -dM/2 - i Gamma_L/2.
    Accepts scalars or arrays.
    """
    tau = _check_time(tau)
    heavy = np.exp((-0.5j * params.delta_m - 0.5 * params.gamma_heavy) * tau)
    light = np.exp((0.5j * params.delta_m - 0.5 * params.gamma_light) * tau)
    return 0.5 * (heavy + light), 0.5 * (heavy - light)


def evolution_operator(t: float, params: MesonParams, alpha: float = 0.0) -> np.ndarray:
    """Single-meson propagator in the flavour basis (columns are |M(t)>, |Mbar(t)>)."""
    gp, gm = (complex(x) for x in g_functions(t, params))
    qp = params.q_over_p
    phase = complex(math.cos(alpha), math.sin(alpha))
    return np.array([[gp, -gm / (qp * phase)], [-phase * qp * gm, gp]])


def _mix_factor(params: MesonParams) -> tuple[complex, complex]:
    qp = params.q_over_p
    return 0.5 * (qp + 1 / qp), 0.5 * (qp - 1 / qp)


def _w_11(t, p):
    gp, gm = g_functions(t, p)
    return np.abs(gp - _mix_factor(p)[0] * gm) ** 2


def _w_22(t, p):
    gp, gm = g_functions(t, p)
    return np.abs(gp + _mix_factor(p)[0] * gm) ** 2


def _w_12(t, p):
    _, gm = g_functions(t, p)
    return np.abs(_mix_factor(p)[1] * gm) ** 2


def _w_same_flavour(t, p):
    gp, _ = g_functions(t, p)
    return np.abs(gp) ** 2


def _w_m_to_mbar(t, p):
    _, gm = g_functions(t, p)
    return np.abs(gm / p.q_over_p) ** 2


def _w_mbar_to_m(t, p):
    _, gm = g_functions(t, p)
    return np.abs(p.q_over_p * gm) ** 2


def _w_pair(t, p):
    return 0.25 * np.exp(-2 * p.gamma_mean * _check_time(t))


TRANSITIONS: dict[str, Callable] = {
    "M1->M1": _w_11,
    "M2->M1": _w_12,
    "M2->M2": _w_22,
    "M1->M2": _w_12,
    "Mbar->Mbar": _w_same_flavour,
    "M->Mbar": _w_m_to_mbar,
    "M->M": _w_same_flavour,
    "Mbar->M": _w_mbar_to_m,
    "M1,Mbar": _w_pair,
    "M1,M": _w_pair,
    "M2,Mbar": _w_pair,
    "M2,M": _w_pair,
}


def transition_probability(kind: str, t, params: MesonParams):
    """Closed-form time-dependent probability.

    ``kind`` is either a single-meson transition ``"X->Y"``, defined as the
    overlap ``|<Y(t)|X>|^2`` of the evolved Y with X, or a pair outcome
    ``"X,Y"`` (particle (2) in X, particle (1) in Y, both at time t).
    Note ``|<Y(t)|X>|^2`` is the probability of finding X at t starting
    from Y, so "M->Mbar" carries ``|p/q|^2``.
    """
    try:
        fn = TRANSITIONS[kind.replace(" ", "")]
    except (KeyError, AttributeError):
        raise UnsupportedEventError(f"unknown transition {kind!r}; expected one of {', '.join(TRANSITIONS)}") from None
    value = fn(t, params)
    return float(value) if np.ndim(value) == 0 else value


def amplitude_probability(initial, final, t: float, params: MesonParams, alpha: float = 0.0) -> float:
    """|<final| U(t) |initial>|^2 for basis states, from the propagator matrix."""
    mix = mixing_from_params(params)
    u = evolution_operator(t, params, alpha)
    return abs(qlinalg.inner(basis_vector(final, mix, alpha), u @ basis_vector(initial, mix, alpha))) ** 2


def evolved_pair_state(t: float, params: MesonParams, alpha: float = 0.0) -> np.ndarray:
    u = evolution_operator(t, params, alpha)
    return qlinalg.kron(u, u) @ bell_state()
