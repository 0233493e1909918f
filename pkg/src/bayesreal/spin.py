"""
Spin-singlet e+e- pair precessing in a constant magnetic field along y.

Particle (2) is the electron and particle (1) the positron. Directions lie
in the (x, z) plane in every worked scenario (``phi = 0``); general ``phi``
is accepted but only the ``phi = 0`` manifold is cross-validated against
the matrix route.

Two routes are provided for every probability: closed forms
(:func:`static_conditional`, :func:`case_probabilities`) and explicit 4x4
matrix pipelines (:func:`static_bayes_pipeline`,
:func:`dynamic_pipeline_probabilities`).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np
from scipy import constants

from . import qlinalg
from .conditional import (
    BayesResidual,
    InequalityMargin,
    dynamic_bayes_margin,
    intersection_projector,
    static_bayes_residual,
    von_neumann_conditional,
)
from .errors import InvalidParameterError

_SQRT_HALF = 1.0 / math.sqrt(2.0)


@dataclass(frozen=True)
class Direction:
    """Quantization axis with polar angle ``theta`` and azimuth ``phi`` (radians)."""

    theta: float
    phi: float = 0.0

    def __post_init__(self):
        if not (math.isfinite(self.theta) and math.isfinite(self.phi)):
            raise InvalidParameterError("direction angles must be finite")
        if not 0.0 <= self.theta <= math.pi:
            raise InvalidParameterError(f"theta = {self.theta!r} outside [0, pi]")
        if not -math.pi <= self.phi <= math.pi:
            raise InvalidParameterError(f"phi = {self.phi!r} outside [-pi, pi]")

    @classmethod
    def from_degrees(cls, theta: float, phi: float = 0.0) -> "Direction":
        return cls(math.radians(theta), math.radians(phi))


Z_AXIS = Direction(0.0)


class SpinCase(enum.Enum):
    """Signs ``(alpha', beta')`` of the late event {a^(2)_alpha', b^(1)_beta', t}."""

    PP = "++"
    MM = "--"
    PM = "+-"
    MP = "-+"

    @property
    def alpha_sign(self) -> int:
        return 1 if self.value[0] == "+" else -1

    @property
    def beta_sign(self) -> int:
        return 1 if self.value[1] == "+" else -1

    @classmethod
    def parse(cls, text: str) -> "SpinCase":
        try:
            return cls(text)
        except ValueError:
            raise InvalidParameterError(f"unknown spin case {text!r}; expected one of ++, --, +-, -+") from None


def _sign(sign) -> int:
    if sign in (1, "+"):
        return 1
    if sign in (-1, "-"):
        return -1
    raise InvalidParameterError(f"spin sign must be +1/-1 or '+'/'-', got {sign!r}")


def spin_state(n: Direction, sign) -> np.ndarray:
    """Spin-1/2 ket with projection ``sign`` along ``n``."""
    c, s = math.cos(n.theta / 2), math.sin(n.theta / 2)
    em, ep = np.exp(-0.5j * n.phi), np.exp(0.5j * n.phi)
    if _sign(sign) > 0:
        return np.array([c * em, s * ep])
    return np.array([-s * em, c * ep])


def singlet_state(n: Direction = Z_AXIS) -> np.ndarray:
    """(|n+>|n-> - |n->|n+>)/sqrt(2); independent of ``n`` up to a phase."""
    up, down = spin_state(n, +1), spin_state(n, -1)
    return _SQRT_HALF * (qlinalg.tensor(up, down) - qlinalg.tensor(down, up))


def _particle(particle) -> int:
    if particle in (2, "electron", "e-"):
        return 2
    if particle in (1, "positron", "e+"):
        return 1
    raise InvalidParameterError(f"particle must be 'electron' (2) or 'positron' (1), got {particle!r}")


def evolved_spin_state(particle, n: Direction, sign, omega_t: float) -> np.ndarray:
    """Spin ket at precession phase ``omega_t`` that started along ``n`` with ``sign``.

    The electron and positron precess in opposite senses about y.
    """
    which = _particle(particle)
    c, s = math.cos(n.theta / 2), math.sin(n.theta / 2)
    cw, sw = math.cos(omega_t), math.sin(omega_t)
    em, ep = np.exp(-0.5j * n.phi), np.exp(0.5j * n.phi)
    up = _sign(sign) > 0
    if which == 2:
        if up:
            return np.array([c * cw * em - s * sw * ep, c * sw * em + s * cw * ep])
        return np.array([-s * cw * em - c * sw * ep, -s * sw * em + c * cw * ep])
    if up:
        return np.array([c * cw * em + s * sw * ep, -c * sw * em + s * cw * ep])
    return np.array([-s * cw * em + c * sw * ep, s * sw * em + c * cw * ep])


def evolution_operator(particle, omega_t: float) -> np.ndarray:
    """Single-particle propagator; its columns are the evolved z-basis kets."""
    return np.column_stack(
        [evolved_spin_state(particle, Z_AXIS, +1, omega_t), evolved_spin_state(particle, Z_AXIS, -1, omega_t)]
    )


def pair_evolution(omega_t: float) -> np.ndarray:
    return qlinalg.kron(evolution_operator("electron", omega_t), evolution_operator("positron", omega_t))


def evolved_singlet(n: Direction, omega_t: float) -> np.ndarray:
    """Pair state at phase ``omega_t`` built from the precessed one-particle kets."""
    e_up = evolved_spin_state("electron", n, +1, omega_t)
    e_down = evolved_spin_state("electron", n, -1, omega_t)
    p_up = evolved_spin_state("positron", n, +1, omega_t)
    p_down = evolved_spin_state("positron", n, -1, omega_t)
    return _SQRT_HALF * (qlinalg.tensor(e_up, p_down) - qlinalg.tensor(e_down, p_up))


def larmor_frequency(field: float, mass: float = constants.m_e, charge: float = constants.e) -> float:
    """Angular precession frequency |e| B / (2 m) in rad/s (SI units, field in tesla)."""
    if not (math.isfinite(field) and field >= 0.0):
        raise InvalidParameterError(f"field strength must be non-negative, got {field!r}")
    if not (mass > 0.0 and charge > 0.0):
        raise InvalidParameterError("mass and charge magnitude must be positive")
    return abs(charge) * field / (2.0 * mass)


def precession_phase(field: float, time: float, mass: float = constants.m_e) -> float:
    """omega * t for a lepton of ``mass`` after ``time`` seconds in ``field`` tesla."""
    return larmor_frequency(field, mass) * time


# -- closed forms ----------------------------------------------------------


def static_conditional(theta_ab: float) -> float:
    """w(S1|S3) = sin^2(theta_ab / 2) / 2 for S1 = {a^(2)_+, b^(1)_+}."""
    return 0.5 * math.sin(theta_ab / 2) ** 2


def static_equality_gap(theta_ab: float, theta_bc: float) -> float:
    """sin^2(theta_ab/2) - sin^2(theta_bc/2); realism requires zero."""
    return math.sin(theta_ab / 2) ** 2 - math.sin(theta_bc / 2) ** 2


def case_probabilities(case: SpinCase, theta_ba: float, omega_t: float) -> tuple[float, float]:
    """``(w(S2(t)|S3), w(S2(t)|S1(t0) & S3))`` for the given sign case."""
    case = SpinCase(case)
    shifted = theta_ba / 2 + 2 * omega_t
    cw2, sw2 = math.cos(omega_t) ** 2, math.sin(omega_t) ** 2
    if case is SpinCase.PP:
        return 0.5 * math.sin(shifted) ** 2, cw2 * cw2
    if case is SpinCase.MM:
        return 0.5 * math.sin(shifted) ** 2, sw2 * sw2
    return 0.5 * math.cos(shifted) ** 2, sw2 * cw2


def spin_inequality_margin(case: SpinCase, theta_ba: float, omega_t: float) -> InequalityMargin:
    w_s2_s3, w_s2_given = case_probabilities(case, theta_ba, omega_t)
    return dynamic_bayes_margin(static_conditional(theta_ba), w_s2_given, w_s2_s3)


# -- matrix pipelines ------------------------------------------------------


@dataclass(frozen=True)
class StaticReport:
    """Every ingredient of the static equality for one choice of axes."""

    w_s1_s3: float
    w_s2_s3: float
    w_s2_given_s1s3: float
    w_s1_given_s2s3: float
    cross_term: float
    bayes: BayesResidual


def static_bayes_pipeline(a: Direction, b: Direction, c: Direction) -> StaticReport:
    """Static equality with S1 = {a+, b+}, S2 = {c+, b+} in the singlet, via 4x4 matrices."""
    psi = singlet_state()
    rho0 = qlinalg.projector(psi)
    p1 = qlinalg.projector(qlinalg.tensor(spin_state(a, +1), spin_state(b, +1)))
    p2 = qlinalg.projector(qlinalg.tensor(spin_state(c, +1), spin_state(b, +1)))

    w1 = von_neumann_conditional(rho0, rho0, p1)
    w2 = von_neumann_conditional(rho0, rho0, p2)
    w2_given = von_neumann_conditional(rho0, intersection_projector(psi, p1).scaled, p2)
    w1_given = von_neumann_conditional(rho0, intersection_projector(psi, p2).scaled, p1)
    cross = qlinalg.trace_product([p1, p2]).real
    return StaticReport(w1, w2, w2_given, w1_given, cross, static_bayes_residual(w1, w2_given, w2, w1_given))


def dynamic_pipeline_probabilities(case: SpinCase, a: Direction, b: Direction, omega_t: float) -> tuple[float, float]:
    """Matrix-route counterpart of :func:`case_probabilities` (``theta_ba = b.theta - a.theta``)."""
    case = SpinCase(case)
    psi0 = singlet_state()
    rho0 = qlinalg.projector(psi0)
    p1 = qlinalg.projector(qlinalg.tensor(spin_state(a, +1), spin_state(b, +1)))
    p2 = qlinalg.projector(qlinalg.tensor(spin_state(a, case.alpha_sign), spin_state(b, case.beta_sign)))

    rho_t = qlinalg.projector(evolved_singlet(Z_AXIS, omega_t))
    w_s2_s3 = qlinalg.trace_product([p2, rho_t]).real
    w_s2_given = von_neumann_conditional(rho0, intersection_projector(psi0, p1).scaled, p2, evolution=pair_evolution(omega_t))
    return w_s2_s3, w_s2_given


def dynamic_pipeline_margin(case: SpinCase, a: Direction, b: Direction, omega_t: float) -> InequalityMargin:
    psi0 = singlet_state()
    p1 = qlinalg.projector(qlinalg.tensor(spin_state(a, +1), spin_state(b, +1)))
    rho0 = qlinalg.projector(psi0)
    w_s1_s3 = von_neumann_conditional(rho0, rho0, p1)
    w_s2_s3, w_s2_given = dynamic_pipeline_probabilities(case, a, b, omega_t)
    return dynamic_bayes_margin(w_s1_s3, w_s2_given, w_s2_s3)
