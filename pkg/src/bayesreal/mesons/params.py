"""Mixing parameters of neutral pseudoscalar mesons and the scenario file."""

from __future__ import annotations

import dataclasses
import math
import sys
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

from ..errors import InvalidParameterError

#: reduced Planck constant, MeV s
HBAR_MEV_S = 6.582119569e-22
#: speed of light, mm/s
C_MM_PER_S = 299_792_458.0e3

_NORM_TOL = 1e-12


@dataclass(frozen=True)
class MesonParams:
    """One meson species. Rates are in s^-1, ``zeta`` in radians.

    ``delta_gamma`` is Gamma_H - Gamma_L, which is minus the PDG convention;
    the shipped values are therefore negative.
    """

    name: str
    delta_gamma: float
    delta_m: float
    gamma_mean: float
    r: float
    zeta: float
    note: str = ""

    def __post_init__(self):
        for field in ("delta_gamma", "delta_m", "gamma_mean", "r", "zeta"):
            if not math.isfinite(getattr(self, field)):
                raise InvalidParameterError(f"{self.name}: {field} must be finite")
        if self.gamma_mean <= 0:
            raise InvalidParameterError(f"{self.name}: gamma_mean must be positive")
        if self.gamma_heavy < 0 or self.gamma_light < 0:
            raise InvalidParameterError(f"{self.name}: |delta_gamma| / 2 exceeds gamma_mean, a width would be negative")
        if self.r <= 0:
            raise InvalidParameterError(f"{self.name}: r = |q/p| must be positive")

    @property
    def gamma_heavy(self) -> float:
        return self.gamma_mean + self.delta_gamma / 2

    @property
    def gamma_light(self) -> float:
        return self.gamma_mean - self.delta_gamma / 2

    @property
    def lifetime(self) -> float:
        """Mean lifetime 1/Gamma in seconds."""
        return 1.0 / self.gamma_mean

    @property
    def lam(self) -> float:
        """delta_m / delta_gamma."""
        if self.delta_gamma == 0:
            raise InvalidParameterError(f"{self.name}: lambda is undefined for delta_gamma = 0")
        return self.delta_m / self.delta_gamma

    @property
    def q_over_p(self) -> complex:
        return self.r * complex(math.cos(self.zeta), math.sin(self.zeta))

    def time_from_z(self, z):
        """Convert lifetimes ``z = Gamma t`` to seconds."""
        return z / self.gamma_mean

    def with_overrides(self, **changes) -> "MesonParams":
        changes = {k: v for k, v in changes.items() if v is not None}
        return dataclasses.replace(self, **changes) if changes else self

    @classmethod
    def from_mev(cls, name, delta_gamma, delta_m, gamma_mean, r, zeta_deg, note="") -> "MesonParams":
        """Build from rates in MeV (as tabulated) and ``zeta`` in degrees."""
        return cls(
            name=name,
            delta_gamma=mev_to_rate(delta_gamma),
            delta_m=mev_to_rate(delta_m),
            gamma_mean=mev_to_rate(gamma_mean),
            r=float(r),
            zeta=math.radians(zeta_deg),
            note=note,
        )

    def to_mev_dict(self) -> dict:
        return {
            "name": self.name,
            "delta_gamma": rate_to_mev(self.delta_gamma),
            "delta_m": rate_to_mev(self.delta_m),
            "gamma_mean": rate_to_mev(self.gamma_mean),
            "r": self.r,
            "zeta": math.degrees(self.zeta),
        }


def mev_to_rate(value_mev: float) -> float:
    return float(value_mev) / HBAR_MEV_S


def rate_to_mev(rate: float) -> float:
    return float(rate) * HBAR_MEV_S


@dataclass(frozen=True)
class MixingCoefficients:
    """``|M_L> = p|M> + q|Mbar>`` and ``|M_H> = p|M> - q|Mbar>`` (phase alpha = 0)."""

    p: complex
    q: complex

    def __post_init__(self):
        norm = abs(self.p) ** 2 + abs(self.q) ** 2
        if abs(norm - 1.0) > _NORM_TOL:
            raise InvalidParameterError(f"|p|^2 + |q|^2 = {norm!r}, expected 1")

    @property
    def q_over_p(self) -> complex:
        return self.q / self.p

    @property
    def p_over_q(self) -> complex:
        return self.p / self.q


def mixing_coefficients(r: float, zeta: float) -> MixingCoefficients:
    """p = cos(beta), q = sin(beta) e^{i zeta} with tan(beta) = r."""
    if not (math.isfinite(r) and r > 0):
        raise InvalidParameterError(f"r = {r!r} must be positive")
    beta = math.atan(r)
    return MixingCoefficients(complex(math.cos(beta)), math.sin(beta) * complex(math.cos(zeta), math.sin(zeta)))


def mixing_from_params(params: MesonParams) -> MixingCoefficients:
    return mixing_coefficients(params.r, params.zeta)


# -- scenario file -----------------------------------------------------------

_REQUIRED = ("delta_gamma", "delta_m", "r", "zeta")


def _scenario_from_table(name: str, table: dict) -> MesonParams:
    missing = [k for k in _REQUIRED if k not in table]
    if "gamma_mean" not in table and "lifetime" not in table:
        missing.append("gamma_mean")
    if missing:
        raise InvalidParameterError(f"scenario {name!r} lacks {', '.join(missing)}")
    if "gamma_mean" in table:
        gamma_mev = float(table["gamma_mean"])
    else:
        lifetime = float(table["lifetime"])
        if lifetime <= 0:
            raise InvalidParameterError(f"scenario {name!r}: lifetime must be positive")
        gamma_mev = HBAR_MEV_S / lifetime
    return MesonParams.from_mev(
        name=name,
        delta_gamma=table["delta_gamma"],
        delta_m=table["delta_m"],
        gamma_mean=gamma_mev,
        r=table["r"],
        zeta_deg=table["zeta"],
        note=str(table.get("note", "")),
    )


def parse_scenarios(text: str) -> dict[str, MesonParams]:
    """Parse scenario TOML text; every scenario is validated on load."""
    try:
        doc = tomllib.loads(text)
    except tomllib.TOMLDecodeError as exc:
        raise InvalidParameterError(f"malformed parameter file: {exc}") from exc
    tables = doc.get("scenarios")
    if not isinstance(tables, dict) or not tables:
        raise InvalidParameterError("parameter file has no [scenarios.<name>] tables")
    return {name: _scenario_from_table(name, table) for name, table in tables.items()}


def load_scenarios(path: str | Path | None = None) -> dict[str, MesonParams]:
    """Read a scenario file, or the bundled defaults when ``path`` is None."""
    if path is None:
        text = resources.files("bayesreal").joinpath("data/scenarios.toml").read_text(encoding="utf-8")
    else:
        text = Path(path).read_text(encoding="utf-8")
    return parse_scenarios(text)


def default_scenario(name: str) -> MesonParams:
    scenarios = load_scenarios()
    try:
        return scenarios[name]
    except KeyError:
        raise InvalidParameterError(f"unknown scenario {name!r}; available: {', '.join(scenarios)}") from None
