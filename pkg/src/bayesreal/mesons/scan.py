"""Sampling of inequality curves and location of their violation intervals."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np
from scipy.optimize import bisect

from ..errors import InvalidParameterError
from .inequality import f_function_z
from .params import MesonParams

#: bisection tolerance for interval endpoints, in axis units
CROSSING_XTOL = 1e-6


@dataclass(frozen=True)
class ScanResult:
    """A sampled curve with the sub-ranges of ``axis`` where it violates its bound."""

    axis: np.ndarray
    values: np.ndarray
    violation_intervals: tuple[tuple[float, float], ...]
    label: str = ""
    meta: dict = field(default_factory=dict, compare=False)

    @property
    def violates(self) -> bool:
        return bool(self.violation_intervals)

    def persistent_onset(self) -> float | None:
        """Start of the violation interval that runs to the end of the axis, if any.

        Oscillating curves can poke over the bound long before the violation
        becomes permanent; this is where it becomes permanent within the scan.
        """
        if not self.violation_intervals:
            return None
        start, end = self.violation_intervals[-1]
        return start if end >= self.axis[-1] else None


def exceedance_intervals(
    excess: Callable[[float], float],
    axis: np.ndarray,
    sampled: np.ndarray,
    xtol: float = CROSSING_XTOL,
) -> tuple[tuple[float, float], ...]:
    """Maximal sub-intervals of ``axis`` on which ``excess > 0``.

    ``sampled`` holds ``excess`` on the grid. Every sign change between
    neighbouring grid points is refined by bisection to ``xtol``; sign
    changes that occur twice between two samples are not resolved.
    """
    above = sampled > 0
    if not above.any():
        return ()
    edges = np.flatnonzero(np.diff(above.astype(np.int8)))
    bounds = [_crossing(excess, float(axis[i]), float(axis[i + 1]), xtol, rising=not above[i]) for i in edges]
    if above[0]:
        bounds.insert(0, float(axis[0]))
    if above[-1]:
        bounds.append(float(axis[-1]))
    return tuple(zip(bounds[::2], bounds[1::2]))


def _crossing(excess, a: float, b: float, xtol: float, rising: bool) -> float:
    fa, fb = excess(a), excess(b)
    if (fa > 0) == (fb > 0):
        # scalar and vectorized evaluation disagree in the last bit
        return a if (fa > 0) == rising else b
    return float(bisect(excess, a, b, xtol=xtol))


def uniform_grid(start: float, stop: float, n_points: int) -> np.ndarray:
    if not (np.isfinite(start) and np.isfinite(stop) and stop > start):
        raise InvalidParameterError(f"grid needs finite start < stop, got [{start!r}, {stop!r}]")
    if int(n_points) != n_points or n_points < 2:
        raise InvalidParameterError(f"grid needs at least 2 points, got {n_points!r}")
    return np.linspace(start, stop, int(n_points))


def violation_scan(index: int, params: MesonParams, z_max: float, n_points: int, xtol: float = CROSSING_XTOL) -> ScanResult:
    """Sample F_N on a uniform grid of ``z`` in [0, z_max]; violation means F_N > 1."""
    z = uniform_grid(0.0, z_max, n_points)
    values = f_function_z(index, z, params)
    intervals = exceedance_intervals(lambda x: f_function_z(index, x, params) - 1.0, z, values - 1.0, xtol)
    return ScanResult(z, values, intervals, label=f"F{index}", meta={"scenario": params.name})
