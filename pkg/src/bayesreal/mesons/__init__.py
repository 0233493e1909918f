"""Neutral pseudoscalar meson pairs: mixing, evolution and realism tests."""

from .inequality import (
    EVENT_TABLE,
    F_INDICES,
    TableRow,
    event_margin,
    f_function,
    f_function_z,
    guaranteed_violation_time,
    static_equality_residual,
)
from .params import (
    HBAR_MEV_S,
    MesonParams,
    MixingCoefficients,
    default_scenario,
    load_scenarios,
    mixing_coefficients,
    mixing_from_params,
    parse_scenarios,
)
from .scan import ScanResult, exceedance_intervals, violation_scan
from .states import (
    STATIC_EVENTS,
    TRANSITIONS,
    Basis,
    MesonEvent,
    basis_vector,
    bell_state,
    event_probability,
    g_functions,
    static_probability,
    transition_probability,
)
