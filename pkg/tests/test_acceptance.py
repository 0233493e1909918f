"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line."""

import math

import numpy as np
import pytest

from bayesreal import spin
from bayesreal.conditional import static_bayes_residual, von_neumann_conditional
from bayesreal.mesons import (
    F_INDICES,
    default_scenario,
    f_function_z,
    g_functions,
    guaranteed_violation_time,
    mixing_from_params,
    static_equality_residual,
    static_probability,
    violation_scan,
)
from bayesreal.spin import Direction, SpinCase

deg = math.radians


@pytest.fixture
def report(capsys):
    def emit(number, ok, detail):
        with capsys.disabled():
            print(f"\nCRITERION {number}: {'PASS' if ok else 'FAIL'} ({detail})")
        assert ok, detail

    return emit


def test_criterion_1_spin_static_equality(report):
    residual = spin.static_bayes_pipeline(*(Direction.from_degrees(t) for t in (90, 0, 45))).bayes.residual
    expected = math.cos(deg(22.5)) ** 2 * 0.5 * (math.sin(deg(45)) ** 2 - math.sin(deg(22.5)) ** 2)
    balanced = [spin.static_bayes_pipeline(*(Direction.from_degrees(t) for t in trio)).bayes.residual
                for trio in [(90, 0, 90), (120, 60, 0), (100, 70, 40), (180, 90, 0), (30, 100, 170)]]
    ok = abs(residual - expected) < 1e-9 and max(abs(r) for r in balanced) < 1e-12
    report(1, ok, f"residual {residual:.12f} vs {expected:.12f}; worst balanced |residual| {max(map(abs, balanced)):.1e}")


def test_criterion_2_spin_dynamic_violations(report):
    theta = deg(90)
    pp = spin.spin_inequality_margin(SpinCase.PP, theta, -theta / 4).margin
    mm = spin.spin_inequality_margin(SpinCase.MM, theta, -theta / 4).margin
    pp_expected = -0.5 * math.sin(deg(45)) ** 2 * math.cos(deg(22.5)) ** 4
    mm_expected = -0.5 * math.sin(deg(45)) ** 2 * math.sin(deg(22.5)) ** 4
    mixed_ok = True
    for theta_ba in np.linspace(0.01, math.pi - 0.01, 200):
        for case in (SpinCase.PM, SpinCase.MP):
            mixed_ok &= spin.spin_inequality_margin(case, theta_ba, math.pi / 4 - theta_ba / 4).violated
    ok = abs(pp - pp_expected) < 1e-9 and abs(mm - mm_expected) < 1e-9 and mixed_ok
    report(2, ok, f"(+,+) {pp:.9f}, (-,-) {mm:.9f}, mixed cases violate for all sampled angles: {mixed_ok}")


def test_criterion_3_oracle_equivalence(report):
    rng = np.random.default_rng(3)
    worst, done = 0.0, 0
    while done < 1000:
        ta, tb = rng.uniform(0, math.pi, 2)
        if abs(ta - tb) < 1e-3:
            continue
        omega_t = rng.uniform(-math.pi, math.pi)
        case = list(SpinCase)[rng.integers(4)]
        closed = spin.case_probabilities(case, tb - ta, omega_t)
        matrix = spin.dynamic_pipeline_probabilities(case, Direction(ta), Direction(tb), omega_t)
        worst = max(worst, float(np.max(np.abs(np.subtract(closed, matrix)))))
        done += 1
    report(3, worst < 1e-9, f"max |closed form - matrix| = {worst:.2e} over 1000 configurations")


def test_criterion_4_classical_limit(report):
    rng = np.random.default_rng(4)
    worst, done = 0.0, 0
    while done < 100:
        weights = rng.dirichlet(np.ones(4))
        m1, m2, m3 = (rng.integers(0, 2, size=4) for _ in range(3))
        mass = lambda m: float(np.sum(weights * m))
        if min(mass(m3), mass(m1 * m3), mass(m2 * m3)) < 1e-3:
            continue
        rho = np.diag(weights)
        quantum = lambda given, event: von_neumann_conditional(rho, np.diag(given), np.diag(event))
        residual = static_bayes_residual(quantum(m3, m1), quantum(m1 * m3, m2), quantum(m3, m2), quantum(m2 * m3, m1)).residual
        classical = mass(m1 * m3) / mass(m3) * mass(m1 * m2 * m3) / mass(m1 * m3) - mass(m2 * m3) / mass(m3) * mass(m1 * m2 * m3) / mass(m2 * m3)
        worst = max(worst, abs(residual), abs(residual - classical))
        done += 1
    report(4, worst < 1e-9, f"max |residual| over 100 commuting instances = {worst:.2e}")


def test_criterion_5_meson_static_equality(report):
    bs = abs(1 + mixing_from_params(default_scenario("Bs")).p_over_q) ** 2
    k = abs(1 + mixing_from_params(default_scenario("K")).p_over_q) ** 2
    residuals = [static_equality_residual("plus", mixing_from_params(default_scenario(n))) for n in ("Bs", "K")]
    ok = bs == pytest.approx(0.0076, abs=5e-4) and k == pytest.approx(3.99, rel=1e-2) and all(abs(r) > 1.9 for r in residuals)
    report(5, ok, f"B_s |1+p/q|^2 = {bs:.5f}, K |1+p/q|^2 = {k:.5f}, residuals {residuals[0]:.4f}, {residuals[1]:.4f}")


def test_criterion_6_guaranteed_violation(report):
    bs = default_scenario("Bs")
    lifetimes = guaranteed_violation_time(bs) * bs.gamma_mean
    report(6, 15.5 <= lifetimes <= 16.5, f"2 ln 3 / |dGamma| = {lifetimes:.4f} lifetimes")


def test_criterion_7_bs_f1_persistent_onset(report):
    scan = violation_scan(1, default_scenario("Bs"), 30, 30001)
    onset = scan.persistent_onset()
    ok = onset is not None and abs(onset - 17) <= 1
    report(7, ok, f"F1 stays above 1 from z = {onset:.3f}; {len(scan.violation_intervals)} intervals, first at z = {scan.violation_intervals[0][0]:.3f}")


def test_criterion_8_kaon_versus_charm(report):
    k, d = default_scenario("K"), default_scenario("D-figure")
    z_k = np.linspace(0, 2, 2001)[1:]
    k_peaks = {n: float(f_function_z(n, z_k, k).max()) for n in (3, 4, 5)}
    z_d = np.linspace(0, 40, 4001)
    d_stats = {}
    for n in (3, 5):
        values = f_function_z(n, z_d, d)
        slope, intercept = np.polyfit(z_d, values, 1)
        fitted = slope * z_d + intercept
        r2 = 1 - np.sum((values - fitted) ** 2) / np.sum((values - values.mean()) ** 2)
        d_stats[n] = (float(values.max()), float(r2))
    ok = all(v > 1 for v in k_peaks.values()) and all(peak < 10 and r2 >= 0.99 for peak, r2 in d_stats.values())
    detail = ", ".join(f"K F{n} max {v:.2f}" for n, v in k_peaks.items())
    detail += "; " + ", ".join(f"D F{n} max {p:.3f} R^2 {r:.4f}" for n, (p, r) in d_stats.items())
    report(8, ok, detail)


def test_criterion_9_never_violates(report):
    z = np.linspace(0, 50, 10_000)
    excess = {}
    for name in ("Bs", "K", "D"):
        params = default_scenario(name)
        for n in (6, 7, 8):
            excess[(name, n)] = float(f_function_z(n, z, params).max() - 1)
    f6_ok = all(excess[(name, 6)] <= 1e-12 for name in ("Bs", "K", "D"))
    f78_ok = all(excess[(name, n)] <= 1e-9 for name in ("Bs", "K", "D") for n in (7, 8))
    worst = {key: v for key, v in excess.items() if v > 0}
    detail = "worst excess over 1: " + (", ".join(f"{name} F{n} {v:.2e}" for (name, n), v in worst.items()) or "none")
    report(9, f6_ok and f78_ok, detail)


def test_criterion_10_identities(report):
    rng = np.random.default_rng(10)
    worst = 0.0
    for _ in range(1000):
        base = default_scenario(["Bs", "K", "D", "D-figure"][rng.integers(4)])
        gamma = base.gamma_mean * rng.uniform(0.5, 2)
        params = base.with_overrides(
            gamma_mean=gamma,
            delta_gamma=rng.uniform(-1.9, 1.9) * gamma,
            delta_m=rng.uniform(-30, 30) * gamma,
        )
        tau = params.time_from_z(rng.uniform(0, 20))
        gp, gm = g_functions(tau, params)
        decay = math.exp(-params.gamma_mean * tau) / 2
        y, x = params.delta_gamma * tau / 2, params.delta_m * tau
        worst = max(
            worst,
            abs(abs(gp) ** 2 - decay * (math.cosh(y) + math.cos(x))),
            abs(abs(gm) ** 2 - decay * (math.cosh(y) - math.cos(x))),
            abs(np.conj(gp) * gm + decay * complex(math.sinh(y), math.sin(x))),
        )
    start = max(abs(f_function_z(n, 0.0, default_scenario(s)) - 1) for n in F_INDICES for s in ("Bs", "K", "D", "D-figure"))
    completeness = max(
        abs(sum(static_probability(e, mixing_from_params(default_scenario(s))) for e in [("M1", "Mbar"), ("M1", "M"), ("M2", "Mbar"), ("M2", "M")]) - 1)
        for s in ("Bs", "K", "D", "D-figure")
    )
    ok = worst < 1e-12 and start < 1e-12 and completeness < 1e-12
    report(10, ok, f"identity error {worst:.1e}, max |F_N(0) - 1| {start:.1e}, completeness error {completeness:.1e}")
