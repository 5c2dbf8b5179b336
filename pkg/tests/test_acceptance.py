"""Acceptance suite: one test per criterion, one printed verdict line each.

Run with ``pytest -s tests/test_acceptance.py`` to see the verdict lines.
Every tolerance is pinned here; nothing is deferred to calibration.
"""

import math
import time
from dataclasses import replace

import numpy as np
import pytest

from bogolon import (antisymmetric_energy, bogolon_steady_state, coefficients,
                     dipole_coupling, hopfield, reconstruct_dark_amplitudes,
                     reference_setup, spectrum, steady_state, time_evolve,
                     validate_band, validate_blocking)
from bogolon.cli import SweepSpec, build_run_config, cmd_dispersion, cmd_levels
from bogolon.kinematic import InteractionParams
from bogolon.oracle import build_basis
from bogolon.pumpprobe import DriveConfig

SETUP = reference_setup()


def _verdict(number: int, checks: list) -> None:
    ok = all(passed for _, passed, _ in checks)
    detail = "; ".join(f"{name}: {text}" for name, _, text in checks)
    print(f"\n[acceptance {number}] {'PASS' if ok else 'FAIL'} -- {detail}")
    failed = [f"{name} ({text})" for name, passed, text in checks if not passed]
    assert ok, f"criterion {number} failed: {'; '.join(failed)}"


def _within(value: float, target: float, rel: float) -> bool:
    return abs(value - target) <= rel * abs(target)


def test_criterion_1_constants_chain():
    t0 = time.perf_counter()
    q0 = SETUP.wg.q0
    mc2 = SETUP.ip.m_c2
    delta = SETUP.ip.Delta
    delta_tilde = SETUP.ip.Delta_tilde
    elapsed = time.perf_counter() - t0
    checks = [
        ("q0", _within(q0, 1.07e-3, 0.02), f"{q0:.4e} vs 1.07e-3 (2%)"),
        ("mc2", _within(mc2, 3.0, 0.02), f"{mc2:.4f} vs 3.0 (2%)"),
        ("Delta", _within(delta, 1.6e-4, 0.05), f"{delta:.4e} vs 1.6e-4 (5%)"),
        ("Delta~", _within(delta_tilde, 9.1e-5, 0.05),
         f"{delta_tilde:.4e} vs 9.1e-5 (5%)"),
        ("runtime", elapsed < 0.1, f"{elapsed * 1e3:.2f} ms"),
    ]
    _verdict(1, checks)


def test_criterion_2_operating_point():
    t0 = time.perf_counter()
    k_star = SETUP.mode.k
    x2 = SETUP.mode.X_lower ** 2
    elapsed = time.perf_counter() - t0
    checks = [
        ("k*", _within(k_star, 1.4e-5, 0.10), f"{k_star:.4e} vs 1.4e-5 (10%)"),
        ("|X|^2", abs(x2 - 0.56) <= 0.02, f"{x2:.4f} vs 0.56 (+-0.02)"),
        ("runtime", elapsed < 0.1, f"{elapsed * 1e3:.2f} ms"),
    ]
    _verdict(2, checks)


def test_criterion_3_level_structure():
    t0 = time.perf_counter()
    run = build_run_config({}, preset=True)
    run = replace(run, sweep=SweepSpec("theta", 0.0, 90.0, 1000))
    levels = cmd_levels(run)
    rows = np.array(levels.rows)
    split = rows[:, 3] - rows[:, 4]          # E_s - E_a
    idx = np.flatnonzero(np.sign(split[:-1]) != np.sign(split[1:]))
    if idx.size:
        i = idx[0]
        th0, th1 = rows[i, 0], rows[i + 1, 0]
        s0, s1 = split[i], split[i + 1]
        theta_cross = th0 - s0 * (th1 - th0) / (s1 - s0)
    else:
        theta_cross = math.nan

    run_k = replace(run, sweep=None)
    disp = cmd_dispersion(run_k)
    d_rows = np.array(disp.rows)
    gap = d_rows[:, 2] - d_rows[:, 5]        # E_lower - E_a
    crosses = bool(gap[0] < 0.0 and np.any(gap > 0.0))
    elapsed = time.perf_counter() - t0
    checks = [
        ("crossing angle", abs(theta_cross - 54.74) <= 0.05,
         f"{theta_cross:.4f} deg vs 54.74 (+-0.05)"),
        ("dark-level crossing", crosses,
         "sign change of E_lower - E_a present"),
        ("runtime", elapsed < 1.0, f"{elapsed:.2f} s for 1e3 grid"),
    ]
    _verdict(3, checks)


def test_criterion_4_dark_spectrum():
    t0 = time.perf_counter()
    e_a = antisymmetric_energy(SETUP.cfg)
    dt = SETUP.ip.Delta_tilde
    grid = np.linspace(e_a, e_a + 4.0 * dt, 10001)
    points = spectrum(SETUP.drive, SETUP.mode, SETUP.ip, SETUP.cfg, grid)
    elapsed = time.perf_counter() - t0

    i_minus = np.array([p.I_minus_scaled for p in points])
    offsets = np.array([p.E_offset for p in points])
    peaks = [i for i in range(1, len(points) - 1)
             if i_minus[i] > i_minus[i - 1] and i_minus[i] > i_minus[i + 1]]
    pos = offsets[peaks]
    splitting = pos[-1] - pos[0] if len(pos) >= 2 else math.nan
    expected_split = 2.0 * math.sqrt(dt ** 2 - SETUP.drive.hGamma_a ** 2)
    checks = [
        ("two peaks", len(peaks) == 2, f"{len(peaks)} maxima"),
        ("lower peak", len(pos) >= 1 and _within(pos[0], dt, 0.05),
         f"{pos[0]:.4e} vs {dt:.4e} (5%)"),
        ("upper peak", len(pos) >= 2 and _within(pos[-1], 3.0 * dt, 0.05),
         f"{pos[-1]:.4e} vs {3 * dt:.4e} (5%)"),
        ("splitting", _within(splitting, expected_split, 0.02),
         f"{splitting:.4e} vs {expected_split:.4e} (2%)"),
        ("blue shift", bool(np.all(pos > 0.0)), "all peaks at E - E_a > 0"),
        ("runtime", elapsed < 1.0, f"{elapsed:.2f} s for 1e4 grid"),
    ]
    _verdict(4, checks)


def test_criterion_5_pair_transformation_equivalence():
    t0 = time.perf_counter()
    e_a = antisymmetric_energy(SETUP.cfg)
    rng = np.random.default_rng(2024)
    worst_rel = 0.0
    worst_uv = 0.0
    for _ in range(1000):
        v = float(rng.uniform(1e-8, 5e-4))
        gap = v * float(rng.uniform(1.05, 20.0))
        f = float(rng.uniform(1e-12, 1e-6))
        ip = InteractionParams(m_c2=3.0, U=v * 1e5, Delta=v, Delta_tilde=v,
                               X2=1.0)
        drive = DriveConfig(E_drive=e_a + 2.0 * v - gap, F_pump=0.0,
                            F_probe_plus=f, F_probe_minus=0.0, hGamma_ph=0.0,
                            hGamma_s=0.0, hGamma_a=0.0, k_pump=SETUP.mode.k,
                            q=1e-6, n_pump=1.0)
        ss = steady_state(drive, SETUP.mode, ip, SETUP.cfg)
        co = coefficients(ss.E_a_tilde, ss.V_mf, drive.E_drive)
        b_plus, b_minus = reconstruct_dark_amplitudes(
            co, *bogolon_steady_state(co, f))
        scale = max(abs(ss.B_plus), abs(ss.B_minus))
        worst_rel = max(worst_rel, abs(b_plus - ss.B_plus) / scale,
                        abs(b_minus - ss.B_minus) / scale)
        worst_uv = max(worst_uv, abs(co.u ** 2 - co.v ** 2 - 1.0))
    elapsed = time.perf_counter() - t0
    checks = [
        ("amplitude match", worst_rel <= 1e-10, f"worst rel {worst_rel:.2e}"),
        ("u^2 - v^2", worst_uv <= 1e-12, f"worst |u2-v2-1| {worst_uv:.2e}"),
        ("runtime", elapsed < 1.0, f"{elapsed:.2f} s for 1e3 sets"),
    ]
    _verdict(5, checks)


def test_criterion_6_ode_against_closed_form():
    t0 = time.perf_counter()
    e_a = antisymmetric_energy(SETUP.cfg)
    rng = np.random.default_rng(77)
    worst = 0.0
    hg_a = 1e-6
    for _ in range(20):
        drive = DriveConfig(
            E_drive=e_a - float(rng.uniform(0.0, 5e-5)),
            F_pump=complex(rng.uniform(1e-9, 1e-6)),
            F_probe_plus=complex(*rng.uniform(-1e-9, 1e-9, 2)),
            F_probe_minus=complex(*rng.uniform(-1e-9, 1e-9, 2)),
            hGamma_ph=float(rng.uniform(2e-6, 2e-5)),
            hGamma_s=float(rng.uniform(2e-6, 2e-5)),
            hGamma_a=hg_a, k_pump=SETUP.mode.k, q=1e-6,
            n_pump=float(rng.uniform(0.2, 1.5)))
        ss = steady_state(drive, SETUP.mode, SETUP.ip, SETUP.cfg)
        scale = max(abs(ss.E_a_tilde - drive.E_drive),
                    abs(ss.E_pol_tilde - drive.E_drive), ss.V_mf, 2e-5)
        traj = time_evolve(drive, SETUP.mode, SETUP.ip, SETUP.cfg,
                           t_end=20.0 / hg_a, dt=0.09 / scale,
                           sample_every=10 ** 9)
        final = np.array([traj.A[-1], traj.B_plus[-1], traj.B_minus[-1]])
        target = np.array([ss.A_amp, ss.B_plus, ss.B_minus])
        worst = max(worst, float(np.linalg.norm(final - target)
                                 / np.linalg.norm(target)))
    elapsed = time.perf_counter() - t0
    checks = [
        ("convergence", worst <= 1e-6, f"worst rel {worst:.2e}"),
        ("runtime", elapsed < 30.0, f"{elapsed:.1f} s for 20 drives"),
    ]
    _verdict(6, checks)


def test_criterion_7_oracle_equivalence():
    t0 = time.perf_counter()
    checks = []
    for n_cells in (3, 5, 7):
        band = validate_band(SETUP.cfg, n_cells)
        checks.append((
            f"band N={n_cells}",
            band.max_deviation < 1e-3 * abs(band.J),
            f"dev {band.deviation_over_J:.2e} |J| vs 1e-3 |J|"))
        checks.append((
            f"dark count N={n_cells}", band.dark_count == n_cells,
            f"{band.dark_count} vs {n_cells}"))
    basis = build_basis(7, 2)
    checks.append(("2-exc dimension", basis.dim == math.comb(14, 2),
                   f"{basis.dim} vs C(14,2)"))
    blocking = validate_blocking(SETUP.cfg, 7, V_dyn=1e-3)
    checks.append(("blocking separation",
                   _within(blocking.separation, 2e-3, 0.10),
                   f"{blocking.separation:.3e} vs 2e-3 (10%)"))
    elapsed = time.perf_counter() - t0
    checks.append(("runtime", elapsed < 60.0, f"{elapsed:.1f} s at N=7"))
    _verdict(7, checks)


def test_criterion_8_property_suite():
    t0 = time.perf_counter()
    rng = np.random.default_rng(88)
    cfg, wg = SETUP.cfg, SETUP.wg

    hop_ok, orth_ok = True, True
    for k in rng.uniform(0.0, math.pi / cfg.a, 200):
        mode = hopfield(float(k), wg, cfg)
        hop_ok &= abs(mode.X_upper ** 2 + mode.Y_upper ** 2 - 1.0) < 1e-12
        hop_ok &= abs(mode.X_lower ** 2 + mode.Y_lower ** 2 - 1.0) < 1e-12
        orth_ok &= abs(mode.X_upper * mode.X_lower
                       + mode.Y_upper * mode.Y_lower) < 1e-12

    dipole_ok = True
    for r in rng.uniform(5.0, 5000.0, 200):
        j1 = dipole_coupling(float(r), cfg)
        j2 = dipole_coupling(2.0 * float(r), cfg)
        dipole_ok &= abs(j2 - j1 / 8.0) <= 1e-12 * abs(j1)

    base = SETUP.drive
    ss1 = steady_state(base, SETUP.mode, SETUP.ip, cfg)
    ss2 = steady_state(replace(base, F_probe_plus=2.0 * base.F_probe_plus),
                       SETUP.mode, SETUP.ip, cfg)
    quad_ok = (abs(ss2.I_plus - 4.0 * ss1.I_plus) <= 1e-12 * ss2.I_plus
               and abs(ss2.I_minus - 4.0 * ss1.I_minus) <= 1e-12 * ss2.I_minus)

    swapped = steady_state(
        replace(base, F_probe_plus=base.F_probe_minus,
                F_probe_minus=base.F_probe_plus), SETUP.mode, SETUP.ip, cfg)
    recip_ok = (swapped.I_plus == ss1.I_minus
                and swapped.I_minus == ss1.I_plus)
    elapsed = time.perf_counter() - t0
    checks = [
        ("normalization", hop_ok, "X^2+Y^2 = 1 within 1e-12"),
        ("orthogonality", orth_ok, "branch overlap < 1e-12"),
        ("dipole scaling", dipole_ok, "r^-3 within 1e-12"),
        ("quadratic probe", quad_ok, "I(2F) = 4 I(F) within 1e-12"),
        ("reciprocity", recip_ok, "exact intensity swap"),
        ("runtime", elapsed < 10.0, f"{elapsed:.2f} s"),
    ]
    _verdict(8, checks)
