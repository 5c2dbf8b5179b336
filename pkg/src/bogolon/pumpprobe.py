"""Driven pump-probe dynamics of the pumped mode and the dark-exciton pair.

A strong pump populates the lower branch at wavenumber k with occupation
N; probes at k +- q drive the flat dark level.  In the frame rotating at
the common drive energy E the mean-field amplitudes obey

    i dA/dt   = (E_pol~ - E - i hG_pol) A + F_pump,
    i dB+/dt  = (E_a~ - E - i hG_a) B+ + V conj(B-) + F+,
    i dB-/dt  = (E_a~ - E - i hG_a) B- + V conj(B+) + F-,

with the pump-induced anomalous coupling V = Delta_tilde * N and the
Hartree-shifted energies

    E_pol~ = E_pol(k) + Delta X^4 N,   E_a~ = E_a + 2 Delta_tilde N.

Damping enters as -i hGamma added to each rotating-frame energy; squared
resonance denominators are then squared moduli of complex factors.  The
dark pair couples through the conjugate amplitude (the anomalous B+ B-
channel), which for real drives reduces to the familiar closed forms

    B+ = (E - E_a~) F / ((E - E_a~)^2 - V^2),
    B- = V F / ((E - E_a~)^2 - V^2),

for a single probe F at k + q with no damping.  Time units are hbar/eV.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Optional, Sequence

import numpy as np

from .errors import BistabilityError, DomainError, PoleError, StabilityError
from .kinematic import InteractionParams
from .lattice import SuperLatticeConfig, antisymmetric_energy
from .polariton import HopfieldMode

_FIXED_POINT_TOL = 1e-12
_FIXED_POINT_MAX_ITER = 10_000


@dataclass(frozen=True)
class DriveConfig:
    """Pump/probe drive in the rotating frame.

    E_drive: common pump/probe energy (eV); F_pump and F_probe_plus/minus:
    complex drive amplitudes (eV) at k and k +- q; hGamma_*: damping rates
    as energies hbar*Gamma (eV); k_pump, q: pump wavenumber and probe
    offset (1/Angstrom).  When ``n_pump`` is set the pump occupation is
    prescribed directly; otherwise it is solved self-consistently from
    F_pump.
    """

    E_drive: float
    F_pump: complex
    F_probe_plus: complex
    F_probe_minus: complex
    hGamma_ph: float
    hGamma_s: float
    hGamma_a: float
    k_pump: float
    q: float
    n_pump: Optional[float] = None

    def __post_init__(self):
        if self.E_drive <= 0:
            raise DomainError("E_drive must be positive")
        if min(self.hGamma_ph, self.hGamma_s, self.hGamma_a) < 0:
            raise DomainError("damping rates must be >= 0")
        if self.n_pump is not None and self.n_pump < 0:
            raise DomainError("prescribed pump occupation must be >= 0")


@dataclass(frozen=True)
class PumpSolution:
    """Pump occupation together with the shifted mode energy."""

    n_pump: float
    E_pol_tilde: float
    f_pump_magnitude: float
    iterations: int


@dataclass(frozen=True)
class SteadyState:
    """Stationary amplitudes, intensities and resonance energies."""

    A_amp: complex
    N_pump: float
    B_plus: complex
    B_minus: complex
    I_plus: float
    I_minus: float
    E_a_tilde: float
    E_pol_tilde: float
    V_mf: float
    E_res_plus: Optional[float]
    E_res_minus: Optional[float]


@dataclass(frozen=True)
class SpectrumPoint:
    """Probe-normalized dark intensities at one drive energy."""

    E_offset: float
    I_minus_scaled: float
    I_plus_scaled: float


@dataclass(frozen=True)
class Trajectory:
    """Sampled rotating-frame trajectory of (A, B+, B-)."""

    times: np.ndarray
    A: np.ndarray
    B_plus: np.ndarray
    B_minus: np.ndarray


def polariton_damping(mode: HopfieldMode, drive: DriveConfig) -> float:
    """Lower-branch damping hG_pol = (X^2 hG_s + Y^2 hG_ph) / 2."""
    return 0.5 * (mode.X_lower ** 2 * drive.hGamma_s
                  + mode.Y_lower ** 2 * drive.hGamma_ph)


def pump_occupation(drive: DriveConfig, mode: HopfieldMode,
                    ip: InteractionParams) -> PumpSolution:
    """Pump occupation N and shifted energy E_pol~ = E_pol + Delta X^4 N.

    With ``drive.n_pump`` set, returns it together with the pump amplitude
    that would sustain it.  Otherwise iterates the Lorentzian fixed point

        N = |F_pump|^2 / ((E - E_pol~(N))^2 + hG_pol^2)

    with damped updates to 1e-12 relative tolerance; non-convergence
    (bistable drive) raises ``BistabilityError`` with the straddling pair.
    """
    e = drive.E_drive
    e_pol = mode.E_lower
    hg = polariton_damping(mode, drive)
    shift = ip.Delta * ip.X2 ** 2

    if drive.n_pump is not None:
        n = drive.n_pump
        e_t = e_pol + shift * n
        f_mag = math.sqrt(n * ((e - e_t) ** 2 + hg ** 2))
        return PumpSolution(n_pump=n, E_pol_tilde=e_t,
                            f_pump_magnitude=f_mag, iterations=0)

    f2 = abs(drive.F_pump) ** 2
    n = 0.0
    for it in range(1, _FIXED_POINT_MAX_ITER + 1):
        denom = (e - e_pol - shift * n) ** 2 + hg ** 2
        if denom == 0.0:
            raise BistabilityError(
                "undamped drive exactly on resonance; occupation diverges",
                bracket=(n, math.inf))
        n_new = 0.5 * n + 0.5 * f2 / denom
        if abs(n_new - n) <= _FIXED_POINT_TOL * max(n_new, 1e-300):
            return PumpSolution(n_pump=n_new, E_pol_tilde=e_pol + shift * n_new,
                                f_pump_magnitude=abs(drive.F_pump),
                                iterations=it)
        n = n_new
    raise BistabilityError(
        f"occupation fixed point did not converge in {_FIXED_POINT_MAX_ITER} "
        "iterations", bracket=(min(n, n_new), max(n, n_new)))


def _rotating_frame(drive: DriveConfig, mode: HopfieldMode,
                    ip: InteractionParams, cfg: SuperLatticeConfig):
    """Shared renormalized energies: (pump, E_a~, V_mf, hG_pol, E_a bare)."""
    pump = pump_occupation(drive, mode, ip)
    e_a = antisymmetric_energy(cfg)
    e_a_t = e_a + 2.0 * ip.Delta_tilde * pump.n_pump
    v_mf = ip.Delta_tilde * pump.n_pump
    return pump, e_a_t, v_mf, polariton_damping(mode, drive), e_a


def steady_state(drive: DriveConfig, mode: HopfieldMode,
                 ip: InteractionParams, cfg: SuperLatticeConfig) -> SteadyState:
    """Stationary solution of the driven three-amplitude system.

    The dark pair (B+, conj(B-)) satisfies a 2x2 linear system with real
    determinant (E_a~ - E)^2 + hG_a^2 - V^2; a vanishing determinant (drive
    exactly at a resonance that damping does not lift) raises ``PoleError``.
    """
    pump, e_a_t, v, hg_pol, _ = _rotating_frame(drive, mode, ip, cfg)
    e = drive.E_drive
    hg_a = drive.hGamma_a

    denom_pump = e - pump.E_pol_tilde + 1j * hg_pol
    a_amp = drive.F_pump / denom_pump if denom_pump != 0 else complex(math.inf)

    # (E_a~ - E - i hG_a) B+ + V conj(B-) + F+ = 0 and the conjugated
    # partner equation; unknowns (B+, conj(B-)).
    z = e_a_t - e - 1j * hg_a
    det = (e_a_t - e) ** 2 + hg_a ** 2 - v ** 2
    if det == 0.0:
        raise PoleError(
            f"drive energy {e} eV sits exactly on a pair resonance")
    b_plus = (-drive.F_probe_plus * z.conjugate()
              + v * drive.F_probe_minus.conjugate()) / det
    b_minus = (-z.conjugate() * drive.F_probe_minus
               + v * drive.F_probe_plus.conjugate()) / det

    rad = v ** 2 - hg_a ** 2
    res_p = e_a_t + math.sqrt(rad) if rad > 0 else None
    res_m = e_a_t - math.sqrt(rad) if rad > 0 else None
    return SteadyState(
        A_amp=a_amp, N_pump=pump.n_pump, B_plus=b_plus, B_minus=b_minus,
        I_plus=abs(b_plus) ** 2, I_minus=abs(b_minus) ** 2,
        E_a_tilde=e_a_t, E_pol_tilde=pump.E_pol_tilde, V_mf=v,
        E_res_plus=res_p, E_res_minus=res_m)


def spectrum(drive: DriveConfig, mode: HopfieldMode, ip: InteractionParams,
             cfg: SuperLatticeConfig,
             energies: Sequence[float]) -> list[SpectrumPoint]:
    """Probe-normalized dark intensities over a drive-energy grid.

    Intensities are scaled by the total injected probe intensity
    |F+|^2 + |F-|^2; energies are reported as offsets from the bare dark
    level.  Grid points landing exactly on an undamped resonance are
    reported as infinite rather than raised.
    """
    if len(energies) == 0:
        raise DomainError("energy grid must be nonempty")
    e_a = antisymmetric_energy(cfg)
    i_probe = abs(drive.F_probe_plus) ** 2 + abs(drive.F_probe_minus) ** 2
    points = []
    for e in energies:
        try:
            ss = steady_state(replace(drive, E_drive=float(e)), mode, ip, cfg)
            i_m, i_p = ss.I_minus, ss.I_plus
        except PoleError:
            i_m = i_p = math.inf
        if i_probe > 0.0:
            i_m, i_p = i_m / i_probe, i_p / i_probe
        points.append(SpectrumPoint(E_offset=float(e) - e_a,
                                    I_minus_scaled=i_m, I_plus_scaled=i_p))
    return points


def time_evolve(drive: DriveConfig, mode: HopfieldMode, ip: InteractionParams,
                cfg: SuperLatticeConfig, t_end: float, dt: float,
                sample_every: int = 1) -> Trajectory:
    """Integrate the rotating-frame amplitudes from rest with classical RK4.

    Time is measured in hbar/eV.  The step must resolve the fastest scale:
    dt < 0.1 / max(detunings, V_mf, dampings), else ``StabilityError``.
    The final state approaches :func:`steady_state` once
    t_end >> hbar/hGamma.
    """
    if dt <= 0 or t_end <= 0:
        raise DomainError("t_end and dt must be positive")
    if sample_every < 1:
        raise DomainError("sample_every must be >= 1")
    pump, e_a_t, v, hg_pol, _ = _rotating_frame(drive, mode, ip, cfg)
    e = drive.E_drive

    scale = max(abs(e_a_t - e), abs(pump.E_pol_tilde - e), v,
                drive.hGamma_a, hg_pol)
    if scale > 0 and dt >= 0.1 / scale:
        raise StabilityError(
            f"dt = {dt} exceeds stability bound 0.1/{scale} = {0.1 / scale}")

    z_pol = (pump.E_pol_tilde - e) - 1j * hg_pol
    z_a = (e_a_t - e) - 1j * drive.hGamma_a
    f_pump = complex(drive.F_pump)
    f_p = complex(drive.F_probe_plus)
    f_m = complex(drive.F_probe_minus)

    def rhs(a, bp, bm):
        return (-1j * (z_pol * a + f_pump),
                -1j * (z_a * bp + v * bm.conjugate() + f_p),
                -1j * (z_a * bm + v * bp.conjugate() + f_m))

    n_steps = max(1, math.ceil(t_end / dt))
    h = t_end / n_steps
    a = bp = bm = 0.0 + 0.0j

    times = [0.0]
    traj_a, traj_bp, traj_bm = [a], [bp], [bm]
    for step in range(1, n_steps + 1):
        k1 = rhs(a, bp, bm)
        k2 = rhs(a + 0.5 * h * k1[0], bp + 0.5 * h * k1[1], bm + 0.5 * h * k1[2])
        k3 = rhs(a + 0.5 * h * k2[0], bp + 0.5 * h * k2[1], bm + 0.5 * h * k2[2])
        k4 = rhs(a + h * k3[0], bp + h * k3[1], bm + h * k3[2])
        a += h / 6.0 * (k1[0] + 2.0 * k2[0] + 2.0 * k3[0] + k4[0])
        bp += h / 6.0 * (k1[1] + 2.0 * k2[1] + 2.0 * k3[1] + k4[1])
        bm += h / 6.0 * (k1[2] + 2.0 * k2[2] + 2.0 * k3[2] + k4[2])
        if step % sample_every == 0 or step == n_steps:
            times.append(step * h)
            traj_a.append(a)
            traj_bp.append(bp)
            traj_bm.append(bm)

    return Trajectory(times=np.array(times), A=np.array(traj_a),
                      B_plus=np.array(traj_bp), B_minus=np.array(traj_bm))
