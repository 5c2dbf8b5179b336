"""Two-mode mixing of the bright exciton with the guided photon.

At each wavenumber k the bright sector is the 2x2 Hamiltonian

    H(k) = [[E_s(k), f_k], [f_k, E_ph(k)]]

in the (exciton, photon) basis, with f_k the bright coupling.  Its
eigenmodes are the upper/lower branches

    E_pm(k) = (E_ph + E_s)/2 +- D_k,   D_k = sqrt(delta_k^2 + f_k^2),

with detuning delta_k = (E_ph(k) - E_s(k))/2 and real mixing amplitudes

    X_pm = +-sqrt((D -+ delta)/(2D)),  Y_pm = f / sqrt(2D(D -+ delta)),

normalized as X^2 + Y^2 = 1 per branch.  Amplitudes are kept real: all
downstream quantities use X^2, X^4 and |f|^2 only.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import AmbiguousSolutionError, DegenerateModeError, DomainError, NoSolutionError
from .lattice import SuperLatticeConfig, symmetric_band
from .waveguide import WaveguideConfig, coupling_bright, photon_dispersion

#: Points of the coarse bracket scan used by the resonance finder.
_SCAN_POINTS = 1000
#: Energy tolerance of the resonance bisection (eV).
_ENERGY_TOL = 1e-12


@dataclass(frozen=True)
class HopfieldMode:
    """Branch energies and mixing amplitudes at one wavenumber."""

    k: float
    E_upper: float
    E_lower: float
    X_upper: float
    Y_upper: float
    X_lower: float
    Y_lower: float
    delta: float
    D: float


def hopfield(k: float, wg: WaveguideConfig, cfg: SuperLatticeConfig) -> HopfieldMode:
    """Diagonalize the bright-exciton/photon pair at wavenumber k."""
    e_ph = photon_dispersion(k, wg)
    e_s = symmetric_band(k, cfg)
    f = coupling_bright(k, wg, cfg)
    delta = (e_ph - e_s) / 2.0
    d = math.hypot(delta, f)
    if d == 0.0:
        raise DegenerateModeError(
            "coupling and detuning both vanish; mixing amplitudes undefined")
    mean = (e_ph + e_s) / 2.0
    # Cancellation-free small differences: D -+ delta = f^2 / (D +- delta).
    d_minus = f ** 2 / (d + delta) if delta > 0.0 else d - delta
    d_plus = f ** 2 / (d - delta) if delta < 0.0 else d + delta
    x_up = math.sqrt(d_minus / (2.0 * d))
    # d_minus/d_plus vanish only when f = 0; the branch is then pure photon.
    y_up = f / math.sqrt(2.0 * d * d_minus) if d_minus > 0.0 else 1.0
    x_lo = -math.sqrt(d_plus / (2.0 * d))
    y_lo = f / math.sqrt(2.0 * d * d_plus) if d_plus > 0.0 else 1.0
    return HopfieldMode(
        k=k, E_upper=mean + d, E_lower=mean - d,
        X_upper=x_up, Y_upper=y_up, X_lower=x_lo, Y_lower=y_lo,
        delta=delta, D=d)


def verify_diagonalization(mode: HopfieldMode, wg: WaveguideConfig,
                           cfg: SuperLatticeConfig) -> float:
    """Residual off-diagonal element after rotating H(k) by (X, Y).

    Rebuilds the 2x2 Hamiltonian from the configs and applies the mode's
    amplitudes; returns max |offdiag| of U H U^T.  Exact amplitudes give a
    residual below 1e-12 * E_A.
    """
    e_ph = photon_dispersion(mode.k, wg)
    e_s = symmetric_band(mode.k, cfg)
    f = coupling_bright(mode.k, wg, cfg)
    h = np.array([[e_s, f], [f, e_ph]])
    u = np.array([[mode.X_upper, mode.Y_upper],
                  [mode.X_lower, mode.Y_lower]])
    rotated = u @ h @ u.T
    return float(max(abs(rotated[0, 1]), abs(rotated[1, 0])))


def branch_energy(k: float, branch: str, wg: WaveguideConfig,
                  cfg: SuperLatticeConfig) -> float:
    """Energy of one branch ('upper' or 'lower') at wavenumber k."""
    mode = hopfield(k, wg, cfg)
    if branch == "upper":
        return mode.E_upper
    if branch == "lower":
        return mode.E_lower
    raise DomainError(f"branch must be 'upper' or 'lower', got {branch!r}")


def find_resonance_k(target: float, branch: str, wg: WaveguideConfig,
                     cfg: SuperLatticeConfig) -> float:
    """Wavenumber k >= 0 where the branch energy equals ``target``.

    Scans [0, pi/a] on a coarse grid for sign changes of E(k) - target,
    then bisects the bracket down to |E(k) - target| < 1e-12 eV.  Raises
    ``NoSolutionError`` if the target is outside the branch range and
    ``AmbiguousSolutionError`` (listing all roots) if the scan brackets
    more than one crossing.
    """
    k_max = math.pi / cfg.a
    ks = np.linspace(0.0, k_max, _SCAN_POINTS + 1)
    vals = np.array([branch_energy(k, branch, wg, cfg) - target for k in ks])

    hits = [float(ks[i]) for i in np.flatnonzero(vals == 0.0)]
    brackets = [(float(ks[i]), float(ks[i + 1]))
                for i in np.flatnonzero(vals[:-1] * vals[1:] < 0.0)]

    if not hits and not brackets:
        lo, hi = float(vals.min() + target), float(vals.max() + target)
        raise NoSolutionError(
            f"target {target} eV outside {branch}-branch range [{lo}, {hi}] eV")

    roots = list(hits)
    for a_k, b_k in brackets:
        fa = branch_energy(a_k, branch, wg, cfg) - target
        lo, hi = a_k, b_k
        for _ in range(200):
            mid = 0.5 * (lo + hi)
            fm = branch_energy(mid, branch, wg, cfg) - target
            if abs(fm) < _ENERGY_TOL:
                lo = hi = mid
                break
            if fa * fm <= 0.0:
                hi = mid
            else:
                lo, fa = mid, fm
        roots.append(0.5 * (lo + hi))

    roots = sorted(set(roots))
    if len(roots) > 1:
        raise AmbiguousSolutionError(
            f"{len(roots)} wavenumbers reach {target} eV on the {branch} branch",
            candidates=roots)
    return roots[0]
