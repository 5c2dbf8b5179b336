"""Two-atom-per-cell 1D lattice: dipole couplings and exciton bands.

The lattice has N unit cells of pitch ``a``; each cell holds two identical
two-level atoms a distance ``R`` apart (R < a).  Resonant dipole-dipole
coupling between atoms at distance r is

    J(r) = mu^2 (1 - 3 cos^2 theta) / (4 pi eps0 r^3),

with theta the angle between the transition dipole and the lattice axis.
Inside a cell the coupling J0 = J(R) splits the single-excitation doublet
into a symmetric (bright) level E_s = E_A + J0 and an antisymmetric (dark)
level E_a = E_A - J0.  Between cells, nearest-neighbour hopping J = J(a)
disperses the bright level into the band

    E_s(k) = E_A + J0 + 4 J cos(k a),

while the dark level stays flat at E_a.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .constants import CONSTANTS, PhysicalConstants
from .errors import DomainError

#: Angle where 1 - 3 cos^2(theta) vanishes and all couplings turn off.
MAGIC_ANGLE = math.acos(1.0 / math.sqrt(3.0))


@dataclass(frozen=True)
class SuperLatticeConfig:
    """Geometry and transition parameters of the lattice.

    E_A: atomic transition energy (eV); a: cell pitch (Angstrom);
    R: in-cell atom separation (Angstrom); mu: transition dipole
    (e*Angstrom); theta: dipole angle to the axis (rad); N: number of
    unit cells (odd, N = 2M + 1).
    """

    E_A: float
    a: float
    R: float
    mu: float
    theta: float
    N: int

    def __post_init__(self):
        if self.a <= 0:
            raise DomainError("cell pitch a must be positive")
        if not 0 < self.R < self.a:
            raise DomainError("need 0 < R < a")
        if self.mu <= 0:
            raise DomainError("transition dipole mu must be positive")
        if self.E_A <= 0:
            raise DomainError("transition energy E_A must be positive")
        if not 0 <= self.theta <= math.pi / 2:
            raise DomainError("theta must lie in [0, pi/2]")
        if self.N < 3 or self.N % 2 == 0:
            raise DomainError("N must be odd and >= 3")

    @property
    def M(self) -> int:
        return (self.N - 1) // 2

    @property
    def L(self) -> float:
        """Lattice length N*a (Angstrom)."""
        return self.N * self.a


@dataclass(frozen=True)
class ExcitonLevels:
    """In-cell splitting and nearest-neighbour hopping energies (eV)."""

    E_s: float
    E_a: float
    J0: float
    J: float


def dipole_coupling(r: float, cfg: SuperLatticeConfig,
                    constants: PhysicalConstants = CONSTANTS) -> float:
    """Resonant dipole-dipole coupling at distance r (Angstrom), in eV.

    Positive for theta beyond the magic angle, negative below it.
    """
    if r <= 0:
        raise DomainError(f"distance must be positive, got {r}")
    angular = 1.0 - 3.0 * math.cos(cfg.theta) ** 2
    return constants.coulomb_mu2_prefactor * cfg.mu ** 2 * angular / r ** 3


def exciton_levels(cfg: SuperLatticeConfig) -> ExcitonLevels:
    """Symmetric/antisymmetric level energies and hopping constants."""
    J0 = dipole_coupling(cfg.R, cfg)
    J = dipole_coupling(cfg.a, cfg)
    return ExcitonLevels(E_s=cfg.E_A + J0, E_a=cfg.E_A - J0, J0=J0, J=J)


def intercell_couplings(cfg: SuperLatticeConfig) -> tuple[float, float, float]:
    """The three distinct couplings between adjacent cells: (J11, J12, J21).

    J11 pairs like atoms (distance a), J12 the outer pair (a + R), J21 the
    inner pair (a - R).  Their spread quantifies the error of the a >> R
    single-hopping approximation.
    """
    if cfg.a <= cfg.R:
        raise DomainError("need a > R for distinct neighbour cells")
    j11 = dipole_coupling(cfg.a, cfg)
    j12 = dipole_coupling(cfg.a + cfg.R, cfg)
    j21 = dipole_coupling(cfg.a - cfg.R, cfg)
    return j11, j12, j21


def symmetric_band(k: float, cfg: SuperLatticeConfig) -> float:
    """Bright-exciton band E_A + J0 + 4 J cos(k a) at wavenumber k.

    k must lie in the first Brillouin zone |k| <= pi/a; callers fold first
    (see :func:`fold_wavenumber`).
    """
    if abs(k) > math.pi / cfg.a * (1.0 + 1e-12):
        raise DomainError(f"k = {k} outside the first Brillouin zone")
    lv = exciton_levels(cfg)
    return cfg.E_A + lv.J0 + 4.0 * lv.J * math.cos(k * cfg.a)


def antisymmetric_energy(cfg: SuperLatticeConfig) -> float:
    """Flat dark-exciton energy E_A - J0 (k-independent)."""
    return cfg.E_A - dipole_coupling(cfg.R, cfg)


def allowed_wavenumbers(cfg: SuperLatticeConfig) -> np.ndarray:
    """The N wavenumbers 2 pi p / (N a), p = 0, +-1, ..., +-M, ascending."""
    p = np.arange(-cfg.M, cfg.M + 1)
    return 2.0 * math.pi * p / (cfg.N * cfg.a)


def fold_wavenumber(k: float, cfg: SuperLatticeConfig) -> float:
    """Fold k into the first Brillouin zone (-pi/a, pi/a]."""
    g = 2.0 * math.pi / cfg.a
    return k - g * math.ceil((k * cfg.a / math.pi - 1.0) / 2.0)
