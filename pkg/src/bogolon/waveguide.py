"""1D waveguide photons and their coupling to the two in-cell exciton states.

The guided photon has the massive dispersion

    E_ph(q) = (hbar c / sqrt(eps)) * sqrt(q0^2 + q^2),

with effective dielectric constant eps and confinement wavenumber q0.  An
excitation shared by the two atoms of a cell couples to the field through
the in-cell interference factors cos(kR/2) (symmetric state, bright) and
sin(kR/2) (antisymmetric state, dark), both on top of the prefactor

    sqrt(E_ph(k) / (eps0 Sbar a)) * u_b * mu,

where Sbar is the effective photon cross-section and u_b the mode amplitude
at the lattice position.  Only magnitudes are exposed; every downstream
observable depends on |f|^2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .constants import CONSTANTS, PhysicalConstants
from .errors import DomainError
from .lattice import SuperLatticeConfig


@dataclass(frozen=True)
class WaveguideConfig:
    """Photon mode parameters.

    epsilon: effective dielectric constant (>= 1); q0: confinement
    wavenumber (1/Angstrom); u_b: dimensionless mode amplitude at the
    lattice, 0 < u_b <= 1; S_bar: effective cross-section (Angstrom^2);
    L: waveguide length (Angstrom), equal to N*a of the paired lattice.
    """

    epsilon: float
    q0: float
    u_b: float
    S_bar: float
    L: float

    def __post_init__(self):
        if self.epsilon < 1.0:
            raise DomainError("epsilon must be >= 1")
        if self.q0 <= 0:
            raise DomainError("q0 must be positive")
        if not 0.0 < self.u_b <= 1.0:
            raise DomainError("u_b must lie in (0, 1]")
        if self.S_bar <= 0:
            raise DomainError("S_bar must be positive")
        if self.L <= 0:
            raise DomainError("L must be positive")

    @classmethod
    def from_resonance(cls, epsilon: float, E_A: float, u_b: float,
                       S_bar: float, L: float,
                       constants: PhysicalConstants = CONSTANTS) -> "WaveguideConfig":
        """Fix q0 so that the photon band bottom sits at E_A:
        q0 = sqrt(eps) * E_A / (hbar c)."""
        q0 = math.sqrt(epsilon) * E_A / constants.hbar_c
        return cls(epsilon=epsilon, q0=q0, u_b=u_b, S_bar=S_bar, L=L)


def photon_dispersion(q: float, wg: WaveguideConfig,
                      constants: PhysicalConstants = CONSTANTS) -> float:
    """Guided-photon energy at wavenumber q (any real q), in eV."""
    return constants.hbar_c / math.sqrt(wg.epsilon) * math.hypot(wg.q0, q)


def _coupling_prefactor(k: float, wg: WaveguideConfig, cfg: SuperLatticeConfig,
                        constants: PhysicalConstants) -> float:
    # sqrt(E_ph/(eps0 Sbar a)) * u_b * mu with 1/eps0 = 4 pi e^2/(4 pi eps0)
    e_ph = photon_dispersion(k, wg, constants)
    return math.sqrt(e_ph * constants.inv_eps0 / (wg.S_bar * cfg.a)) * wg.u_b * cfg.mu


def coupling_bright(k: float, wg: WaveguideConfig, cfg: SuperLatticeConfig,
                    constants: PhysicalConstants = CONSTANTS) -> float:
    """|f_k| for the bright (symmetric) exciton: prefactor * |cos(kR/2)|."""
    return _coupling_prefactor(k, wg, cfg, constants) * abs(math.cos(k * cfg.R / 2.0))


def coupling_dark(k: float, wg: WaveguideConfig, cfg: SuperLatticeConfig,
                  constants: PhysicalConstants = CONSTANTS) -> float:
    """|f_k| for the dark (antisymmetric) exciton: prefactor * |sin(kR/2)|.

    Vanishes at k = 0; at the operating wavenumbers k R << 1 it is smaller
    than the bright coupling by tan(kR/2) ~ kR/2.
    """
    return _coupling_prefactor(k, wg, cfg, constants) * abs(math.sin(k * cfg.R / 2.0))
