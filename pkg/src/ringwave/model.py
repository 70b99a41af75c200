"""Derived-constants chain of the ring-wave model.

The pair-threshold photon (energy 2 m_e c^2) fixes every geometric
scale: ring radius r_p = hbar/(2 m_e c), wavelength 2 pi r_p, angular
frequency 2 m_e c^2 / hbar.  Splitting that photon in half gives the
two semi-photons modelling the electron and positron.  Imposing
m_s = m_e on the semi-photon mass integral solves for the field
amplitude E_o, the charge q_s = zeta^2 E_o r_s^2 follows, and the
coupling alpha_s = q_s^2/(hbar c) collapses to (2/pi) zeta^2 with
every scale cancelling.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .constants import PhysicalConstants, codata_constants
from .errors import DomainError, EvaluationError

SIGN_PLUS = "plus"
SIGN_MINUS = "minus"


@dataclass(frozen=True)
class PhotonModel:
    """Ring-photon parameters.

    energy erg; momentum g*cm/s; omega_p rad/s; lambda_p cm; r_p cm;
    s_p cross-section cm^2; volume cm^3; spin erg*s; mass_equivalent g;
    n photon count; nu linear frequency 1/s.
    """

    energy: float
    momentum: float
    omega_p: float
    lambda_p: float
    r_p: float
    s_p: float
    volume: float
    spin: float
    mass_equivalent: float
    n: float
    nu: float


@dataclass(frozen=True)
class InvariantConstants:
    """Boost-invariant combinations of a wave packet.

    c1 = E_o/omega, c2 = energy/omega, c3 = volume*omega.  For a
    physical photon c2 is hbar.
    """

    c1: float
    c2: float
    c3: float


@dataclass(frozen=True)
class SemiPhotonModel:
    """Half of the pair-threshold photon: the electron/positron record.

    zeta : torus thinness ratio r_c/r_s
    e_o : field amplitude solved from the mass integral (statV/cm)
    r_s : ring radius (cm); omega_s : angular frequency (rad/s)
    q_s : charge, signed (statC); m_s : mass, imposed = m_e (g)
    alpha_s : q_s^2/(hbar c) = (2/pi) zeta^2
    sigma_s : spin hbar/2 (erg*s); mu_s : magnetic moment (erg/G)
    sign : "plus" or "minus"
    """

    zeta: float
    e_o: float
    r_s: float
    omega_s: float
    q_s: float
    m_s: float
    alpha_s: float
    sigma_s: float
    mu_s: float
    sign: str

    @property
    def section_area(self) -> float:
        return math.pi * (self.zeta * self.r_s) ** 2

    @property
    def volume(self) -> float:
        return 2.0 * math.pi * self.r_s * self.section_area


def pair_threshold_photon(k: PhysicalConstants) -> PhotonModel:
    """The photon at the electron-positron production threshold."""
    energy = 2.0 * k.m_e * k.c * k.c
    omega = energy / k.hbar
    r_p = k.hbar / (2.0 * k.m_e * k.c)
    lambda_p = 2.0 * math.pi * r_p
    s_p = math.pi * r_p * r_p
    return PhotonModel(
        energy=energy,
        momentum=energy / k.c,
        omega_p=omega,
        lambda_p=lambda_p,
        r_p=r_p,
        s_p=s_p,
        volume=lambda_p * s_p,
        spin=k.hbar,
        mass_equivalent=energy / (k.c * k.c),
        n=1.0,
        nu=omega / (2.0 * math.pi),
    )


def invariant_constants(
    e_o: float, omega: float, energy: float, volume: float
) -> InvariantConstants:
    """The three frame-invariant packet ratios."""
    if omega <= 0.0:
        raise DomainError("frequency must be positive")
    return InvariantConstants(c1=e_o / omega, c2=energy / omega, c3=volume * omega)


def photon_from_invariants(
    ic: InvariantConstants, omega: float
) -> tuple[float, float, float]:
    """Invert the invariants at a chosen frequency: (E_o, energy, volume)."""
    if omega <= 0.0:
        raise DomainError("frequency must be positive")
    return ic.c1 * omega, ic.c2 * omega, ic.c3 / omega


def uncertainty_min_length(energy: float, k: PhysicalConstants) -> tuple[float, float]:
    """Smallest packet length allowed by the uncertainty relation.

    Returns the bound in both algebraic forms, 2 pi hbar c / energy and
    (2 pi / alpha)(e^2 / energy), which must agree to 1e-9 relative.
    """
    if energy <= 0.0:
        raise DomainError("energy must be positive")
    planck_form = 2.0 * math.pi * k.hbar * k.c / energy
    alpha_form = (2.0 * math.pi / k.alpha_exp) * (k.e * k.e / energy)
    if abs(alpha_form / planck_form - 1.0) > 1e-9:
        raise EvaluationError(
            "uncertainty-bound forms disagree beyond 1e-9: "
            f"{planck_form} vs {alpha_form}"
        )
    return planck_form, alpha_form


def dispersion_omega(k_wave: float, mass: float, k: PhysicalConstants) -> float:
    """Frequency of a wave of wavenumber k_wave carrying rest mass.

    omega = sqrt(c^2 k^2 + m^2 c^4 / hbar^2); hypot keeps the massless
    branch exactly ck and the k = 0 branch exactly m c^2/hbar.
    """
    if k_wave < 0.0:
        raise DomainError("wave number must be non-negative")
    if mass < 0.0:
        raise DomainError("mass must be non-negative")
    return math.hypot(k.c * k_wave, mass * k.c * k.c / k.hbar)


def magnetic_moment(
    q: float,
    r_s: float,
    omega_s: float,
    c: float,
    thomas: bool = False,
) -> float:
    """Moment of the ring current I = q omega/2pi over area pi r_s^2.

    Gaussian current-loop formula mu = I S / c; the optional Thomas
    factor doubles it.
    """
    mu = (q * omega_s / (2.0 * math.pi)) * (math.pi * r_s * r_s) / c
    return 2.0 * mu if thomas else mu


def semi_photon_model(
    zeta: float,
    k: PhysicalConstants,
    sign: str = SIGN_PLUS,
) -> SemiPhotonModel:
    """Build the semi-photon record for thinness ratio zeta.

    m_s = m_e is the imposed anchor; the amplitude E_o is solved from
    the mass closed form m_s = E_o^2 S_c/(4 omega_s c) with
    S_c = pi zeta^2 r_s^2.  The spin is hbar/2 by construction: r_s is
    defined as (hbar/2)/(m_e c), i.e. sigma_s/p_s.
    """
    if not 0.0 < zeta <= 1.0:
        raise DomainError(f"zeta must lie in (0, 1], got {zeta}")
    if sign not in (SIGN_PLUS, SIGN_MINUS):
        raise DomainError(f"sign must be plus or minus, got {sign!r}")
    r_s = k.hbar / (2.0 * k.m_e * k.c)
    omega_s = 2.0 * k.m_e * k.c * k.c / k.hbar
    m_s = k.m_e
    s_c = math.pi * (zeta * r_s) ** 2
    e_o = math.sqrt(4.0 * m_s * omega_s * k.c / s_c)
    q_mag = zeta * zeta * e_o * r_s * r_s
    q_s = q_mag if sign == SIGN_PLUS else -q_mag
    return SemiPhotonModel(
        zeta=zeta,
        e_o=e_o,
        r_s=r_s,
        omega_s=omega_s,
        q_s=q_s,
        m_s=m_s,
        alpha_s=q_mag * q_mag / (k.hbar * k.c),
        sigma_s=0.5 * k.hbar,
        mu_s=magnetic_moment(q_s, r_s, omega_s, k.c),
        sign=sign,
    )


def split_photon(
    p: PhotonModel,
    k: PhysicalConstants | None = None,
) -> tuple[SemiPhotonModel, SemiPhotonModel]:
    """Divide a pair-threshold photon into its two semi-photons.

    Defined only at the production threshold; radius, frequency, and
    volume carry over unchanged (zeta = 1), charges come out opposite.
    """
    if k is None:
        k = codata_constants()
    threshold = 2.0 * k.m_e * k.c * k.c
    if abs(p.energy / threshold - 1.0) > 1e-9:
        raise DomainError(
            f"photon energy {p.energy} erg is not the pair threshold {threshold} erg"
        )
    return (
        semi_photon_model(1.0, k, sign=SIGN_PLUS),
        semi_photon_model(1.0, k, sign=SIGN_MINUS),
    )
