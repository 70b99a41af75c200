"""Vacuum-polarization arithmetic linking bare and measured charge.

The vacuum screens the bare charge like a dielectric: the measured
coupling is the bare one divided by an effective permittivity eps_v.
With alpha_bare = 2/pi from the ring model and the measured
fine-structure constant, eps_v = alpha_bare/alpha_exp comes out near
87.2 and the bare charge is sqrt(eps_v) elementary charges.  The bare
interaction radius r_0/alpha_exp lands on the reduced Compton
wavelength.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .constants import PhysicalConstants, electron_scales
from .errors import DomainError


@dataclass(frozen=True)
class VacuumPolarization:
    """Screening summary.

    eps_v : vacuum dielectric permeability, alpha_bare/alpha_exp
    alpha_bare, alpha_exp : couplings before and after screening
    q_bare, q_exp : charges before and after screening (statC)
    r_bare : bare interaction radius r_0/alpha_exp (cm)
    r_0 : classical electron radius (cm)
    """

    eps_v: float
    alpha_bare: float
    alpha_exp: float
    q_bare: float
    q_exp: float
    r_bare: float
    r_0: float


def coulomb_energy(q1: float, q2: float, r: float, eps: float) -> float:
    """Potential energy q1 q2 / (eps r) of two charges in a dielectric."""
    if r <= 0.0:
        raise DomainError("separation must be positive")
    if eps <= 0.0:
        raise DomainError("permittivity must be positive")
    return q1 * q2 / (eps * r)


def vacuum_polarization(alpha_bare: float, k: PhysicalConstants) -> VacuumPolarization:
    """Screen a bare coupling down to the measured one.

    Requires alpha_bare > alpha_exp: screening only ever weakens the
    interaction.
    """
    if alpha_bare <= k.alpha_exp:
        raise DomainError(
            f"bare coupling {alpha_bare} must exceed the measured {k.alpha_exp}"
        )
    eps_v = alpha_bare / k.alpha_exp
    scales = electron_scales(k)
    return VacuumPolarization(
        eps_v=eps_v,
        alpha_bare=alpha_bare,
        alpha_exp=k.alpha_exp,
        q_bare=k.e * math.sqrt(eps_v),
        q_exp=k.e,
        r_bare=scales.r_0 / k.alpha_exp,
        r_0=scales.r_0,
    )


def charge_difference(q_bare: float, q_scr: float) -> float:
    """Observable charge as the bare minus the screening cloud."""
    if not (math.isfinite(q_bare) and math.isfinite(q_scr)):
        raise DomainError("charges must be finite")
    return q_bare - q_scr
