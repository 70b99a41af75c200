"""Universal constants and electron length scales, Gaussian CGS throughout.

Values are CODATA 2018.  The elementary charge is carried in
electrostatic units (statcoulomb) so that the fine-structure constant
is alpha = e^2 / (hbar c) with no vacuum-permittivity factor.

hbar is stored as h / (2 pi) evaluated in double precision rather than
as the rounded published decimal: the rounded value 1.054571817e-27
breaks h = 2 pi hbar at the 4e-10 level, while the evaluated quotient
keeps the identity exact to machine precision and still matches the
published decimal to 7e-10.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError

C_LIGHT = 2.99792458e10        # speed of light, cm/s (exact)
H_PLANCK = 6.62607015e-27      # Planck constant, erg*s (exact)
HBAR = H_PLANCK / (2.0 * math.pi)  # reduced Planck constant, erg*s
E_CHARGE = 4.803204712570263e-10   # elementary charge, statC
M_ELECTRON = 9.1093837015e-28  # electron mass, g
ALPHA_EXP = 7.2973525693e-3    # fine-structure constant, measured


@dataclass(frozen=True)
class PhysicalConstants:
    """Bundle of universal constants.

    c : speed of light (cm/s)
    hbar : reduced Planck constant (erg*s)
    h : Planck constant (erg*s)
    e : elementary charge (statC)
    m_e : electron mass (g)
    alpha_exp : measured fine-structure constant (dimensionless)
    """

    c: float
    hbar: float
    h: float
    e: float
    m_e: float
    alpha_exp: float

    def __post_init__(self) -> None:
        for name in ("c", "hbar", "h", "e", "m_e", "alpha_exp"):
            if getattr(self, name) <= 0.0:
                raise DomainError(f"constant {name} must be positive")


@dataclass(frozen=True)
class ElectronScales:
    """Characteristic electron lengths (cm).

    r_0 : classical electron radius, e^2 / (m_e c^2)
    lambda_bar_c : reduced Compton wavelength, hbar / (m_e c)
    r_c : alias of lambda_bar_c (the two coincide by definition)
    """

    r_0: float
    lambda_bar_c: float
    r_c: float


def codata_constants() -> PhysicalConstants:
    """Return the CODATA 2018 constants in Gaussian CGS units."""
    return PhysicalConstants(
        c=C_LIGHT,
        hbar=HBAR,
        h=H_PLANCK,
        e=E_CHARGE,
        m_e=M_ELECTRON,
        alpha_exp=ALPHA_EXP,
    )


def electron_scales(k: PhysicalConstants) -> ElectronScales:
    """Derive the classical radius and reduced Compton wavelength from k."""
    lam = k.hbar / (k.m_e * k.c)
    r_0 = k.e * k.e / (k.m_e * k.c * k.c)
    return ElectronScales(r_0=r_0, lambda_bar_c=lam, r_c=lam)
