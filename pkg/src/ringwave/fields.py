"""Field configurations and pointwise densities of the ring wave.

A plane-polarized wave of amplitude E_o is wound once around a ring
whose circumference equals the wavelength.  The electric vector lies
along the outward radial direction of the ring plane, the magnetic
vector along the ring axis, both modulated by the same cos(k l)
envelope fixed to the ring.  The "semi photon" kinds carry the same
envelope on half of the ring only and model the electron (plus) and
positron (minus); the minus kind is the pointwise negation of the
plus kind.

Time derivatives are taken along the material point circulating at
the wave speed through the static envelope: for a quantity Q(l)
attached to the moving point, dQ/dt = c dQ/dl.  That single
convention produces both terms of the displacement-current split
(the radial rate term and the curvature term omega_K E tau) and is
the one the finite-difference oracles in the tests differentiate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .constants import C_LIGHT
from .errors import DomainError, UnsupportedConfigurationError
from .geometry import RingGeometry, frenet_at

KIND_PLANE = "plane"
KIND_PHOTON = "twirled_photon"
KIND_SEMI_PLUS = "semi_photon_plus"
KIND_SEMI_MINUS = "semi_photon_minus"

TWIRLED_KINDS = (KIND_PHOTON, KIND_SEMI_PLUS, KIND_SEMI_MINUS)
ALL_KINDS = (KIND_PLANE,) + TWIRLED_KINDS


@dataclass(frozen=True)
class FieldConfiguration:
    """Immutable description of one wave configuration.

    kind : one of plane / twirled_photon / semi_photon_plus / semi_photon_minus
    e_o : field amplitude (statV/cm)
    omega : circular frequency (rad/s)
    k_wave : wave number omega/c (1/cm)
    geometry : the ring for twirled kinds, None for the plane wave
    support : arc-length interval carrying the field, [0, lambda] for the
        photon and [0, lambda/2] for the semi-photon kinds
    phase : phase offset added to k*l (rad)
    """

    kind: str
    e_o: float
    omega: float
    k_wave: float
    geometry: RingGeometry | None
    support: tuple[float, float]
    phase: float = 0.0

    @property
    def wavelength(self) -> float:
        return 2.0 * math.pi / self.k_wave

    @property
    def sign(self) -> float:
        return -1.0 if self.kind == KIND_SEMI_MINUS else 1.0


@dataclass(frozen=True)
class FieldSample:
    """Fields at one arc-length position."""

    l: float
    E: np.ndarray
    H: np.ndarray


@dataclass(frozen=True)
class CurrentDecomposition:
    """Displacement current split into normal and tangential parts.

    j_n, j_tau : 3-vectors (statA/cm^2)
    j_n_scalar : signed coefficient of j_n along the centripetal normal
    j_tau_scalar : signed coefficient of j_tau along the tangent
    complex_form : j_n_scalar + i*j_tau_scalar
    """

    j_n: np.ndarray
    j_tau: np.ndarray
    j_n_scalar: float
    j_tau_scalar: float
    complex_form: complex


def plane_wave(e_o: float, omega: float, c: float = C_LIGHT) -> FieldConfiguration:
    """Plane wave along +x with E along +y and H along +z.

    Kept mainly as the negative case for the ring-only operations and
    as the raw material the twirled kinds are wound from.
    """
    if e_o <= 0.0:
        raise DomainError("field amplitude must be positive")
    if omega <= 0.0:
        raise DomainError("frequency must be positive")
    k = omega / c
    return FieldConfiguration(
        kind=KIND_PLANE,
        e_o=e_o,
        omega=omega,
        k_wave=k,
        geometry=None,
        support=(0.0, 2.0 * math.pi / k),
    )


def twirled_field(
    kind: str,
    e_o: float,
    ring: RingGeometry,
    phase: float = 0.0,
) -> FieldConfiguration:
    """Wind one wave period onto the ring.

    The frequency is fixed by the ring: omega = omega_K = c/r_k, so the
    circumference holds exactly one wavelength.  Semi-photon kinds get
    half the ring as support.
    """
    if kind not in TWIRLED_KINDS:
        raise DomainError(f"not a twirled kind: {kind!r}")
    if e_o <= 0.0:
        raise DomainError("field amplitude must be positive")
    lam = ring.circumference
    hi = lam if kind == KIND_PHOTON else 0.5 * lam
    return FieldConfiguration(
        kind=kind,
        e_o=e_o,
        omega=ring.omega_K,
        k_wave=ring.K,
        geometry=ring,
        support=(0.0, hi),
        phase=phase,
    )


def amplitude_at(cfg: FieldConfiguration, l: float) -> float:
    """Signed radial field amplitude a(l) = sign * E_o cos(k l + phase).

    Zero outside the configured support (after wrapping l by one
    circumference for ring kinds).  The plane wave is unbounded.
    """
    if cfg.kind == KIND_PLANE:
        return cfg.e_o * math.cos(cfg.k_wave * l + cfg.phase)
    lam = cfg.geometry.circumference
    lw = l % lam
    if lw > cfg.support[1] and not math.isclose(lw, cfg.support[1]):
        return 0.0
    return cfg.sign * cfg.e_o * math.cos(cfg.k_wave * lw + cfg.phase)


def field_at(cfg: FieldConfiguration, l: float) -> FieldSample:
    """E and H vectors at arc length l.

    Ring kinds: E = a(l) * r_out, H = a(l) * (tau x r_out), so that
    E x H points along the direction of travel and |E| = |H| holds
    pointwise.  Plane kind: E = a(l) y, H = a(l) z at position (l,0,0).
    """
    a = amplitude_at(cfg, l)
    if cfg.kind == KIND_PLANE:
        return FieldSample(
            l=l,
            E=np.array([0.0, a, 0.0]),
            H=np.array([0.0, 0.0, a]),
        )
    frame = frenet_at(cfg.geometry, l)
    r_out = -frame.normal
    return FieldSample(l=l, E=a * r_out, H=a * np.cross(frame.tangent, r_out))


def sample_grid(cfg: FieldConfiguration, n: int) -> list[FieldSample]:
    """n equally spaced samples over the support, endpoints inclusive."""
    if n < 2:
        raise DomainError("need at least 2 samples")
    lo, hi = cfg.support
    return [field_at(cfg, l) for l in np.linspace(lo, hi, n)]


def displacement_current(cfg: FieldConfiguration, l: float) -> CurrentDecomposition:
    """Displacement current (1/4pi) dE/dt split along normal and tangent.

    Differentiating E(l(t)) = a(l(t)) r_out(l(t)) along the material
    trajectory l(t) = l + c t gives

        (1/4pi) dE/dt = -(1/4pi) c a'(l) n  +  (1/4pi) omega_K a(l) tau

    because r_out = -n and d r_out / dl = K tau.  The first term is the
    radial rate of the envelope, the second the curvature (ring
    current) term.  Both vanish outside the support.
    """
    if cfg.kind not in TWIRLED_KINDS:
        raise UnsupportedConfigurationError(
            "displacement current split needs ring curvature; "
            f"got kind {cfg.kind!r}"
        )
    ring = cfg.geometry
    frame = frenet_at(ring, l)
    a = amplitude_at(cfg, l)
    if _outside_support(cfg, l):
        da_dt = 0.0
    else:
        lw = l % ring.circumference
        # envelope rate seen by the moving point: c a'(l)
        da_dt = -cfg.sign * cfg.e_o * cfg.omega * math.sin(cfg.k_wave * lw + cfg.phase)
    inv4pi = 1.0 / (4.0 * math.pi)
    jn = -inv4pi * da_dt               # coefficient along the normal
    jtau = inv4pi * ring.omega_K * a   # coefficient along the tangent
    return CurrentDecomposition(
        j_n=jn * frame.normal,
        j_tau=jtau * frame.tangent,
        j_n_scalar=jn,
        j_tau_scalar=jtau,
        complex_form=complex(jn, jtau),
    )


def _outside_support(cfg: FieldConfiguration, l: float) -> bool:
    lam = cfg.geometry.circumference
    lw = l % lam
    return lw > cfg.support[1] and not math.isclose(lw, cfg.support[1])


def mass_current(e_scalar: float, omega: float) -> float:
    """Tangential (material) current density (omega/4pi) E.

    Magnitude of the curvature term of the displacement current; the
    factor i of the complex form is the quarter-turn from normal to
    tangent.
    """
    if omega <= 0.0:
        raise DomainError("frequency must be positive")
    return omega / (4.0 * math.pi) * e_scalar


def charge_density(cfg: FieldConfiguration, l: float) -> float:
    """Charge density rho_p(l) = (1/4pi)(omega/c) E(l) = (1/4pi) E(l)/r.

    Signed with the field, so it flips every half period.
    """
    if cfg.kind not in TWIRLED_KINDS:
        raise UnsupportedConfigurationError(
            f"charge density is defined for ring kinds only, got {cfg.kind!r}"
        )
    return cfg.k_wave / (4.0 * math.pi) * amplitude_at(cfg, l)


def energy_density(sample: FieldSample) -> float:
    """Electromagnetic energy density (E^2 + H^2)/8pi."""
    e2 = float(np.dot(sample.E, sample.E))
    h2 = float(np.dot(sample.H, sample.H))
    return (e2 + h2) / (8.0 * math.pi)


def mass_density(sample: FieldSample, c: float = C_LIGHT) -> float:
    """Mass density rho_m = rho_eps / c^2."""
    return energy_density(sample) / (c * c)
