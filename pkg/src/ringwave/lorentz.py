"""Lorentz boosts of a plane-wave packet and invariance checks.

The three packet ratios E_o/omega, energy/omega, volume*omega are
claimed frame-invariant.  The check here is deliberately
non-circular: omega transforms through the wave four-vector (Doppler
factor), E_o through the electromagnetic field-transformation law
applied to explicit E and H vectors, energy through photon-count
preservation, and volume through the boost-invariant count of
wavelengths in the packet.  Only after all four transform separately
are the ratios compared.

Collinear boosts only: the axis must be parallel or antiparallel to
the propagation direction.  Positive beta along the propagation
direction means the new frame recedes from the wave (redshift).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

from .constants import C_LIGHT, HBAR
from .errors import DomainError, UnsupportedConfigurationError


@dataclass(frozen=True)
class WavePacket:
    """Monochromatic packet of plane waves.

    e_o statV/cm; omega rad/s; energy erg; volume cm^3; direction is
    the unit propagation vector.
    """

    e_o: float
    omega: float
    energy: float
    volume: float
    direction: tuple[float, float, float]

    def __post_init__(self) -> None:
        if self.omega <= 0.0:
            raise DomainError("packet frequency must be positive")
        if self.volume <= 0.0:
            raise DomainError("packet volume must be positive")
        norm = math.sqrt(sum(d * d for d in self.direction))
        if abs(norm - 1.0) > 1e-12:
            raise DomainError(f"direction must be a unit vector, |d| = {norm}")


@dataclass(frozen=True)
class BoostReport:
    """One boost: the primed packet and the worst invariant-ratio drift."""

    beta: float
    primed: WavePacket
    ratio_deviations: float


def boost_plane_fields(
    e_vec: np.ndarray,
    h_vec: np.ndarray,
    beta_vec: np.ndarray,
) -> tuple[np.ndarray, np.ndarray]:
    """Transform E and H into a frame moving at beta_vec (units of c).

    Gaussian-unit law: E' = g(E + beta x H) - (g^2/(g+1))(beta . E) beta
    and the same with E <-> H, beta -> -beta under the cross product.
    """
    b2 = float(np.dot(beta_vec, beta_vec))
    if b2 >= 1.0:
        raise DomainError("|beta| must be below 1")
    gamma = 1.0 / math.sqrt(1.0 - b2)
    coef = gamma * gamma / (gamma + 1.0)
    e_prime = (
        gamma * (e_vec + np.cross(beta_vec, h_vec))
        - coef * float(np.dot(beta_vec, e_vec)) * beta_vec
    )
    h_prime = (
        gamma * (h_vec - np.cross(beta_vec, e_vec))
        - coef * float(np.dot(beta_vec, h_vec)) * beta_vec
    )
    return e_prime, h_prime


def _transverse_basis(direction: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Deterministic orthonormal pair perpendicular to direction."""
    ref = np.array([0.0, 0.0, 1.0])
    if abs(float(np.dot(direction, ref))) > 0.9:
        ref = np.array([1.0, 0.0, 0.0])
    e1 = np.cross(ref, direction)
    e1 = e1 / np.linalg.norm(e1)
    return e1, np.cross(direction, e1)


def boost_packet(p: WavePacket, beta: float, axis: tuple[float, float, float]) -> BoostReport:
    """Boost the packet along a collinear axis and audit the invariants."""
    if abs(beta) >= 1.0:
        raise DomainError(f"|beta| must be below 1, got {beta}")
    k_hat = np.array(p.direction)
    ax = np.array(axis, dtype=float)
    ax_norm = float(np.linalg.norm(ax))
    if ax_norm == 0.0:
        raise DomainError("boost axis must be a nonzero vector")
    ax = ax / ax_norm
    if float(np.linalg.norm(np.cross(ax, k_hat))) > 1e-9:
        raise UnsupportedConfigurationError(
            "only boosts collinear with the propagation direction are supported"
        )
    # signed speed along the propagation direction
    b = beta if float(np.dot(ax, k_hat)) > 0.0 else -beta
    if b == 0.0:
        return BoostReport(beta=beta, primed=replace(p), ratio_deviations=0.0)

    doppler = math.sqrt((1.0 - b) / (1.0 + b))
    omega_prime = p.omega * doppler

    # field-transformation route for the amplitude
    e1, h1 = _transverse_basis(k_hat)
    e_prime, h_prime = boost_plane_fields(p.e_o * e1, p.e_o * h1, b * k_hat)
    e_o_prime = float(np.linalg.norm(e_prime))
    del h_prime  # magnitude equality is a tested property, not an input

    # photon count is frame-independent: energy = N hbar omega in every frame
    n_photons = p.energy / (HBAR * p.omega)
    energy_prime = n_photons * HBAR * omega_prime

    # wavelength count is frame-independent: volume = S N_lambda lambda
    lam = 2.0 * math.pi * C_LIGHT / p.omega
    lam_prime = 2.0 * math.pi * C_LIGHT / omega_prime
    volume_prime = (p.volume / lam) * lam_prime

    primed = WavePacket(
        e_o=e_o_prime,
        omega=omega_prime,
        energy=energy_prime,
        volume=volume_prime,
        direction=p.direction,
    )
    deviations = (
        abs((primed.e_o / primed.omega) / (p.e_o / p.omega) - 1.0),
        abs((primed.energy / primed.omega) / (p.energy / p.omega) - 1.0),
        abs((primed.volume * primed.omega) / (p.volume * p.omega) - 1.0),
    )
    return BoostReport(beta=beta, primed=primed, ratio_deviations=max(deviations))


def invariant_sweep(p: WavePacket, betas: list[float]) -> BoostReport:
    """Boost along the propagation direction for every beta; worst report."""
    if not betas:
        raise DomainError("beta sweep must not be empty")
    worst = None
    for beta in betas:
        report = boost_packet(p, beta, p.direction)
        if worst is None or report.ratio_deviations > worst.ratio_deviations:
            worst = report
    return worst
