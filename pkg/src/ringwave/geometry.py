"""Ring geometry, Frenet frame, and torus measures.

The ring lies in the z = 0 plane, centred on the origin, traversed
counter-clockwise when seen from +z unless built with handedness "cw".
Arc length l parameterises the circle; the phase angle is l / r_k.
The normal vector used throughout is the centripetal one (pointing at
the axis), so the Frenet relation reads dT/dl = +K n.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError


@dataclass(frozen=True)
class RingGeometry:
    """A circle of radius r_k travelled at the speed of light.

    r_k : ring radius (cm)
    K : curvature 1/r_k (1/cm)
    omega_K : angular speed c/r_k of a point moving at c (rad/s)
    circumference : 2 pi r_k (cm)
    handedness : "ccw" or "cw" sense of travel seen from +z
    """

    r_k: float
    K: float
    omega_K: float
    circumference: float
    handedness: str = "ccw"


@dataclass(frozen=True)
class FrenetFrame:
    """Right-handed moving frame at a point of the ring."""

    position: np.ndarray
    tangent: np.ndarray
    normal: np.ndarray


@dataclass(frozen=True)
class TorusShape:
    """Torus with ring radius r_s and cross-section radius r_c.

    The thinness ratio zeta = r_c / r_s must lie in (0, 1]; zeta = 1 is
    the degenerate horn torus.
    """

    r_s: float
    r_c: float

    def __post_init__(self) -> None:
        if self.r_s <= 0.0:
            raise DomainError("torus ring radius r_s must be positive")
        if self.r_c <= 0.0:
            raise DomainError("torus section radius r_c must be positive")
        if self.r_c > self.r_s:
            raise DomainError(
                f"section radius {self.r_c} exceeds ring radius {self.r_s}"
                " (zeta must lie in (0, 1])"
            )

    @property
    def zeta(self) -> float:
        return self.r_c / self.r_s


@dataclass(frozen=True)
class TorusMetrics:
    """Measures of a torus: solid volume, section area, centreline length."""

    volume: float
    section_area: float
    ring_length: float


def ring_from_radius(r_k: float, c: float, handedness: str = "ccw") -> RingGeometry:
    """Build the ring record for radius r_k and wave speed c."""
    if r_k <= 0.0:
        raise DomainError("ring radius must be positive")
    if c <= 0.0:
        raise DomainError("wave speed must be positive")
    if handedness not in ("ccw", "cw"):
        raise DomainError(f"unknown handedness {handedness!r}")
    return RingGeometry(
        r_k=r_k,
        K=1.0 / r_k,
        omega_K=c / r_k,
        circumference=2.0 * math.pi * r_k,
        handedness=handedness,
    )


def frenet_at(ring: RingGeometry, l: float) -> FrenetFrame:
    """Position, unit tangent and centripetal unit normal at arc length l.

    Periodic in l with period equal to the circumference.
    """
    sense = 1.0 if ring.handedness == "ccw" else -1.0
    phi = sense * l / ring.r_k
    cp, sp = math.cos(phi), math.sin(phi)
    position = np.array([ring.r_k * cp, ring.r_k * sp, 0.0])
    tangent = np.array([-sense * sp, sense * cp, 0.0])
    normal = np.array([-cp, -sp, 0.0])  # points at the ring axis
    return FrenetFrame(position=position, tangent=tangent, normal=normal)


def normal_rate(ring: RingGeometry, v: float, l: float) -> np.ndarray:
    """Time derivative of the centripetal normal for a point moving at v.

    With phase phi advancing at v K, d n / d t = -v K tangent: the
    normal swings backward along the direction of travel.
    """
    if v < 0.0:
        raise DomainError("speed must be non-negative")
    frame = frenet_at(ring, l)
    return -v * ring.K * frame.tangent


def torus_metrics(shape: TorusShape) -> TorusMetrics:
    """Volume 2 pi^2 r_s r_c^2, section area pi r_c^2, length 2 pi r_s."""
    section = math.pi * shape.r_c * shape.r_c
    ring_length = 2.0 * math.pi * shape.r_s
    return TorusMetrics(
        volume=section * ring_length,
        section_area=section,
        ring_length=ring_length,
    )
