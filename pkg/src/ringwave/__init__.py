"""Ring-wave model of the photon and the electron-positron pair.

A plane electromagnetic wave wound onto a circular ring of one
wavelength circumference, in Gaussian CGS units: geometry and Frenet
kinematics, field sampling, displacement-current decomposition,
charge/mass quadrature over the torus, the derived coupling constant
2/pi, vacuum-polarization screening, and Lorentz-invariance checks.
"""

from .constants import (
    ElectronScales,
    PhysicalConstants,
    codata_constants,
    electron_scales,
)
from .errors import (
    DomainError,
    EvaluationError,
    RingwaveError,
    UnsupportedConfigurationError,
)
from .fields import (
    KIND_PHOTON,
    KIND_PLANE,
    KIND_SEMI_MINUS,
    KIND_SEMI_PLUS,
    CurrentDecomposition,
    FieldConfiguration,
    FieldSample,
    charge_density,
    displacement_current,
    energy_density,
    field_at,
    mass_current,
    mass_density,
    plane_wave,
    sample_grid,
    twirled_field,
)
from .geometry import (
    FrenetFrame,
    RingGeometry,
    TorusMetrics,
    TorusShape,
    frenet_at,
    normal_rate,
    ring_from_radius,
    torus_metrics,
)
from .lorentz import (
    BoostReport,
    WavePacket,
    boost_packet,
    boost_plane_fields,
    invariant_sweep,
)
from .model import (
    InvariantConstants,
    PhotonModel,
    SemiPhotonModel,
    dispersion_omega,
    invariant_constants,
    magnetic_moment,
    pair_threshold_photon,
    photon_from_invariants,
    semi_photon_model,
    split_photon,
    uncertainty_min_length,
)
from .quadrature import (
    RULE_GAUSS5,
    RULE_MIDPOINT,
    IntegralReport,
    QuadratureSpec,
    angular_momentum,
    integrate_line,
    section_measure,
    total_charge,
    total_mass,
)
from .renorm import (
    VacuumPolarization,
    charge_difference,
    coulomb_energy,
    vacuum_polarization,
)

__version__ = "0.1.0"

__all__ = [
    "ElectronScales",
    "PhysicalConstants",
    "codata_constants",
    "electron_scales",
    "DomainError",
    "EvaluationError",
    "RingwaveError",
    "UnsupportedConfigurationError",
    "KIND_PHOTON",
    "KIND_PLANE",
    "KIND_SEMI_MINUS",
    "KIND_SEMI_PLUS",
    "CurrentDecomposition",
    "FieldConfiguration",
    "FieldSample",
    "charge_density",
    "displacement_current",
    "energy_density",
    "field_at",
    "mass_current",
    "mass_density",
    "plane_wave",
    "sample_grid",
    "twirled_field",
    "FrenetFrame",
    "RingGeometry",
    "TorusMetrics",
    "TorusShape",
    "frenet_at",
    "normal_rate",
    "ring_from_radius",
    "torus_metrics",
    "BoostReport",
    "WavePacket",
    "boost_packet",
    "boost_plane_fields",
    "invariant_sweep",
    "InvariantConstants",
    "PhotonModel",
    "SemiPhotonModel",
    "dispersion_omega",
    "invariant_constants",
    "magnetic_moment",
    "pair_threshold_photon",
    "photon_from_invariants",
    "semi_photon_model",
    "split_photon",
    "uncertainty_min_length",
    "RULE_GAUSS5",
    "RULE_MIDPOINT",
    "IntegralReport",
    "QuadratureSpec",
    "angular_momentum",
    "integrate_line",
    "section_measure",
    "total_charge",
    "total_mass",
    "VacuumPolarization",
    "charge_difference",
    "coulomb_energy",
    "vacuum_polarization",
    "__version__",
]
