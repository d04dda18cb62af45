"""Artificial non-Abelian gauge fields from laser-dressed dark states.

The package computes the vector potential, scalar potential, magnetic
field and monopole charge induced on the dark-state manifold of
laser-coupled multi-level atoms, and checks every bundled closed form
against an independent finite-difference oracle.
"""

from .beams import (
    HERMITE_GAUSS,
    LAGUERRE_GAUSS,
    PLANE_WAVE,
    SCHEME_LAMBDA,
    SCHEME_RUBIDIUM,
    SCHEME_SINGLE,
    SCHEME_STRONTIUM,
    BeamSpec,
    RabiConfiguration,
    TripodGradients,
    TripodLeg,
    TripodLegGradients,
    TripodParams,
    evaluate_rabi,
    parametrize_rabi,
    spherical_basis,
    spherical_coordinates,
    synthesize_rabi,
)
from .dark_states import (
    GAUGE_NUMERIC,
    GAUGE_PAIR12,
    GAUGE_PAIR13,
    GAUGE_TRIPOD,
    CouplingHamiltonian,
    DarkFrame,
    coupling_hamiltonian,
    dark_frame_analytic,
    dark_frame_numeric,
)
from .errors import (
    AmbiguousDarkSpace,
    DarkGaugeError,
    DegenerateCoupling,
    ExcessiveAzimuthalVariation,
    InvalidGenerator,
    NearSingularity,
    NonUnitary,
    NotHermitian,
    ProfileNotConverged,
    UnknownScenario,
)
from .gauge_fields import (
    MinimalCouplingTerms,
    connection_from_params,
    connection_numeric,
    gauge_transform,
    magnetic_field,
    minimal_coupling_terms,
    scalar_potential_from_params,
    scalar_potential_numeric,
)
from .monopole import (
    AngularProfile,
    ChargeReport,
    StringReport,
    angular_profile,
    charge_from_profile,
    charge_surface_integral,
    pattern_term_charge,
    singular_part_sampler,
)
from .scenarios import (
    SCENARIO_IDS,
    Check,
    ScenarioBundle,
    VerificationReport,
    charge_report,
    expected_connection,
    make_scenario,
    sample_safe_points,
    scalar_potential_vortex_closed,
    verify_scenario,
)
from .su3 import (
    GellmannCoefficients,
    PauliCoefficients,
    decompose_hermitian,
    decompose_hermitian_2x2,
    gellmann_generators,
    gellmann_matrix,
    pauli_matrices,
    reflection_matrix,
    spin1_operators,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "AmbiguousDarkSpace",
    "AngularProfile",
    "BeamSpec",
    "ChargeReport",
    "Check",
    "CouplingHamiltonian",
    "DarkFrame",
    "DarkGaugeError",
    "DegenerateCoupling",
    "ExcessiveAzimuthalVariation",
    "GAUGE_NUMERIC",
    "GAUGE_PAIR12",
    "GAUGE_PAIR13",
    "GAUGE_TRIPOD",
    "GellmannCoefficients",
    "HERMITE_GAUSS",
    "InvalidGenerator",
    "LAGUERRE_GAUSS",
    "MinimalCouplingTerms",
    "NearSingularity",
    "NonUnitary",
    "NotHermitian",
    "PLANE_WAVE",
    "PauliCoefficients",
    "ProfileNotConverged",
    "RabiConfiguration",
    "SCENARIO_IDS",
    "SCHEME_LAMBDA",
    "SCHEME_RUBIDIUM",
    "SCHEME_SINGLE",
    "SCHEME_STRONTIUM",
    "ScenarioBundle",
    "StringReport",
    "TripodGradients",
    "TripodLeg",
    "TripodLegGradients",
    "TripodParams",
    "UnknownScenario",
    "VerificationReport",
    "angular_profile",
    "charge_from_profile",
    "charge_report",
    "charge_surface_integral",
    "connection_from_params",
    "connection_numeric",
    "coupling_hamiltonian",
    "dark_frame_analytic",
    "dark_frame_numeric",
    "decompose_hermitian",
    "decompose_hermitian_2x2",
    "evaluate_rabi",
    "expected_connection",
    "gauge_transform",
    "gellmann_generators",
    "gellmann_matrix",
    "magnetic_field",
    "make_scenario",
    "minimal_coupling_terms",
    "parametrize_rabi",
    "pattern_term_charge",
    "pauli_matrices",
    "reflection_matrix",
    "sample_safe_points",
    "scalar_potential_from_params",
    "scalar_potential_numeric",
    "scalar_potential_vortex_closed",
    "singular_part_sampler",
    "spherical_basis",
    "spherical_coordinates",
    "spin1_operators",
    "synthesize_rabi",
    "verify_scenario",
]
