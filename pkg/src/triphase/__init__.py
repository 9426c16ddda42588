"""Three-vertex geometric phases of pure quantum states, represented as
point constellations and spherical triangles on the Bloch sphere."""

from .angles import angle_dist, wrap_angle
from .eraser import (
    EraserConfig,
    FringeScan,
    FringeUndefinedError,
    composite_intermediate,
    extract_geometric_phase,
    fringe_scan,
    output_probability,
    output_probability_closed_form,
    visibility,
)
from .majorana import (
    MajoranaSet,
    dicke_embed,
    points_to_state,
    product_state,
    state_to_points,
    symmetrize_full,
)
from .phases import (
    CanonicalTriple,
    DegenerateGeodesicError,
    PhaseDecomposition,
    UndefinedPhaseError,
    bargmann,
    canonicalize_triple,
    decompose_phase,
    solid_angle_triangle,
    three_vertex_phase,
)
from .states import (
    BlochPoint,
    DimensionMismatchError,
    PureState,
    Unitary,
    apply_unitary,
    bloch_to_qubit,
    inner_product,
    qubit_to_bloch,
    random_pure_state,
    random_unitary,
    states_equal,
)
from .sweep import (
    FamilyParams,
    GridTooCoarseError,
    SweepResult,
    build_family_states,
    closed_form_phase,
    family_qubits,
    slope_profile,
    sweep_alpha,
)

__all__ = [
    "BlochPoint",
    "CanonicalTriple",
    "DegenerateGeodesicError",
    "DimensionMismatchError",
    "EraserConfig",
    "FamilyParams",
    "FringeScan",
    "FringeUndefinedError",
    "GridTooCoarseError",
    "MajoranaSet",
    "PhaseDecomposition",
    "PureState",
    "SweepResult",
    "Unitary",
    "UndefinedPhaseError",
    "angle_dist",
    "apply_unitary",
    "bargmann",
    "bloch_to_qubit",
    "build_family_states",
    "canonicalize_triple",
    "closed_form_phase",
    "composite_intermediate",
    "decompose_phase",
    "dicke_embed",
    "extract_geometric_phase",
    "family_qubits",
    "fringe_scan",
    "inner_product",
    "output_probability",
    "output_probability_closed_form",
    "points_to_state",
    "product_state",
    "qubit_to_bloch",
    "random_pure_state",
    "random_unitary",
    "slope_profile",
    "solid_angle_triangle",
    "state_to_points",
    "states_equal",
    "sweep_alpha",
    "symmetrize_full",
    "three_vertex_phase",
    "visibility",
    "wrap_angle",
]
