"""Three-vertex geometric phases, their spherical-triangle decomposition, and
the unitary reduction of arbitrary state triples to product-state form."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.linalg import null_space

from .angles import wrap_angle
from .majorana import product_state, state_to_points
from .states import (
    BlochPoint,
    DimensionMismatchError,
    PureState,
    Unitary,
    apply_unitary,
    bloch_to_qubit,
    inner_product,
    qubit_to_bloch,
)

EPS_NULL = 1e-12      # below this, an overlap product counts as zero
ANTIPODAL_TOL = 1e-9  # |a + b| below this means antipodal vertices
_PARALLEL_TOL = 1e-12


class UndefinedPhaseError(ValueError):
    """The overlap product vanishes, so no geometric phase is defined."""


class DegenerateGeodesicError(ValueError):
    """Two vertices are antipodal: the connecting geodesic is not unique."""


def bargmann(s1: PureState, s2: PureState, s3: PureState) -> complex:
    """Cyclic overlap product <s1|s3><s3|s2><s2|s1>."""
    return inner_product(s1, s3) * inner_product(s3, s2) * inner_product(s2, s1)


def three_vertex_phase(s1, s2, s3, *, eps_null: float = EPS_NULL) -> float:
    """Geometric phase of an ordered state triple, in (-pi, pi].

    Gauge invariant (global phases of the inputs drop out) and cyclic in its
    arguments; exchanging two arguments negates it mod 2pi.

    Raises UndefinedPhaseError when the overlap product has modulus at most
    eps_null, i.e. some pair is orthogonal and the phase is genuinely
    undefined.
    """
    b = bargmann(s1, s2, s3)
    if abs(b) <= eps_null:
        raise UndefinedPhaseError(
            f"overlap product modulus {abs(b):.3g} <= {eps_null:.3g}; phase undefined"
        )
    return wrap_angle(float(np.angle(b)))


def solid_angle_triangle(p1: BlochPoint, p2: BlochPoint, p3: BlochPoint) -> float:
    """Signed solid angle of the geodesic triangle with the given vertices.

    Positive for counterclockwise vertex order viewed from outside the
    sphere, which makes  qubit phase = -solid_angle/2  (mod 2pi) hold for the
    matching qubit triple. Evaluates

        tan(omega/2) = a.(b x c) / (1 + a.b + b.c + c.a)

    through atan2, so the branch is correct when the denominator is <= 0 and
    the result lies in (-2pi, 2pi]. Coincident or locally collinear vertices
    give 0; antipodal pairs are rejected.
    """
    a, b, c = p1.to_cartesian(), p2.to_cartesian(), p3.to_cartesian()
    for u, v in ((a, b), (b, c), (c, a)):
        if float(np.linalg.norm(u + v)) < ANTIPODAL_TOL:
            raise DegenerateGeodesicError("a vertex pair is antipodal")
    num = float(np.dot(a, np.cross(b, c)))
    den = float(1.0 + a @ b + b @ c + c @ a)
    return 2.0 * math.atan2(num, den)


@dataclass(frozen=True)
class PhaseDecomposition:
    """Per-point qubit phases of a (state, qubit, qubit) configuration.

    total is the principal value of the sum of qubit_phases; triangles holds
    the ordered vertex triple behind each qubit phase, for plotting.
    """

    qubit_phases: tuple[float, ...]
    total: float
    triangles: tuple[tuple[BlochPoint, BlochPoint, BlochPoint], ...]


def decompose_phase(sym1: PureState, q2: PureState, q3: PureState,
                    *, eps_null: float = EPS_NULL) -> PhaseDecomposition:
    """Split the phase of (sym1, q2^(N-1), q3^(N-1)) into N-1 qubit phases.

    Each constellation point of sym1 contributes the phase of the qubit
    triple (point, q2, q3), one spherical triangle apiece; the parts sum to
    the phase of the full triple mod 2pi.
    """
    if q2.dim != 2 or q3.dim != 2:
        raise DimensionMismatchError("q2 and q3 must be qubits")
    points = state_to_points(sym1).sorted_points()
    b2, b3 = qubit_to_bloch(q2), qubit_to_bloch(q3)
    phases = []
    triangles = []
    for i, point in enumerate(points):
        try:
            phases.append(three_vertex_phase(bloch_to_qubit(point), q2, q3, eps_null=eps_null))
        except UndefinedPhaseError as exc:
            raise UndefinedPhaseError(f"component {i}: {exc}") from None
        triangles.append((point, b2, b3))
    return PhaseDecomposition(tuple(phases), wrap_angle(math.fsum(phases)), tuple(triangles))


@dataclass(frozen=True)
class CanonicalTriple:
    """Unitary reduction of a state triple to (anything, power, power) form."""

    psi1: PureState
    psi2_qubit: PureState
    psi3_qubit: PureState
    transform: Unitary
    originals: tuple[PureState, PureState, PureState]
    degenerate_frame: bool = False

    @property
    def dim(self) -> int:
        return self.psi1.dim

    def psi2(self) -> PureState:
        """Transformed second state, as the tensor power of its qubit."""
        return product_state(self.psi2_qubit, self.dim - 1)

    def psi3(self) -> PureState:
        return product_state(self.psi3_qubit, self.dim - 1)


def _orthonormal_complement(frame: list[np.ndarray], dim: int) -> list[np.ndarray]:
    if len(frame) == dim:
        return []
    rows = np.array([f.conj() for f in frame])
    basis = null_space(rows)
    return [basis[:, j] for j in range(basis.shape[1])]


def _frame_matching_unitary(src: list[np.ndarray], tgt: list[np.ndarray], dim: int) -> np.ndarray:
    b_src = np.column_stack(src + _orthonormal_complement(src, dim))
    b_tgt = np.column_stack(tgt + _orthonormal_complement(tgt, dim))
    return b_tgt @ b_src.conj().T


def canonicalize_triple(phi1: PureState, phi2: PureState, phi3: PureState) -> CanonicalTriple:
    """Rotate a triple so the last two states become tensor powers of qubits.

    The qubit pair is fixed by <psi2|psi3> = g^(1/(N-1)) with the principal
    root of g = <phi2|phi3> (orthogonal qubits for g = 0, parallel ones for
    |g| = 1); the unitary matches the orthonormal frames of (phi2, phi3) and
    of the two tensor powers, both orthonormalized the same way (second
    vector is the Gram-Schmidt remainder scaled by its positive norm), and is
    completed deterministically on the orthogonal complement. All pairwise
    overlaps, and hence the phase, are preserved.
    """
    if not (phi1.dim == phi2.dim == phi3.dim):
        raise DimensionMismatchError(
            f"dimensions differ: {phi1.dim}, {phi2.dim}, {phi3.dim}"
        )
    dim = phi1.dim
    n = dim - 1
    g = inner_product(phi2, phi3)
    w = g ** (1.0 / n)
    q2 = PureState(np.array([1.0, 0.0], dtype=complex))
    q3 = PureState.normalized(np.array([w, math.sqrt(max(0.0, 1.0 - abs(w) ** 2))], dtype=complex))
    big2 = product_state(q2, n)
    big3 = product_state(q3, n)

    degenerate = 1.0 - abs(g) < _PARALLEL_TOL
    if degenerate:
        src, tgt = [phi2.amplitudes], [big2.amplitudes]
    else:
        def gram_pair(first, second):
            rem = second - np.vdot(first, second) * first
            return [first, rem / np.linalg.norm(rem)]

        src = gram_pair(phi2.amplitudes, phi3.amplitudes)
        tgt = gram_pair(big2.amplitudes, big3.amplitudes)

    transform = Unitary(_frame_matching_unitary(src, tgt, dim))
    return CanonicalTriple(
        psi1=apply_unitary(transform, phi1),
        psi2_qubit=q2,
        psi3_qubit=q3,
        transform=transform,
        originals=(phi1, phi2, phi3),
        degenerate_frame=degenerate,
    )
