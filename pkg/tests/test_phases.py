"""Phase definition, triangle decomposition, and triple canonicalization."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from triphase import (
    BlochPoint,
    DegenerateGeodesicError,
    PureState,
    UndefinedPhaseError,
    apply_unitary,
    bargmann,
    bloch_to_qubit,
    canonicalize_triple,
    decompose_phase,
    inner_product,
    points_to_state,
    product_state,
    qubit_to_bloch,
    random_pure_state,
    random_unitary,
    solid_angle_triangle,
    three_vertex_phase,
    wrap_angle,
)

SQRT2 = math.sqrt(2.0)

seeds = st.integers(min_value=0, max_value=10**9)

ZERO = PureState.basis(2, 0)
PLUS = PureState(np.array([1.0, 1.0]) / SQRT2)
YPLUS = PureState(np.array([1.0, 1.0j]) / SQRT2)


def wrapped_close(a, b, tol):
    return abs(wrap_angle(a - b)) <= tol


# --- bargmann product --------------------------------------------------------

def test_bargmann_values():
    # two coincident vertices: product reduces to |<0|+>|^2
    assert bargmann(ZERO, ZERO, PLUS) == pytest.approx(0.5)
    # full complex arithmetic: <+|y+> <y+|0> <0|+> = (1+i)/2 * 1/sqrt2 * 1/sqrt2
    assert bargmann(PLUS, ZERO, YPLUS) == pytest.approx((1 + 1j) / 4)
    assert bargmann(ZERO, PureState.basis(2, 1), PLUS) == pytest.approx(0.0)


# --- three_vertex_phase ------------------------------------------------------

def test_phase_quarter_turn():
    assert three_vertex_phase(PLUS, ZERO, YPLUS) == pytest.approx(math.pi / 4, abs=1e-12)


def test_phase_of_real_triples_is_zero_or_pi():
    rng = np.random.default_rng(3)
    for _ in range(40):
        states = [PureState.normalized(rng.standard_normal(4)) for _ in range(3)]
        try:
            gamma = three_vertex_phase(*states)
        except UndefinedPhaseError:
            continue
        assert min(abs(gamma), abs(abs(gamma) - math.pi)) < 1e-12


def test_phase_undefined_on_orthogonal_pair():
    with pytest.raises(UndefinedPhaseError):
        three_vertex_phase(ZERO, PureState.basis(2, 1), PLUS)


@given(seeds, seeds, seeds, st.floats(min_value=-math.pi, max_value=math.pi),
       st.integers(min_value=2, max_value=6))
@settings(max_examples=60, deadline=None)
def test_phase_gauge_invariance(s1, s2, s3, extra, dim):
    a, b, c = (random_pure_state(dim, s) for s in (s1, s2, s3))
    a_rotated = PureState(np.exp(1j * extra) * a.amplitudes)
    try:
        before = three_vertex_phase(a, b, c)
    except UndefinedPhaseError:
        return
    assert abs(bargmann(a, b, c)) == pytest.approx(abs(bargmann(a_rotated, b, c)), abs=1e-14)
    assert three_vertex_phase(a_rotated, b, c) == pytest.approx(before, abs=1e-12)


@given(seeds, seeds, seeds, st.integers(min_value=2, max_value=6))
@settings(max_examples=60, deadline=None)
def test_phase_cyclic_and_antisymmetric(s1, s2, s3, dim):
    a, b, c = (random_pure_state(dim, s) for s in (s1, s2, s3))
    try:
        gamma = three_vertex_phase(a, b, c)
    except UndefinedPhaseError:
        return
    assert three_vertex_phase(b, c, a) == pytest.approx(gamma, abs=1e-12)
    assert three_vertex_phase(c, a, b) == pytest.approx(gamma, abs=1e-12)
    assert bargmann(b, a, c) == pytest.approx(np.conj(bargmann(a, b, c)), abs=1e-14)
    assert wrapped_close(three_vertex_phase(b, a, c), -gamma, 1e-12)


# --- solid angle -------------------------------------------------------------

def test_solid_angle_octant():
    x, y, z = BlochPoint(math.pi / 2, 0), BlochPoint(math.pi / 2, math.pi / 2), BlochPoint(0)
    assert solid_angle_triangle(x, y, z) == pytest.approx(math.pi / 2, abs=1e-14)
    assert solid_angle_triangle(x, z, y) == pytest.approx(-math.pi / 2, abs=1e-14)


def test_solid_angle_degenerate_triangles():
    p = BlochPoint(1.0, 2.0)
    assert solid_angle_triangle(p, p, BlochPoint(0.5, 0.1)) == pytest.approx(0.0, abs=1e-14)
    # three points on the equatorial great circle, close together
    eq = [BlochPoint(math.pi / 2, a) for a in (0.1, 0.5, 0.9)]
    assert solid_angle_triangle(*eq) == pytest.approx(0.0, abs=1e-14)


def test_solid_angle_rejects_antipodal_vertices():
    with pytest.raises(DegenerateGeodesicError):
        solid_angle_triangle(BlochPoint(0), BlochPoint(math.pi), BlochPoint(1.0, 1.0))


@given(seeds)
@settings(max_examples=100, deadline=None)
def test_qubit_phase_is_minus_half_solid_angle(seed):
    rng = np.random.default_rng(seed)
    pts = [BlochPoint(math.acos(rng.uniform(-1, 1)), rng.uniform(0, 2 * math.pi))
           for _ in range(3)]
    qubits = [bloch_to_qubit(p) for p in pts]
    try:
        gamma = three_vertex_phase(*qubits)
    except UndefinedPhaseError:
        return
    omega = solid_angle_triangle(*pts)
    assert wrapped_close(gamma, -omega / 2.0, 1e-9)


# --- decomposition -----------------------------------------------------------

def test_decompose_coincident_vertices_gives_zero():
    q = random_pure_state(2, 21)
    sym = product_state(q, 4)
    result = decompose_phase(sym, q, random_pure_state(2, 22))
    assert result.total == pytest.approx(0.0, abs=1e-9)
    # the 4-fold root smears into a cluster of radius ~eps^(1/4); each
    # component phase is a sliver of that size, and the slivers cancel
    assert all(abs(g) < 5e-3 for g in result.qubit_phases)


def test_decompose_component_with_repeated_vertex_is_zero():
    # well-separated points, one of them equal to q2's point: that component
    # triangle has two coincident vertices, so its phase vanishes sharply
    q2, q3 = random_pure_state(2, 23), random_pure_state(2, 24)
    pts = [qubit_to_bloch(q2), BlochPoint(0.4, 1.0), BlochPoint(2.2, 4.0)]
    result = decompose_phase(points_to_state(pts), q2, q3)
    matching = [g for tri, g in zip(result.triangles, result.qubit_phases)
                if tri[0].sphere_distance(qubit_to_bloch(q2)) < 1e-8]
    assert len(matching) == 1
    assert abs(matching[0]) < 1e-9


def test_decompose_reports_component_phases_and_triangles():
    sym = random_pure_state(4, 30)
    q2, q3 = random_pure_state(2, 31), random_pure_state(2, 32)
    result = decompose_phase(sym, q2, q3)
    assert len(result.qubit_phases) == 3
    assert len(result.triangles) == 3
    assert all(tri[1] == qubit_to_bloch(q2) and tri[2] == qubit_to_bloch(q3)
               for tri in result.triangles)
    assert wrapped_close(result.total, math.fsum(result.qubit_phases), 1e-12)
    assert all(-math.pi < g <= math.pi for g in result.qubit_phases)


def test_decompose_names_the_vanishing_component():
    # one constellation point orthogonal to q3 = |1> at the north pole
    sym = PureState.basis(3, 0)
    with pytest.raises(UndefinedPhaseError, match="component 0"):
        decompose_phase(sym, PLUS, PureState.basis(2, 1))


@given(seeds, seeds, seeds, st.integers(min_value=2, max_value=8))
@settings(max_examples=60, deadline=None)
def test_decompose_total_matches_direct_phase(s1, s2, s3, dim):
    sym = random_pure_state(dim, s1)
    q2, q3 = random_pure_state(2, s2), random_pure_state(2, s3)
    try:
        total = decompose_phase(sym, q2, q3).total
    except UndefinedPhaseError:
        return
    big2, big3 = product_state(q2, dim - 1), product_state(q3, dim - 1)
    direct = three_vertex_phase(sym, big2, big3)
    # the direct route loses precision when the overlap product nearly
    # cancels; its arg error scales like eps over the product modulus
    tol = 1e-9 + 1e-14 / abs(bargmann(sym, big2, big3))
    assert wrapped_close(total, direct, tol)


# --- canonicalization --------------------------------------------------------

def gram_moduli(triple):
    return [abs(inner_product(triple[i], triple[j]))
            for i in range(3) for j in range(i + 1, 3)]


def check_canonical(phi1, phi2, phi3, tol=1e-9):
    result = canonicalize_triple(phi1, phi2, phi3)
    n = phi1.dim - 1
    big2, big3 = result.psi2(), result.psi3()
    # the transform really maps the inputs onto the product pair
    mapped2 = apply_unitary(result.transform, phi2)
    mapped3 = apply_unitary(result.transform, phi3)
    assert abs(inner_product(mapped2, big2)) == pytest.approx(1.0, abs=tol)
    assert abs(inner_product(mapped3, big3)) == pytest.approx(1.0, abs=tol)
    # overlap reproduced exactly, not only in modulus
    assert inner_product(big2, big3) == pytest.approx(inner_product(phi2, phi3), abs=1e-10)
    assert inner_product(result.psi2_qubit, result.psi3_qubit) ** n == pytest.approx(
        inner_product(phi2, phi3), abs=1e-10)
    transformed = (result.psi1, big2, big3)
    originals = (phi1, phi2, phi3)
    for before, after in zip(gram_moduli(originals), gram_moduli(transformed)):
        assert after == pytest.approx(before, abs=tol)
    try:
        before = three_vertex_phase(*originals)
    except UndefinedPhaseError:
        return result
    assert wrapped_close(three_vertex_phase(*transformed), before, tol)
    return result


def test_canonicalize_qubit_triple():
    result = check_canonical(*(random_pure_state(2, s) for s in (40, 41, 42)))
    assert result.psi2_qubit.dim == 2 and not result.degenerate_frame


@given(seeds, st.integers(min_value=2, max_value=6))
@settings(max_examples=40, deadline=None)
def test_canonicalize_random_triples(seed, dim):
    rng = np.random.default_rng(seed)
    states = [PureState.normalized(rng.standard_normal(dim) + 1j * rng.standard_normal(dim))
              for _ in range(3)]
    check_canonical(*states)


def test_canonicalize_orthogonal_pair_picks_orthogonal_qubits():
    phi2, phi3 = PureState.basis(4, 1), PureState.basis(4, 2)
    result = check_canonical(random_pure_state(4, 50), phi2, phi3)
    assert abs(inner_product(result.psi2_qubit, result.psi3_qubit)) < 1e-12


def test_canonicalize_parallel_pair_degenerates_gracefully():
    phi2 = random_pure_state(5, 60)
    phi3 = PureState(np.exp(0.7j) * phi2.amplitudes)
    result = canonicalize_triple(random_pure_state(5, 61), phi2, phi3)
    assert result.degenerate_frame
    assert inner_product(result.psi2(), result.psi3()) == pytest.approx(
        inner_product(phi2, phi3), abs=1e-10)
    assert abs(inner_product(apply_unitary(result.transform, phi2), result.psi2())) == \
        pytest.approx(1.0, abs=1e-9)


@given(seeds, seeds, st.integers(min_value=2, max_value=6))
@settings(max_examples=50, deadline=None)
def test_phase_invariant_under_unitaries(seed, useed, dim):
    states = [random_pure_state(dim, seed + k) for k in range(3)]
    u = random_unitary(dim, useed)
    try:
        before = three_vertex_phase(*states)
    except UndefinedPhaseError:
        return
    after = three_vertex_phase(*(apply_unitary(u, s) for s in states))
    assert wrapped_close(after, before, 1e-9)
