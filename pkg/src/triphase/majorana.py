"""Conversion between N-dimensional pure states and their Bloch-sphere point
constellations, plus brute-force oracles in the full multi-qubit space.

Basis convention: the k-th amplitude c_k of a dimension-N state sits on the
permutation-symmetric (N-1)-qubit basis state with k excitations, so
dimension N is identified with the symmetric subspace of N-1 qubits.

Root convention (committed once, here): a state maps to the polynomial

    p(z) = sum_k (-1)^k sqrt(C(N-1, k)) c_k z^(N-1-k)

and each finite root z becomes the point with z = e^{i azimuth} tan(polar/2),
so |0> sits at the north pole (z = 0) and |1> at the south pole (z = inf).
Each vanishing leading coefficient (degree deficiency) contributes one point
at the south pole (pi, 0). This is the orientation for which points_to_state
inverts state_to_points; the basis states pin it down: (1, 0, ..., 0) maps to
N-1 points at (0, 0) and (0, ..., 0, 1) to N-1 points at (pi, 0).

Roots are taken as companion-matrix eigenvalues (numpy.roots); at degree
N-1 <= 12 this is accurate to ~1e-12 on well-conditioned inputs.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np
from scipy.optimize import linear_sum_assignment

from .states import BlochPoint, DimensionMismatchError, PureState, bloch_to_qubit

MAX_ORACLE_QUBITS = 12     # factorial permutation sum; resource guard
DEFICIENCY_REL_TOL = 1e-12  # leading coefficients below this (relative) are zero


@dataclass(frozen=True)
class MajoranaSet:
    """Unordered multiset of Bloch points representing a symmetric state."""

    points: tuple[BlochPoint, ...]

    def __post_init__(self):
        pts = tuple(self.points)
        if not pts:
            raise ValueError("a point set must hold at least one point")
        object.__setattr__(self, "points", pts)

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    @property
    def size(self) -> int:
        return len(self.points)

    def sorted_points(self) -> tuple[BlochPoint, ...]:
        """Points in (polar, azimuth) order, for stable display."""
        return tuple(sorted(self.points, key=lambda p: (p.polar, p.azimuth)))

    def as_qubits(self) -> list[PureState]:
        return [bloch_to_qubit(p) for p in self.points]

    def matches(self, other: "MajoranaSet", tol: float = 1e-8) -> bool:
        """Permutation-invariant equality within an angular tolerance.

        Points are paired by minimum-weight matching on sphere distance, so
        the result does not depend on the arbitrary output order of a root
        finder.
        """
        if len(self) != len(other):
            return False
        cost = np.array([[a.sphere_distance(b) for b in other.points] for a in self.points])
        rows, cols = linear_sum_assignment(cost)
        return float(cost[rows, cols].max()) <= tol


def _binomial_weights(n: int) -> np.ndarray:
    return np.sqrt([math.comb(n, k) for k in range(n + 1)])


def state_to_points(s: PureState) -> MajoranaSet:
    """Point constellation of a state: the N-1 roots (with multiplicity) of
    its polynomial, mapped to the sphere under the module convention."""
    n = s.dim - 1
    signs = np.array([(-1.0) ** k for k in range(n + 1)])
    # descending powers: coefficient of z^(n-k) is (-1)^k sqrt(C(n,k)) c_k
    coeffs = signs * _binomial_weights(n) * s.amplitudes
    scale = float(np.max(np.abs(coeffs)))
    deficiency = 0
    while deficiency < n and abs(coeffs[deficiency]) <= DEFICIENCY_REL_TOL * scale:
        deficiency += 1
    points = [BlochPoint(math.pi, 0.0)] * deficiency
    reduced = coeffs[deficiency:]
    if reduced.size > 1:
        for z in np.roots(reduced):
            polar = 2.0 * math.atan2(abs(z), 1.0)
            points.append(BlochPoint(polar, float(np.angle(z))))
    return MajoranaSet(tuple(points))


def points_to_state(points: Iterable[BlochPoint] | MajoranaSet) -> PureState:
    """Normalized symmetrized product of the qubits at the given points.

    Computed by expanding the product polynomial prod_i (a_i + b_i w) whose
    w^k coefficient, divided by sqrt(C(n, k)), is the amplitude on k
    excitations. The overall normalization is absorbed at the end.
    """
    pts = list(points)
    if not pts:
        raise ValueError("need at least one point")
    poly = np.ones(1, dtype=complex)
    for p in pts:
        half = p.polar / 2.0
        factor = np.array([math.cos(half), np.exp(1j * p.azimuth) * math.sin(half)])
        poly = np.convolve(poly, factor)
    n = len(pts)
    return PureState.normalized(poly / _binomial_weights(n))


def product_state(q: PureState, n: int) -> PureState:
    """n-fold tensor power of a qubit, written in the excitation basis.

    Amplitude on k excitations is sqrt(C(n, k)) a^(n-k) b^k; equals
    points_to_state of n coincident points.
    """
    if q.dim != 2:
        raise DimensionMismatchError(f"expected a qubit, got dim {q.dim}")
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    a, b = q.amplitudes
    amps = np.array([math.sqrt(math.comb(n, k)) * a ** (n - k) * b ** k for k in range(n + 1)])
    return PureState.normalized(amps)


def symmetrize_full(qubits: Sequence[PureState]) -> np.ndarray:
    """Average of all coordinate-permuted tensor products, as a raw 2**n vector.

    Brute-force oracle for the symmetric-subspace identification: cost grows
    as n! * 2**n, guarded at n <= MAX_ORACLE_QUBITS. The result is left
    unnormalized on purpose, for exact inner-product comparisons.
    """
    n = len(qubits)
    if not 1 <= n <= MAX_ORACLE_QUBITS:
        raise ValueError(f"oracle supports 1..{MAX_ORACLE_QUBITS} qubits, got {n}")
    vecs = []
    for q in qubits:
        if q.dim != 2:
            raise DimensionMismatchError(f"expected qubits, got dim {q.dim}")
        vecs.append(q.amplitudes)
    acc = np.zeros(2 ** n, dtype=complex)
    for order in itertools.permutations(range(n)):
        term = np.ones(1, dtype=complex)
        for i in order:
            term = np.kron(term, vecs[i])
        acc += term
    return acc / math.factorial(n)


def dicke_embed(s: PureState) -> np.ndarray:
    """Isometric image of a state in the full (N-1)-qubit space.

    Amplitude c_k spreads uniformly over the C(n, k) weight-k bitstrings with
    coefficient c_k / sqrt(C(n, k)), which preserves inner products exactly.
    """
    n = s.dim - 1
    if s.dim > MAX_ORACLE_QUBITS + 1:
        raise ValueError(f"embedding supports dim <= {MAX_ORACLE_QUBITS + 1}, got {s.dim}")
    weights = _binomial_weights(n)
    out = np.empty(2 ** n, dtype=complex)
    for idx in range(2 ** n):
        k = idx.bit_count()
        out[idx] = s.amplitudes[k] / weights[k]
    return out
