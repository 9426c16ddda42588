"""Three-state qutrit family with closed-form phases, branch-tracked alpha
sweeps, and steep-slope (singular point) location.

The family: two constellation points start on the equator at azimuths +-phi
and are rotated rigidly about z by alpha; the second and third states are
tensor squares of real qubits straddling the +x axis at half angle theta.
The per-point phases have the closed forms

    gamma1 = +2 atan(tan(theta/2) tan((phi + alpha)/2))
    gamma2 = -2 atan(tan(theta/2) tan((phi - alpha)/2))

each gaining 2pi per full alpha turn, 4pi in total.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .angles import TWO_PI, wrap_angle
from .majorana import points_to_state, product_state
from .phases import decompose_phase
from .states import PureState, qubit_to_bloch

MAX_SWEEP_INTERVALS = 2 ** 20
_MIN_STEPS = 64
_SLOPE_FACTOR = 5.0      # a peak counts as singular above 5x the median slope
_JUMP_LIMIT = 0.9 * math.pi


class GridTooCoarseError(RuntimeError):
    """The sweep grid cannot resolve the phase motion even after densification."""


@dataclass(frozen=True)
class FamilyParams:
    """Family angles. theta must lie strictly inside (-pi/2, pi/2); phi and
    alpha are reduced into [0, 2pi)."""

    theta: float
    phi: float
    alpha: float = 0.0

    def __post_init__(self):
        t = float(self.theta)
        if not -math.pi / 2 < t < math.pi / 2:
            raise ValueError(f"theta must lie strictly inside (-pi/2, pi/2), got {t}")
        object.__setattr__(self, "theta", t)
        object.__setattr__(self, "phi", float(self.phi) % TWO_PI)
        object.__setattr__(self, "alpha", float(self.alpha) % TWO_PI)


def family_qubits(p: FamilyParams) -> tuple[PureState, PureState, PureState, PureState]:
    """The two rotated constellation qubits and the fixed pair (q2, q3)."""
    x = (p.phi + p.alpha) / 2.0
    y = (p.phi - p.alpha) / 2.0
    q11 = PureState(np.array([np.exp(-1j * x), np.exp(1j * x)]) / math.sqrt(2.0))
    q12 = PureState(np.array([np.exp(1j * y), np.exp(-1j * y)]) / math.sqrt(2.0))
    c, s = math.cos(p.theta / 2.0), math.sin(p.theta / 2.0)
    q2 = PureState(np.array([c - s, c + s]) / math.sqrt(2.0))
    q3 = PureState(np.array([c + s, c - s]) / math.sqrt(2.0))
    return q11, q12, q2, q3


def build_family_states(p: FamilyParams) -> tuple[PureState, PureState, PureState]:
    """The dimension-3 triple (psi1(alpha), q2 tensor square, q3 tensor square)."""
    q11, q12, q2, q3 = family_qubits(p)
    psi1 = points_to_state([qubit_to_bloch(q11), qubit_to_bloch(q12)])
    return psi1, product_state(q2, 2), product_state(q3, 2)


def closed_form_phase(p: FamilyParams) -> tuple[float, float, float]:
    """Analytic per-qubit phases (gamma1, gamma2) and their plain sum.

    Each term is a principal value in (-pi, pi). At the tangent poles
    (phi +- alpha)/2 = pi/2 + k pi the huge-but-finite float tangent makes
    atan return the one-sided limit +-pi/2, so the terms approach +-pi
    continuously instead of leaving a gap.
    """
    t = math.tan(p.theta / 2.0)
    g1 = 2.0 * math.atan(t * math.tan((p.phi + p.alpha) / 2.0))
    g2 = -2.0 * math.atan(t * math.tan((p.phi - p.alpha) / 2.0))
    return g1, g2, g1 + g2


def _closed_form_arrays(theta: float, phi: float, alphas: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    t = math.tan(theta / 2.0)
    g1 = 2.0 * np.arctan(t * np.tan((phi + alphas) / 2.0))
    g2 = -2.0 * np.arctan(t * np.tan((phi - alphas) / 2.0))
    return g1, g2


@dataclass(frozen=True, eq=False)
class SweepResult:
    """Sweep of the family phase over alpha on a uniform closed grid.

    gamma1/gamma2 are the unwrapped per-qubit series, gamma_total their sum,
    gamma_wrapped its principal value. gamma_pipeline_wrapped re-derives the
    wrapped total through the constellation + triangle route at every sample,
    as an independent cross-check on the closed forms.
    """

    alphas: np.ndarray
    gamma1: np.ndarray
    gamma2: np.ndarray
    gamma_total: np.ndarray
    gamma_wrapped: np.ndarray
    gamma_pipeline_wrapped: np.ndarray
    singular_alphas: tuple[float, ...]

    @property
    def winding(self) -> float:
        """Total unwrapped change of the phase over the full alpha loop."""
        return float(self.gamma_total[-1] - self.gamma_total[0])


def _merge_peak_runs(peaks: np.ndarray, alphas: np.ndarray) -> list[float]:
    """Collapse runs of consecutive peak intervals to their center alpha."""
    if peaks.size == 0:
        return []
    out = []
    start = prev = int(peaks[0])
    for j in peaks[1:]:
        j = int(j)
        if j == prev + 1:
            prev = j
            continue
        out.append(0.5 * float(alphas[start] + alphas[prev + 1]))
        start = prev = j
    out.append(0.5 * float(alphas[start] + alphas[prev + 1]))
    return out


def _locate_steep(alphas: np.ndarray, components: list[np.ndarray]) -> tuple[float, ...]:
    """Steep-slope loci: cyclic local maxima of the finite-difference slope of
    each unwrapped component, at least _SLOPE_FACTOR times its median."""
    step = float(alphas[1] - alphas[0])
    found: list[float] = []
    for series in components:
        slope = np.abs(np.diff(series)) / step
        median = float(np.median(slope))
        if median == 0.0:
            continue
        is_peak = (slope >= np.roll(slope, 1)) & (slope >= np.roll(slope, -1))
        is_peak &= slope > _SLOPE_FACTOR * median
        found.extend(_merge_peak_runs(np.flatnonzero(is_peak), alphas))
    found.sort()
    merged: list[float] = []
    for a in found:
        if merged and a - merged[-1] <= step:
            merged[-1] = 0.5 * (merged[-1] + a)
        else:
            merged.append(a)
    # the loop is cyclic: a locus split across alpha = 0 and 2pi is one locus
    if len(merged) > 1 and (merged[0] + TWO_PI) - merged[-1] <= step:
        first = merged.pop(0)
        merged[-1] = (0.5 * (first + merged[-1] + TWO_PI)) % TWO_PI
        merged.sort()
    return tuple(merged)


def sweep_alpha(theta: float, phi: float, steps: int) -> SweepResult:
    """Sweep alpha over [0, 2pi] on a uniform grid of `steps` intervals
    (steps + 1 samples, endpoint included).

    Per-qubit phase series are unwrapped by nearest-branch continuation. The
    grid doubles automatically, up to 2**20 intervals, while the analytic
    slope bound 2/|tan(theta/2)| predicts inter-sample jumps above pi/2 or an
    observed unwrapped jump exceeds 0.9 pi; past the cap the sweep raises
    GridTooCoarseError rather than silently alias a branch.
    """
    if steps < _MIN_STEPS:
        raise ValueError(f"steps must be >= {_MIN_STEPS}, got {steps}")
    if not -math.pi / 2 < theta < math.pi / 2 or theta == 0.0:
        raise ValueError(f"theta must lie in (-pi/2, pi/2) and be nonzero, got {theta}")
    phi = float(phi) % TWO_PI

    max_slope = 2.0 / abs(math.tan(theta / 2.0))
    intervals = int(steps)
    while intervals < MAX_SWEEP_INTERVALS and (TWO_PI / intervals) * max_slope > math.pi / 2:
        intervals *= 2
    if (TWO_PI / intervals) * max_slope > math.pi / 2:
        raise GridTooCoarseError(
            f"resolving theta = {theta:.3g} needs more than {MAX_SWEEP_INTERVALS} intervals; "
            f"the phase moves up to {max_slope:.3g} rad per unit alpha"
        )

    while True:
        alphas = np.linspace(0.0, TWO_PI, intervals + 1)
        raw1, raw2 = _closed_form_arrays(theta, phi, alphas)
        g1, g2 = np.unwrap(raw1), np.unwrap(raw2)
        jump = max(float(np.max(np.abs(np.diff(g1)))), float(np.max(np.abs(np.diff(g2)))))
        if jump <= _JUMP_LIMIT:
            break
        if intervals * 2 > MAX_SWEEP_INTERVALS:
            raise GridTooCoarseError(
                f"unwrapped jump {jump:.3g} rad persists at {intervals} intervals"
            )
        intervals *= 2

    total = g1 + g2
    pipeline = np.empty_like(total)
    for i, alpha in enumerate(alphas):
        params = FamilyParams(theta, phi, float(alpha))
        psi1, _, _ = build_family_states(params)
        _, _, q2, q3 = family_qubits(params)
        pipeline[i] = decompose_phase(psi1, q2, q3).total
    return SweepResult(
        alphas=alphas,
        gamma1=g1,
        gamma2=g2,
        gamma_total=total,
        gamma_wrapped=wrap_angle(total),
        gamma_pipeline_wrapped=pipeline,
        singular_alphas=_locate_steep(alphas, [g1, g2]),
    )


def slope_profile(theta_list, phi: float, steps: int) -> list[float]:
    """Maximum per-component finite-difference slope |d gamma / d alpha| for
    each theta in (0, pi/2).

    The peak sits at the tangent pole of one component, where the analytic
    slope is 1/tan(theta/2); it grows without bound as theta shrinks and
    flattens toward 1 as theta approaches pi/2.
    """
    out = []
    for theta in theta_list:
        theta = float(theta)
        if not 0.0 < theta < math.pi / 2:
            raise ValueError(f"theta must lie in (0, pi/2), got {theta}")
        result = sweep_alpha(theta, phi, steps)
        step = float(result.alphas[1] - result.alphas[0])
        steepest = max(
            float(np.max(np.abs(np.diff(result.gamma1)))),
            float(np.max(np.abs(np.diff(result.gamma2)))),
        )
        out.append(steepest / step)
    return out
