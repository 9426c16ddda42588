"""Angle arithmetic on the principal branch (-pi, pi]."""

from __future__ import annotations

import numpy as np

TWO_PI = 2.0 * np.pi


def wrap_angle(x):
    """Reduce an angle (scalar or array) to the principal branch (-pi, pi]."""
    w = np.asarray(x, dtype=float)
    w = w - TWO_PI * np.round(w / TWO_PI)
    # np.round ties to even, so odd multiples of pi can land on -pi
    if w.ndim == 0:
        return float(w) + TWO_PI if w <= -np.pi else float(w)
    w[w <= -np.pi] += TWO_PI
    return w


def angle_dist(a, b):
    """Wrapped angular distance between a and b, in [0, pi]."""
    return np.abs(wrap_angle(np.asarray(a, dtype=float) - np.asarray(b, dtype=float)))
