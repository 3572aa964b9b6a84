"""Points and the four base metrics.

A point of n-dimensional hyperbolic space is just a vector in R^n; its
distance to another point is

    d_h(x, y) = arcosh( [x][y] - <x, y> ),      [x] = sqrt(1 + |x|^2).

Alongside d_h this module provides the plain Euclidean distance, the
great-circle metric on the unit sphere (normalized to diameter 1), and the
projective metric on antipodal classes of unit vectors.

All functions broadcast: coordinates live on the last axis, leading axes are
batch axes.  Scalars come back as plain floats when the inputs were single
points.
"""

from __future__ import annotations

import numpy as np

from . import _dd
from .errors import DegenerateInputError, DimensionError, DomainError

__all__ = [
    "DEFAULT_TOL",
    "as_point",
    "bracket",
    "hyperbolic_distance",
    "euclidean_distance",
    "sphere_point",
    "sphere_distance",
    "proj_point",
    "projective_distance",
    "proj_points_equal",
    "points_equal",
    "hyperboloid_embed",
    "poincare_coords",
    "poincare_inverse",
]

# Default equality tolerance: absolute 1e-9 plus relative 1e-9.
DEFAULT_TOL = 1e-9

# Rounding slack for arguments of arccos/arcosh; larger violations are caller
# bugs and raise DomainError instead of being silently clipped.
CLAMP_SLACK = 1e-9


def as_point(x, name="point"):
    """Coerce ``x`` to a float coordinate array and validate it.

    Accepts any array-like with at least one coordinate on the last axis;
    rejects NaN and infinite entries.
    """
    arr = np.asarray(x, dtype=float)
    if arr.ndim == 0 or arr.shape[-1] < 1:
        raise DimensionError(f"{name} must have at least one coordinate")
    if not np.all(np.isfinite(arr)):
        raise DomainError(f"{name} has non-finite coordinates")
    return arr


def _pair(x, y, names=("x", "y")):
    x = as_point(x, names[0])
    y = as_point(y, names[1])
    if x.shape[-1] != y.shape[-1]:
        raise DimensionError(
            f"dimension mismatch: {names[0]} has {x.shape[-1]} coordinates, "
            f"{names[1]} has {y.shape[-1]}"
        )
    return x, y


def _scalarize(v):
    return float(v) if np.ndim(v) == 0 else v


def clamp_to(v, lo, hi, slack=CLAMP_SLACK, what="value"):
    """Clip ``v`` into [lo, hi], allowing only rounding-level overshoot."""
    v = np.asarray(v, dtype=float)
    if np.any(v < lo - slack) or np.any(v > hi + slack):
        bad = v[(v < lo - slack) | (v > hi + slack)].flat[0]
        raise DomainError(f"{what} {bad!r} outside [{lo}, {hi}]")
    return np.clip(v, lo, hi)


def bracket(x):
    """[x] = sqrt(1 + |x|^2), the time coordinate of the hyperboloid lift.

    Evaluated hypot-style so it does not overflow for |x| up to ~1e150.
    Always >= 1.
    """
    x = as_point(x)
    return _scalarize(np.hypot(1.0, np.linalg.norm(x, axis=-1)))


def hyperbolic_distance(x, y):
    """Hyperbolic distance arcosh([x][y] - <x,y>) between coordinate vectors.

    Evaluated in the cancellation-free form ``2*asinh(sqrt(s/2))`` where
    ``s = [x][y] - <x,y> - 1`` is computed with compensated arithmetic, which
    keeps full relative accuracy for nearby points and for far points that
    are nearly radially aligned.  Symmetric to the bit, and exactly 0 for
    bit-equal inputs.
    """
    x, y = _pair(x, y)
    s = _dd.minkowski_excess(x, y)
    return _scalarize(2.0 * np.arcsinh(np.sqrt(0.5 * s)))


def euclidean_distance(x, y):
    """Plain Euclidean distance |x - y|."""
    x, y = _pair(x, y)
    return _scalarize(np.linalg.norm(x - y, axis=-1))


def sphere_point(v):
    """Normalize ``v`` onto the unit sphere of its ambient space."""
    v = as_point(v, "sphere point")
    n = np.linalg.norm(v, axis=-1, keepdims=True)
    if np.any(n == 0.0):
        raise DegenerateInputError("cannot normalize the zero vector")
    return v / n


def _check_unit(x, name, tol=1e-6):
    n = np.linalg.norm(x, axis=-1)
    if np.any(np.abs(n - 1.0) > tol):
        raise DomainError(f"{name} is not a unit vector (|{name}| = {n!r})")


def sphere_distance(x, y):
    """Great-circle distance (1/pi) * arccos(<x, y>) between unit vectors.

    Normalized so the sphere has diameter 1; antipodal pairs are at distance
    exactly 1.  Uses the atan2 chord form, which is stable at both ends of
    the range (coincident and antipodal pairs give exact 0 and 1).
    """
    x, y = _pair(x, y)
    _check_unit(x, "x")
    _check_unit(y, "y")
    theta = 2.0 * np.arctan2(
        np.linalg.norm(x - y, axis=-1), np.linalg.norm(x + y, axis=-1)
    )
    return _scalarize(theta / np.pi)


def proj_point(v):
    """A representative of the antipodal class {v, -v}, normalized to unit
    length.  Both representatives denote the same projective point; every
    projective operation here is invariant under the sign choice."""
    return sphere_point(v)


def projective_distance(u, v):
    """Projective distance (2/pi) * arccos(|<u, v>|) between antipodal classes.

    Independent of the chosen representatives; reps u and -u are at distance
    exactly 0.
    """
    u, v = _pair(u, v)
    _check_unit(u, "u")
    _check_unit(v, "v")
    dm = np.linalg.norm(u - v, axis=-1)
    dp = np.linalg.norm(u + v, axis=-1)
    theta = 2.0 * np.arctan2(np.minimum(dm, dp), np.maximum(dm, dp))
    return _scalarize(2.0 * theta / np.pi)


def points_equal(x, y, tol=DEFAULT_TOL):
    """Coordinate-wise equality within absolute + relative ``tol``."""
    x, y = _pair(x, y)
    close = np.abs(x - y) <= tol + tol * np.maximum(np.abs(x), np.abs(y))
    out = np.all(close, axis=-1)
    return bool(out) if np.ndim(out) == 0 else out


def proj_points_equal(u, v, tol=DEFAULT_TOL):
    """Equality of antipodal classes: representatives agree up to sign."""
    return points_equal(u, v, tol) | points_equal(u, -np.asarray(v, float), tol)


def hyperboloid_embed(x):
    """Lift x to ([x], x), the hyperboloid sheet where [x]^2 - |x|^2 = 1."""
    x = as_point(x)
    b = np.asarray(np.hypot(1.0, np.linalg.norm(x, axis=-1)))
    return np.concatenate([b[..., None], x], axis=-1)


def poincare_coords(x):
    """Poincare-ball coordinates x / (1 + [x]); the image has norm < 1."""
    x = as_point(x)
    b = np.asarray(np.hypot(1.0, np.linalg.norm(x, axis=-1)))
    return x / (1.0 + b[..., None])


def poincare_inverse(p):
    """Inverse of :func:`poincare_coords`: p -> 2p / (1 - |p|^2)."""
    p = as_point(p, "poincare point")
    n2 = np.sum(p * p, axis=-1, keepdims=True)
    if np.any(n2 >= 1.0):
        raise DomainError("poincare coordinates must have norm < 1")
    return 2.0 * p / (1.0 - n2)
