"""Geodesics, lines, segments, angles, spheres, and parallel families.

Every unit-speed geodesic through ``a`` has the closed form

    gamma(t) = T_a(sinh(t) z),   |z| = 1,

which expands to sinh(t) w + cosh(t) a with the fixed coefficient vector
w = z + (<z, a> / ([a] + 1)) a.  The expanded form is what ``geodesic_point``
evaluates: it is algebraically identical and numerically better conditioned
far from the base point.

Lines not through the origin admit the two-vector form {sinh(t) a + cosh(t) b};
for any |mu| > 1 the linear span of mu*a + b is a line through the origin that
misses the whole family, which is how the uniqueness half of the parallel
postulate fails here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import as_point, bracket, hyperbolic_distance, points_equal
from .errors import DegenerateInputError, DimensionError, DomainError
from .isometry import isometry_apply, translation_apply

__all__ = [
    "Geodesic",
    "Angle",
    "geodesic_point",
    "line_through",
    "segment_contains",
    "metrically_collinear",
    "parallel_family",
    "line_two_vector_form",
    "two_vector_form_to_line",
    "two_vector_point",
    "angle_measure",
    "is_right_angle",
    "transport_angle",
    "sphere_euclidean_radius",
    "h1_embedding",
    "curve_min_gap",
    "line_min_gap",
]

_UNIT_TOL = 1e-12


def _unit(v, name):
    v = as_point(v, name)
    if v.ndim != 1:
        raise DimensionError(f"{name} must be a single vector")
    n = np.linalg.norm(v)
    if n < 1e-12:
        raise DegenerateInputError(f"{name} has (near-)zero length")
    u = v / n
    u.setflags(write=False)
    return u


@dataclass(frozen=True)
class Geodesic:
    """A unit-speed line t -> T_a(sinh(t) z): base point ``a`` = gamma(0) and
    unit direction ``z``.  The direction is normalized at construction."""

    a: np.ndarray
    z: np.ndarray

    def __post_init__(self):
        a = as_point(self.a, "base point").copy()
        if a.ndim != 1:
            raise DimensionError("base point must be a single vector")
        z = _unit(self.z, "direction")
        if a.shape != z.shape:
            raise DimensionError("base point and direction dimensions differ")
        a.setflags(write=False)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "z", z)

    @property
    def dim(self):
        return self.a.shape[-1]


@dataclass(frozen=True)
class Angle:
    """An ordered pair of closed half-lines from a common vertex.

    Each half-line is t -> T_vertex(sinh(t) z_i) for t >= 0, so a unit
    direction per ray is a complete description.  Directions are normalized
    at construction.
    """

    vertex: np.ndarray
    z1: np.ndarray
    z2: np.ndarray

    def __post_init__(self):
        vertex = as_point(self.vertex, "vertex").copy()
        z1 = _unit(self.z1, "first direction")
        z2 = _unit(self.z2, "second direction")
        if not (vertex.shape == z1.shape == z2.shape):
            raise DimensionError("vertex and direction dimensions differ")
        vertex.setflags(write=False)
        object.__setattr__(self, "vertex", vertex)
        object.__setattr__(self, "z1", z1)
        object.__setattr__(self, "z2", z2)


def _sinh_cosh_coeff(g: Geodesic):
    # gamma(t) = sinh(t) w + cosh(t) a with w = z + (<z,a>/([a]+1)) a
    w = g.z + (float(g.z @ g.a) / (bracket(g.a) + 1.0)) * g.a
    return w, g.a


def geodesic_point(g: Geodesic, t):
    """The point gamma(t) = T_a(sinh(t) z); ``t`` may be an array."""
    w, a = _sinh_cosh_coeff(g)
    t = np.asarray(t, dtype=float)
    return np.sinh(t)[..., None] * w + np.cosh(t)[..., None] * a


def line_through(a, b, tol=1e-9):
    """The unique line through two distinct points, based at ``a``.

    The direction is the normalized image of ``b`` under the translation
    moving ``a`` to the origin, so ``geodesic_point`` reaches ``b`` at
    parameter ``hyperbolic_distance(a, b)``.
    """
    a = as_point(a, "a")
    b = as_point(b, "b")
    if points_equal(a, b, tol):
        raise DegenerateInputError("line through two coincident points is not unique")
    return Geodesic(a, translation_apply(-a, b))


def segment_contains(a, b, x, tol=1e-9):
    """Whether x lies on the metric segment between a and b.

    True exactly when the triangle inequality through x degenerates to
    equality: d(a, x) + d(x, b) = d(a, b) within ``tol`` (absolute plus
    relative).
    """
    d_ab = hyperbolic_distance(a, b)
    defect = hyperbolic_distance(a, x) + hyperbolic_distance(x, b) - d_ab
    return bool(abs(defect) <= tol * (1.0 + d_ab))


def metrically_collinear(a, b, c, tol=1e-9):
    """Whether some ordering of the three points achieves additivity of
    distances (all three middle-point choices are tried)."""
    return (
        segment_contains(a, c, b, tol)
        or segment_contains(b, c, a, tol)
        or segment_contains(a, b, c, tol)
    )


def _independent(a, b, tol=1e-12):
    na, nb = np.linalg.norm(a), np.linalg.norm(b)
    if na == 0.0 or nb == 0.0:
        return False
    # Gram determinant of the normalized pair = sin^2 of their angle
    det = 1.0 - (float(a @ b) / (na * nb)) ** 2
    return det > tol


def parallel_family(a, b, mu):
    """The line through the origin with direction (mu*a + b), |mu| > 1.

    For a line in two-vector form {sinh(t) a + cosh(t) b} (which never meets
    the origin), every such choice of mu yields a line disjoint from it, and
    distinct mu give distinct lines - infinitely many parallels through one
    point.
    """
    a = as_point(a, "a")
    b = as_point(b, "b")
    if a.shape != b.shape or a.ndim != 1:
        raise DimensionError("a and b must be single vectors of equal dimension")
    mu = float(mu)
    if not abs(mu) > 1.0:
        raise DomainError(f"parallel parameter must satisfy |mu| > 1, got {mu!r}")
    if not _independent(a, b):
        raise DegenerateInputError("a and b must be linearly independent")
    return Geodesic(np.zeros_like(a), mu * a + b)


def line_two_vector_form(line: Geodesic, tol=1e-9):
    """Two-vector form (a, b) of a line not through the origin.

    For the line T_y(sinh(t) z) the image set equals
    {sinh(t) a + cosh(t) b} with a = z + (<z, y>/([y]+1)) y and b = y;
    the two vectors are linearly independent exactly because the line misses
    the origin.
    """
    y, z = line.a, line.z
    # the line passes through the origin iff y lies in the span of z
    resid = y - float(y @ z) * z
    if np.linalg.norm(resid) <= tol * (1.0 + np.linalg.norm(y)):
        raise DegenerateInputError("line passes through the origin")
    a = z + (float(z @ y) / (bracket(y) + 1.0)) * y
    return a, y.copy()


def two_vector_form_to_line(a, b):
    """Inverse of :func:`line_two_vector_form`: recover the Geodesic whose
    image is {sinh(t) a + cosh(t) b}.  Requires independent vectors."""
    a = as_point(a, "a")
    b = as_point(b, "b")
    if not _independent(a, b):
        raise DegenerateInputError("a and b must be linearly independent")
    z = a - (float(a @ b) / (bracket(b) * (bracket(b) + 1.0))) * b
    return Geodesic(b, z)


def two_vector_point(a, b, t):
    """Points sinh(t) a + cosh(t) b of a line in two-vector form."""
    a = as_point(a, "a")
    b = as_point(b, "b")
    t = np.asarray(t, dtype=float)
    return np.sinh(t)[..., None] * a + np.cosh(t)[..., None] * b


def angle_measure(angle: Angle):
    """Measure in [0, pi] of the angle between the two rays.

    The stored directions already live in the frame translated to the
    origin, where the measure is the Euclidean angle between them; evaluated
    in the atan2 chord form (exact 0 and pi at the degenerate ends).
    """
    z1, z2 = angle.z1, angle.z2
    return float(
        2.0 * math.atan2(np.linalg.norm(z1 - z2), np.linalg.norm(z1 + z2))
    )


def is_right_angle(angle: Angle, tol=1e-9):
    """Whether the angle is right: the four angles formed with the opposite
    rays (z1, z2), (-z2, z1), (z2, -z1), (-z1, -z2) are pairwise congruent,
    which happens exactly at measure pi/2."""
    v, z1, z2 = angle.vertex, angle.z1, angle.z2
    measures = [
        angle_measure(Angle(v, z1, z2)),
        angle_measure(Angle(v, -z2, z1)),
        angle_measure(Angle(v, z2, -z1)),
        angle_measure(Angle(v, -z1, -z2)),
    ]
    return bool(max(measures) - min(measures) <= tol)


def transport_angle(g, angle: Angle):
    """The image of an angle under an isometry.

    The conjugate T_{-g(vertex)} o g o T_vertex fixes the origin, hence acts
    linearly; applying it to the stored directions gives the directions of
    the image rays.
    """
    v = angle.vertex
    q = isometry_apply(g, v)

    def push(z):
        return translation_apply(-q, isometry_apply(g, translation_apply(v, z)))

    return Angle(q, push(angle.z1), push(angle.z2))


def sphere_euclidean_radius(r):
    """Euclidean radius sinh(r) of the hyperbolic sphere of radius r around
    the origin (the two spheres coincide as sets)."""
    r = float(r)
    if r < 0.0:
        raise DomainError(f"radius must be non-negative, got {r!r}")
    return math.sinh(r)


def h1_embedding(t):
    """The isometry t -> (sinh t) of the real line onto the one-dimensional
    hyperbolic space."""
    t = np.asarray(t, dtype=float)
    return np.sinh(t)[..., None]


def _golden_min(f, lo, hi, iters=60):
    # golden-section search for a local minimum on [lo, hi]
    invphi = (math.sqrt(5.0) - 1.0) / 2.0
    a, b = lo, hi
    c = b - invphi * (b - a)
    d = a + invphi * (b - a)
    fc, fd = f(c), f(d)
    for _ in range(iters):
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - invphi * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + invphi * (b - a)
            fd = f(d)
    t = (a + b) / 2.0
    return t, f(t)


def curve_min_gap(curve_a, curve_b, span=10.0, samples=10_000, refine_iters=60):
    """Smallest sampled hyperbolic distance between two parametrized curves.

    ``curve_a`` and ``curve_b`` map a parameter array to point batches.  The
    parameter square [-span, span]^2 is scanned on a grid of ~``samples``
    cells, then the best pair is polished by alternating golden-section
    refinement in each coordinate.  Returns ``(gap, s, t)``.

    The scan is a falsification harness: a positive result bounds the gap
    from above and strongly suggests (but does not prove) disjointness.
    """
    m = max(2, int(round(math.sqrt(samples))))
    ts = np.linspace(-span, span, m)
    pa = curve_a(ts)
    pb = curve_b(ts)
    dmat = hyperbolic_distance(pa[:, None, :], pb[None, :, :])
    i, j = np.unravel_index(np.argmin(dmat), dmat.shape)
    s, t = float(ts[i]), float(ts[j])
    step = float(ts[1] - ts[0])

    def dist_at(ss, tt):
        return float(hyperbolic_distance(curve_a(np.array([ss]))[0],
                                         curve_b(np.array([tt]))[0]))

    best = float(dmat[i, j])
    for _ in range(4):
        s, _ = _golden_min(lambda ss: dist_at(ss, t),
                           max(-span, s - step), min(span, s + step), refine_iters)
        t, best = _golden_min(lambda tt: dist_at(s, tt),
                              max(-span, t - step), min(span, t + step), refine_iters)
    return min(best, float(dmat[i, j])), s, t


def line_min_gap(g1: Geodesic, g2: Geodesic, span=10.0, samples=10_000,
                 refine_iters=60):
    """Scanned minimum hyperbolic distance between two lines."""
    return curve_min_gap(lambda t: geodesic_point(g1, t),
                         lambda t: geodesic_point(g2, t),
                         span=span, samples=samples, refine_iters=refine_iters)
