"""Orthonormal frames, Gram comparisons, and interpolating orthogonal maps.

A finite map fixing the origin preserves hyperbolic distances exactly when it
preserves all pairwise inner products, so building the linear part of an
isometry reduces to mapping one orthonormal frame onto another with matching
Gram data.  The completion of a partial frame is deterministic: ordered
coordinate vectors, orthonormalized.
"""

from __future__ import annotations

import numpy as np

from .errors import GeometryError

# Residual norm below this (relative to the vector size) counts as linearly
# dependent during orthonormalization.
DEPENDENCY_TOL = 1e-12


def gram_matrix(vectors):
    """Matrix of pairwise inner products of the given row vectors."""
    v = np.asarray(vectors, dtype=float)
    return v @ v.T


def gram_mismatch(a, b):
    """Largest entrywise deviation between the two Gram matrices."""
    return float(np.max(np.abs(gram_matrix(a) - gram_matrix(b)))) if len(a) else 0.0


def _orthogonalize(v, frame):
    # modified Gram-Schmidt with one re-orthogonalization pass
    w = v.astype(float, copy=True)
    for _ in range(2):
        for f in frame:
            w -= (f @ w) * f
    return w


def orthonormal_frame(vectors, tol=DEPENDENCY_TOL):
    """Orthonormal basis of the span of ``vectors`` (rows), in input order.

    Returns ``(frame, picked)`` where ``picked`` lists the indices of the
    input vectors that contributed a new direction.
    """
    vectors = np.asarray(vectors, dtype=float)
    frame: list[np.ndarray] = []
    picked: list[int] = []
    for i, v in enumerate(vectors):
        w = _orthogonalize(v, frame)
        nw = np.linalg.norm(w)
        if nw > tol * max(1.0, np.linalg.norm(v)):
            frame.append(w / nw)
            picked.append(i)
    return np.array(frame).reshape(len(frame), vectors.shape[-1]), picked


def orthonormal_frame_at(vectors, picked, tol=DEPENDENCY_TOL):
    """Orthonormalize ``vectors`` at the given row indices; raises if a row
    that is expected to be independent turns out dependent."""
    vectors = np.asarray(vectors, dtype=float)
    frame: list[np.ndarray] = []
    for i in picked:
        w = _orthogonalize(vectors[i], frame)
        nw = np.linalg.norm(w)
        if nw <= tol * max(1.0, np.linalg.norm(vectors[i])):
            raise GeometryError(
                f"vector {i} is linearly dependent on its predecessors"
            )
        frame.append(w / nw)
    return np.array(frame).reshape(len(frame), vectors.shape[-1])


def complete_frame(frame, dim, tol=DEPENDENCY_TOL):
    """Extend an orthonormal frame to a full basis of R^dim by appending
    coordinate vectors in order and orthonormalizing."""
    rows = [np.asarray(f, dtype=float) for f in frame]
    for j in range(dim):
        if len(rows) == dim:
            break
        w = _orthogonalize(np.eye(dim)[j], rows)
        nw = np.linalg.norm(w)
        if nw > tol:
            rows.append(w / nw)
    if len(rows) != dim:
        raise GeometryError("failed to complete an orthonormal basis")
    return np.array(rows)


def polar_orthogonalize(m):
    """Nearest orthogonal matrix (polar factor) of ``m``."""
    w, _, vt = np.linalg.svd(np.asarray(m, dtype=float))
    return w @ vt


def orthogonal_map(source, target, tol=DEPENDENCY_TOL):
    """Orthogonal matrix U with U @ source[i] ~= target[i].

    Assumes the two Gram matrices already agree (the caller gates on that).
    The map sends the orthonormal frame of the source span to the frame of
    the target span built with the same pivots, and pairs the canonically
    completed complement bases with each other.  Returns ``(U, rank)``.
    """
    source = np.asarray(source, dtype=float)
    target = np.asarray(target, dtype=float)
    dim = source.shape[-1]
    e_frame, picked = orthonormal_frame(source, tol)
    f_frame = orthonormal_frame_at(target, picked, tol)
    e_full = complete_frame(e_frame, dim, tol)
    f_full = complete_frame(f_frame, dim, tol)
    return polar_orthogonalize(f_full.T @ e_full), len(picked)
