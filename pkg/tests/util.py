"""Shared test helpers: independent distance oracles and random elements."""

import math

import mpmath as mp
import numpy as np

from hgeom import Isometry


def naive_hyperbolic_distance(x, y):
    """Textbook arcosh([x][y] - <x,y>) in plain double precision, with the
    argument clamped at 1.  Independent of the library's evaluation route."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    bx = math.sqrt(1.0 + float(x @ x))
    by = math.sqrt(1.0 + float(y @ y))
    arg = bx * by - float(x @ y)
    return math.acosh(max(arg, 1.0))


def naive_argument(x, y):
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    bx = math.sqrt(1.0 + float(x @ x))
    by = math.sqrt(1.0 + float(y @ y))
    return bx * by - float(x @ y)


def exact_hyperbolic_distance(x, y, dps=50):
    """High-precision reference value of the hyperbolic distance."""
    with mp.workdps(dps):
        xm = [mp.mpf(float(v)) for v in np.asarray(x, dtype=float)]
        ym = [mp.mpf(float(v)) for v in np.asarray(y, dtype=float)]
        bx = mp.sqrt(1 + mp.fsum(v * v for v in xm))
        by = mp.sqrt(1 + mp.fsum(v * v for v in ym))
        ip = mp.fsum(a * b for a, b in zip(xm, ym))
        return float(mp.acosh(bx * by - ip))


def random_unit(rng, n, size=()):
    v = rng.standard_normal(size + (n,))
    return v / np.linalg.norm(v, axis=-1, keepdims=True)


def random_orthogonal(rng, n):
    q, r = np.linalg.qr(rng.standard_normal((n, n)))
    return q * np.sign(np.diag(r))


def random_isometry(rng, n, box=5.0):
    return Isometry(rng.uniform(-box, box, n), random_orthogonal(rng, n))
