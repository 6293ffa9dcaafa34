"""Random and structured point sets for tests, benchmarks and optimizer seeds."""
from __future__ import annotations

import numpy as np

from . import _backend
from .errors import KernelDegeneracy
from .geom import Point, PointSet, orientation


def random_points(n: int, rng: np.random.Generator, bound: int = 2**20) -> PointSet:
    """n distinct integer points with |x|, |y| <= bound, no three collinear."""
    if n > (2 * bound + 1) ** 2:
        raise ValueError("bound too small for n distinct points")
    xy = rng.integers(-bound, bound + 1, size=(n, 2))
    while True:
        _, first = np.unique(xy, axis=0, return_index=True)
        if len(first) < n:
            dup = np.setdiff1d(np.arange(n), first)
            xy[dup] = rng.integers(-bound, bound + 1, size=(len(dup), 2))
            continue
        bad = _collinear_witness(xy)
        if bad is None:
            return PointSet(map(tuple, xy.tolist()))
        xy[bad] = rng.integers(-bound, bound + 1, size=2)


def _collinear_witness(xy):
    """Index of one point in some collinear triple, or None."""
    n = len(xy)
    if n < 3:
        return None
    if n < 16:
        pts = xy.tolist()
        for i in range(n):
            for j in range(i + 1, n):
                for k in range(j + 1, n):
                    if orientation(pts[i], pts[j], pts[k]) == 0:
                        return k
        return None
    try:
        _backend.kernels.check_general_position(
            np.ascontiguousarray(xy[:, 0], dtype=np.int64),
            np.ascontiguousarray(xy[:, 1], dtype=np.int64))
    except KernelDegeneracy as e:
        return e.indices[2]
    return None


def random_split(n: int, k: int, rng: np.random.Generator, bound: int = 2**20):
    """A set S of n points and k candidates C with S + C jointly in general position."""
    allp = random_points(n + k, rng, bound)
    return PointSet(allp.points[:n]), PointSet(allp.points[n:])


def convex_points(n: int) -> PointSet:
    """n lattice points on the parabola y = x^2, hence in convex and general position."""
    return PointSet(Point(i, i * i) for i in range(n))
