"""Exact integer points, point sets, the orientation predicate and the point-file format."""
from __future__ import annotations

import operator
from itertools import combinations
from pathlib import Path
from typing import Iterable, Iterator, NamedTuple

import numpy as np

from .errors import CapacityError, CollinearPoints, DuplicatePoint, KernelDegeneracy

# |x|, |y| <= COORD_BOUND keeps every coordinate difference within 2**31, so each
# product in the orientation determinant stays below 2**62 and fits an int64.
COORD_BOUND = 2**30

NAIVE_CHECK_BELOW = 16


class Point(NamedTuple):
    x: int
    y: int

    def __str__(self):
        return f"({self.x},{self.y})"


def as_point(p) -> Point:
    if isinstance(p, Point):
        return p
    x, y = p
    return Point(operator.index(x), operator.index(y))


def orientation(p, q, r) -> int:
    """Sign of the turn p -> q -> r: +1 if r is strictly left of the directed line pq."""
    d = (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])
    return (d > 0) - (d < 0)


class PointSet:
    """An ordered collection of distinct integer points within the capacity bound.

    General position is not checked here; the operations that need it detect
    violations on the way (see :func:`validate_general_position`).
    """

    __slots__ = ("points", "xs", "ys", "_index")

    def __init__(self, points: Iterable = (), *, bound: int = COORD_BOUND):
        pts = tuple(as_point(p) for p in points)
        index = {}
        for i, p in enumerate(pts):
            if abs(p.x) > bound or abs(p.y) > bound:
                raise CapacityError(f"point {p} exceeds coordinate bound {bound}")
            if p in index:
                raise DuplicatePoint(p)
            index[p] = i
        self.points = pts
        self._index = index
        self.xs = np.fromiter((p.x for p in pts), dtype=np.int64, count=len(pts))
        self.ys = np.fromiter((p.y for p in pts), dtype=np.int64, count=len(pts))
        self.xs.flags.writeable = False
        self.ys.flags.writeable = False

    @property
    def n(self) -> int:
        return len(self.points)

    def __len__(self):
        return len(self.points)

    def __iter__(self) -> Iterator[Point]:
        return iter(self.points)

    def __getitem__(self, i) -> Point:
        return self.points[i]

    def __contains__(self, p):
        try:
            return as_point(p) in self._index
        except (TypeError, ValueError):
            return False

    def __eq__(self, other):
        if not isinstance(other, PointSet):
            return NotImplemented
        return self.points == other.points

    def __hash__(self):
        return hash(self.points)

    def __repr__(self):
        return f"PointSet({[tuple(p) for p in self.points]})"

    def index(self, p) -> int:
        return self._index[as_point(p)]

    def without(self, p) -> PointSet:
        i = self.index(p)
        return PointSet(self.points[:i] + self.points[i + 1:])

    def replace(self, p, q) -> PointSet:
        """Copy with ``p`` substituted by ``q`` at the same position."""
        i = self.index(p)
        return PointSet(self.points[:i] + (as_point(q),) + self.points[i + 1:])

    def plus(self, q) -> PointSet:
        return PointSet(self.points + (as_point(q),))


def validate_general_position(points) -> None:
    """Raise :class:`DuplicatePoint` or :class:`CollinearPoints` with a witness.

    Small sets use the plain triple scan; larger ones sort around every point
    and report ties in the sort as collinear triples.
    """
    if not isinstance(points, PointSet):
        points = PointSet(points)
    n = len(points)
    if n < NAIVE_CHECK_BELOW:
        for p, q, r in combinations(points, 3):
            if orientation(p, q, r) == 0:
                raise CollinearPoints(p, q, r)
        return
    from ._backend import kernels

    try:
        kernels.check_general_position(points.xs, points.ys)
    except KernelDegeneracy as e:
        raise CollinearPoints(*(points[i] for i in e.indices)) from None


class ParseError(ValueError):
    def __init__(self, lineno, msg):
        self.lineno = lineno
        super().__init__(f"line {lineno}: {msg}")


def parse_points(text: str) -> PointSet:
    pts = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) != 2:
            raise ParseError(lineno, f"expected two integers, got {line!r}")
        try:
            pts.append(Point(int(fields[0]), int(fields[1])))
        except ValueError:
            raise ParseError(lineno, f"not an integer pair: {line!r}") from None
    return PointSet(pts)


def format_points(points) -> str:
    return "".join(f"{p[0]} {p[1]}\n" for p in points)


def read_points(path) -> PointSet:
    return parse_points(Path(path).read_text(encoding="ascii"))


def write_points(path, points, header=None) -> None:
    text = format_points(points)
    if header:
        text = "".join(f"# {h}\n" for h in header.splitlines()) + text
    Path(path).write_text(text, encoding="ascii")
