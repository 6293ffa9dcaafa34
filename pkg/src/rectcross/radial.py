"""Counterclockwise orders of a target set around an anchor point."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _backend
from .errors import CollinearWithAnchor, KernelDegeneracy
from .geom import Point, PointSet, as_point


def _half(dx, dy):
    return 0 if dy > 0 or (dy == 0 and dx > 0) else 1


def precedes(anchor, a, b) -> bool:
    """True when ``a`` comes strictly before ``b`` counterclockwise from direction (1, 0).

    Directions in [0, pi) come first; inside a half the orientation test decides.
    """
    ax, ay = anchor
    u = (a[0] - ax, a[1] - ay)
    v = (b[0] - ax, b[1] - ay)
    hu, hv = _half(*u), _half(*v)
    if hu != hv:
        return hu < hv
    return u[0] * v[1] - u[1] * v[0] > 0


@dataclass(frozen=True)
class RadialOrder:
    anchor: Point
    targets: PointSet
    order: tuple  # indices into ``targets``

    def points(self) -> list:
        return [self.targets[i] for i in self.order]

    def __len__(self):
        return len(self.order)


def radial_order_around(anchor, targets) -> RadialOrder:
    """Sort ``targets`` counterclockwise around ``anchor``, skipping the anchor itself.

    Raises :class:`CollinearWithAnchor` when two targets share a line through the anchor.
    """
    anchor = as_point(anchor)
    if not isinstance(targets, PointSet):
        targets = PointSet(targets)
    keep = np.array([p != anchor for p in targets], dtype=bool)
    sub = np.flatnonzero(keep)
    tx, ty = targets.xs[sub], targets.ys[sub]
    try:
        local = _backend.kernels.radial_order(anchor.x, anchor.y, tx, ty,
                                              np.ones(len(sub), dtype=np.int8))
    except KernelDegeneracy as e:
        _, i, j = e.indices
        raise CollinearWithAnchor(anchor, targets[sub[i]], targets[sub[j]]) from None
    return RadialOrder(anchor, targets, tuple(int(sub[i]) for i in local))


def all_radial_orders(points) -> list[RadialOrder]:
    """One order per point p of the set, over the remaining points."""
    if not isinstance(points, PointSet):
        points = PointSet(points)
    return [radial_order_around(p, points) for p in points]
