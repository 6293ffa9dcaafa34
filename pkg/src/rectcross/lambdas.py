"""The lambda-matrix, weighted left sums, and crossing numbers derived from them."""
from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from . import _backend
from .errors import (CollinearPoints, CollinearWithAnchor, InconsistentCounts,
                     KernelDegeneracy, OrderMismatch)
from .geom import PointSet, as_point
from .radial import RadialOrder, radial_order_around


def _as_set(points) -> PointSet:
    return points if isinstance(points, PointSet) else PointSet(points)


def _degenerate(points, e):
    return CollinearPoints(*(points[i] for i in e.indices))


def quadruple_term(n: int) -> int:
    """n(n-1)(n-2)(n-3)/8, i.e. a quarter of all (ordered pair, unordered pair) patterns."""
    num = n * (n - 1) * (n - 2) * (n - 3)
    if num % 8:
        raise InconsistentCounts(f"n(n-1)(n-2)(n-3) not divisible by 8 for n={n}")
    return num // 8 if n >= 4 else 0


def left_weight_sums(anchor, targets, weights, order: RadialOrder | None = None) -> dict:
    """For each target q, the total weight of targets strictly left of the ray anchor -> q.

    ``weights`` is a mapping from point to integer or a sequence aligned with
    ``targets``. Runs in linear time once ``order`` is known.
    """
    anchor = as_point(anchor)
    targets = _as_set(targets)
    if anchor in targets:
        raise ValueError(f"anchor {anchor} must not belong to the target set")
    if order is None:
        order = radial_order_around(anchor, targets)
    elif order.anchor != anchor or order.targets != targets:
        raise OrderMismatch("radial order was built for a different anchor or target set")
    elif sorted(order.order) != list(range(len(targets))):
        raise OrderMismatch("radial order is not a permutation of the targets")
    if hasattr(weights, "keys"):
        w = [int(weights[p]) for p in targets]
    else:
        w = [int(v) for v in weights]
        if len(w) != len(targets):
            raise ValueError("weights must align with targets")
    m = len(targets)
    try:
        sums = _backend.kernels.left_sums(
            anchor.x, anchor.y, targets.xs, targets.ys,
            np.asarray(order.order, dtype=np.int64), np.asarray(w, dtype=np.int64),
            np.ones(m, dtype=np.int8))
    except KernelDegeneracy as e:
        _, i, j = e.indices
        raise CollinearWithAnchor(anchor, targets[i], targets[j]) from None
    return {targets[i]: int(sums[i]) for i in range(m)}


@dataclass(frozen=True)
class LambdaMatrix:
    """Entry (i, j) counts the points strictly left of the directed line p_i -> p_j."""

    entries: np.ndarray

    @property
    def n(self) -> int:
        return self.entries.shape[0]

    def violations(self) -> list[str]:
        """Broken invariants: zero diagonal, transpose sums n-2, range [0, n-2]."""
        lam, n = self.entries, self.n
        out = []
        if n and np.any(np.diag(lam) != 0):
            out.append("non-zero diagonal")
        if n >= 2:
            off = ~np.eye(n, dtype=bool)
            if np.any((lam + lam.T)[off] != n - 2):
                out.append("transpose sum differs from n-2")
            if np.any(lam[off] < 0) or np.any(lam[off] > n - 2):
                out.append("entry outside [0, n-2]")
        return out

    def to_csv(self) -> str:
        return "".join(",".join(str(int(v)) for v in row) + "\n" for row in self.entries)


def lambda_matrix(points, orders: list[RadialOrder] | None = None) -> LambdaMatrix:
    """Build the lambda-matrix from radial orders with unit weights.

    Without ``orders`` the kernel sorts and sweeps in one pass.
    """
    pts = _as_set(points)
    n = len(pts)
    if orders is None:
        try:
            return LambdaMatrix(_backend.kernels.lambda_matrix(pts.xs, pts.ys))
        except KernelDegeneracy as e:
            raise _degenerate(pts, e) from None
    if len(orders) != n:
        raise OrderMismatch("need one radial order per point")
    lam = np.zeros((n, n), dtype=np.int64)
    for i, (p, ro) in enumerate(zip(pts, orders)):
        if ro.anchor != p or ro.targets != pts:
            raise OrderMismatch(f"order {i} is not anchored at {p}")
        sub = np.asarray(ro.order, dtype=np.int64)
        if sorted(ro.order) != [t for t in range(n) if t != i]:
            raise OrderMismatch(f"order {i} is not a permutation of the other points")
        # re-index the anchor's targets to 0..n-2 for the kernel
        pos = np.delete(np.arange(n), i)
        local = np.searchsorted(pos, sub)
        try:
            sums = _backend.kernels.left_sums(
                p.x, p.y, pts.xs[pos], pts.ys[pos], local.astype(np.int64),
                np.ones(n - 1, dtype=np.int64), np.ones(n - 1, dtype=np.int8))
        except KernelDegeneracy as e:
            _, a, b = e.indices
            raise CollinearWithAnchor(p, pts[pos[a]], pts[pos[b]]) from None
        lam[i, pos] = sums
    return LambdaMatrix(lam)


def f_sum(lam: LambdaMatrix, rows=None, cols=None) -> int:
    """Sum of C(lambda, 2) over the rows x cols index rectangle (all indices by default)."""
    e = lam.entries
    r = slice(None) if rows is None else np.asarray(list(rows), dtype=np.intp)
    c = slice(None) if cols is None else np.asarray(list(cols), dtype=np.intp)
    block = e[r][:, c] if e.size else e
    return int(np.sum(block * (block - 1) // 2))


def crossing_number_from_lambda(lam: LambdaMatrix) -> int:
    cr = f_sum(lam) - quadruple_term(lam.n)
    if cr < 0 or cr > math.comb(lam.n, 4):
        raise InconsistentCounts(f"crossing count {cr} outside [0, C({lam.n},4)]")
    return cr


def crossing_number(points) -> int:
    """cr(S) through the sweep kernels without materialising the matrix."""
    pts = _as_set(points)
    try:
        f = _backend.kernels.f_total(pts.xs, pts.ys)
    except KernelDegeneracy as e:
        raise _degenerate(pts, e) from None
    cr = int(f) - quadruple_term(len(pts))
    if cr < 0:
        raise InconsistentCounts(f"negative crossing count {cr}")
    return cr


@dataclass(frozen=True)
class PatternCounts:
    typeA: int
    typeB: int
    convexQuads: int
    concaveQuads: int


def pattern_counts(points, lam: LambdaMatrix | None = None) -> PatternCounts:
    """Type-A/B pattern totals and the convex/non-convex quadruple counts they imply.

    Every 4-set yields 12 patterns: 4 type-A if convex, 3 otherwise.
    """
    pts = _as_set(points)
    if lam is None:
        lam = lambda_matrix(pts)
    n = len(pts)
    total = n * (n - 1) * (n - 2) * (n - 3) // 2
    a = f_sum(lam)
    b = total - a
    if (a + b) % 12:
        raise InconsistentCounts("pattern total is not a multiple of 12")
    quads = (a + b) // 12
    convex = a - 3 * quads
    concave = 4 * quads - a
    if convex < 0 or concave < 0 or 8 * convex + 9 * concave != b:
        raise InconsistentCounts(
            f"typeA={a}, typeB={b} give convex={convex}, concave={concave}")
    return PatternCounts(a, b, convex, concave)


@functools.lru_cache(maxsize=64)
def _triples(m):
    return np.array(list(combinations(range(m), 3)), dtype=np.intp).reshape(-1, 3)


def _orientation_table(xs, ys):
    n = len(xs)
    table = np.empty((n, n, n), dtype=np.int8)
    for i in range(n):
        dx = xs - xs[i]
        dy = ys - ys[i]
        lhs = dx[:, None] * dy[None, :]
        rhs = dy[:, None] * dx[None, :]
        table[i] = (lhs > rhs).astype(np.int8) - (lhs < rhs).astype(np.int8)
    return table


def crossing_number_oracle(points) -> int:
    """Count crossing edge pairs by testing every 4-subset directly. O(n^4).

    A 4-set in general position contributes one crossing iff one of its three
    perfect matchings is a pair of properly crossing segments.
    """
    pts = _as_set(points)
    n = len(pts)
    if n < 4:
        return 0
    o = _orientation_table(pts.xs, pts.ys)
    if np.count_nonzero(o) != n * (n - 1) * (n - 2):
        i, j, k = next(t for t in combinations(range(n), 3) if o[t] == 0)
        raise CollinearPoints(pts[i], pts[j], pts[k])

    def crosses(p, q, r, s):
        return (o[p, q, r] != o[p, q, s]) & (o[r, s, p] != o[r, s, q])

    total = 0
    for i in range(n - 3):
        m = n - 1 - i
        if math.comb(m, 3) <= 200_000:
            blocks = [i + 1 + _triples(m)]
        else:
            blocks = []
            for j in range(i + 1, n - 2):
                k, l = np.triu_indices(n - 1 - j, 1)
                blocks.append(np.column_stack(
                    (np.full(k.size, j), j + 1 + k, j + 1 + l)))
        for t in blocks:
            b, c, d = t[:, 0], t[:, 1], t[:, 2]
            convex = crosses(i, b, c, d) | crosses(i, c, b, d) | crosses(i, d, b, c)
            total += int(np.count_nonzero(convex))
    return total
