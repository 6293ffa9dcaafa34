"""Batch evaluators: cr for every single-point removal, insertion, or relocation.

Each batch costs one O(n^2 log n) pass instead of one per variant. The kernels
return f_S(S,S), the per-point row/column f-terms and the correction nabla_p;
the two assemblies below turn those into f-sums of the variant sets.
"""
from __future__ import annotations

import math
from collections.abc import Mapping

import numpy as np

from . import _backend
from .errors import (CollinearPoints, InconsistentCounts, KernelDegeneracy,
                     NotAMember, OverlapError)
from .geom import PointSet, as_point
from .lambdas import quadruple_term


class DeltaResult(Mapping):
    """Crossing counts keyed by the removed, added or substituted point, in caller order."""

    def __init__(self, kind: str, keys, values):
        self.kind = kind
        self._keys = tuple(keys)
        self._values = tuple(int(v) for v in values)
        self._map = dict(zip(self._keys, self._values))

    def __getitem__(self, p):
        return self._map[as_point(p)]

    def __iter__(self):
        return iter(self._keys)

    def __len__(self):
        return len(self._keys)

    def __repr__(self):
        body = ", ".join(f"{k}: {v}" for k, v in zip(self._keys, self._values))
        return f"DeltaResult({self.kind}, {{{body}}})"

    @property
    def values_array(self) -> np.ndarray:
        return np.array(self._values, dtype=np.int64)

    def best(self):
        """(point, cr) of the smallest count; ties go to the earliest entry."""
        if not self._keys:
            raise ValueError("empty result")
        i = int(np.argmin(self._values))
        return self._keys[i], self._values[i]


def removal_f(f_all, row, col, nabla):
    """f_{S-p}(S-p, S-p) = f_S(S,S) - f_S({p},S) - f_S(S,{p}) + nabla_p."""
    return f_all - row - col + nabla


def insertion_f(f_all, row, col, nabla):
    """f_{S+p}(S+p, S+p) = f_S(S,S) + f_S({p},S) + f_S(S,{p}) + nabla_p."""
    return f_all + row + col + nabla


def _finish(kind, keys, fvals, m):
    cr = [int(v) - quadruple_term(m) for v in fvals]
    top = math.comb(m, 4)
    for k, v in zip(keys, cr):
        if not 0 <= v <= top:
            raise InconsistentCounts(f"{kind} of {k}: count {v} outside [0, {top}]")
    return DeltaResult(kind, keys, cr)


def batch_remove(points) -> DeltaResult:
    """cr(S - {p}) for every p in S."""
    S = points if isinstance(points, PointSet) else PointSet(points)
    n = len(S)
    if n == 0:
        return DeltaResult("remove", (), ())
    try:
        f, row, col, nabla = _backend.kernels.remove_terms(S.xs, S.ys)
    except KernelDegeneracy as e:
        raise CollinearPoints(*(S[i] for i in e.indices)) from None
    return _finish("remove", S.points, removal_f(int(f), row, col, nabla), n - 1)


def batch_add(points, candidates) -> DeltaResult:
    """cr(S + {q}) for every candidate q.

    Candidates only need to be in general position with S; collinearities
    among candidates themselves never occur in a variant and are ignored.
    """
    S = points if isinstance(points, PointSet) else PointSet(points)
    C = candidates if isinstance(candidates, PointSet) else PointSet(candidates)
    clash = [q for q in C if q in S]
    if clash:
        raise OverlapError(f"candidate {clash[0]} already belongs to the set")
    if len(C) == 0:
        return DeltaResult("add", (), ())
    n = len(S)
    try:
        f, row, col, nabla = _backend.kernels.add_terms(S.xs, S.ys, C.xs, C.ys)
    except KernelDegeneracy as e:
        raise CollinearPoints(*(S[i] if i < n else C[i - n] for i in e.indices)) from None
    return _finish("add", C.points, insertion_f(int(f), row, col, nabla), n + 1)


def batch_move(points, p, candidates) -> DeltaResult:
    """cr(S - {p} + {q}) for every candidate q: insertion into S - {p}."""
    S = points if isinstance(points, PointSet) else PointSet(points)
    p = as_point(p)
    if p not in S:
        raise NotAMember(f"{p} is not a point of the set")
    res = batch_add(S.without(p), candidates)
    return DeltaResult("move", list(res), [res[q] for q in res])
