"""Slow, obviously-correct reference computations used by the tests."""
from itertools import combinations

from rectcross.geom import orientation


def brute_lambda(pts):
    n = len(pts)
    return [[0 if i == j else sum(orientation(pts[i], pts[j], r) > 0 for r in pts)
             for j in range(n)] for i in range(n)]


def segments_cross(a, b, c, d):
    return (orientation(a, b, c) * orientation(a, b, d) < 0
            and orientation(c, d, a) * orientation(c, d, b) < 0)


def brute_cr(pts):
    """Count pairs of the C(n,2) segments that cross, straight from the definition."""
    edges = list(combinations(pts, 2))
    return sum(1 for (a, b), (c, d) in combinations(edges, 2)
               if len({a, b, c, d}) == 4 and segments_cross(a, b, c, d))


def brute_left_sums(anchor, targets, weights):
    return {q: sum(w for r, w in zip(targets, weights) if orientation(anchor, q, r) > 0)
            for q in targets}
