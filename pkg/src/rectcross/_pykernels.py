"""Pure-Python kernels; the fallback when the compiled ``_kernels`` module is absent.

Every function here has a twin of the same name and signature in
``_kernels.pyx``. Inputs are int64 arrays of coordinates; indices in raised
:class:`KernelDegeneracy` refer to the caller's numbering (``-1`` = anchor).
"""
from functools import cmp_to_key

import numpy as np

from .errors import KernelDegeneracy

NAME = "python"


def _half(dx, dy):
    return 0 if dy > 0 or (dy == 0 and dx > 0) else 1


def _cross(dx, dy, a, b):
    d = dx[a] * dy[b] - dy[a] * dx[b]
    return (d > 0) - (d < 0)


def _frame(ax, ay, xs, ys):
    dx = [x - ax for x in xs]
    dy = [y - ay for y in ys]
    hf = [_half(u, v) for u, v in zip(dx, dy)]
    return dx, dy, hf


def _sort(idx, dx, dy, hf):
    def cmp(a, b):
        if hf[a] != hf[b]:
            return hf[a] - hf[b]
        return -_cross(dx, dy, a, b)

    return sorted(idx, key=cmp_to_key(cmp))


def _check_ties(order, dx, dy, hf, is_s, anchor):
    for a, b in zip(order, order[1:]):
        if hf[a] == hf[b] and _cross(dx, dy, a, b) == 0 and (is_s[a] or is_s[b]):
            raise KernelDegeneracy(anchor, a, b)


def _sweep(order, dx, dy, hf, w, is_s, anchor, out):
    """Write into ``out[q]`` the weight strictly left of anchor->q for every q in ``order``.

    Two pointers over the doubled cyclic order: ``s`` skips targets sharing q's
    direction, ``j`` is the first target at or beyond q's antipode.
    """
    m = len(order)
    dbl = order + order
    pre = [0] * (2 * m + 1)
    for k, t in enumerate(dbl):
        pre[k + 1] = pre[k] + w[t]
    s = j = 0
    for i in range(m):
        q = order[i]
        s = max(s, i + 1)
        while s < i + m and hf[dbl[s]] == hf[q] and _cross(dx, dy, q, dbl[s]) == 0:
            s += 1
        j = max(j, s)
        while j < i + m and _cross(dx, dy, q, dbl[j]) > 0:
            j += 1
        out[q] = pre[j] - pre[s]
        k = j
        while k < i + m:
            r = dbl[k]
            if _cross(dx, dy, q, r) != 0 or hf[r] == hf[q]:
                break
            if is_s[q] or is_s[r]:
                raise KernelDegeneracy(anchor, q, r)
            k += 1


def radial_order(ax, ay, tx, ty, is_s):
    dx, dy, hf = _frame(int(ax), int(ay), tx.tolist(), ty.tolist())
    flags = is_s.tolist()
    order = _sort(range(len(dx)), dx, dy, hf)
    _check_ties(order, dx, dy, hf, flags, -1)
    _sweep(order, dx, dy, hf, [0] * len(dx), flags, -1, [0] * len(dx))
    return np.array(order, dtype=np.int64)


def left_sums(ax, ay, tx, ty, order, w, is_s):
    dx, dy, hf = _frame(int(ax), int(ay), tx.tolist(), ty.tolist())
    out = [0] * len(dx)
    _sweep(order.tolist(), dx, dy, hf, w.tolist(), is_s.tolist(), -1, out)
    return np.array(out, dtype=np.int64)


def _anchor_rows(xs, ys, anchors, is_s):
    """Yield (anchor, lambda row against the flagged points) for every anchor.

    The row is indexed globally; the anchor's own entry is 0.
    """
    n = len(xs)
    ones = [1 if f else 0 for f in is_s]
    for a in anchors:
        dx, dy, hf = _frame(xs[a], ys[a], xs, ys)
        idx = [t for t in range(n) if t != a and (is_s[a] or is_s[t])]
        order = _sort(idx, dx, dy, hf)
        _check_ties(order, dx, dy, hf, is_s, a)
        row = [0] * n
        _sweep(order, dx, dy, hf, ones, is_s, a, row)
        yield a, order, dx, dy, hf, row


def check_general_position(xs, ys):
    xs, ys = xs.tolist(), ys.tolist()
    flags = [True] * len(xs)
    for _ in _anchor_rows(xs, ys, range(len(xs)), flags):
        pass


def lambda_matrix(xs, ys):
    n = len(xs)
    xs, ys = xs.tolist(), ys.tolist()
    lam = np.zeros((n, n), dtype=np.int64)
    for a, _, _, _, _, row in _anchor_rows(xs, ys, range(n), [True] * n):
        lam[a] = row
    return lam


def f_total(xs, ys):
    n = len(xs)
    xs, ys = xs.tolist(), ys.tolist()
    f = 0
    for _, _, _, _, _, row in _anchor_rows(xs, ys, range(n), [True] * n):
        f += sum(v * (v - 1) // 2 for v in row)
    return f


def remove_terms(xs, ys):
    """Return f_S(S,S), its row and column sums, and the removal corrections."""
    n = len(xs)
    xs, ys = xs.tolist(), ys.tolist()
    flags = [True] * n
    f = 0
    rows = [0] * n
    cols = [0] * n
    nabla = [0] * n
    for q, order, dx, dy, hf, lam in _anchor_rows(xs, ys, range(n), flags):
        w = [0] * n
        total = 0
        for r in order:
            c = lam[r] * (lam[r] - 1) // 2
            rows[q] += c
            cols[r] += c
            w[r] = 1 - lam[r]
            total += w[r]
        f += rows[q]
        left = [0] * n
        _sweep(order, dx, dy, hf, w, flags, q, left)
        # r left of p->q  <=>  r strictly right of q->p
        for p in order:
            nabla[p] += total - w[p] - left[p]
    as_arr = lambda v: np.array(v, dtype=np.int64)  # noqa: E731
    return f, as_arr(rows), as_arr(cols), as_arr(nabla)


def add_terms(sx, sy, cx, cy):
    """Return f_S(S,S) and, per candidate c, the row/column f-terms and insertion correction."""
    n, k = len(sx), len(cx)
    xs = sx.tolist() + cx.tolist()
    ys = sy.tolist() + cy.tolist()
    flags = [True] * n + [False] * k
    f = 0
    rows = [0] * k
    cols = [0] * k
    nabla = [0] * k
    for q, order, dx, dy, hf, lam in _anchor_rows(xs, ys, range(n), flags):
        w = [0] * (n + k)
        total = 0
        for r in order:
            c = lam[r] * (lam[r] - 1) // 2
            if r < n:
                f += c
                w[r] = lam[r]
                total += lam[r]
            else:
                cols[r - n] += c
        left = [0] * (n + k)
        _sweep(order, dx, dy, hf, w, flags, q, left)
        for p in order:
            if p >= n:
                nabla[p - n] += total - left[p]
    for c, _, _, _, _, lam in _anchor_rows(xs, ys, range(n, n + k), flags):
        rows[c - n] = sum(v * (v - 1) // 2 for v in lam[:n])
    as_arr = lambda v: np.array(v, dtype=np.int64)  # noqa: E731
    return f, as_arr(rows), as_arr(cols), as_arr(nabla)
