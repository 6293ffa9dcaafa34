# distutils: language = c++
# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled kernels: radial sort and the two-pointer weighted sweep.

Function for function identical to ``_pykernels``; see that module for the
contracts. Coordinates must respect ``geom.COORD_BOUND`` so that every
product below fits in 63 bits.
"""
import numpy as np

from libc.stdlib cimport free, malloc
from libc.math cimport fabs
from libcpp.algorithm cimport sort as cpp_sort
from libcpp.utility cimport pair

from .errors import KernelDegeneracy

NAME = "cython"

ctypedef long long i64

cdef struct Frame:
    i64* dx
    i64* dy
    char* hf


cdef inline int _cross(Frame* fr, i64 a, i64 b) noexcept nogil:
    cdef i64 l = fr.dx[a] * fr.dy[b]
    cdef i64 r = fr.dy[a] * fr.dx[b]
    return (l > r) - (l < r)


cdef inline bint _before(Frame* fr, i64 a, i64 b) noexcept nogil:
    if fr.hf[a] != fr.hf[b]:
        return fr.hf[a] < fr.hf[b]
    return _cross(fr, a, b) > 0


cdef inline bint _same_dir(Frame* fr, i64 a, i64 b) noexcept nogil:
    return fr.hf[a] == fr.hf[b] and _cross(fr, a, b) == 0


cdef void _set_frame(Frame* fr, i64 ax, i64 ay, const i64* xs, const i64* ys,
                     Py_ssize_t n) noexcept nogil:
    cdef Py_ssize_t t
    cdef i64 u, v
    for t in range(n):
        u = xs[t] - ax
        v = ys[t] - ay
        fr.dx[t] = u
        fr.dy[t] = v
        fr.hf[t] = 0 if (v > 0 or (v == 0 and u > 0)) else 1


cdef void _sift(Frame* fr, i64* a, Py_ssize_t root, Py_ssize_t end) noexcept nogil:
    cdef Py_ssize_t child
    cdef i64 t
    while 2 * root + 1 < end:
        child = 2 * root + 1
        if child + 1 < end and _before(fr, a[child], a[child + 1]):
            child += 1
        if not _before(fr, a[root], a[child]):
            return
        t = a[root]
        a[root] = a[child]
        a[child] = t
        root = child


cdef void _exact_sort(Frame* fr, i64* a, Py_ssize_t m) noexcept nogil:
    cdef Py_ssize_t i, j
    cdef i64 key
    if m <= 16:
        for i in range(1, m):
            key = a[i]
            j = i - 1
            while j >= 0 and _before(fr, key, a[j]):
                a[j + 1] = a[j]
                j -= 1
            a[j + 1] = key
        return
    i = m // 2
    while i > 0:
        i -= 1
        _sift(fr, a, i, m)
    j = m - 1
    while j > 0:
        key = a[0]
        a[0] = a[j]
        a[j] = key
        _sift(fr, a, 0, j)
        j -= 1


cdef void _rsort(Frame* fr, i64* idx, pair[double, i64]* keyed, Py_ssize_t m) noexcept nogil:
    """Sort ``idx`` counterclockwise from direction (1, 0).

    The floating pseudo-angle is a correctly rounded monotone function of the
    true angle, so a strict key difference is never wrong; runs of equal keys
    are re-sorted with the exact comparator.
    """
    cdef Py_ssize_t i, lo
    cdef i64 t
    cdef double u, v, r
    for i in range(m):
        t = idx[i]
        u = <double>fr.dx[t]
        v = <double>fr.dy[t]
        r = u / (fabs(u) + fabs(v))
        keyed[i].first = 1.0 - r if fr.hf[t] == 0 else 3.0 + r
        keyed[i].second = t
    cpp_sort(keyed, keyed + m)
    for i in range(m):
        idx[i] = keyed[i].second
    lo = 0
    for i in range(1, m + 1):
        if i == m or keyed[i].first != keyed[lo].first:
            if i - lo > 1:
                _exact_sort(fr, idx + lo, i - lo)
            lo = i


cdef int _check_ties(Frame* fr, const i64* order, Py_ssize_t m, const char* is_s,
                     i64* wit) noexcept nogil:
    cdef Py_ssize_t i
    cdef i64 a, b
    for i in range(m - 1):
        a = order[i]
        b = order[i + 1]
        if _same_dir(fr, a, b) and (is_s[a] or is_s[b]):
            wit[0] = a
            wit[1] = b
            return 1
    return 0


cdef int _sweep(Frame* fr, const i64* order, Py_ssize_t m, const i64* w,
                const char* is_s, i64* out, i64* pre, i64* wit) noexcept nogil:
    """Left-of-ray weight sums; ``pre`` needs room for 2*m + 1 entries."""
    cdef Py_ssize_t i, k, s = 0, j = 0
    cdef i64 q, r
    pre[0] = 0
    for k in range(2 * m):
        pre[k + 1] = pre[k] + w[order[k if k < m else k - m]]
    for i in range(m):
        q = order[i]
        if s < i + 1:
            s = i + 1
        while s < i + m and _same_dir(fr, q, order[s if s < m else s - m]):
            s += 1
        if j < s:
            j = s
        while j < i + m and _cross(fr, q, order[j if j < m else j - m]) > 0:
            j += 1
        out[q] = pre[j] - pre[s]
        k = j
        while k < i + m:
            r = order[k if k < m else k - m]
            if _cross(fr, q, r) != 0 or fr.hf[r] == fr.hf[q]:
                break
            if is_s[q] or is_s[r]:
                wit[0] = q
                wit[1] = r
                return 1
            k += 1
    return 0


cdef class _Work:
    """Scratch buffers for one kernel call over ``n`` points."""
    cdef Frame fr
    cdef i64* idx
    cdef pair[double, i64]* keyed
    cdef i64* pre
    cdef i64* w
    cdef i64* lam
    cdef i64* left
    cdef char* is_s
    cdef Py_ssize_t n

    def __cinit__(self, Py_ssize_t n):
        self.n = n
        cdef Py_ssize_t sz = n if n > 0 else 1
        self.fr.dx = <i64*>malloc(sz * sizeof(i64))
        self.fr.dy = <i64*>malloc(sz * sizeof(i64))
        self.fr.hf = <char*>malloc(sz)
        self.idx = <i64*>malloc(sz * sizeof(i64))
        self.keyed = <pair[double, i64]*>malloc(sz * sizeof(pair[double, i64]))
        self.pre = <i64*>malloc((2 * sz + 1) * sizeof(i64))
        self.w = <i64*>malloc(sz * sizeof(i64))
        self.lam = <i64*>malloc(sz * sizeof(i64))
        self.left = <i64*>malloc(sz * sizeof(i64))
        self.is_s = <char*>malloc(sz)
        if (not self.fr.dx or not self.fr.dy or not self.fr.hf or not self.idx
                or not self.keyed or not self.pre or not self.w or not self.lam
                or not self.left or not self.is_s):
            raise MemoryError()

    def __dealloc__(self):
        free(self.fr.dx)
        free(self.fr.dy)
        free(self.fr.hf)
        free(self.idx)
        free(self.keyed)
        free(self.pre)
        free(self.w)
        free(self.lam)
        free(self.left)
        free(self.is_s)


cdef Py_ssize_t _anchor_row(_Work wk, Py_ssize_t a, const i64* xs, const i64* ys,
                            i64* wit) noexcept nogil:
    """Sort around point ``a`` and fill ``wk.lam`` with lambda against flagged points.

    Returns the number of sorted targets (left in ``wk.idx``) or -1 on a
    degenerate triple, whose indices are written to ``wit``.
    """
    cdef Py_ssize_t t, m = 0, n = wk.n
    cdef char sa = wk.is_s[a]
    _set_frame(&wk.fr, xs[a], ys[a], xs, ys, n)
    for t in range(n):
        if t != a and (sa or wk.is_s[t]):
            wk.idx[m] = t
            m += 1
    _rsort(&wk.fr, wk.idx, wk.keyed, m)
    if _check_ties(&wk.fr, wk.idx, m, wk.is_s, wit):
        return -1
    for t in range(n):
        wk.w[t] = 1 if wk.is_s[t] else 0
        wk.lam[t] = 0
    if _sweep(&wk.fr, wk.idx, m, wk.w, wk.is_s, wk.lam, wk.pre, wit):
        return -1
    return m


cdef _raise(i64 a, i64* wit):
    raise KernelDegeneracy(a, wit[0], wit[1])


def radial_order(i64 ax, i64 ay, const i64[::1] tx, const i64[::1] ty, is_s):
    cdef Py_ssize_t t, m = tx.shape[0]
    cdef _Work wk = _Work(m)
    cdef i64 wit[2]
    cdef const char[::1] flags = np.ascontiguousarray(is_s, dtype=np.int8)
    if m == 0:
        return np.empty(0, dtype=np.int64)
    for t in range(m):
        wk.is_s[t] = flags[t]
        wk.idx[t] = t
        wk.w[t] = 0
    _set_frame(&wk.fr, ax, ay, &tx[0], &ty[0], m)
    with nogil:
        _rsort(&wk.fr, wk.idx, wk.keyed, m)
    if _check_ties(&wk.fr, wk.idx, m, wk.is_s, wit):
        _raise(-1, wit)
    if _sweep(&wk.fr, wk.idx, m, wk.w, wk.is_s, wk.left, wk.pre, wit):
        _raise(-1, wit)
    out = np.empty(m, dtype=np.int64)
    cdef i64[::1] ov = out
    for t in range(m):
        ov[t] = wk.idx[t]
    return out


def left_sums(i64 ax, i64 ay, const i64[::1] tx, const i64[::1] ty,
              const i64[::1] order, const i64[::1] w, is_s):
    cdef Py_ssize_t t, m = tx.shape[0]
    cdef _Work wk = _Work(m)
    cdef i64 wit[2]
    cdef const char[::1] flags = np.ascontiguousarray(is_s, dtype=np.int8)
    out = np.zeros(m, dtype=np.int64)
    cdef i64[::1] ov = out
    if m == 0:
        return out
    for t in range(m):
        wk.is_s[t] = flags[t]
    _set_frame(&wk.fr, ax, ay, &tx[0], &ty[0], m)
    if _sweep(&wk.fr, &order[0], m, &w[0], wk.is_s, &ov[0], wk.pre, wit):
        _raise(-1, wit)
    return out


def check_general_position(const i64[::1] xs, const i64[::1] ys):
    cdef Py_ssize_t a, t, n = xs.shape[0]
    cdef _Work wk = _Work(n)
    cdef i64 wit[2]
    cdef Py_ssize_t m
    if n == 0:
        return
    for t in range(n):
        wk.is_s[t] = 1
    for a in range(n):
        with nogil:
            m = _anchor_row(wk, a, &xs[0], &ys[0], wit)
        if m < 0:
            _raise(a, wit)


def lambda_matrix(const i64[::1] xs, const i64[::1] ys):
    cdef Py_ssize_t a, t, n = xs.shape[0]
    cdef _Work wk = _Work(n)
    cdef i64 wit[2]
    cdef Py_ssize_t m
    lam = np.zeros((n, n), dtype=np.int64)
    cdef i64[:, ::1] lv = lam
    if n == 0:
        return lam
    for t in range(n):
        wk.is_s[t] = 1
    for a in range(n):
        with nogil:
            m = _anchor_row(wk, a, &xs[0], &ys[0], wit)
        if m < 0:
            _raise(a, wit)
        for t in range(n):
            lv[a, t] = wk.lam[t]
    return lam


def f_total(const i64[::1] xs, const i64[::1] ys):
    cdef Py_ssize_t a, t, n = xs.shape[0]
    cdef _Work wk = _Work(n)
    cdef i64 wit[2]
    cdef Py_ssize_t m
    cdef i64 f = 0, v
    if n == 0:
        return 0
    for t in range(n):
        wk.is_s[t] = 1
    for a in range(n):
        with nogil:
            m = _anchor_row(wk, a, &xs[0], &ys[0], wit)
        if m < 0:
            _raise(a, wit)
        for t in range(n):
            v = wk.lam[t]
            f += v * (v - 1) // 2
    return f


def remove_terms(const i64[::1] xs, const i64[::1] ys):
    cdef Py_ssize_t a, t, p, n = xs.shape[0]
    cdef _Work wk = _Work(n)
    cdef i64 wit[2]
    cdef Py_ssize_t m
    cdef i64 f = 0, v, c, total
    rows = np.zeros(n, dtype=np.int64)
    cols = np.zeros(n, dtype=np.int64)
    nabla = np.zeros(n, dtype=np.int64)
    cdef i64[::1] rv = rows, cv = cols, nv = nabla
    if n == 0:
        return 0, rows, cols, nabla
    for t in range(n):
        wk.is_s[t] = 1
    for a in range(n):
        with nogil:
            m = _anchor_row(wk, a, &xs[0], &ys[0], wit)
        if m < 0:
            _raise(a, wit)
        with nogil:
            total = 0
            for t in range(m):
                p = wk.idx[t]
                v = wk.lam[p]
                c = v * (v - 1) // 2
                rv[a] += c
                cv[p] += c
                wk.w[p] = 1 - v
                total += 1 - v
            f += rv[a]
            # r left of p->q  <=>  r strictly right of q->p
            _sweep(&wk.fr, wk.idx, m, wk.w, wk.is_s, wk.left, wk.pre, wit)
            for t in range(m):
                p = wk.idx[t]
                nv[p] += total - wk.w[p] - wk.left[p]
    return f, rows, cols, nabla


def add_terms(const i64[::1] sx, const i64[::1] sy, const i64[::1] cx, const i64[::1] cy):
    cdef Py_ssize_t n = sx.shape[0], k = cx.shape[0]
    cdef Py_ssize_t a, t, p, m, N = n + k
    cdef _Work wk = _Work(N)
    cdef i64 wit[2]
    cdef i64 f = 0, v, c, total
    xs_arr = np.concatenate([np.asarray(sx), np.asarray(cx)]).astype(np.int64)
    ys_arr = np.concatenate([np.asarray(sy), np.asarray(cy)]).astype(np.int64)
    cdef const i64[::1] xs = xs_arr
    cdef const i64[::1] ys = ys_arr
    rows = np.zeros(k, dtype=np.int64)
    cols = np.zeros(k, dtype=np.int64)
    nabla = np.zeros(k, dtype=np.int64)
    cdef i64[::1] rv = rows, cv = cols, nv = nabla
    if N == 0:
        return 0, rows, cols, nabla
    for t in range(N):
        wk.is_s[t] = t < n
    for a in range(n):
        with nogil:
            m = _anchor_row(wk, a, &xs[0], &ys[0], wit)
        if m < 0:
            _raise(a, wit)
        with nogil:
            total = 0
            for t in range(m):
                p = wk.idx[t]
                v = wk.lam[p]
                c = v * (v - 1) // 2
                if p < n:
                    f += c
                    wk.w[p] = v
                    total += v
                else:
                    cv[p - n] += c
                    wk.w[p] = 0
            _sweep(&wk.fr, wk.idx, m, wk.w, wk.is_s, wk.left, wk.pre, wit)
            for t in range(m):
                p = wk.idx[t]
                if p >= n:
                    nv[p - n] += total - wk.left[p]
    for a in range(n, N):
        with nogil:
            m = _anchor_row(wk, a, &xs[0], &ys[0], wit)
        if m < 0:
            _raise(a, wit)
        c = 0
        for t in range(n):
            v = wk.lam[t]
            c += v * (v - 1) // 2
        rv[a - n] = c
    return f, rows, cols, nabla
