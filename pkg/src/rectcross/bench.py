"""Timing harness: full recompute against the batch evaluators, per backend."""
from __future__ import annotations

import time

import numpy as np

from . import _backend
from .delta import batch_add, batch_remove
from .lambdas import crossing_number
from .sampling import random_split

OPS = ("cr", "batch_remove", "batch_add")


def _time(fn, *args):
    t0 = time.perf_counter_ns()
    fn(*args)
    return time.perf_counter_ns() - t0


def run(sizes, trials=3, ops=OPS, seed=0, backend=None):
    """Return rows ``(n, op, trial, nanos)``.

    ``cr`` times one from-scratch count of an (n+1)-point set, the size of a
    single insertion variant; ``batch_add`` scores n candidates at once.
    """
    previous = _backend.use(backend) if backend else None
    rows = []
    try:
        rng = np.random.default_rng(seed)
        for n in sizes:
            for trial in range(trials):
                S, C = random_split(n, n, rng)
                for op in ops:
                    if op == "cr":
                        t = _time(crossing_number, S.plus(C[0]))
                    elif op == "batch_remove":
                        t = _time(batch_remove, S)
                    elif op == "batch_add":
                        t = _time(batch_add, S, C)
                    else:
                        raise ValueError(f"unknown op {op!r}")
                    rows.append((n, op, trial, t))
    finally:
        if previous:
            _backend.use(previous)
    return rows


def medians(rows) -> dict:
    """{(n, op): median nanos}"""
    acc = {}
    for n, op, _, t in rows:
        acc.setdefault((n, op), []).append(t)
    return {k: float(np.median(v)) for k, v in acc.items()}


def loglog_slope(rows, op) -> float:
    med = medians(rows)
    pts = sorted((n, t) for (n, o), t in med.items() if o == op)
    if len(pts) < 2:
        raise ValueError(f"need at least two sizes to fit a slope for {op}")
    n, t = np.array(pts).T
    return float(np.polyfit(np.log(n), np.log(t), 1)[0])


def amortized_ratios(rows) -> dict:
    """{n: (batch_add per candidate) / (full recompute / n)}; n candidates per batch."""
    med = medians(rows)
    out = {}
    for (n, op), t in med.items():
        if op == "batch_add" and (n, "cr") in med:
            out[n] = (t / n) / (med[(n, "cr")] / n)
    return dict(sorted(out.items()))


def to_csv(rows) -> str:
    return "n,op,trial,nanos\n" + "".join(f"{n},{op},{k},{t}\n" for n, op, k, t in rows)
