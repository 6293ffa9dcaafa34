"""Hill-climbing over single-point moves, scored with the batch evaluators.

Each round picks a point p, samples lattice points near p that keep the set in
general position, scores all of them with one :func:`batch_move` call, and
takes the best one if it does not increase the crossing count.
"""
from __future__ import annotations

import json
import logging
import math
from dataclasses import asdict, dataclass, field

import numpy as np

from . import _backend
from .delta import DeltaResult, batch_add, batch_move, batch_remove
from .errors import Exhausted, InconsistentCounts, KernelDegeneracy
from .geom import COORD_BOUND, Point, PointSet
from .lambdas import crossing_number

log = logging.getLogger(__name__)

ASYMPTOTIC_LOWER_CONSTANT = 0.379972

# Exact minimum crossing numbers of small point sets.
KNOWN_MINIMA = {0: 0, 1: 0, 2: 0, 3: 0, 4: 0, 5: 1, 6: 3, 7: 9, 8: 19, 9: 36,
                10: 62, 11: 102, 12: 153}

# Above the table we use cr(m)/C(m,4) >= cr(k)/C(k,4) for m >= k.
_FLOOR_N = max(KNOWN_MINIMA)

# Enumerate the whole neighbourhood up to this many lattice points.
_ENUMERATE_LIMIT = 4096


@dataclass(frozen=True)
class OptimizerConfig:
    seed: int = 0
    rounds: int = 1000
    radius: int = 8
    candidates_per_round: int = 32
    coordinate_bound: int = COORD_BOUND
    accept_equal: bool = True
    pick_rule: str = "random"
    stagnation: int | None = None

    def __post_init__(self):
        if self.radius < 1:
            raise ValueError("radius must be >= 1")
        if self.candidates_per_round < 1:
            raise ValueError("candidates_per_round must be >= 1")
        if not 0 < self.coordinate_bound <= COORD_BOUND:
            raise ValueError(f"coordinate_bound must be in (0, {COORD_BOUND}]")
        if self.pick_rule not in ("random", "round-robin"):
            raise ValueError(f"unknown pick rule {self.pick_rule!r}")
        if self.rounds < 0:
            raise ValueError("rounds must be >= 0")


@dataclass
class RoundRecord:
    round: int
    p: Point
    candidates: int
    best_q: Point | None
    cr_before: int
    cr_after: int
    accepted: bool
    skipped: str | None = None

    def to_json(self) -> str:
        d = asdict(self)
        d["p"] = list(self.p)
        d["best_q"] = None if self.best_q is None else list(self.best_q)
        return json.dumps(d, separators=(",", ":"))


@dataclass
class OptimizerTrace:
    initial_cr: int
    best_set: PointSet
    best_cr: int
    records: list[RoundRecord] = field(default_factory=list)
    interrupted: bool = False

    def lines(self) -> str:
        return "".join(r.to_json() + "\n" for r in self.records)


def _ball_offsets(radius):
    r = np.arange(-radius, radius + 1)
    dx, dy = np.meshgrid(r, r, indexing="ij")
    off = np.column_stack((dx.ravel(), dy.ravel()))
    return off[(off[:, 0] != 0) | (off[:, 1] != 0)]


def _admissible(q, rest, bound):
    if abs(q.x) > bound or abs(q.y) > bound or q in rest:
        return False
    try:
        _backend.kernels.radial_order(q.x, q.y, rest.xs, rest.ys,
                                      np.ones(len(rest), dtype=np.int8))
    except KernelDegeneracy:
        return False
    return True


def candidate_gen(p, points, cfg: OptimizerConfig, rng: np.random.Generator) -> PointSet:
    """Up to ``cfg.candidates_per_round`` admissible lattice points in the L-inf ball around p.

    A candidate is admissible if it is inside the coordinate bound, not already
    in S - {p}, and collinear with no two points of S - {p}. The centre p is
    not offered.
    """
    S = points if isinstance(points, PointSet) else PointSet(points)
    p = Point(*p)
    rest = S.without(p)
    want = cfg.candidates_per_round
    side = 2 * cfg.radius + 1
    out = []
    if side * side - 1 <= _ENUMERATE_LIMIT:
        for dx, dy in rng.permutation(_ball_offsets(cfg.radius)):
            q = Point(p.x + int(dx), p.y + int(dy))
            if _admissible(q, rest, cfg.coordinate_bound):
                out.append(q)
                if len(out) == want:
                    break
    else:
        seen = set()
        for _ in range(20 * want):
            dx, dy = (int(v) for v in rng.integers(-cfg.radius, cfg.radius + 1, size=2))
            if (dx, dy) == (0, 0) or (dx, dy) in seen:
                continue
            seen.add((dx, dy))
            q = Point(p.x + dx, p.y + dy)
            if _admissible(q, rest, cfg.coordinate_bound):
                out.append(q)
                if len(out) == want:
                    break
    if not out:
        raise Exhausted(f"no admissible candidate within radius {cfg.radius} of {p}")
    return PointSet(out)


def optimize_move(points, cfg: OptimizerConfig, on_round=None) -> OptimizerTrace:
    """Run ``cfg.rounds`` rounds of move-one-point hill climbing.

    ``on_round`` is called with each :class:`RoundRecord`. Ctrl-C stops the
    loop and returns the trace so far.
    """
    S = points if isinstance(points, PointSet) else PointSet(points)
    if len(S) < 4:
        raise ValueError("optimisation needs at least 4 points")
    rng = np.random.default_rng(cfg.seed)
    cur = crossing_number(S)
    trace = OptimizerTrace(initial_cr=cur, best_set=S, best_cr=cur)
    idle = 0
    try:
        for t in range(cfg.rounds):
            if cfg.pick_rule == "random":
                p = S[int(rng.integers(len(S)))]
            else:
                p = S[t % len(S)]
            try:
                C = candidate_gen(p, S, cfg, rng)
            except Exhausted as e:
                log.info("round %d skipped: %s", t, e)
                rec = RoundRecord(t, p, 0, None, cur, cur, False, skipped=str(e))
            else:
                q, v = batch_move(S, p, C).best()
                accepted = v < cur or (cfg.accept_equal and v == cur)
                rec = RoundRecord(t, p, len(C), q, cur, v if accepted else cur, accepted)
                idle = 0 if v < cur else idle + 1
                if accepted:
                    S = S.replace(p, q)
                    cur = v
            if rec.skipped:
                idle += 1
            trace.records.append(rec)
            if on_round is not None:
                on_round(rec)
            if cur <= trace.best_cr:
                trace.best_set, trace.best_cr = S, cur
            if cfg.stagnation is not None and idle >= cfg.stagnation:
                break
    except KeyboardInterrupt:
        trace.interrupted = True
    return trace


def lower_floor(m: int) -> int:
    """A proven lower bound on cr of any m-point set in general position."""
    if m in KNOWN_MINIMA:
        return KNOWN_MINIMA[m]
    num = math.comb(m, 4) * KNOWN_MINIMA[_FLOOR_N]
    den = math.comb(_FLOOR_N, 4)
    return -(-num // den)


@dataclass(frozen=True)
class SizeChangeEntry:
    point: Point
    size: int
    cr: int
    floor: int
    asymptotic_bound: float
    flagged: bool


@dataclass
class SizeChangeReport:
    removals: list[SizeChangeEntry]
    additions: list[SizeChangeEntry]

    @property
    def flagged(self) -> list[SizeChangeEntry]:
        return [e for e in self.removals + self.additions if e.flagged]

    def raise_if_flagged(self):
        bad = self.flagged
        if bad:
            e = bad[0]
            raise InconsistentCounts(
                f"cr={e.cr} for a {e.size}-point set is below the proven floor {e.floor}")


def annotate(result: DeltaResult, size: int) -> list[SizeChangeEntry]:
    floor = lower_floor(size)
    bound = ASYMPTOTIC_LOWER_CONSTANT * math.comb(size, 4)
    return [SizeChangeEntry(p, size, v, floor, bound, v < floor) for p, v in result.items()]


def explore_size_change(points, candidates=()) -> SizeChangeReport:
    """cr after every single removal and every candidate insertion, checked against floors."""
    S = points if isinstance(points, PointSet) else PointSet(points)
    C = candidates if isinstance(candidates, PointSet) else PointSet(candidates)
    rem = batch_remove(S)
    add = batch_add(S, C)
    return SizeChangeReport(annotate(rem, len(S) - 1), annotate(add, len(S) + 1))
