"""Snail homing and mating search (SHMS): a colony-based metaheuristic.

The population is organised into a small number of *homes*.  Each home
holds a group of snails.  One iteration applies, home by home:

1. every snail computes a *fecundity index* from its last three
   objective values (a normalized recent-improvement ratio, replaced by
   a uniform random draw whenever the ratio is degenerate);
2. a *fecund snail* is chosen by roulette selection with probability
   inversely proportional to objective value (minimization: better
   snails are more attractive mates);
3. every other snail computes a *love dart* value against the fecund
   snail, which is min-max normalized within the home to [0, 1];
4. each snail then follows the strongest mucus trail in the colony —
   the one leading to the best position found so far: per coordinate it
   resamples uniformly inside an interval centred on the best-known
   position whose half-width is the normalized love dart times the
   coordinate distance separating the snail from that position.  With a
   small probability the snail instead emigrates: it joins another
   home, and one randomly chosen coordinate of its candidate is redrawn
   inside the new home's fixed neighbourhood (a coarse probe that keeps
   single coordinates exploring long after the cloud has tightened).

Trail-following moves are accepted elitistically (a snail keeps its new
position only if it does not get worse); emigration moves are always
accepted — the snail changed homes, not necessarily fortunes — which
keeps the population spread out instead of piling onto one point.  The
fecund snail itself stays put for the iteration (it is the trail
source, not a follower).

Homes keep an *anchor* — the best position/value associated with the
home so far — refreshed after every iteration but never allowed to
regress.  Search stops on an evaluation budget or when the global best
has stopped improving.

All randomness flows through a single ``numpy.random.Generator`` seeded
from the config, so runs are bit-reproducible.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass

import numpy as np

from .objective import BoundedProblem, EvalCounter, clamp, evaluate

__all__ = [
    "LARGE_LD",
    "Anchor",
    "ColonyState",
    "RunRecord",
    "ShmsConfig",
    "SnailState",
    "fecundity_index",
    "init_colony",
    "love_dart_raw",
    "normalize_ld",
    "roulette_select",
    "run",
    "selection_probabilities",
    "step",
    "trail_following_update",
]

#: sentinel love-dart value for exact objective ties with the fecund snail
LARGE_LD = 1e30

# denominators at or below this magnitude are treated as degenerate
_EPS_DEN = 1e-30


@dataclass(frozen=True)
class ShmsConfig:
    """Tuning knobs for one SHMS run.

    Parameters
    ----------
    homes : int
        Number of homes H (>= 1).
    snails_per_home : int
        Snails initially placed in each home S (>= 2).
    neighborhood_fraction : float
        Fraction of each box edge used as the home neighbourhood
        half-width ``c`` (fixed at initialization and reused when a
        snail resettles at another home).
    home_switch_prob : float
        Per-snail, per-iteration probability of abandoning the current
        home and resettling near another home's anchor.
    max_evals : int
        Objective evaluation budget (>= homes * snails_per_home).
    stagnation_window : int
        Stop when the global best improves by less than
        ``stagnation_tol`` over this many iterations.
    stagnation_tol : float
        Minimum improvement considered progress.
    seed : int
        Seed for the run's random stream.
    """

    homes: int = 3
    snails_per_home: int = 10
    neighborhood_fraction: float = 0.1
    home_switch_prob: float = 0.1
    max_evals: int = 30_000
    stagnation_window: int = 200
    stagnation_tol: float = 1e-12
    seed: int = 0

    def __post_init__(self):
        if self.homes < 1:
            raise ValueError("homes must be >= 1")
        if self.snails_per_home < 2:
            raise ValueError("snails_per_home must be >= 2")
        if not (0.0 < self.neighborhood_fraction):
            raise ValueError("neighborhood_fraction must be positive")
        if not (0.0 <= self.home_switch_prob <= 1.0):
            raise ValueError("home_switch_prob must be in [0, 1]")
        if self.max_evals < self.homes * self.snails_per_home:
            raise ValueError("max_evals must cover at least the initial population")
        if self.stagnation_window < 1:
            raise ValueError("stagnation_window must be >= 1")
        if self.stagnation_tol < 0.0:
            raise ValueError("stagnation_tol must be >= 0")


@dataclass
class SnailState:
    """One snail: position, value, short history and mating bookkeeping.

    ``f_hist`` holds the objective at the current position followed by
    the values at the end of the two previous iterations (backfilled
    with the initial value right after initialization).
    """

    x: np.ndarray
    f: float
    f_hist: tuple[float, float, float]
    home_id: int
    I: float = 0.0
    ld_raw: float = 0.0
    ld_norm: float = 0.0


@dataclass
class Anchor:
    """A remembered best position/value (per home, or global)."""

    x: np.ndarray
    f: float


@dataclass
class ColonyState:
    """Full mutable state of a search in progress."""

    snails: list[SnailState]
    home_anchor: list[Anchor]
    global_best: Anchor
    c: np.ndarray  # per-coordinate neighbourhood half-width, fixed at init
    iteration: int
    counter: EvalCounter

    def members(self, home_id: int) -> list[SnailState]:
        """Snails currently assigned to ``home_id``, in stable order."""
        return [s for s in self.snails if s.home_id == home_id]


@dataclass
class RunRecord:
    """Immutable summary of one completed run.

    ``best_trace[0]`` is the best value right after initialization (the
    colony's first assessment) and each subsequent entry is the best
    after one more iteration, so the final objective always equals the
    last trace entry even when the budget allows no iterations at all.
    """

    seed: int
    best_trace: list[float]
    final_x: np.ndarray
    final_f: float
    evals: int
    wall_time: float


# ---------------------------------------------------------------------------
# mating operators
# ---------------------------------------------------------------------------

def fecundity_index(f0: float, f1: float, f2: float, rng: np.random.Generator) -> float:
    """Recent-improvement ratio ``|f0-f1| / |f0-f2|`` with random fallback.

    ``f0`` is the current objective value, ``f1`` and ``f2`` the values
    one and two iterations ago.  Whenever the ratio is degenerate (zero
    numerator, vanishing denominator, or a non-finite quotient) a
    uniform [0, 1) draw is returned instead, which keeps mating activity
    alive on plateaus and during the first iterations.
    """
    den = abs(f0 - f2)
    if den > _EPS_DEN:
        q = abs(f0 - f1) / den
        if q != 0.0 and math.isfinite(q):
            return q
    return float(rng.random())


def selection_probabilities(values) -> np.ndarray:
    """Mate-selection probabilities, inversely proportional to objective.

    The weights are ``1 / g_s`` where ``g_s`` is the objective shifted
    so the smallest value is a tiny positive epsilon away from zero:
    ``g = f - min(min(f), 0) + 1e-12 * (1 + |min(f)|)``.  For strictly
    positive inputs this reproduces the plain rule ``P_s ∝ 1/f_s`` up
    to the epsilon; for zero or negative inputs (where inverse
    proportionality is undefined) the shift keeps every weight finite
    and positive.  Either way the ordering is preserved: lower
    objective, strictly higher probability.
    """
    f = np.asarray(values, dtype=float)
    if f.ndim != 1 or f.size == 0:
        raise ValueError("values must be a non-empty 1-D array")
    m = float(f.min())
    g = f - min(m, 0.0) + 1e-12 * (1.0 + abs(m))
    w = 1.0 / g
    return w / w.sum()


def roulette_select(probabilities, rng: np.random.Generator) -> int:
    """Sample one index via cumulative-sum inversion of a single uniform."""
    p = np.asarray(probabilities, dtype=float)
    u = rng.random()
    idx = int(np.searchsorted(np.cumsum(p), u, side="right"))
    return min(idx, p.size - 1)


def love_dart_raw(I: float, f_s: float, f_fecund: float) -> float:
    """Raw love-dart value ``1 / (I * (f_s - f_fecund))``.

    Exact ties with the fecund snail (and any quotient that overflows)
    map to the sentinel ``LARGE_LD`` so the min-max normalization stays
    well defined.
    """
    gap = f_s - f_fecund
    if abs(gap) <= _EPS_DEN:
        return LARGE_LD
    v = 1.0 / (I * gap)
    if not math.isfinite(v):
        return math.copysign(LARGE_LD, gap)
    return v


def normalize_ld(raw) -> np.ndarray:
    """Min-max normalize raw love darts to [0, 1] within one home.

    A degenerate range (all values equal) maps everything to 0.5.
    """
    r = np.asarray(raw, dtype=float)
    lo = float(r.min())
    hi = float(r.max())
    if hi - lo <= _EPS_DEN:
        return np.full(r.shape, 0.5)
    return (r - lo) / (hi - lo)


# ---------------------------------------------------------------------------
# colony lifecycle
# ---------------------------------------------------------------------------

def init_colony(problem: BoundedProblem, cfg: ShmsConfig,
                rng: np.random.Generator) -> ColonyState:
    """Draw homes and snails, evaluate everyone once.

    Home anchor positions are drawn uniformly in the box; each home's
    snails are drawn uniformly in the cube of half-width ``c`` around
    the anchor (clamped to the box).  Exactly ``homes *
    snails_per_home`` evaluations are spent.  Right after
    initialization an anchor's position is its drawn centre while its
    value is the best objective among the home's snails; from the first
    iteration on, anchors track the best position a home has held.
    """
    dim = problem.dim
    c = cfg.neighborhood_fraction * problem.width
    counter = EvalCounter()
    snails: list[SnailState] = []
    anchors: list[Anchor] = []
    for h in range(cfg.homes):
        centre = problem.lower + rng.random(dim) * problem.width
        home_best = math.inf
        for _ in range(cfg.snails_per_home):
            x = clamp(centre + c * (2.0 * rng.random(dim) - 1.0), problem)
            f = evaluate(problem, x, counter)
            snails.append(SnailState(x=x, f=f, f_hist=(f, f, f), home_id=h))
            home_best = min(home_best, f)
        anchors.append(Anchor(x=centre, f=home_best))
    best = min(snails, key=lambda s: s.f)
    return ColonyState(
        snails=snails,
        home_anchor=anchors,
        global_best=Anchor(x=best.x.copy(), f=best.f),
        c=c,
        iteration=0,
        counter=counter,
    )


def trail_following_update(snail: SnailState, fecund: SnailState,
                           colony: ColonyState, problem: BoundedProblem,
                           cfg: ShmsConfig, rng: np.random.Generator) -> np.ndarray:
    """Draw one candidate position for ``snail`` (clamped to the box).

    The snail follows the strongest trail in the colony — the one laid
    down at the best position found so far.  Per coordinate it samples
    uniformly in the interval centred on that position with half-width
    ``ld_norm * |x_s - x_best|``, so ``ld_norm = 0`` (or a snail
    already sitting on the best position) reproduces the best position
    exactly, while ``ld_norm = 1`` explores the whole box spanned
    between the snail and the best.  The home's fecund snail set the
    trail-following intensity through ``ld_norm``; by construction it
    rests on (or near) the best position its home knows about.

    With probability ``home_switch_prob`` the snail instead emigrates:
    it is reassigned to a uniformly chosen *other* home and one
    randomly chosen coordinate of the candidate is redrawn uniformly in
    the new home's fixed neighbourhood ``anchor[d] ± c[d]``.  The
    membership change persists even if the position is later discarded
    — the snail changed homes, not necessarily fortunes.  Callers can
    detect emigration by comparing ``snail.home_id`` before and after.
    """
    switch = rng.random() < cfg.home_switch_prob and cfg.homes > 1
    best = colony.global_best.x
    half_width = snail.ld_norm * np.abs(snail.x - best)
    y = best + half_width * (2.0 * rng.random(problem.dim) - 1.0)
    if switch:
        k = int(rng.integers(cfg.homes - 1))
        if k >= snail.home_id:
            k += 1
        snail.home_id = k
        anchor = colony.home_anchor[k].x
        d = int(rng.integers(problem.dim))
        y[d] = anchor[d] + colony.c[d] * (2.0 * rng.random() - 1.0)
    return clamp(y, problem)


def step(colony: ColonyState, problem: BoundedProblem, cfg: ShmsConfig,
         rng: np.random.Generator) -> None:
    """Advance the colony by one iteration (budget-safe, in place).

    Homes are processed in id order and their members in stable snail
    order, so a run is fully determined by the seed.  Per home: compute
    fecundity indices, roulette-select the fecund snail, compute and
    normalize love darts (the fecund snail's tie sentinel is excluded
    from the min-max range and maps to 1.0, as does any other exact
    tie), then move every snail except the fecund one.  Emigration
    moves are always accepted; trail-following moves only if they do
    not get worse.  Candidates identical to the snail's position — or
    to the already-evaluated best position, for a non-emigrating snail
    — are discarded without spending an evaluation.

    The evaluation budget is checked before every single evaluation:
    hitting it stops the iteration mid-flight, leaving already-accepted
    moves in place.
    """
    budget_hit = False
    for h in range(cfg.homes):
        members = colony.members(h)
        if not members:
            continue  # emptied by emigration; anchor keeps last memory
        for s in members:
            s.I = fecundity_index(s.f_hist[0], s.f_hist[1], s.f_hist[2], rng)
        probs = selection_probabilities([s.f for s in members])
        fecund = members[roulette_select(probs, rng)]
        fecund.ld_raw = LARGE_LD
        fecund.ld_norm = 1.0
        others = [s for s in members if s is not fecund]
        if others:
            raws = [love_dart_raw(s.I, s.f, fecund.f) for s in others]
            finite = [r for r in raws if abs(r) < LARGE_LD]
            norms = iter(normalize_ld(finite)) if finite else None
            for s, raw in zip(others, raws):
                s.ld_raw = float(raw)
                s.ld_norm = 1.0 if abs(raw) >= LARGE_LD else float(next(norms))
        for s in others:
            if colony.counter.count >= cfg.max_evals:
                budget_hit = True
                break
            home_before = s.home_id
            y = trail_following_update(s, fecund, colony, problem, cfg, rng)
            switched = s.home_id != home_before
            if np.array_equal(y, s.x):
                continue
            if not switched and np.array_equal(y, colony.global_best.x):
                continue
            fy = evaluate(problem, y, colony.counter)
            if switched or fy <= s.f:
                s.x = y
                s.f = fy
                if fy <= colony.global_best.f:
                    colony.global_best = Anchor(x=y.copy(), f=fy)
        if budget_hit:
            break

    # bookkeeping: histories shift, anchors refresh without regressing
    for s in colony.snails:
        s.f_hist = (s.f, s.f_hist[0], s.f_hist[1])
    for h in range(cfg.homes):
        members = colony.members(h)
        if members:
            best = min(members, key=lambda s: s.f)
            if best.f <= colony.home_anchor[h].f:
                colony.home_anchor[h] = Anchor(x=best.x.copy(), f=best.f)
    colony.iteration += 1


def run(problem: BoundedProblem, cfg: ShmsConfig, observer=None) -> RunRecord:
    """Run SHMS on ``problem`` until the budget or stagnation stops it.

    Parameters
    ----------
    problem : BoundedProblem
    cfg : ShmsConfig
    observer : callable, optional
        Called as ``observer(colony)`` after initialization and after
        every iteration.  Must not consume the run's random stream or
        mutate the colony; intended for trace/scatter exporters.

    Returns
    -------
    RunRecord
    """
    t0 = time.perf_counter()
    rng = np.random.default_rng(cfg.seed)
    colony = init_colony(problem, cfg, rng)
    trace = [colony.global_best.f]
    if observer is not None:
        observer(colony)
    w = cfg.stagnation_window
    while colony.counter.count < cfg.max_evals:
        if len(trace) > w and (trace[-1 - w] - trace[-1]) < cfg.stagnation_tol:
            break
        step(colony, problem, cfg, rng)
        trace.append(colony.global_best.f)
        if observer is not None:
            observer(colony)
    return RunRecord(
        seed=cfg.seed,
        best_trace=trace,
        final_x=colony.global_best.x.copy(),
        final_f=colony.global_best.f,
        evals=colony.counter.count,
        wall_time=time.perf_counter() - t0,
    )


if __name__ == "__main__":
    from .benchmarks import make_benchmark

    rng = np.random.default_rng(0)
    assert fecundity_index(5.0, 7.0, 9.0, rng) == 0.5
    assert abs(love_dart_raw(0.5, 3.0, 1.0) - 1.0) < 1e-15
    assert love_dart_raw(2.0, 1.0, 3.0) == -0.25
    assert love_dart_raw(1.0, 2.0, 2.0) == LARGE_LD
    p = selection_probabilities([1.0, 3.0])
    assert abs(p[0] - 0.75) < 1e-12 and abs(p[1] - 0.25) < 1e-12
    assert abs(p.sum() - 1.0) < 1e-12
    q = selection_probabilities([-2.0, 0.0, 2.0])
    assert q[0] > q[1] > q[2] > 0.0
    assert np.allclose(normalize_ld([0.0, 5.0, 10.0]), [0.0, 0.5, 1.0])
    assert np.allclose(normalize_ld([7.0, 7.0, 7.0]), 0.5)
    assert np.allclose(normalize_ld([-0.25, 1.0]), [0.0, 1.0])
    hits = sum(roulette_select([0.75, 0.25], rng) == 0 for _ in range(100_000))
    assert abs(hits / 100_000 - 0.75) < 0.01, hits

    sphere2 = make_benchmark("F1", 2)
    rec = run(sphere2, ShmsConfig(max_evals=5000, seed=1))
    assert rec.final_f <= 1e-6, rec.final_f
    assert rec.final_f == rec.best_trace[-1]
    assert all(a >= b for a, b in zip(rec.best_trace, rec.best_trace[1:]))
    rec2 = run(sphere2, ShmsConfig(max_evals=5000, seed=1))
    assert rec2.final_f == rec.final_f and rec2.evals == rec.evals
    assert np.array_equal(rec2.final_x, rec.final_x)
    print(f"sphere-2d: f={rec.final_f:.3e} after {rec.evals} evals "
          f"({len(rec.best_trace) - 1} iterations)")
    print("shms self-checks passed")
