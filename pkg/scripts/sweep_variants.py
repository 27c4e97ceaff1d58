"""Composition sweep: the operator formulas are fixed; the glue choices
(relocation acceptance, tie handling, degenerate-candidate evaluation,
whether the fecund snail probes its own home) are free.  Measure each
combination on the criteria that bind."""

import itertools
import math
import sys
import time

import numpy as np

sys.path.insert(0, "src")
from snailopt.benchmarks import make_benchmark
from snailopt.objective import EvalCounter, clamp, evaluate
from snailopt.shms import (LARGE_LD, Anchor, ShmsConfig, fecundity_index,
                           love_dart_raw, normalize_ld, roulette_select,
                           selection_probabilities)


def init_colony(problem, cfg, rng):
    dim = problem.dim
    c = cfg.neighborhood_fraction * problem.width
    counter = EvalCounter()
    snails = []
    anchors = []
    from snailopt.shms import SnailState
    for h in range(cfg.homes):
        centre = problem.lower + rng.random(dim) * problem.width
        best = math.inf
        for _ in range(cfg.snails_per_home):
            x = clamp(centre + c * (2.0 * rng.random(dim) - 1.0), problem)
            f = evaluate(problem, x, counter)
            snails.append(SnailState(x=x, f=f, f_hist=(f, f, f), home_id=h))
            best = min(best, f)
        anchors.append(Anchor(x=centre, f=best))
    b = min(snails, key=lambda s: s.f)
    from snailopt.shms import ColonyState
    return ColonyState(snails=snails, home_anchor=anchors,
                       global_best=Anchor(x=b.x.copy(), f=b.f),
                       c=c, iteration=0, counter=counter)


def step(colony, problem, cfg, rng, *, reloc_uncond, tie_ld, skip_jump_on, fec_probe):
    budget_hit = False
    for h in range(cfg.homes):
        members = colony.members(h)
        if not members:
            continue
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
            fn = iter(normalize_ld(finite)) if finite else None
            for s, raw in zip(others, raws):
                s.ld_raw = float(raw)
                s.ld_norm = tie_ld if abs(raw) >= LARGE_LD else float(next(fn))
        for s in others:
            if colony.counter.count >= cfg.max_evals:
                budget_hit = True
                break
            prev_home = s.home_id
            switch = rng.random() < cfg.home_switch_prob and cfg.homes > 1
            if switch:
                k = int(rng.integers(cfg.homes - 1))
                if k >= s.home_id:
                    k += 1
                s.home_id = k
                centre = colony.home_anchor[k].x
                half = colony.c
            else:
                centre = fecund.x
                half = s.ld_norm * np.abs(s.x - fecund.x)
            y = clamp(centre + half * (2.0 * rng.random(problem.dim) - 1.0), problem)
            if np.array_equal(y, s.x):
                continue
            if skip_jump_on and not switch and np.array_equal(y, fecund.x):
                continue
            fy = evaluate(problem, y, colony.counter)
            if fy <= s.f or (switch and reloc_uncond):
                s.x = y
                s.f = fy
        if budget_hit:
            break
        if fec_probe and not budget_hit:
            if colony.counter.count >= cfg.max_evals:
                budget_hit = True
                break
            y = clamp(colony.home_anchor[h].x + colony.c * (2.0 * rng.random(problem.dim) - 1.0), problem)
            if not np.array_equal(y, fecund.x):
                fy = evaluate(problem, y, colony.counter)
                if fy <= fecund.f:
                    fecund.x = y
                    fecund.f = fy
    for s in colony.snails:
        s.f_hist = (s.f, s.f_hist[0], s.f_hist[1])
    for h in range(cfg.homes):
        members = colony.members(h)
        if members:
            best = min(members, key=lambda s: s.f)
            colony.home_anchor[h] = Anchor(x=best.x.copy(), f=best.f)
    best = min(colony.snails, key=lambda s: s.f)
    if best.f <= colony.global_best.f:
        colony.global_best = Anchor(x=best.x.copy(), f=best.f)
    colony.iteration += 1


def run(problem, cfg, **kw):
    rng = np.random.default_rng(cfg.seed)
    colony = init_colony(problem, cfg, rng)
    trace = [colony.global_best.f]
    w = cfg.stagnation_window
    while colony.counter.count < cfg.max_evals:
        if len(trace) > w and (trace[-1 - w] - trace[-1]) < cfg.stagnation_tol:
            break
        step(colony, problem, cfg, rng, **kw)
        trace.append(colony.global_best.f)
    return trace


def bench(kw, fid, dim, evals, seeds):
    prob = make_benchmark(fid, dim)
    finals = []
    inits = []
    for seed in seeds:
        tr = run(prob, ShmsConfig(max_evals=evals, seed=seed), **kw)
        finals.append(tr[-1])
        inits.append(tr[0])
    return float(np.median(finals)), float(np.median(inits))


if __name__ == "__main__":
    grid = list(itertools.product([True, False], [1.0, 0.5], [True, False], [False, True]))
    print("reloc_uncond tie_ld skip_jump_on fec_probe | sphere30_median")
    results = []
    for ru, tl, sj, fp in grid:
        kw = dict(reloc_uncond=ru, tie_ld=tl, skip_jump_on=sj, fec_probe=fp)
        t0 = time.time()
        med, _ = bench(kw, "F1", 30, 30000, range(5))
        results.append((med, kw))
        print(f"{ru!s:5} {tl:3} {sj!s:5} {fp!s:5} | {med:.3e}  ({time.time()-t0:.0f}s)")
    results.sort(key=lambda t: t[0])
    print("\ntop 3:")
    for med, kw in results[:3]:
        print(f"  {med:.3e}  {kw}")
