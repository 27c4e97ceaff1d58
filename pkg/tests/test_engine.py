"""Engine tests: mating operators, the trail-following move, and full runs."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy import stats as sps

from snailopt.objective import BoundedProblem, EvalCounter
from snailopt.shms import (LARGE_LD, Anchor, ColonyState, ShmsConfig,
                           SnailState, fecundity_index, init_colony,
                           love_dart_raw, normalize_ld, roulette_select, run,
                           selection_probabilities, trail_following_update)


def sphere(dim=3, lo=-5.0, hi=5.0, shift=0.0):
    return BoundedProblem(
        name=f"sphere-d{dim}",
        dim=dim,
        lower=np.full(dim, lo),
        upper=np.full(dim, hi),
        func=lambda x: float(np.sum((x - shift) ** 2)),
    )


def make_colony(problem, positions, home_ids, c_value=0.5):
    """Hand-build a colony from explicit positions (no RNG consumed)."""
    snails = []
    for x, h in zip(positions, home_ids):
        x = np.asarray(x, dtype=float)
        f = problem.func(x)
        snails.append(SnailState(x=x.copy(), f=f, f_hist=(f, f, f), home_id=h))
    anchors = []
    for h in range(max(home_ids) + 1):
        members = [s for s in snails if s.home_id == h]
        best = min(members, key=lambda s: s.f)
        anchors.append(Anchor(x=best.x.copy(), f=best.f))
    gbest = min(snails, key=lambda s: s.f)
    return ColonyState(
        snails=snails,
        home_anchor=anchors,
        global_best=Anchor(x=gbest.x.copy(), f=gbest.f),
        c=np.full(problem.dim, float(c_value)),
        iteration=0,
        counter=EvalCounter(),
    )


# ---------------------------------------------------------------------------
# fecundity index
# ---------------------------------------------------------------------------

def test_fecundity_index_is_recent_improvement_ratio():
    rng = np.random.default_rng(0)
    state = rng.bit_generator.state
    assert fecundity_index(5.0, 7.0, 9.0, rng) == 0.5
    assert fecundity_index(1.0, 4.0, 2.0, rng) == 3.0
    # the regular path must not consume the random stream
    assert rng.bit_generator.state == state


def test_fecundity_index_degenerate_falls_back_to_uniform():
    for args in [(3.0, 3.0, 3.0),   # flat history: zero/zero
                 (3.0, 3.0, 9.0),   # zero numerator
                 (3.0, 7.0, 3.0)]:  # vanishing denominator
        value = fecundity_index(*args, np.random.default_rng(42))
        assert value == np.random.default_rng(42).random()
        assert 0.0 <= value < 1.0


# ---------------------------------------------------------------------------
# love darts
# ---------------------------------------------------------------------------

def test_love_dart_raw_examples():
    assert love_dart_raw(0.5, 3.0, 1.0) == pytest.approx(1.0, abs=1e-15)
    assert love_dart_raw(2.0, 1.0, 3.0) == -0.25
    assert love_dart_raw(4.0, 2.5, 2.0) == 0.5


def test_love_dart_raw_tie_maps_to_sentinel():
    assert love_dart_raw(0.7, 2.0, 2.0) == LARGE_LD
    assert love_dart_raw(0.7, 2.0, 2.0 + 1e-31) == LARGE_LD


def test_love_dart_raw_overflow_keeps_gap_sign():
    # quotient overflows a float: the sentinel carries the gap's sign
    assert love_dart_raw(1e-320, 3.0, 2.0) == LARGE_LD
    assert love_dart_raw(1e-320, 2.0, 3.0) == -LARGE_LD


def test_normalize_ld_examples():
    assert np.allclose(normalize_ld([0.0, 5.0, 10.0]), [0.0, 0.5, 1.0])
    assert np.allclose(normalize_ld([-0.25, 1.0]), [0.0, 1.0])
    assert np.allclose(normalize_ld([7.0, 7.0, 7.0]), 0.5)
    assert np.allclose(normalize_ld([4.0]), 0.5)


@given(st.lists(st.floats(min_value=-1e12, max_value=1e12), min_size=1, max_size=20))
def test_normalize_ld_stays_in_unit_interval(raw):
    norm = normalize_ld(raw)
    assert norm.shape == (len(raw),)
    assert np.all(norm >= 0.0) and np.all(norm <= 1.0)
    if max(raw) - min(raw) > 1e-30:
        assert norm[int(np.argmin(raw))] == 0.0
        assert norm[int(np.argmax(raw))] == 1.0


# ---------------------------------------------------------------------------
# mate selection
# ---------------------------------------------------------------------------

def test_selection_probabilities_inverse_proportionality():
    p = selection_probabilities([1.0, 3.0])
    assert p[0] == pytest.approx(0.75, abs=1e-12)
    assert p[1] == pytest.approx(0.25, abs=1e-12)
    assert p.sum() == pytest.approx(1.0, abs=1e-12)


def test_selection_probabilities_handles_nonpositive_values():
    p = selection_probabilities([-2.0, 0.0, 2.0])
    assert np.all(p > 0.0)
    assert p.sum() == pytest.approx(1.0, abs=1e-12)
    assert p[0] > p[1] > p[2]


def test_selection_probabilities_rejects_bad_shapes():
    with pytest.raises(ValueError):
        selection_probabilities([])
    with pytest.raises(ValueError):
        selection_probabilities([[1.0, 2.0]])


@given(st.lists(st.floats(min_value=-1e9, max_value=1e9), min_size=1, max_size=15))
def test_selection_probabilities_order_property(values):
    p = selection_probabilities(values)
    assert p.sum() == pytest.approx(1.0, abs=1e-9)
    assert np.all(p > 0.0)
    order = np.argsort(values, kind="stable")
    # lower objective -> probability at least as high (strictly when distinct)
    ranked = p[order]
    assert np.all(np.diff(ranked) <= 1e-15)


def test_roulette_select_frequency_matches_probabilities():
    rng = np.random.default_rng(7)
    probs = [0.75, 0.25]
    hits = sum(roulette_select(probs, rng) == 0 for _ in range(100_000))
    assert abs(hits / 100_000 - 0.75) < 0.01, hits


def test_roulette_select_never_overflows_index():
    # u drawn in the rounding slack above the last cumsum entry still
    # maps to the last index
    class FakeRng:
        def random(self):
            return 0.999999999999999999

    assert roulette_select([0.5, 0.5 - 1e-17], FakeRng()) == 1


# ---------------------------------------------------------------------------
# trail-following move
# ---------------------------------------------------------------------------

def test_trail_zero_intensity_reproduces_best_position():
    problem = sphere(dim=3)
    colony = make_colony(problem, [[1.0, -2.0, 3.0], [0.5, 0.5, 0.5]], [0, 0])
    fecund = colony.snails[1]
    mover = colony.snails[0]
    mover.ld_norm = 0.0
    cfg = ShmsConfig(homes=1, home_switch_prob=0.0)
    y = trail_following_update(mover, fecund, colony, problem, cfg,
                               np.random.default_rng(3))
    assert np.array_equal(y, colony.global_best.x)


def test_trail_snail_on_best_position_stays_exactly():
    problem = sphere(dim=4)
    best = [0.1, 0.2, -0.3, 0.4]
    colony = make_colony(problem, [best, [2.0, 2.0, 2.0, 2.0]], [0, 0])
    mover = colony.snails[0]        # already sits on the global best
    mover.ld_norm = 0.83
    cfg = ShmsConfig(homes=1, home_switch_prob=0.0)
    y = trail_following_update(mover, colony.snails[1], colony, problem, cfg,
                               np.random.default_rng(11))
    assert np.array_equal(y, colony.global_best.x)


def test_trail_draw_is_uniform_around_best():
    # best at 2, snail at 0, intensity 0.5 -> y ~ U(1, 3) in one dimension
    problem = sphere(dim=1, lo=-10.0, hi=10.0)
    colony = make_colony(problem, [[0.0], [2.0]], [0, 0])
    colony.global_best = Anchor(x=np.array([2.0]), f=problem.func(np.array([2.0])))
    mover = colony.snails[0]
    mover.ld_norm = 0.5
    cfg = ShmsConfig(homes=1, home_switch_prob=0.0)
    rng = np.random.default_rng(19)
    draws = np.array([
        trail_following_update(mover, colony.snails[1], colony, problem, cfg, rng)[0]
        for _ in range(2000)
    ])
    assert np.all(draws >= 1.0) and np.all(draws <= 3.0)
    pvalue = sps.kstest(draws, "uniform", args=(1.0, 2.0)).pvalue
    assert pvalue > 1e-4, pvalue


def test_trail_candidate_is_clamped_to_box():
    problem = sphere(dim=1, lo=-1.0, hi=2.5)
    colony = make_colony(problem, [[-1.0], [2.5]], [0, 0])
    colony.global_best = Anchor(x=np.array([2.5]), f=problem.func(np.array([2.5])))
    mover = colony.snails[0]
    mover.ld_norm = 1.0             # interval [-1, 6] before clamping
    cfg = ShmsConfig(homes=1, home_switch_prob=0.0)
    rng = np.random.default_rng(5)
    draws = np.array([
        trail_following_update(mover, colony.snails[1], colony, problem, cfg, rng)[0]
        for _ in range(500)
    ])
    assert np.all(draws >= -1.0) and np.all(draws <= 2.5)
    assert np.any(draws == 2.5)     # the upper half of the interval got cut


def test_home_switch_reassigns_home_and_redraws_one_coordinate():
    problem = sphere(dim=5)
    positions = [[1.0] * 5, [0.0] * 5, [3.0] * 5, [-3.0] * 5]
    colony = make_colony(problem, positions, [0, 0, 1, 2], c_value=0.25)
    mover = colony.snails[0]
    mover.ld_norm = 0.0             # dense part lands exactly on the best
    cfg = ShmsConfig(homes=3, home_switch_prob=1.0)
    for seed in range(30):
        mover.home_id = 0
        y = trail_following_update(mover, colony.snails[1], colony, problem,
                                   cfg, np.random.default_rng(seed))
        assert mover.home_id in (1, 2)          # never the home it left
        anchor = colony.home_anchor[mover.home_id].x
        changed = np.flatnonzero(y != colony.global_best.x)
        assert changed.size == 1                # exactly one coordinate redrawn
        d = changed[0]
        assert abs(y[d] - anchor[d]) <= colony.c[d]


def test_home_switch_is_impossible_with_a_single_home():
    problem = sphere(dim=2)
    colony = make_colony(problem, [[1.0, 1.0], [0.0, 0.0]], [0, 0])
    mover = colony.snails[0]
    mover.ld_norm = 0.0
    cfg = ShmsConfig(homes=1, home_switch_prob=1.0)
    y = trail_following_update(mover, colony.snails[1], colony, problem, cfg,
                               np.random.default_rng(2))
    assert mover.home_id == 0
    assert np.array_equal(y, colony.global_best.x)


# ---------------------------------------------------------------------------
# initialization
# ---------------------------------------------------------------------------

def test_init_colony_spends_exactly_the_initial_budget():
    problem = sphere(dim=6)
    cfg = ShmsConfig(homes=4, snails_per_home=7, max_evals=1000, seed=123)
    colony = init_colony(problem, cfg, np.random.default_rng(cfg.seed))
    assert colony.counter.count == 4 * 7
    assert len(colony.snails) == 4 * 7
    assert len(colony.home_anchor) == 4
    for s in colony.snails:
        assert np.all(s.x >= problem.lower) and np.all(s.x <= problem.upper)
        assert s.f_hist == (s.f, s.f, s.f)
    best = min(s.f for s in colony.snails)
    assert colony.global_best.f == best
    for h in range(4):
        members = colony.members(h)
        assert len(members) == 7
        assert colony.home_anchor[h].f == min(s.f for s in members)


def test_init_colony_neighbourhood_halfwidth_fixed_from_box():
    problem = BoundedProblem(
        name="box", dim=2,
        lower=np.array([0.0, -10.0]), upper=np.array([1.0, 10.0]),
        func=lambda x: float(np.sum(x ** 2)),
    )
    cfg = ShmsConfig(neighborhood_fraction=0.1, max_evals=100)
    colony = init_colony(problem, cfg, np.random.default_rng(0))
    assert np.allclose(colony.c, [0.1, 2.0])


def test_snails_start_within_c_of_their_anchor():
    problem = sphere(dim=3, lo=-5.0, hi=5.0)
    cfg = ShmsConfig(homes=3, snails_per_home=10, max_evals=100, seed=9)
    colony = init_colony(problem, cfg, np.random.default_rng(cfg.seed))
    for h in range(3):
        centre = colony.home_anchor[h].x
        for s in colony.members(h):
            # clamping can only pull a coordinate closer to the box,
            # never push it beyond the drawn cube
            assert np.all(np.abs(s.x - centre) <= colony.c + 1e-12)


# ---------------------------------------------------------------------------
# config validation
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("kwargs", [
    {"homes": 0},
    {"snails_per_home": 1},
    {"neighborhood_fraction": 0.0},
    {"home_switch_prob": -0.1},
    {"home_switch_prob": 1.5},
    {"homes": 5, "snails_per_home": 10, "max_evals": 49},
    {"stagnation_window": 0},
    {"stagnation_tol": -1e-9},
])
def test_config_rejects_invalid_values(kwargs):
    with pytest.raises(ValueError):
        ShmsConfig(**kwargs)


# ---------------------------------------------------------------------------
# full runs
# ---------------------------------------------------------------------------

def test_run_is_deterministic_for_a_fixed_seed():
    problem = sphere(dim=5)
    cfg = ShmsConfig(max_evals=3000, seed=42)
    a = run(problem, cfg)
    b = run(problem, cfg)
    assert a.best_trace == b.best_trace
    assert np.array_equal(a.final_x, b.final_x)
    assert a.final_f == b.final_f
    assert a.evals == b.evals


def test_runs_with_different_seeds_differ():
    problem = sphere(dim=5)
    a = run(problem, ShmsConfig(max_evals=2000, seed=1))
    b = run(problem, ShmsConfig(max_evals=2000, seed=2))
    assert a.best_trace != b.best_trace


def test_run_respects_the_evaluation_budget():
    problem = sphere(dim=5)
    for budget in (30, 31, 64, 500):
        cfg = ShmsConfig(max_evals=budget, seed=3, stagnation_tol=0.0)
        rec = run(problem, cfg)
        assert cfg.homes * cfg.snails_per_home <= rec.evals <= budget


def test_run_trace_is_monotone_and_ends_at_final_f():
    problem = sphere(dim=4)
    rec = run(problem, ShmsConfig(max_evals=2000, seed=8))
    assert all(a >= b for a, b in zip(rec.best_trace, rec.best_trace[1:]))
    assert rec.final_f == rec.best_trace[-1]
    assert rec.final_f == problem.func(rec.final_x)
    assert rec.wall_time >= 0.0
    assert rec.seed == 8


def test_run_keeps_every_snail_inside_the_box():
    problem = sphere(dim=3, lo=-2.0, hi=1.0)
    seen = []

    def observer(colony):
        for s in colony.snails:
            seen.append(bool(np.all(s.x >= problem.lower)
                             and np.all(s.x <= problem.upper)))

    run(problem, ShmsConfig(max_evals=1500, seed=13), observer=observer)
    assert seen and all(seen)


def test_run_minimizes_a_shifted_sphere_without_origin_bias():
    # the box is asymmetric around the optimum on purpose
    problem = sphere(dim=5, lo=-5.0, hi=5.0, shift=2.75)
    rec = run(problem, ShmsConfig(max_evals=20_000, seed=4))
    assert rec.final_f < 1e-8
    assert np.all(np.abs(rec.final_x - 2.75) < 1e-3)


def test_run_stops_on_stagnation():
    # constant objective: no improvement is ever possible
    problem = BoundedProblem(
        name="flat", dim=2,
        lower=np.full(2, -1.0), upper=np.full(2, 1.0),
        func=lambda x: 1.0,
    )
    cfg = ShmsConfig(max_evals=1_000_000, stagnation_window=5, seed=0)
    rec = run(problem, cfg)
    assert rec.evals < 10_000
    assert len(rec.best_trace) <= cfg.stagnation_window + 2
    assert rec.final_f == 1.0


def test_observer_sees_init_plus_every_iteration():
    problem = sphere(dim=3)
    counts = []

    def observer(colony):
        counts.append(colony.iteration)

    rec = run(problem, ShmsConfig(max_evals=800, seed=21), observer=observer)
    assert counts == list(range(len(rec.best_trace)))


@settings(deadline=None, max_examples=15)
@given(st.integers(min_value=1, max_value=4),
       st.integers(min_value=0, max_value=2 ** 31 - 1))
def test_small_random_runs_hold_the_core_invariants(dim, seed):
    problem = sphere(dim=dim)
    cfg = ShmsConfig(max_evals=200, seed=seed)
    rec = run(problem, cfg)
    again = run(problem, cfg)
    assert rec.best_trace == again.best_trace
    assert rec.evals <= cfg.max_evals
    assert all(a >= b for a, b in zip(rec.best_trace, rec.best_trace[1:]))
    assert rec.final_f == rec.best_trace[-1]
    assert np.all(rec.final_x >= problem.lower)
    assert np.all(rec.final_x <= problem.upper)
