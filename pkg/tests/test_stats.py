"""Signed-rank and rank-table tests, anchored by a brute-force oracle."""

import itertools

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from scipy import stats as sps
from scipy.stats import rankdata

from snailopt.stats import (EXACT_LIMIT, FriedmanResult, NoInformation,
                            WilcoxonResult, _exact_two_sided_p,
                            format_friedman_text, format_pairwise_text,
                            friedman_ranks, pairwise_table, read_matrix_csv,
                            read_table_csv, wilcoxon_signed_rank,
                            write_matrix_csv, write_table_csv)


def brute_force_p(diffs):
    """Two-sided exact p by enumerating all 2^n sign assignments.

    Independent of the library's integer-convolution shortcut; uses the
    same doubled-midrank integer arithmetic so equality is bit-for-bit.
    """
    d = np.asarray(diffs, dtype=float)
    d = d[d != 0.0]
    ranks = rankdata(np.abs(d))
    t_low = min(ranks[d > 0].sum(), ranks[d < 0].sum())
    weights = [int(round(2.0 * r)) for r in ranks]
    threshold = int(round(2.0 * t_low))
    tail = sum(
        1 for signs in itertools.product((0, 1), repeat=len(weights))
        if sum(w for w, s in zip(weights, signs) if s) <= threshold
    )
    return min(1.0, 2.0 * tail / 2.0 ** len(weights))


def pairs_with_nonzero(n_nonzero, rng):
    """Paired vectors whose differences are n_nonzero small integers.

    Small magnitudes force plenty of tied |d| (midranks) and the zero
    padding exercises the drop-zeros rule.
    """
    d = rng.integers(1, 4, size=n_nonzero) * rng.choice([-1.0, 1.0], n_nonzero)
    pad = max(0, 5 - n_nonzero)
    a = np.concatenate([d.astype(float), np.zeros(pad)]) + 10.0
    b = np.full(a.size, 10.0)
    return a, b


# ---------------------------------------------------------------------------
# signed-rank test
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("n_nonzero", range(1, 13))
def test_exact_p_matches_brute_force_enumeration(n_nonzero):
    rng = np.random.default_rng(100 + n_nonzero)
    for _ in range(4):
        a, b = pairs_with_nonzero(n_nonzero, rng)
        res = wilcoxon_signed_rank(a, b)
        assert res.method == "exact"
        assert res.n_nonzero == n_nonzero
        assert res.p_value == brute_force_p(a - b)  # bit-for-bit


def test_five_positive_pairs_give_the_textbook_tail():
    res = wilcoxon_signed_rank([1.0, 2.0, 3.0, 4.0, 5.0], np.zeros(5),
                               labels=("high", "zero"))
    assert res.p_value == 0.0625
    assert res.t_plus == 15.0 and res.t_minus == 0.0
    assert res.n_nonzero == 5
    assert res.winner == "zero"
    assert not res.significant
    assert res.method == "exact"


def test_swapping_samples_swaps_rank_sums_not_p():
    rng = np.random.default_rng(2)
    a = rng.normal(size=9)
    b = rng.normal(size=9)
    ab = wilcoxon_signed_rank(a, b, labels=("a", "b"))
    ba = wilcoxon_signed_rank(b, a, labels=("b", "a"))
    assert ab.p_value == ba.p_value
    assert ab.t_plus == ba.t_minus and ab.t_minus == ba.t_plus
    assert ab.winner == ba.winner


def test_positive_scaling_leaves_the_test_invariant():
    rng = np.random.default_rng(3)
    a = rng.integers(0, 8, size=10).astype(float)
    b = rng.integers(0, 8, size=10).astype(float)
    base = wilcoxon_signed_rank(a, b)
    # power-of-two factor: the products are exact, so |d| ties survive
    scaled = wilcoxon_signed_rank(4.0 * a, 4.0 * b)
    assert scaled.p_value == base.p_value
    assert scaled.t_plus == base.t_plus
    assert scaled.t_minus == base.t_minus


def test_zero_differences_are_dropped():
    a = np.array([4.0, 4.0, 4.0, 4.0, 4.0, 11.0])
    b = np.array([4.0, 4.0, 4.0, 4.0, 4.0, 4.0])
    res = wilcoxon_signed_rank(a, b)
    assert res.n_nonzero == 1
    assert res.t_plus == 1.0 and res.t_minus == 0.0
    assert res.p_value == 1.0  # both tails of one pair


def test_all_zero_differences_raise_no_information():
    v = np.array([1.0, 2.0, 3.0, 4.0, 5.0])
    with pytest.raises(NoInformation):
        wilcoxon_signed_rank(v, v.copy())


def test_input_validation():
    with pytest.raises(ValueError):
        wilcoxon_signed_rank([1.0, 2.0], [1.0, 2.0, 3.0])
    with pytest.raises(ValueError):
        wilcoxon_signed_rank([1.0, 2.0, 3.0, 4.0], [0.0, 0.0, 0.0, 0.0])
    with pytest.raises(ValueError):
        wilcoxon_signed_rank([[1.0] * 5], [[0.0] * 5])


def test_matches_scipy_exact_on_tie_free_data():
    rng = np.random.default_rng(31)
    for _ in range(10):
        mags = rng.permutation(np.arange(1.0, 11.0))[:8]
        d = mags * rng.choice([-1.0, 1.0], size=8)
        ours = wilcoxon_signed_rank(d, np.zeros(8))
        ref = sps.wilcoxon(d, alternative="two-sided", method="exact")
        assert ours.p_value == pytest.approx(ref.pvalue, rel=1e-12)


def test_method_switches_at_the_exact_limit():
    rng = np.random.default_rng(7)
    at = rng.normal(0.2, 1.0, EXACT_LIMIT)
    beyond = rng.normal(0.2, 1.0, EXACT_LIMIT + 1)
    assert wilcoxon_signed_rank(at, np.zeros_like(at)).method == "exact"
    assert wilcoxon_signed_rank(beyond, np.zeros_like(beyond)).method == "normal"


def test_normal_approximation_tracks_the_exact_tail():
    rng = np.random.default_rng(11)
    d = rng.normal(0.3, 1.0, 25)
    res = wilcoxon_signed_rank(d, np.zeros(25))
    assert res.method == "normal"
    ranks = rankdata(np.abs(d))
    exact = _exact_two_sided_p(ranks, min(res.t_plus, res.t_minus))
    assert abs(res.p_value - exact) < 0.02, (res.p_value, exact)


@given(st.lists(st.integers(min_value=-5, max_value=5), min_size=5, max_size=18))
def test_rank_sums_partition_the_total(diffs):
    a = np.asarray(diffs, dtype=float) + 3.0
    b = np.full(len(diffs), 3.0)
    try:
        res = wilcoxon_signed_rank(a, b)
    except NoInformation:
        return
    n = res.n_nonzero
    assert res.t_plus + res.t_minus == pytest.approx(n * (n + 1) / 2, abs=1e-9)
    assert 0.0 < res.p_value <= 1.0
    assert isinstance(res, WilcoxonResult)


# ---------------------------------------------------------------------------
# mean ranks
# ---------------------------------------------------------------------------

def test_friedman_dominant_column_gets_rank_one():
    m = [[1.0, 2.0], [3.0, 9.0], [0.5, 0.6]]
    res = friedman_ranks(m, labels=("good", "bad"))
    assert np.allclose(res.mean_ranks, [1.0, 2.0])
    assert list(res.ordering) == [1, 2]


def test_friedman_identical_columns_share_the_middle_rank():
    m = np.ones((4, 5))
    res = friedman_ranks(m)
    assert np.allclose(res.mean_ranks, 3.0)  # (k + 1) / 2
    assert list(res.ordering) == [1, 2, 3, 4, 5]  # stable tie-break


def test_friedman_uses_midranks_within_a_row():
    res = friedman_ranks([[1.0, 1.0, 2.0], [5.0, 6.0, 7.0]])
    assert np.allclose(res.mean_ranks, [(1.5 + 1) / 2, (1.5 + 2) / 2, 3.0])


def test_friedman_column_permutation_permutes_ranks():
    rng = np.random.default_rng(17)
    m = rng.normal(size=(6, 4))
    perm = [2, 0, 3, 1]
    base = friedman_ranks(m)
    shuffled = friedman_ranks(m[:, perm])
    assert np.allclose(shuffled.mean_ranks, base.mean_ranks[perm])
    assert list(shuffled.ordering) == [int(base.ordering[j]) for j in perm]


@given(st.lists(st.lists(st.integers(min_value=-50, max_value=50),
                         min_size=3, max_size=3),
                min_size=2, max_size=8))
def test_friedman_is_invariant_under_monotone_transforms(rows):
    m = np.asarray(rows, dtype=float)
    base = friedman_ranks(m)
    cubed = friedman_ranks(m ** 3)  # strictly increasing, tie-preserving
    assert np.array_equal(base.mean_ranks, cubed.mean_ranks)
    assert np.array_equal(base.ordering, cubed.ordering)


def test_friedman_shape_and_label_validation():
    with pytest.raises(ValueError):
        friedman_ranks([1.0, 2.0, 3.0])
    with pytest.raises(ValueError):
        friedman_ranks([[1.0, 2.0]])
    with pytest.raises(ValueError):
        friedman_ranks([[1.0], [2.0]])
    with pytest.raises(ValueError):
        friedman_ranks([[1.0, 2.0], [3.0, 4.0]], labels=("only-one",))


# ---------------------------------------------------------------------------
# pairwise table
# ---------------------------------------------------------------------------

def test_pairwise_table_one_row_per_rival():
    rng = np.random.default_rng(23)
    base = rng.random(8)
    values = {
        "mine": base,
        "worse": base + 1.0,
        "better": base - 1.0,
        "clone": base.copy(),
    }
    rows = pairwise_table(values, baseline="mine")
    assert [r["algorithm"] for r in rows] == ["worse", "better", "clone"]
    by_name = {r["algorithm"]: r for r in rows}
    assert by_name["worse"]["winner"] == "mine"
    assert by_name["better"]["winner"] == "better"
    assert by_name["clone"]["winner"] == "no information"
    assert by_name["clone"]["method"] == "none"
    assert by_name["clone"]["p_value"] == 1.0


def test_pairwise_table_validation():
    values = {"a": np.zeros(6), "b": np.ones(6)}
    with pytest.raises(ValueError):
        pairwise_table(values, baseline="missing")
    values["short"] = np.ones(3)
    with pytest.raises(ValueError):
        pairwise_table(values, baseline="a")


# ---------------------------------------------------------------------------
# CSV round-trips and text rendering
# ---------------------------------------------------------------------------

def test_matrix_csv_round_trip_is_exact(tmp_path):
    path = tmp_path / "matrix.csv"
    ids = ["p1", "p2", "p3"]
    labels = ("alg-a", "alg-b")
    matrix = np.array([[np.pi, 1e-300], [-1.25e3, 0.1], [7.0, -0.0]])
    write_matrix_csv(path, ids, labels, matrix)
    got_ids, got_labels, got = read_matrix_csv(path)
    assert got_ids == ids
    assert got_labels == labels
    assert got.shape == matrix.shape
    assert np.array_equal(got, matrix)


def test_table_csv_round_trip_preserves_types(tmp_path):
    rng = np.random.default_rng(5)
    values = {"a": rng.random(7), "b": rng.random(7), "c": rng.random(7)}
    rows = pairwise_table(values, baseline="a")
    path = tmp_path / "table.csv"
    write_table_csv(path, rows)
    assert read_table_csv(path) == rows


def test_empty_table_writes_an_empty_file(tmp_path):
    path = tmp_path / "empty.csv"
    write_table_csv(path, [])
    assert path.read_text() == ""
    assert read_table_csv(path) == []


def test_text_renderings_smoke():
    values = {"a": np.arange(5.0), "b": np.arange(5.0) + 2.0}
    text = format_pairwise_text(pairwise_table(values, baseline="a"), "a")
    assert "vs a" in text and "b" in text
    fr = friedman_ranks([[1.0, 2.0], [1.0, 2.0]], labels=("first", "second"))
    rendered = format_friedman_text(fr)
    assert isinstance(fr, FriedmanResult)
    assert rendered.index("first") < rendered.index("second")
