"""Nonparametric paired comparisons for algorithm result tables.

Two tools cover the usual "is optimizer A actually better than B"
workflow on per-problem result vectors:

* :func:`wilcoxon_signed_rank` — two-sided paired signed-rank test.
  Zero differences are dropped (Wilcoxon's original treatment), tied
  absolute differences receive midranks, and the p-value is computed
  EXACTLY for up to 20 non-zero pairs by counting sign assignments
  with an integer convolution (no 2^n enumeration), falling back to a
  normal approximation with continuity and tie corrections beyond
  that.
* :func:`friedman_ranks` — mean ranks across problems (ascending:
  rank 1 is best for minimization) plus the final ordering.

A small I/O layer reads result matrices from CSV and emits the
pairwise and ranking tables both as CSV (exact float round-trip via
``repr``) and as aligned text for eyeballing.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass

import numpy as np
from scipy.stats import norm, rankdata

__all__ = [
    "FriedmanResult",
    "NoInformation",
    "WilcoxonResult",
    "format_friedman_text",
    "format_pairwise_text",
    "friedman_ranks",
    "pairwise_table",
    "read_matrix_csv",
    "read_table_csv",
    "wilcoxon_signed_rank",
    "write_matrix_csv",
    "write_table_csv",
]

#: switch point between the exact sign-assignment count and the
#: normal approximation
EXACT_LIMIT = 20


class NoInformation(ValueError):
    """Raised when every paired difference is zero (nothing to rank)."""


@dataclass(frozen=True)
class WilcoxonResult:
    """Outcome of one two-sided paired signed-rank comparison.

    ``t_plus`` is the rank sum of pairs where the first sample is
    larger (its losses, for minimization), ``t_minus`` the rank sum
    where the second sample is larger.  ``winner`` names the sample
    with the smaller loss rank sum — reported descriptively even when
    the difference is not significant; check ``significant`` before
    reading anything into it.
    """

    p_value: float
    t_plus: float
    t_minus: float
    n_nonzero: int
    winner: str
    significant: bool
    method: str  # "exact" or "normal"


@dataclass(frozen=True)
class FriedmanResult:
    """Mean ranks per algorithm and the implied ordering (1 = best)."""

    labels: tuple[str, ...]
    mean_ranks: np.ndarray
    ordering: np.ndarray  # ordering[j] = final rank of labels[j]


def _exact_two_sided_p(ranks: np.ndarray, t_low: float) -> float:
    """Exact two-sided p for the smaller rank sum ``t_low``.

    Counts sign assignments whose positive-rank sum is ≤ ``t_low``
    over all ``2^n`` equally likely assignments, doubles the tail and
    caps at 1.  Midranks are halves, so everything is doubled once to
    stay in integer arithmetic; Python integers keep the counts exact.
    """
    weights = [int(round(2.0 * r)) for r in ranks]
    total = sum(weights)
    counts = [0] * (total + 1)
    counts[0] = 1
    for w in weights:
        for t in range(total, w - 1, -1):
            counts[t] += counts[t - w]
    threshold = int(round(2.0 * t_low))
    tail = sum(counts[: threshold + 1])
    return min(1.0, 2.0 * tail / 2.0 ** len(weights))


def wilcoxon_signed_rank(a, b, alpha: float = 0.05,
                         labels: tuple[str, str] = ("A", "B")) -> WilcoxonResult:
    """Two-sided paired signed-rank test between result vectors.

    Parameters
    ----------
    a, b : array-like
        Equal-length (>= 5) paired results, e.g. per-problem means of
        two optimizers (lower is better).
    alpha : float
        Significance level for the ``significant`` flag.
    labels : (str, str)
        Names for the two samples, used for the ``winner`` field.

    Raises
    ------
    NoInformation
        If every difference is exactly zero.
    """
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if a.shape != b.shape or a.ndim != 1:
        raise ValueError("samples must be equal-length 1-D vectors")
    if a.size < 5:
        raise ValueError("need at least 5 pairs")
    d = a - b
    d = d[d != 0.0]
    n = int(d.size)
    if n == 0:
        raise NoInformation("all paired differences are zero")
    ranks = rankdata(np.abs(d))  # midranks for ties
    t_plus = float(ranks[d > 0].sum())
    t_minus = float(ranks[d < 0].sum())
    t_low = min(t_plus, t_minus)
    if n <= EXACT_LIMIT:
        p = _exact_two_sided_p(ranks, t_low)
        method = "exact"
    else:
        mu = n * (n + 1) / 4.0
        sigma = math.sqrt(float(np.sum(ranks ** 2)) / 4.0)
        z = (t_low - mu + 0.5) / sigma  # continuity correction toward center
        p = min(1.0, 2.0 * float(norm.cdf(z)))
        method = "normal"
    if t_plus < t_minus:
        winner = labels[0]
    elif t_minus < t_plus:
        winner = labels[1]
    else:
        winner = "tie"
    return WilcoxonResult(p_value=p, t_plus=t_plus, t_minus=t_minus,
                          n_nonzero=n, winner=winner,
                          significant=p < alpha, method=method)


def friedman_ranks(mean_matrix, labels=None) -> FriedmanResult:
    """Mean ranks of algorithms (columns) across problems (rows).

    Within every problem row the algorithms are ranked ascending by
    value (minimization; ties get midranks); the per-algorithm ranks
    are averaged over problems and the final ordering sorts ascending
    mean rank (stable: earlier column wins exact ties).
    """
    m = np.asarray(mean_matrix, dtype=float)
    if m.ndim != 2 or m.shape[0] < 2 or m.shape[1] < 2:
        raise ValueError("need a problems x algorithms matrix, at least 2x2")
    if labels is None:
        labels = tuple(f"alg{j}" for j in range(m.shape[1]))
    labels = tuple(labels)
    if len(labels) != m.shape[1]:
        raise ValueError("one label per column required")
    row_ranks = np.vstack([rankdata(row) for row in m])
    mean_ranks = row_ranks.mean(axis=0)
    order = np.argsort(mean_ranks, kind="stable")
    ordering = np.empty(len(labels), dtype=int)
    ordering[order] = np.arange(1, len(labels) + 1)
    return FriedmanResult(labels=labels, mean_ranks=mean_ranks,
                          ordering=ordering)


def pairwise_table(values: dict, baseline: str, alpha: float = 0.05) -> list[dict]:
    """One signed-rank row per rival algorithm against ``baseline``.

    ``values`` maps algorithm label to its per-problem result vector;
    all vectors must be aligned (same problems, same order).  Rows
    where every difference is zero are reported with winner
    ``"no information"`` instead of aborting the table.
    """
    if baseline not in values:
        raise ValueError(f"baseline {baseline!r} missing from values")
    base = np.asarray(values[baseline], dtype=float)
    rows = []
    for label, vec in values.items():
        if label == baseline:
            continue
        vec = np.asarray(vec, dtype=float)
        if vec.shape != base.shape:
            raise ValueError(f"result vector for {label!r} is misaligned")
        try:
            r = wilcoxon_signed_rank(vec, base, alpha=alpha,
                                     labels=(label, baseline))
            row = {"algorithm": label, "n_nonzero": r.n_nonzero,
                   "p_value": r.p_value, "t_plus": r.t_plus,
                   "t_minus": r.t_minus, "winner": r.winner,
                   "significant": r.significant, "method": r.method}
        except NoInformation:
            row = {"algorithm": label, "n_nonzero": 0, "p_value": 1.0,
                   "t_plus": 0.0, "t_minus": 0.0, "winner": "no information",
                   "significant": False, "method": "none"}
        rows.append(row)
    return rows


# ---------------------------------------------------------------------------
# CSV / text I/O
# ---------------------------------------------------------------------------

def write_matrix_csv(path, problem_ids, labels, matrix) -> None:
    """Write a problems x algorithms result matrix with headers."""
    m = np.asarray(matrix, dtype=float)
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["problem", *labels])
        for pid, row in zip(problem_ids, m):
            w.writerow([pid, *[repr(float(v)) for v in row]])


def read_matrix_csv(path):
    """Read a matrix written by :func:`write_matrix_csv`.

    Returns
    -------
    (problem_ids, labels, matrix)
    """
    with open(path, newline="") as fh:
        rows = list(csv.reader(fh))
    labels = tuple(rows[0][1:])
    problem_ids = [r[0] for r in rows[1:]]
    matrix = np.array([[float(v) for v in r[1:]] for r in rows[1:]])
    return problem_ids, labels, matrix


def write_table_csv(path, rows: list[dict]) -> None:
    """Write a list of uniform dict rows; floats round-trip exactly."""
    if not rows:
        with open(path, "w", newline=""):
            pass
        return
    fields = list(rows[0])
    with open(path, "w", newline="") as fh:
        w = csv.DictWriter(fh, fieldnames=fields)
        w.writeheader()
        for row in rows:
            w.writerow({k: repr(v) if isinstance(v, float) else v
                        for k, v in row.items()})


def read_table_csv(path) -> list[dict]:
    """Read back a table written by :func:`write_table_csv`.

    Values are restored as float / int / bool / str by literal parsing,
    so a write-read cycle reproduces the original rows exactly.
    """
    out = []
    with open(path, newline="") as fh:
        for row in csv.DictReader(fh):
            parsed = {}
            for k, v in row.items():
                if v in ("True", "False"):
                    parsed[k] = v == "True"
                else:
                    try:
                        parsed[k] = int(v)
                    except ValueError:
                        try:
                            parsed[k] = float(v)
                        except ValueError:
                            parsed[k] = v
            out.append(parsed)
    return out


def format_pairwise_text(rows: list[dict], baseline: str) -> str:
    """Aligned-text rendering of :func:`pairwise_table` output."""
    lines = [f"pairwise signed-rank vs {baseline}",
             f"{'algorithm':<12} {'n':>3} {'p-value':>12} {'T+':>8} "
             f"{'T-':>8} {'winner':<14} sig"]
    for r in rows:
        lines.append(f"{r['algorithm']:<12} {r['n_nonzero']:>3} "
                     f"{r['p_value']:>12.4e} {r['t_plus']:>8.1f} "
                     f"{r['t_minus']:>8.1f} {r['winner']:<14} "
                     f"{'*' if r['significant'] else ''}")
    return "\n".join(lines) + "\n"


def format_friedman_text(result: FriedmanResult) -> str:
    """Aligned-text rendering of mean ranks, best first."""
    lines = ["mean ranks (lower is better)",
             f"{'algorithm':<12} {'mean rank':>10} {'rank':>5}"]
    for j in np.argsort(result.ordering):
        lines.append(f"{result.labels[j]:<12} {result.mean_ranks[j]:>10.4f} "
                     f"{result.ordering[j]:>5d}")
    return "\n".join(lines) + "\n"


if __name__ == "__main__":
    import itertools

    # five pairs, first sample always smaller: the classic textbook tail
    res = wilcoxon_signed_rank([1, 2, 3, 4, 5], [2, 3, 4, 5, 6],
                               labels=("low", "high"))
    assert res.p_value == 0.0625, res.p_value
    assert res.t_plus == 0.0 and res.t_minus == 15.0
    assert res.winner == "low" and res.method == "exact"

    # antisymmetry: swapping samples swaps the rank sums, p unchanged
    swapped = wilcoxon_signed_rank([2, 3, 4, 5, 6], [1, 2, 3, 4, 5])
    assert swapped.p_value == res.p_value
    assert (swapped.t_plus, swapped.t_minus) == (res.t_minus, res.t_plus)

    # exact counting agrees with explicit 2^n enumeration, ties included
    rng = np.random.default_rng(7)
    for _ in range(200):
        n = int(rng.integers(1, 11))
        d = np.round(rng.normal(size=n), 1)
        d = d[d != 0.0]
        if d.size == 0:
            continue
        ranks = rankdata(np.abs(d))
        t_low = min(ranks[d > 0].sum(), ranks[d < 0].sum())
        hits = sum(sum(r for r, s in zip(ranks, signs) if s) <= t_low
                   for signs in itertools.product((0, 1), repeat=d.size))
        brute = min(1.0, 2.0 * hits / 2.0 ** d.size)
        assert _exact_two_sided_p(ranks, t_low) == brute

    try:
        wilcoxon_signed_rank([1.0] * 6, [1.0] * 6)
    except NoInformation:
        pass
    else:
        raise AssertionError("all-zero differences must raise")

    fr = friedman_ranks([[1, 2], [1, 2], [1, 2]], labels=("good", "bad"))
    assert np.allclose(fr.mean_ranks, [1.0, 2.0])
    assert list(fr.ordering) == [1, 2]
    same = friedman_ranks(np.ones((4, 3)))
    assert np.allclose(same.mean_ranks, 2.0)  # (k+1)/2 for k=3

    print("stats self-checks passed")
