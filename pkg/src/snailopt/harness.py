"""Campaign runner: multi-trial experiments, persistence, and reports.

A *campaign* solves one problem (a catalogued benchmark function or one
of the exchanger sizing cases) over a number of independent seeded
trials and persists everything needed to reproduce or re-analyse it:

* one JSON record per trial (seed, final point, objective, trace),
* an optional per-iteration convergence trace CSV per trial,
* an optional colony scatter CSV per trial (snapshots of snail
  positions and home assignments, for plotting),
* one JSON summary with the campaign configuration embedded.

Seeds are derived as ``base_seed + trial_index``, so a campaign is
fully reproducible from its config file alone.  Trials whose objective
evaluation fails are logged and skipped; the campaign carries on.

:func:`generate_reports` turns a directory of campaigns into the
statistics artifacts: a Friedman ranking table computed from the
bundled published per-problem means, pairwise signed-rank tables where
two or more campaigns cover the same problem, and a closeness table
comparing exchanger campaign results against the published designs.

Every output file carries a schema tag; the column layouts are
documented in ``data/output_schemas.json``.
"""

from __future__ import annotations

import dataclasses
import json
import logging
import math
import time
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

import numpy as np

from .benchmarks import CATALOG, catalog_json, make_benchmark
from .objective import BoundedProblem, NonFiniteObjective
from .shms import RunRecord, ShmsConfig, run
from .stats import (NoInformation, friedman_ranks, wilcoxon_signed_rank,
                    write_table_csv)
from .sthe import (closeness_direction, closeness_percent, make_case,
                   make_problem, published_tables)

log = logging.getLogger("snailopt.harness")

TRIAL_SCHEMA = "snailopt.trial/1"
SUMMARY_SCHEMA = "snailopt.summary/1"
TRACE_SCHEMA = "snailopt.trace/1"
SCATTER_SCHEMA = "snailopt.scatter/1"
REPORT_SCHEMA = "snailopt.report/1"

#: evaluation budgets used when the config leaves ``max_evals`` unset:
#: benchmarks get a dimension-dependent default, the exchanger cases
#: mirror the published average evaluation counts.
BENCHMARK_BUDGET_SMALL = 30_000   # dim <= 100
BENCHMARK_BUDGET_LARGE = 100_000  # dim > 100
STHE_BUDGETS = {1: 20_510, 2: 17_235, 3: 44_721}

#: ShmsConfig fields a config file may override.
ENGINE_KEYS = (
    "homes",
    "snails_per_home",
    "neighborhood_fraction",
    "home_switch_prob",
    "stagnation_window",
    "stagnation_tol",
)


@dataclass(frozen=True)
class CampaignConfig:
    """Everything needed to rerun a campaign.

    Parameters
    ----------
    problem : str
        ``"F1"``..``"F23"`` for the benchmark catalog, or ``"sthe1"``,
        ``"sthe2"``, ``"sthe3"`` for the exchanger cases.
    dim : int, optional
        Dimension for scalable benchmarks (default 30).  Fixed-
        dimension functions and the exchanger cases ignore it (and
        reject a mismatch).
    trials : int
        Number of independent runs (default 30).
    base_seed : int
        Trial ``i`` runs with seed ``base_seed + i``.
    max_evals : int, optional
        Per-trial evaluation budget; ``None`` picks the documented
        default for the problem type.
    out_dir : str
        Directory the campaign writes into (created if missing).
    label : str, optional
        Name used in reports; defaults to the problem key.
    engine : dict
        ``ShmsConfig`` overrides, keys restricted to
        :data:`ENGINE_KEYS`.
    export_trace, export_scatter, export_summary, export_stats : bool
        Artifact switches: per-trial trace CSVs, per-trial scatter
        CSVs, the summary JSON, and whether report generation may use
        this campaign in statistics tables.
    """

    problem: str = "F1"
    dim: int | None = None
    trials: int = 30
    base_seed: int = 1
    max_evals: int | None = None
    out_dir: str = "results"
    label: str | None = None
    engine: dict = field(default_factory=dict)
    export_trace: bool = True
    export_scatter: bool = False
    export_summary: bool = True
    export_stats: bool = True

    def __post_init__(self):
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        if not (self.problem in CATALOG or self.problem in ("sthe1", "sthe2", "sthe3")):
            raise ValueError(f"unknown problem {self.problem!r}")
        bad = set(self.engine) - set(ENGINE_KEYS)
        if bad:
            raise ValueError(f"unknown engine override(s): {sorted(bad)}")

    @property
    def is_sthe(self) -> bool:
        return self.problem.startswith("sthe")

    @property
    def problem_key(self) -> str:
        """Problem identity used to align campaigns in reports."""
        if self.is_sthe:
            return self.problem
        spec = CATALOG[self.problem]
        n = spec.fixed_dim if spec.fixed_dim is not None else (self.dim or 30)
        return f"{self.problem}-d{n}"

    @property
    def display_label(self) -> str:
        return self.label if self.label else self.problem_key

    def to_dict(self) -> dict:
        d = dataclasses.asdict(self)
        d["schema"] = "snailopt.campaign_config/1"
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "CampaignConfig":
        d = dict(d)
        d.pop("schema", None)
        unknown = set(d) - {f.name for f in dataclasses.fields(cls)}
        if unknown:
            raise ValueError(f"unknown config key(s): {sorted(unknown)}")
        return cls(**d)


@dataclass(frozen=True)
class CampaignSummary:
    """Aggregate statistics over the completed trials of a campaign."""

    problem_key: str
    label: str
    trials: int
    completed: int
    best: float
    worst: float
    mean: float
    std: float
    avg_evals: float
    avg_wall_time: float

    def __post_init__(self):
        if self.completed > 0:
            assert self.best <= self.mean <= self.worst
            assert self.std >= 0.0


def resolve_problem(cfg: CampaignConfig) -> BoundedProblem:
    """Instantiate the problem a config refers to."""
    if cfg.is_sthe:
        if cfg.dim not in (None, 4):
            raise ValueError("exchanger cases are 4-dimensional; drop --dim")
        return make_problem(int(cfg.problem[-1]))
    return make_benchmark(cfg.problem, cfg.dim)


def default_budget(cfg: CampaignConfig, problem: BoundedProblem) -> int:
    """The evaluation budget implied by the config (or its default)."""
    if cfg.max_evals is not None:
        return int(cfg.max_evals)
    if cfg.is_sthe:
        return STHE_BUDGETS[int(cfg.problem[-1])]
    if problem.dim <= 100:
        return BENCHMARK_BUDGET_SMALL
    return BENCHMARK_BUDGET_LARGE


def summarize(cfg: CampaignConfig, finals, evals, walls) -> CampaignSummary:
    """Aggregate per-trial results; pure, so summaries re-derive exactly.

    ``finals``/``evals``/``walls`` are the per-completed-trial final
    objectives, evaluation counts, and wall times.
    """
    finals = [float(v) for v in finals]
    n = len(finals)
    if n == 0:
        nan = float("nan")
        return CampaignSummary(cfg.problem_key, cfg.display_label, cfg.trials,
                               0, nan, nan, nan, nan, nan, nan)
    arr = np.asarray(finals, dtype=float)
    best = float(arr.min())
    worst = float(arr.max())
    # summation round-off can push the mean of near-identical finals a
    # few ulps past the extremes; the true mean always lies between them
    mean = min(max(float(arr.mean()), best), worst)
    return CampaignSummary(
        problem_key=cfg.problem_key,
        label=cfg.display_label,
        trials=cfg.trials,
        completed=n,
        best=best,
        worst=worst,
        mean=mean,
        std=float(arr.std()),
        avg_evals=float(np.mean(np.asarray(evals, dtype=float))),
        avg_wall_time=float(np.mean(np.asarray(walls, dtype=float))),
    )


# ---------------------------------------------------------------------------
# artifact writers / readers
# ---------------------------------------------------------------------------

def _trial_path(out: Path, i: int) -> Path:
    return out / f"trial_{i:03d}.json"


def write_trial_record(out: Path, cfg: CampaignConfig, i: int,
                       budget: int, rec: RunRecord) -> Path:
    path = _trial_path(out, i)
    payload = {
        "schema": TRIAL_SCHEMA,
        "problem": cfg.problem_key,
        "trial": i,
        "seed": rec.seed,
        "max_evals": budget,
        "final_f": rec.final_f,
        "final_x": [float(v) for v in rec.final_x],
        "evals": rec.evals,
        "wall_time": rec.wall_time,
        "best_trace": [float(v) for v in rec.best_trace],
    }
    path.write_text(json.dumps(payload))
    return path


def read_trial_record(path) -> dict:
    d = json.loads(Path(path).read_text())
    if d.get("schema") != TRIAL_SCHEMA:
        raise ValueError(f"{path}: not a {TRIAL_SCHEMA} file")
    return d


def write_trace_csv(out: Path, i: int, rec: RunRecord) -> Path:
    path = out / f"trace_{i:03d}.csv"
    lines = [f"# schema: {TRACE_SCHEMA}", "iteration,best_f"]
    lines += [f"{k},{v!r}" for k, v in enumerate(rec.best_trace)]
    path.write_text("\n".join(lines) + "\n")
    return path


def read_trace_csv(path) -> list[tuple[int, float]]:
    rows = []
    lines = Path(path).read_text().splitlines()
    if not lines or TRACE_SCHEMA not in lines[0]:
        raise ValueError(f"{path}: not a {TRACE_SCHEMA} file")
    for line in lines[2:]:
        k, v = line.split(",")
        rows.append((int(k), float(v)))
    return rows


class ScatterRecorder:
    """Observer that snapshots colony positions for scatter export.

    Records the colony at iteration 0, every power-of-two iteration,
    and (via :meth:`flush`) the final state, so file size grows
    logarithmically with run length.
    """

    def __init__(self):
        self.rows: list[tuple] = []
        self._latest: list[tuple] = []
        self._latest_iter = -1

    def __call__(self, colony) -> None:
        it = colony.iteration
        snap = [(it, j, s.home_id, *[float(v) for v in s.x])
                for j, s in enumerate(colony.snails)]
        self._latest, self._latest_iter = snap, it
        if it == 0 or (it & (it - 1)) == 0:
            self.rows.extend(snap)

    def flush(self) -> None:
        if self._latest and (not self.rows or self.rows[-1][0] != self._latest_iter):
            self.rows.extend(self._latest)


def write_scatter_csv(out: Path, i: int, recorder: ScatterRecorder,
                      dim: int) -> Path:
    path = out / f"scatter_{i:03d}.csv"
    cols = ",".join(f"x{d}" for d in range(dim))
    lines = [f"# schema: {SCATTER_SCHEMA}", f"iteration,snail,home_id,{cols}"]
    for row in recorder.rows:
        it, j, home, *x = row
        lines.append(f"{it},{j},{home}," + ",".join(repr(v) for v in x))
    path.write_text("\n".join(lines) + "\n")
    return path


def write_summary(out: Path, cfg: CampaignConfig, summary: CampaignSummary,
                  finals: list[float], record_files: list[str],
                  failures: list[dict]) -> Path:
    path = out / "summary.json"
    payload = {
        "schema": SUMMARY_SCHEMA,
        "config": cfg.to_dict(),
        "summary": dataclasses.asdict(summary),
        "finals": [float(v) for v in finals],
        "record_files": record_files,
        "failures": failures,
    }
    path.write_text(json.dumps(payload, indent=1))
    return path


def read_summary(path) -> dict:
    d = json.loads(Path(path).read_text())
    if d.get("schema") != SUMMARY_SCHEMA:
        raise ValueError(f"{path}: not a {SUMMARY_SCHEMA} file")
    return d


# ---------------------------------------------------------------------------
# campaign execution
# ---------------------------------------------------------------------------

def run_campaign(cfg: CampaignConfig) -> CampaignSummary:
    """Run all trials of a campaign and persist the artifacts.

    Returns the summary (also written to ``summary.json`` unless
    ``export_summary`` is off).  A trial that raises
    :class:`NonFiniteObjective` is logged and skipped; any other
    exception propagates (it is a bug, not a data issue).
    """
    problem = resolve_problem(cfg)
    budget = default_budget(cfg, problem)
    out = Path(cfg.out_dir)
    out.mkdir(parents=True, exist_ok=True)

    finals: list[float] = []
    evals: list[int] = []
    walls: list[float] = []
    record_files: list[str] = []
    failures: list[dict] = []

    for i in range(cfg.trials):
        seed = cfg.base_seed + i
        shms_cfg = ShmsConfig(max_evals=budget, seed=seed, **cfg.engine)
        recorder = ScatterRecorder() if cfg.export_scatter else None
        try:
            rec = run(problem, shms_cfg, observer=recorder)
        except NonFiniteObjective as exc:
            log.warning("trial %d (seed %d) aborted: %s", i, seed, exc)
            failures.append({"trial": i, "seed": seed, "error": str(exc)})
            continue
        finals.append(rec.final_f)
        evals.append(rec.evals)
        walls.append(rec.wall_time)
        record_files.append(write_trial_record(out, cfg, i, budget, rec).name)
        if cfg.export_trace:
            write_trace_csv(out, i, rec)
        if recorder is not None:
            recorder.flush()
            write_scatter_csv(out, i, recorder, problem.dim)

    summary = summarize(cfg, finals, evals, walls)
    if cfg.export_summary:
        write_summary(out, cfg, summary, finals, record_files, failures)
    return summary


def load_campaign(summary_path) -> tuple[CampaignConfig, CampaignSummary, dict]:
    """Reload a campaign from its ``summary.json``.

    Returns the parsed config, a summary *recomputed from the per-trial
    record files* (so corruption or hand-editing is caught), and the
    raw summary payload.
    """
    payload = read_summary(summary_path)
    cfg = CampaignConfig.from_dict(payload["config"])
    base = Path(summary_path).parent
    finals, evals, walls = [], [], []
    for name in payload["record_files"]:
        rec = read_trial_record(base / name)
        finals.append(rec["final_f"])
        evals.append(rec["evals"])
        walls.append(rec["wall_time"])
    return cfg, summarize(cfg, finals, evals, walls), payload


# ---------------------------------------------------------------------------
# reports
# ---------------------------------------------------------------------------

def _load_published_means() -> dict:
    ref = resources.files("snailopt.data").joinpath("published_means.json")
    return json.loads(ref.read_text())


def published_friedman_rows() -> list[dict]:
    """Friedman mean ranks recomputed from the bundled published means.

    One block per published table: the four scalable-function
    dimensions plus the fixed-dimension set (keyed ``"fixed"``).
    """
    data = _load_published_means()
    labels = data["algorithms"]
    order = {"dim30": 0, "dim100": 1, "dim500": 2, "dim1000": 3, "fixed": 4}
    rows = []
    for key in sorted(data["tables"], key=lambda k: order.get(k, 99)):
        table = data["tables"][key]
        res = friedman_ranks(np.asarray(table["means"], dtype=float), labels)
        for lab, mr, rk in zip(res.labels, res.mean_ranks, res.ordering):
            rows.append({"table": key, "algorithm": lab,
                         "mean_rank": float(mr), "rank": int(rk)})
    return rows


def _campaign_groups(campaigns):
    groups: dict[str, list] = {}
    for cfg, summary, payload in campaigns:
        groups.setdefault(cfg.problem_key, []).append((cfg, summary, payload))
    return groups


def generate_reports(results_dir) -> list[Path]:
    """Build report files for every campaign found under ``results_dir``.

    Always emits ``friedman_published.csv`` (it depends only on bundled
    data) and ``report.txt``; adds ``wilcoxon_pairwise.csv`` when at
    least two campaigns share a problem and ``closeness_sthe.csv`` when
    exchanger campaigns exist.  Returns the written paths.
    """
    root = Path(results_dir)
    root.mkdir(parents=True, exist_ok=True)
    written: list[Path] = []
    notices: list[str] = []

    campaigns = []
    for path in sorted(root.rglob("summary.json")):
        try:
            cfg, summary, payload = load_campaign(path)
        except (ValueError, KeyError, json.JSONDecodeError) as exc:
            notices.append(f"skipped {path}: {exc}")
            continue
        if not cfg.export_stats:
            notices.append(f"{cfg.display_label}: excluded from statistics by config")
            continue
        campaigns.append((cfg, summary, payload))

    # Friedman table from the bundled published means (always available)
    friedman_rows = published_friedman_rows()
    fr_path = root / "friedman_published.csv"
    write_table_csv(fr_path, friedman_rows)
    written.append(fr_path)

    # pairwise signed-rank tables wherever raw per-run data overlaps
    wil_rows = []
    for key, group in sorted(_campaign_groups(campaigns).items()):
        if len(group) < 2:
            continue
        finals = {}
        for idx, (cfg, _s, payload) in enumerate(group):
            label = cfg.display_label
            if label in finals:
                label = f"{label}#{idx}"
            finals[label] = payload["finals"]
        labels = list(finals)
        for i in range(len(labels)):
            for j in range(i + 1, len(labels)):
                a, b = labels[i], labels[j]
                n = min(len(finals[a]), len(finals[b]))
                if n < 5:
                    notices.append(f"{key}: fewer than 5 shared trials for "
                                   f"{a} vs {b}; pair skipped")
                    continue
                try:
                    res = wilcoxon_signed_rank(finals[a][:n], finals[b][:n],
                                               labels=(a, b))
                    row = {"problem": key, "a": a, "b": b,
                           "n_nonzero": res.n_nonzero, "p_value": res.p_value,
                           "t_plus": res.t_plus, "t_minus": res.t_minus,
                           "winner": res.winner,
                           "significant": res.significant,
                           "method": res.method}
                except NoInformation:
                    row = {"problem": key, "a": a, "b": b, "n_nonzero": 0,
                           "p_value": 1.0, "t_plus": 0.0, "t_minus": 0.0,
                           "winner": "no information", "significant": False,
                           "method": "none"}
                wil_rows.append(row)
    if wil_rows:
        w_path = root / "wilcoxon_pairwise.csv"
        write_table_csv(w_path, wil_rows)
        written.append(w_path)
    elif not any(len(g) >= 2 for g in _campaign_groups(campaigns).values()):
        notices.append("no problem is covered by two campaigns; "
                       "pairwise signed-rank table skipped")

    # closeness table for exchanger campaigns
    close_rows = []
    published = None
    for cfg, summary, _payload in campaigns:
        if not cfg.is_sthe or summary.completed == 0:
            continue
        if published is None:
            published = published_tables()
        case_id = cfg.problem[-1]
        for ref in published["closeness"][case_id]:
            value = closeness_percent(ref["c_total"], summary.best)
            close_rows.append({
                "case": int(case_id), "campaign": cfg.display_label,
                "reference": ref["name"], "reference_c_total": ref["c_total"],
                "our_best": summary.best,
                "closeness_percent": value,
                "direction": closeness_direction(value),
            })
    if close_rows:
        c_path = root / "closeness_sthe.csv"
        write_table_csv(c_path, close_rows)
        written.append(c_path)
    elif any(cfg.is_sthe for cfg, _s, _p in campaigns):
        notices.append("exchanger campaigns present but none completed")

    lines = [f"# schema: {REPORT_SCHEMA}", ""]
    if campaigns:
        lines.append(f"campaigns found: {len(campaigns)}")
        for cfg, summary, _payload in campaigns:
            if summary.completed:
                lines.append(
                    f"  {cfg.display_label:<20} best {summary.best:.6g}  "
                    f"mean {summary.mean:.6g}  worst {summary.worst:.6g}  "
                    f"std {summary.std:.6g}  "
                    f"avg evals {summary.avg_evals:.0f}  "
                    f"avg wall {summary.avg_wall_time:.3f}s")
            else:
                lines.append(f"  {cfg.display_label:<20} no completed trials")
    else:
        lines.append("no campaigns found")
    lines.append("")
    lines += [f"note: {n}" for n in notices]
    lines.append(f"files: {', '.join(p.name for p in written)}")
    report = root / "report.txt"
    report.write_text("\n".join(lines) + "\n")
    written.append(report)
    return written


def output_schemas() -> dict:
    """The bundled description of every artifact's columns/fields."""
    ref = resources.files("snailopt.data").joinpath("output_schemas.json")
    return json.loads(ref.read_text())


if __name__ == "__main__":
    import tempfile

    logging.basicConfig(level=logging.WARNING)

    with tempfile.TemporaryDirectory() as tmp:
        base = Path(tmp)

        # small deterministic campaign on a fixed-dimension function
        cfg = CampaignConfig(problem="F16", trials=5, base_seed=7,
                             max_evals=1500, out_dir=str(base / "camp1"),
                             export_scatter=True)
        s1 = run_campaign(cfg)
        assert s1.completed == 5 and s1.trials == 5
        assert s1.best <= s1.mean <= s1.worst
        assert abs(s1.best - (-1.0316284534898774)) < 1e-6, s1.best

        # determinism: same config, fresh directory, identical summary
        cfg2 = dataclasses.replace(cfg, out_dir=str(base / "camp2"))
        s2 = run_campaign(cfg2)
        assert (s1.best, s1.worst, s1.mean, s1.std) == (s2.best, s2.worst,
                                                        s2.mean, s2.std)
        assert s1.avg_evals == s2.avg_evals

        # persisted records re-summarize to the emitted summary exactly
        cfg_r, recomputed, payload = load_campaign(base / "camp1" / "summary.json")
        assert recomputed == s1
        assert cfg_r == cfg
        assert payload["summary"] == dataclasses.asdict(s1)

        # artifacts exist and parse
        names = {p.name for p in (base / "camp1").iterdir()}
        assert {"summary.json", "trial_000.json", "trace_000.csv",
                "scatter_000.csv"} <= names
        trace = read_trace_csv(base / "camp1" / "trace_000.csv")
        rec0 = read_trial_record(base / "camp1" / "trial_000.json")
        assert trace[0][0] == 0 and trace[-1][1] == rec0["final_f"]
        assert [v for _k, v in trace] == rec0["best_trace"]

        # a second campaign on the same problem enables the pairwise table
        cfg3 = CampaignConfig(problem="F16", trials=5, base_seed=99,
                              max_evals=900, out_dir=str(base / "camp3"),
                              label="F16-alt")
        run_campaign(cfg3)
        files = generate_reports(base)
        names = {p.name for p in files}
        assert {"friedman_published.csv", "wilcoxon_pairwise.csv",
                "report.txt"} <= names

        # published-means Friedman spot checks
        rows = published_friedman_rows()
        d30 = {r["algorithm"]: r for r in rows if r["table"] == "dim30"}
        assert abs(d30["AVOA"]["mean_rank"] - 2.5) < 1e-3
        assert d30["AVOA"]["rank"] == 1
        assert abs(d30["SHMS"]["mean_rank"] - 3.2692) < 1e-3
        assert d30["SHMS"]["rank"] == 2

        # empty directory still yields a report with an explicit notice
        files = generate_reports(base / "empty")
        report = (base / "empty" / "report.txt").read_text()
        assert "no campaigns found" in report

        # config round-trip
        assert CampaignConfig.from_dict(cfg.to_dict()) == cfg

        schemas = output_schemas()
        assert TRIAL_SCHEMA in schemas["schemas"]

        assert catalog_json()["functions"][0]["id"] == "F1"
        assert make_case(1).duty == 4.34e6

    print("harness self-checks passed")
