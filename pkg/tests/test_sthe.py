"""Exchanger model tests: physics chain, costs, and the published tables."""

import dataclasses
import json
import math

import numpy as np
import pytest

from snailopt.sthe import (INFEASIBLE_COST, DomainError, case_json,
                           closeness_direction, closeness_percent,
                           design_report, evaluate_design, make_case,
                           make_problem, published_tables, total_cost)


def case_with_profile(case_id, profile):
    """Rebuild the exact model variant a stored column was fitted with."""
    case = make_case(case_id)
    tube = dataclasses.replace(case.tube, fouling=profile["tube_fouling"])
    econ = dataclasses.replace(
        case.economics,
        pump_efficiency=profile["pump_efficiency"],
        efficiency_on_shell=profile["efficiency_on_shell"],
    )
    return dataclasses.replace(
        case, tube=tube, layout=profile["layout"],
        elbow_loss=profile["elbow_loss"], passes=profile["passes"],
        area_convention=profile["area_convention"], economics=econ,
    )


@pytest.fixture(scope="module")
def tables():
    return published_tables()


# ---------------------------------------------------------------------------
# case definitions
# ---------------------------------------------------------------------------

def test_make_case_rejects_unknown_ids():
    for bad in (0, 4, -1):
        with pytest.raises(ValueError):
            make_case(bad)


@pytest.mark.parametrize("case_id,lmtd,f_corr", [
    (1, 30.7856, 0.8121),
    (2, 84.5470, 0.8915),
    (3, 6.3119, 0.9447),
])
def test_case_temperature_constants(case_id, lmtd, f_corr):
    case = make_case(case_id)
    # printed constants carry rounded intermediates; 1e-3 absolute
    assert case.lmtd == pytest.approx(lmtd, abs=1e-3)
    assert case.correction_factor == pytest.approx(f_corr, abs=1e-3)


def test_case_bounds_are_the_documented_box():
    case = make_case(1)
    assert np.allclose(case.lower, [0.010, 0.10, 0.05, 0.50])
    assert np.allclose(case.upper, [0.051, 1.50, 0.60, 6.00])


def test_case_rejects_inconsistent_streams():
    case = make_case(1)
    cold = dataclasses.replace(case.shell, t_in=20.0, t_out=40.0)
    with pytest.raises(ValueError):
        dataclasses.replace(case, shell=cold)
    with pytest.raises(ValueError):
        dataclasses.replace(case, layout="hexagonal")
    with pytest.raises(ValueError):
        dataclasses.replace(case, area_convention="frontal")


# ---------------------------------------------------------------------------
# derived-geometry identities
# ---------------------------------------------------------------------------

def test_fixed_geometric_ratios():
    case = make_case(1)
    design, _ = evaluate_design(case, [0.02, 0.8, 0.3, 4.0])
    assert design.d_i == pytest.approx(0.8 * design.d_o, rel=1e-12)
    assert design.pitch == pytest.approx(1.25 * design.d_o, rel=1e-12)
    assert design.clearance == pytest.approx(0.25 * design.d_o, rel=1e-12)
    assert design.passes == case.passes


def test_duty_convention_area_closes_the_heat_balance():
    case = make_case(1)
    design, _ = evaluate_design(case, [0.02, 0.8, 0.3, 4.0])
    required = case.duty / (design.u_overall * design.correction_factor
                            * design.lmtd)
    assert design.area == pytest.approx(required, rel=1e-12)


def test_geometry_convention_area_is_the_tube_surface():
    case = dataclasses.replace(make_case(1), area_convention="geometry")
    d = [0.02, 0.8, 0.3, 4.0]
    design, _ = evaluate_design(case, d)
    assert design.area == pytest.approx(
        math.pi * design.d_o * design.length * design.tube_count, rel=1e-12)


def test_cost_identity_and_discounting():
    case = make_case(2)
    _, report = evaluate_design(case, [0.015, 0.5, 0.3, 3.0])
    assert report.total == pytest.approx(
        report.investment + report.discounted_operating, rel=1e-12)
    # 10 years at 10%: annuity factor (1 - 1.1^-10) / 0.1
    assert report.discounted_operating == pytest.approx(
        report.annual_operating * 6.1445671, rel=1e-6)
    assert report.pumping_power > 0.0


def test_investment_grows_with_exchange_area():
    case = make_case(1)
    small, rs = evaluate_design(case, [0.02, 0.5, 0.3, 3.0])
    large, rl = evaluate_design(case, [0.02, 1.2, 0.3, 3.0])
    assert small.area != large.area
    if small.area < large.area:
        assert rs.investment < rl.investment
    else:
        assert rs.investment > rl.investment


def test_tube_side_regime_switches_with_velocity():
    case = make_case(1)
    # few tubes -> fast flow -> turbulent; huge shell -> many tubes -> laminar
    fast, _ = evaluate_design(case, [0.051, 0.2, 0.3, 3.0])
    slow, _ = evaluate_design(case, [0.012, 1.5, 0.3, 3.0])
    assert fast.re_tube > slow.re_tube
    assert fast.h_tube > slow.h_tube


# ---------------------------------------------------------------------------
# domain handling
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("vec", [
    [0.005, 0.8, 0.3, 4.0],   # d_o below its bound
    [0.02, 1.6, 0.3, 4.0],    # shell too wide
    [0.02, 0.8, 0.01, 4.0],   # baffle spacing too tight
    [0.02, 0.8, 0.3, 7.0],    # tubes too long
])
def test_out_of_bounds_designs_raise(vec):
    with pytest.raises(DomainError):
        evaluate_design(make_case(1), vec)


def test_malformed_vectors_raise():
    case = make_case(1)
    with pytest.raises(DomainError):
        evaluate_design(case, [0.02, 0.8, 0.3])
    with pytest.raises(DomainError):
        evaluate_design(case, [0.02, 0.8, 0.3, float("nan")])


def test_total_cost_maps_domain_errors_to_penalty():
    case = make_case(1)
    assert total_cost(case, [0.005, 0.8, 0.3, 4.0]) == INFEASIBLE_COST
    assert total_cost(case, [0.02, 0.8, 0.3, 4.0]) < INFEASIBLE_COST


def test_make_problem_wraps_the_case():
    problem = make_problem(3)
    assert problem.dim == 4
    case = make_case(3)
    assert np.array_equal(problem.lower, case.lower)
    x = np.array([0.015, 0.6, 0.3, 3.0])
    assert problem.func(x) == total_cost(case, x)


# ---------------------------------------------------------------------------
# published-table reproduction
# ---------------------------------------------------------------------------

def test_best_reported_designs_reproduce_their_totals(tables):
    for cid in (1, 2, 3):
        designs = {d["name"]: d for d in tables["cases"][str(cid)]["designs"]}
        entry = designs["SHMS"]
        case = case_with_profile(cid, entry["profile"])
        got = total_cost(case, entry["decision"])
        assert got == pytest.approx(entry["c_total"], rel=5e-3), (cid, got)


def test_every_stored_profile_recomputes_its_model_total(tables):
    checked = 0
    for cid in (1, 2, 3):
        for entry in tables["cases"][str(cid)]["designs"]:
            if entry["excluded"]:
                assert entry["exclude_reason"]
                continue
            profile = entry["profile"]
            case = case_with_profile(cid, profile)
            got = total_cost(case, entry["decision"])
            assert got == pytest.approx(profile["model_c_total"], rel=1e-12)
            rel = abs(got - entry["c_total"]) / entry["c_total"]
            assert rel == pytest.approx(profile["rel_error"], abs=1e-9)
            assert entry["outlier"] == (rel > 0.02)
            if entry["outlier"]:
                assert entry["outlier_note"]
            checked += 1
    assert checked >= 30


def test_at_most_four_columns_per_case_stay_unexplained(tables):
    for cid in (1, 2, 3):
        entries = [d for d in tables["cases"][str(cid)]["designs"]
                   if not d["excluded"] and d["name"] != "SHMS"]
        outliers = [d["name"] for d in entries if d["outlier"]]
        assert len(outliers) <= 4, (cid, outliers)


def test_printed_reynolds_agrees_with_printed_velocity(tables):
    # internal consistency of the tables themselves: Re recomputed from
    # the printed velocity and diameter must match the printed Re
    targets = {1: ("GA", "SHMS"), 2: ("SHMS",), 3: ("SHMS",)}
    for cid, names in targets.items():
        case = make_case(cid)
        block = tables["cases"][str(cid)]
        for name in names:
            j = block["columns"].index(name)
            v_t = block["rows"]["v_t"][j]
            re_printed = block["rows"]["Re_t"][j]
            d_i = 0.8 * block["rows"]["d_o"][j]
            re_calc = case.tube.density * v_t * d_i / case.tube.viscosity
            assert re_calc == pytest.approx(re_printed, rel=0.02), (cid, name)


def test_published_closeness_rows_recompute(tables):
    for cid, rows in tables["closeness"].items():
        best = tables["performance"][cid]["best"]
        for row in rows:
            printed = row["closeness_percent"]
            if row["direction"] == "down":
                printed = -printed
            calc = closeness_percent(row["c_total"], best)
            assert calc == pytest.approx(printed, abs=1e-3), (cid, row["name"])


def test_suspect_cells_are_documented(tables):
    for cell in tables["suspect_cells"]:
        assert cell["case"] in (1, 2, 3)
        assert cell["note"]


# ---------------------------------------------------------------------------
# closeness helper
# ---------------------------------------------------------------------------

def test_closeness_percent_examples():
    assert closeness_percent(100.0, 99.0) == pytest.approx(1.0, abs=1e-12)
    assert closeness_percent(100.0, 104.0) == pytest.approx(-4.0, abs=1e-12)
    assert closeness_percent(50793.0, 41718.6558) == pytest.approx(
        17.8653, abs=1e-3)


def test_closeness_percent_rejects_nonpositive_costs():
    with pytest.raises(ValueError):
        closeness_percent(0.0, 10.0)
    with pytest.raises(ValueError):
        closeness_percent(10.0, -1.0)


def test_closeness_direction_flags():
    assert closeness_direction(0.46) == "↑"
    assert closeness_direction(-0.1) == "↓"
    assert closeness_direction(0.0) == "↑"


# ---------------------------------------------------------------------------
# reporting
# ---------------------------------------------------------------------------

def test_design_report_lists_every_parameter():
    case = make_case(1)
    design, cost = evaluate_design(case, [0.02, 0.8, 0.3, 4.0])
    text = design_report(design, cost, header="candidate")
    lines = text.splitlines()
    assert lines[0].endswith("candidate")
    for needle in ("D_s (m)", "Re_t", "U (W/m^2 K)", "C_total (eur)"):
        assert any(line.startswith(needle) for line in lines), needle


def test_case_json_round_trips():
    payload = json.loads(case_json(make_case(2)))
    assert payload["case_id"] == 2
    assert payload["bounds"]["d_o"] == [0.010, 0.051]
    assert payload["passes"] == make_case(2).passes
    assert "lmtd" in payload
