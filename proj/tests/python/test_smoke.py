"""End-to-end smoke tests for the python bindings."""

import math

import pytest

import centropy


def test_parse_and_metadata():
    d = centropy.parse("exp(lambda=2)")
    assert d.mean() == pytest.approx(0.5)
    assert d.decreasing_failure_rate() is True
    assert "exp" in d.key()
    assert len(centropy.catalog_keys()) == 10


def test_parse_error_maps_to_value_error():
    with pytest.raises(ValueError):
        centropy.parse("exp(rate=2)")


def test_entropy_quadrature_route():
    d = centropy.parse("exp(lambda=1)")
    r = centropy.entropy(d, "cre")
    assert r["value"] == pytest.approx(1.0, abs=1e-8)
    assert r["method"] == "quadrature"

    u = centropy.parse("uniform(a=1)")
    assert centropy.entropy(u, "wcre")["value"] == pytest.approx(
        5.0 / 36.0, abs=1e-9
    )


def test_normal_support_is_rejected():
    with pytest.raises(ValueError):
        centropy.entropy(centropy.Distribution.standard_normal(), "cre")


def test_series_bracket_contains_truth():
    d = centropy.parse("exp(lambda=1)")
    ap = centropy.series(d, "cre", 10, with_terms=True)
    assert ap["lower"] <= 1.0 <= ap["upper"]
    assert len(ap["terms"]) == 10
    conv = centropy.converge(d, "ce", 0.01)
    assert conv["converged"]
    assert conv["upper"] - conv["lower"] <= 0.01 + 1e-12
    assert conv["lower"] <= math.pi**2 / 6 - 1 <= conv["upper"]


def test_bounds_report():
    rep = centropy.bounds_report(centropy.parse("exp(lambda=1)"))
    assert len(rep["entries"]) == 6
    by_name = {e["name"]: e for e in rep["entries"]}
    assert by_name["cre_upper_hdg"]["applicable"]
    assert by_name["cre_upper_hdg"]["satisfied"]
    assert abs(by_name["ce_lower_dfr"]["slack"]) < 1e-7
    assert not by_name["cre_upper_symmetric"]["applicable"]


def test_harter_comparison():
    h = centropy.harter_comparison(99)
    assert h["series_sum"] == pytest.approx(0.87486, abs=1e-4)
    assert h["bound_sum"] == pytest.approx(0.94050, abs=1e-4)
    assert h["strictly_less"]


def test_reference_table_within_tolerance():
    rows = centropy.reference_table()
    assert len(rows) == 6
    for row in rows:
        for col in ("cre", "cre_bound", "sum", "sum_bound"):
            assert row[col]["within"], (row["label"], col, row[col])


def test_empirical_plugin_exact():
    d = centropy.Distribution.empirical([0.0, 1.0])
    r = centropy.empirical_plugin(d, "cre")
    assert r["value"] == pytest.approx(math.log(2.0) / 2.0, abs=1e-15)
    assert r["method"] == "exact"


def test_mc_determinism_across_threads():
    d = centropy.parse("exp(lambda=1)")
    a = centropy.mc_extreme_moment(d, "largest", 3, 1, 100000, seed=7, threads=1)
    b = centropy.mc_extreme_moment(d, "largest", 3, 1, 100000, seed=7, threads=4)
    assert a["estimate"] == b["estimate"]
    assert a["standard_error"] == b["standard_error"]
    assert a["estimate"] == pytest.approx(11.0 / 6.0, abs=4 * a["standard_error"])


def test_scalar_bounds():
    assert centropy.hdg_series_constant() == pytest.approx(1.2107897, abs=1e-6)
    assert centropy.c_of_n(1) == 0.0
    assert centropy.rychlik_delta(1, 4) == pytest.approx(0.25)
    with pytest.raises(ValueError):
        centropy.rychlik_delta(5, 4)
