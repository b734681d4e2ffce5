"""The invariant suites and their enumeration profiles."""

import dataclasses

import pytest

from cantorinfo.profiles import PROFILES
from cantorinfo.verify import REGISTRY, PropertyFailure, run_suites

MODULES = {
    "cantor-plane",
    "combinadics",
    "set-codec",
    "info-calculus",
    "elastic",
    "sorted-injections",
}


def test_every_module_has_registered_properties():
    assert {prop.module for prop in REGISTRY.values()} == MODULES
    assert len(REGISTRY) >= 30


def test_profiles_share_every_property_and_full_reaches_further():
    quick, full = PROFILES["quick"], PROFILES["full"]

    for field in dataclasses.fields(quick):
        if field.name in ("name", "seed"):
            continue
        assert getattr(quick, field.name) <= getattr(full, field.name), field.name
    assert full.pair_codes == 100_000
    assert full.theta_sets == 5_000
    assert full.calibration_sets == 2_000
    assert full.height_max == 30
    assert full.subset_ground_size == 12


def test_profiles_are_frozen():
    with pytest.raises(dataclasses.FrozenInstanceError):
        PROFILES["quick"].pair_codes = 1


def test_quick_profile_passes_every_property():
    results = list(run_suites(PROFILES["quick"]))

    assert [result.name for result in results] == list(REGISTRY)
    failed = {result.name: result.detail for result in results if not result.passed}
    assert not failed
    assert all(result.seconds >= 0 for result in results)


def test_only_runs_a_single_property():
    (result,) = run_suites(PROFILES["quick"], only="appendix-worked-example")

    assert result.name == "appendix-worked-example"
    assert result.passed


def test_unknown_property_is_rejected():
    with pytest.raises(ValueError, match="unknown property: nope"):
        list(run_suites(PROFILES["quick"], only="nope"))


def test_failures_are_reported_with_their_detail(monkeypatch):
    prop = REGISTRY["stirling-agreement"]

    def broken(profile):
        raise PropertyFailure("stirling2(3, 2) formulas disagree")

    monkeypatch.setitem(REGISTRY, prop.name, dataclasses.replace(prop, check=broken))

    (result,) = run_suites(PROFILES["quick"], only="stirling-agreement")

    assert not result.passed
    assert result.detail == "stirling2(3, 2) formulas disagree"


@pytest.mark.slow
def test_full_profile_passes_every_property():
    failed = {r.name: r.detail for r in run_suites(PROFILES["full"]) if not r.passed}

    assert not failed
