from __future__ import annotations

import numpy as np
import pytest

from darkgauge import (
    GAUGE_NUMERIC,
    SCENARIO_IDS,
    NearSingularity,
    UnknownScenario,
    charge_report,
    expected_connection,
    make_scenario,
    sample_safe_points,
)
from darkgauge.scenarios import random_unitary_field


def test_unknown_scenario_rejected():
    with pytest.raises(UnknownScenario):
        make_scenario("rb-monopole")


def test_parameter_validation():
    with pytest.raises(ValueError):
        make_scenario("rb-monopole-jx", k=-1.0)
    with pytest.raises(ValueError):
        make_scenario("rb-monopole-jx", omega0=0.0)
    with pytest.raises(ValueError):
        make_scenario("rb-monopole-jx", big_theta=0.5)
    with pytest.raises(ValueError):
        make_scenario("rb-so-coupling", big_theta=2.0)
    with pytest.raises(ValueError):
        make_scenario("rb-so-coupling", k3_axis="y")
    with pytest.raises(ValueError):
        make_scenario("rb-so-coupling", kr_sign=0)


def test_so_defaults():
    bundle = make_scenario("rb-so-coupling")
    assert abs(np.tan(bundle.so_big_theta) - np.sqrt(2.0)) < 1e-15
    assert bundle.so_kr_sign == -1


def test_singularity_guard():
    singular = make_scenario("rb-monopole-jx")
    with pytest.raises(NearSingularity):
        singular.require_safe((0.0, 0.0, 0.5))
    with pytest.raises(NearSingularity):
        singular.frame((1e-5, 0.0, 1e-5))
    # plane-wave scenario has no singular locus
    make_scenario("rb-so-coupling").require_safe((0.0, 0.0, 0.0))


def test_safe_point_sampler_respects_guards_and_seed():
    for sid in SCENARIO_IDS:
        bundle = make_scenario(sid)
        pts = sample_safe_points(bundle, np.random.default_rng(7), 40)
        again = sample_safe_points(bundle, np.random.default_rng(7), 40)
        assert np.array_equal(np.asarray(pts), np.asarray(again))
        for p in pts:
            bundle.require_safe(p)


def test_charge_variant_strips_the_wave_number():
    bundle = make_scenario("sr-monopole", k=2.0)
    base = bundle.charge_variant()
    assert base.id == bundle.id
    assert base.k == 0.0
    assert base.omega0 == bundle.omega0


def test_local_step_shrinks_near_the_axis_only_when_singular():
    singular = make_scenario("rb-monopole-jx")
    p_near = (0.05, 0.0, 1.2)
    assert singular.local_step(p_near) == pytest.approx(0.05)
    p_far = (1.2, 0.0, 0.3)
    assert singular.local_step(p_far) == singular.step_length(p_far)
    plane = make_scenario("rb-so-coupling")
    assert plane.local_step(p_near) == plane.step_length(p_near)


def test_expected_connection_matches_sampler():
    bundle = make_scenario("rb-so-coupling")
    rng = np.random.default_rng(70)
    sampler = bundle.connection_sampler()
    for p in sample_safe_points(bundle, rng, 5):
        assert np.max(np.abs(sampler(p) - expected_connection(bundle, p))) < 1e-6


def test_transform_requires_a_bundled_unitary():
    with pytest.raises(ValueError):
        charge_report(make_scenario("rb-monopole-jx"), transformed=True)


def test_random_unitary_fields_are_unitary():
    rng = np.random.default_rng(71)
    for _ in range(5):
        u_field = random_unitary_field(rng)
        for q in ((0.4, 0.3, 0.9), (-1.1, 0.2, -0.4)):
            u = u_field(q)
            assert np.max(np.abs(u @ u.conj().T - np.eye(3))) < 1e-12


def test_verification_reports_pass_and_are_well_formed(reports):
    for sid, report in reports.items():
        assert report.scenario == sid
        assert report.passed, [c.name for c in report.checks if not c.passed]
        names = [c.name for c in report.checks]
        assert len(names) == len(set(names))
        for key in ("hbar", "k", "radius", "connection-step-factor"):
            assert key in report.environment
        first = report.checks[0]
        assert report.check(first.name).name == first.name


def test_gauge_list_and_surface_sources():
    u2 = make_scenario("u2-tripod")
    assert u2.default_gauge == u2.gauges[0]
    assert GAUGE_NUMERIC not in u2.gauges[:1]
    rb = make_scenario("rb-monopole-jx")
    report, _ = charge_report(rb, n_theta=48, n_phi=8)
    assert report.surface_source == "full-field"
    assert abs(report.pattern_charge - 1.0) < 1e-3
