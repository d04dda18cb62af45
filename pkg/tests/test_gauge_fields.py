from __future__ import annotations

import numpy as np
import pytest

from darkgauge import (
    NonUnitary,
    connection_from_params,
    connection_numeric,
    gauge_transform,
    magnetic_field,
    make_scenario,
    minimal_coupling_terms,
    sample_safe_points,
    scalar_potential_from_params,
    scalar_potential_numeric,
)
from darkgauge.gauge_fields import CONNECTION_STEP_FACTOR, FIELD_STEP_FACTOR, step_length
from darkgauge.scenarios import scalar_potential_vortex_closed

ORACLE_TOL = 1e-6


def _connection_at(bundle, p):
    h = CONNECTION_STEP_FACTOR * bundle.local_step(p)
    return connection_numeric(bundle.frame_sampler(), p, h, bundle.hbar)


def test_step_length_contract():
    assert step_length((3.0, 0.0, 4.0), 0.0) == 5.0
    assert step_length((3.0, 0.0, 4.0), 2.0) == 0.5
    assert step_length((0.1, 0.0, 0.0), 2.0) == pytest.approx(0.1)


def test_connection_oracle_matches_closed_form():
    rng = np.random.default_rng(50)
    for sid in ("rb-monopole-jx", "sr-monopole"):
        bundle = make_scenario(sid)
        for p in sample_safe_points(bundle, rng, 20):
            numeric, _ = _connection_at(bundle, p)
            closed = connection_from_params(bundle.params(p), bundle.gradients(p), bundle.hbar)
            assert np.max(np.abs(numeric - closed)) < ORACLE_TOL, sid


def test_numeric_connection_is_hermitized():
    bundle = make_scenario("rb-monopole-jx")
    a, residual = _connection_at(bundle, (1.0, 0.75, 0.5))
    for comp in a:
        assert np.max(np.abs(comp - comp.conj().T)) < 1e-15
    assert 0.0 <= residual < 1e-8


def test_gauge_transform_identity_and_constant():
    bundle = make_scenario("rb-so-coupling")
    p = (0.3, -0.4, 0.2)
    a = bundle.connection_sampler()
    h = CONNECTION_STEP_FACTOR * bundle.step_length(p)

    same, _ = gauge_transform(a, lambda q: np.eye(3, dtype=complex), p, h)
    assert np.max(np.abs(same - a(p))) < 1e-12

    u = np.diag(np.exp(1j * np.array([0.3, -1.1, 0.7])))
    rotated, _ = gauge_transform(a, lambda q: u, p, h)
    expected = np.einsum("ij,cjk,lk->cil", u, a(p), u.conj())
    assert np.max(np.abs(rotated - expected)) < 1e-12


def test_gauge_transform_rejects_non_unitary():
    bundle = make_scenario("rb-so-coupling")
    a = bundle.connection_sampler()
    with pytest.raises(NonUnitary):
        gauge_transform(a, lambda q: 2.0 * np.eye(3, dtype=complex), (0.3, 0.1, 0.2), 1e-5)


def test_field_of_commuting_constant_connection_vanishes():
    comp = np.diag([1.0, -0.5, 0.25]).astype(complex)
    sampler = lambda p: np.stack([comp, 2.0 * comp, -comp])
    b, residual = magnetic_field(sampler, (0.5, 0.5, 0.5), 1e-4)
    assert np.max(np.abs(b)) == 0.0
    assert residual == 0.0


def test_field_of_constant_connection_is_pure_commutator():
    bundle = make_scenario("rb-so-coupling")
    p = (0.7, 0.1, -0.3)
    a = bundle.connection_sampler()(p)
    sampler = lambda q: a
    b, _ = magnetic_field(sampler, p, FIELD_STEP_FACTOR * bundle.step_length(p))
    for i, (j, k) in enumerate([(1, 2), (2, 0), (0, 1)]):
        comm = (a[j] @ a[k] - a[k] @ a[j]) / 1j
        assert np.max(np.abs(b[i] - comm)) < 1e-13


def test_minimal_coupling_velocity_matrices():
    """The two closed-form velocity matrices and the quadratic term, exactly."""
    from darkgauge import gellmann_matrix, spin1_operators

    bundle = make_scenario("rb-so-coupling")
    a = bundle.velocity_form_connection((1.0, 0.75, 0.5))
    terms = minimal_coupling_terms(a, bundle.hbar, bundle.mass, bundle.k)
    jz = spin1_operators(bundle.hbar)["jz"]
    g1, g4, g6 = gellmann_matrix(1), gellmann_matrix(4), gellmann_matrix(6)
    assert np.max(np.abs(terms.velocity_matrices[0] - jz / bundle.hbar)) < 1e-12
    assert np.max(np.abs(terms.velocity_matrices[2] - 2.0 * (g1 - g6))) < 1e-12
    assert np.max(np.abs(terms.velocity_matrices[1])) < 1e-12
    quad = (bundle.hbar * bundle.k) ** 2 / (4.0 * bundle.mass) * (np.eye(3) - g4)
    assert np.max(np.abs(terms.quadratic - quad)) < 1e-12

    plus = make_scenario("rb-so-coupling", kr_sign=1)
    terms = minimal_coupling_terms(plus.velocity_form_connection((1.0, 0.75, 0.5)), k=plus.k)
    assert np.max(np.abs(terms.velocity_matrices[2] - 2.0 * (g1 + g6))) < 1e-12


def test_minimal_coupling_of_zero_connection():
    terms = minimal_coupling_terms(np.zeros((3, 3, 3), dtype=complex))
    assert np.max(np.abs(np.stack(terms.momentum_matrices))) == 0.0
    assert np.max(np.abs(terms.quadratic)) == 0.0


def test_scalar_potential_oracle():
    rng = np.random.default_rng(51)
    for sid in ("rb-monopole-jx", "sr-monopole"):
        bundle = make_scenario(sid)
        frame = bundle.frame_sampler()
        for p in sample_safe_points(bundle, rng, 15):
            h = CONNECTION_STEP_FACTOR * bundle.step_length(p)
            numeric, _ = scalar_potential_numeric(frame, p, h, bundle.hbar, bundle.mass)
            closed = scalar_potential_from_params(
                bundle.params(p), bundle.gradients(p), "resolved", bundle.hbar, bundle.mass
            )
            assert np.max(np.abs(numeric - closed)) < ORACLE_TOL, sid
            assert np.min(np.linalg.eigvalsh(numeric)) > -1e-10


def test_scalar_potential_variants_differ_only_in_flagged_entries():
    bundle = make_scenario("sr-monopole")
    p = (0.9, 0.4, 0.6)
    printed = scalar_potential_from_params(bundle.params(p), bundle.gradients(p), "printed")
    resolved = scalar_potential_from_params(bundle.params(p), bundle.gradients(p), "resolved")
    diff = np.abs(printed - resolved)
    flagged = np.zeros((3, 3), dtype=bool)
    flagged[0, 1] = flagged[1, 0] = flagged[2, 1] = flagged[1, 2] = True
    assert np.max(diff[~flagged]) < 1e-15


def test_vortex_closed_form():
    rng = np.random.default_rng(52)
    for sid, tilde in (("rb-monopole-jx", False), ("rb-monopole-jx-tilde", True)):
        bundle = make_scenario(sid)
        for p in sample_safe_points(bundle, rng, 15):
            general = scalar_potential_from_params(
                bundle.params(p), bundle.gradients(p), "resolved", bundle.hbar, bundle.mass
            )
            vortex = scalar_potential_vortex_closed(p, bundle.k, tilde, bundle.hbar, bundle.mass)
            assert np.max(np.abs(general - vortex)) < 1e-8, sid


def test_vortex_cross_term_sign_flips_between_variants():
    p = (0.8, 0.55, 0.4)
    plain = scalar_potential_vortex_closed(p, 1.0, tilde=False)
    tilde = scalar_potential_vortex_closed(p, 1.0, tilde=True)
    assert abs(plain[0, 1] - tilde[0, 1]) < 1e-15
    assert abs(plain[1, 2] + tilde[1, 2]) < 1e-15
    assert abs(plain[1, 2]) > 1e-3
