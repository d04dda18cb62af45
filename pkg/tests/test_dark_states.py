from __future__ import annotations

import numpy as np
import pytest

from darkgauge import (
    GAUGE_NUMERIC,
    SCENARIO_IDS,
    AmbiguousDarkSpace,
    coupling_hamiltonian,
    dark_frame_numeric,
    evaluate_rabi,
    make_scenario,
    sample_safe_points,
)

DARKNESS_TOL = 1e-10
ORTHONORMALITY_TOL = 1e-12


def _bundles():
    return [make_scenario(sid) for sid in SCENARIO_IDS]


def test_analytic_frames_are_dark_and_orthonormal():
    rng = np.random.default_rng(40)
    for bundle in _bundles():
        for p in sample_safe_points(bundle, rng, 20):
            h = coupling_hamiltonian(evaluate_rabi(bundle.rabi, p), bundle.scheme).matrix
            scale = np.linalg.norm(h)
            for gauge in bundle.gauges:
                if gauge == GAUGE_NUMERIC:
                    continue
                d = bundle.frame(p, gauge).vectors
                assert np.linalg.norm(h @ d) <= DARKNESS_TOL * scale, bundle.id
                gram = d.conj().T @ d
                assert np.max(np.abs(gram - np.eye(d.shape[1]))) <= ORTHONORMALITY_TOL


def test_numeric_frame_spans_the_analytic_subspace():
    rng = np.random.default_rng(41)
    for bundle in _bundles():
        for p in sample_safe_points(bundle, rng, 10):
            ana = bundle.frame(p).vectors
            num = bundle.frame(p, GAUGE_NUMERIC).vectors
            sv = np.linalg.svd(ana.conj().T @ num, compute_uv=False)
            assert np.min(sv) > 1.0 - 1e-10, bundle.id


def test_numeric_alignment_is_polar():
    """Post-alignment overlap with the reference is Hermitian positive-definite."""
    rng = np.random.default_rng(42)
    bundle = make_scenario("sr-monopole")
    for p in sample_safe_points(bundle, rng, 10):
        ref = bundle.frame(p)
        num = dark_frame_numeric(evaluate_rabi(bundle.rabi, p), ref)
        overlap = num.vectors.conj().T @ ref.vectors
        assert np.max(np.abs(overlap - overlap.conj().T)) < 1e-10
        assert np.min(np.linalg.eigvalsh(0.5 * (overlap + overlap.conj().T))) > 0.0
        assert num.gauge == GAUGE_NUMERIC


def test_coupling_matrix_structure():
    bundle = make_scenario("rb-monopole-jx")
    values = evaluate_rabi(bundle.rabi, (1.0, 0.75, 0.5))
    coupling = coupling_hamiltonian(values, bundle.scheme, hbar=2.0)
    h = coupling.matrix
    assert h.shape == (7, 7)
    assert coupling.n_ground == 5 and coupling.n_excited == 2
    assert np.max(np.abs(h - h.conj().T)) < 1e-15
    # couplings only connect ground to excited
    assert np.max(np.abs(h[:5, :5])) == 0.0
    assert np.max(np.abs(h[5:, 5:])) == 0.0
    assert np.linalg.matrix_rank(h) <= 4
    half = coupling_hamiltonian(values, bundle.scheme, hbar=1.0).matrix
    assert np.max(np.abs(h - 2.0 * half)) < 1e-15


def test_single_tripod_coupling_is_4x4():
    bundle = make_scenario("u2-tripod")
    values = evaluate_rabi(bundle.rabi, (1.0, 0.75, 0.5))
    coupling = coupling_hamiltonian(values, bundle.scheme)
    assert coupling.matrix.shape == (4, 4)
    assert coupling.n_ground == 3 and coupling.n_excited == 1
    assert bundle.frame((1.0, 0.75, 0.5)).dimension == 2


def test_degenerate_coupling_detected_as_ambiguous():
    # killing one side grows the null space from 3 to 4 dark directions
    bundle = make_scenario("rb-monopole-jx")
    p = (1.0, 0.75, 0.5)
    reference = bundle.frame(p)
    values = evaluate_rabi(bundle.rabi, p)
    values[3:] = 0.0
    with pytest.raises(AmbiguousDarkSpace):
        dark_frame_numeric(values, reference)
