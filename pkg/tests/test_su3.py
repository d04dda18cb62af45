from __future__ import annotations

import numpy as np
import pytest

from darkgauge import (
    InvalidGenerator,
    NotHermitian,
    decompose_hermitian,
    decompose_hermitian_2x2,
    gellmann_generators,
    gellmann_matrix,
    pauli_matrices,
    reflection_matrix,
    spin1_operators,
)

ROUND_TRIP_TOL = 1e-12


def test_generator_trace_orthonormality():
    gens = gellmann_generators()
    for i, gi in enumerate(gens):
        for j, gj in enumerate(gens):
            want = 0.5 if i == j else 0.0
            tr = np.trace(gi @ gj)
            assert abs(tr - want) < 1e-14


def test_generators_traceless_hermitian():
    for g in gellmann_generators():
        assert abs(np.trace(g)) < 1e-15
        assert np.array_equal(g, g.conj().T)


def test_generator_index_contract():
    for i in range(1, 9):
        assert np.array_equal(gellmann_matrix(i), gellmann_generators()[i - 1])
    with pytest.raises(InvalidGenerator):
        gellmann_matrix(0)
    with pytest.raises(InvalidGenerator):
        gellmann_matrix(9)


def test_spin1_exact_generator_combinations():
    # exact arithmetic, not approximate: the entries are 0, +-1/sqrt2 on both sides
    for hbar in (1.0, 2.0):
        ops = spin1_operators(hbar)
        g1, g6 = gellmann_matrix(1), gellmann_matrix(6)
        assert np.array_equal(ops["jx"], np.sqrt(2.0) * hbar * (g1 + g6))
        assert np.array_equal(ops["jx_tilde"], np.sqrt(2.0) * hbar * (g1 - g6))


def test_spin1_commutators():
    for hbar in (1.0, 0.5):
        ops = spin1_operators(hbar)
        jx, jy, jz = ops["jx"], ops["jy"], ops["jz"]
        jxt, jyt = ops["jx_tilde"], ops["jy_tilde"]
        assert np.max(np.abs(jx @ jy - jy @ jx - 1j * hbar * jz)) < 1e-12
        assert np.max(np.abs(jxt @ jyt - jyt @ jxt - 1j * hbar * jz)) < 1e-12
        assert np.max(np.abs(jyt @ jz - jz @ jyt - 1j * hbar * jxt)) < 1e-12


def test_reflection_conjugates_plain_into_tilde():
    ops = spin1_operators()
    m = reflection_matrix()
    assert np.array_equal(m @ ops["jx"] @ m, ops["jx_tilde"])
    assert np.array_equal(m @ ops["jy"] @ m, ops["jy_tilde"])
    assert np.array_equal(m @ ops["jz"] @ m, ops["jz"])


def test_decomposition_round_trip():
    rng = np.random.default_rng(20)
    for _ in range(100):
        a = rng.normal(size=(3, 3)) + 1j * rng.normal(size=(3, 3))
        h = 0.5 * (a + a.conj().T)
        co = decompose_hermitian(h)
        assert np.max(np.abs(co.reconstruct() - h)) < ROUND_TRIP_TOL


def test_decomposition_round_trip_2x2():
    rng = np.random.default_rng(21)
    for _ in range(100):
        a = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
        h = 0.5 * (a + a.conj().T)
        co = decompose_hermitian_2x2(h)
        assert np.max(np.abs(co.reconstruct() - h)) < ROUND_TRIP_TOL


def test_known_decompositions():
    co = decompose_hermitian(np.diag([1.0, 0.0, -1.0]).astype(complex))
    assert abs(co.c0) < 1e-15
    assert abs(co.c[2] - 1.0) < 1e-14
    assert abs(co.c[7] - np.sqrt(3.0)) < 1e-14
    assert np.max(np.abs(np.delete(co.c, [2, 7]))) < 1e-15

    co = decompose_hermitian(np.eye(3, dtype=complex))
    assert abs(co.c0 - 1.0) < 1e-15
    assert np.max(np.abs(co.c)) < 1e-15


def test_pauli_basis():
    sig = pauli_matrices()
    assert np.array_equal(sig["x"], np.array([[0, 1], [1, 0]], dtype=complex))
    comm = sig["x"] @ sig["y"] - sig["y"] @ sig["x"]
    assert np.max(np.abs(comm - 2j * sig["z"])) < 1e-15


def test_non_hermitian_rejected():
    bad = np.array([[0.0, 1.0], [0.0, 0.0]], dtype=complex)
    with pytest.raises(NotHermitian):
        decompose_hermitian_2x2(bad)
    bad3 = np.zeros((3, 3), dtype=complex)
    bad3[0, 1] = 1.0
    with pytest.raises(NotHermitian):
        decompose_hermitian(bad3)
    # a 1e-11 asymmetry is inside the documented tolerance
    almost = np.eye(3, dtype=complex)
    almost[0, 1] = 1e-11
    decompose_hermitian(almost)
