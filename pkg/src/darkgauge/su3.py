"""SU(3) generators, spin-1 operators and Hermitian decompositions.

Conventions: generators ``g_i = lambda_i / 2`` for the eight Gell-Mann
matrices ``lambda_i``, so that ``Tr(g_i g_j) = delta_ij / 2``.  The spin-1
operators act on the ordered basis (+1, 0, -1) along the quantization axis;
the "tilde" variants are the reflection-conjugated set ``S J_a S`` with
``S = diag(1, 1, -1)``, which satisfies the same commutation algebra.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InvalidGenerator, NotHermitian

__all__ = [
    "gellmann_matrix",
    "gellmann_generators",
    "spin1_operators",
    "pauli_matrices",
    "GellmannCoefficients",
    "PauliCoefficients",
    "decompose_hermitian",
    "decompose_hermitian_2x2",
]

_LAMBDA = (
    np.array([[0, 1, 0], [1, 0, 0], [0, 0, 0]], dtype=complex),
    np.array([[0, -1j, 0], [1j, 0, 0], [0, 0, 0]], dtype=complex),
    np.array([[1, 0, 0], [0, -1, 0], [0, 0, 0]], dtype=complex),
    np.array([[0, 0, 1], [0, 0, 0], [1, 0, 0]], dtype=complex),
    np.array([[0, 0, -1j], [0, 0, 0], [1j, 0, 0]], dtype=complex),
    np.array([[0, 0, 0], [0, 0, 1], [0, 1, 0]], dtype=complex),
    np.array([[0, 0, 0], [0, 0, -1j], [0, 1j, 0]], dtype=complex),
    np.diag([1, 1, -2]).astype(complex) / np.sqrt(3.0),
)

_REFLECTION = np.diag([1.0, 1.0, -1.0]).astype(complex)

_HERMITICITY_TOL = 1e-10


def gellmann_matrix(i: int) -> np.ndarray:
    """Return the normalized generator ``g_i = lambda_i / 2``.

    ``i`` runs from 1 to 8; anything else raises :class:`InvalidGenerator`.
    """
    if not isinstance(i, (int, np.integer)) or not 1 <= i <= 8:
        raise InvalidGenerator(f"generator index must be in 1..8, got {i!r}")
    return _LAMBDA[i - 1] / 2.0


def gellmann_generators() -> tuple[np.ndarray, ...]:
    """All eight generators ``(g_1, ..., g_8)`` in index order."""
    return tuple(m / 2.0 for m in _LAMBDA)


def spin1_operators(hbar: float = 1.0) -> dict[str, np.ndarray]:
    """Spin-1 operators and their reflection-conjugated partners.

    Returns a dict with keys ``jx``, ``jy``, ``jz``, ``jx_tilde``,
    ``jy_tilde``.  In terms of the generators:

        jx = sqrt(2) hbar (g1 + g6)      jx_tilde = sqrt(2) hbar (g1 - g6)
        jy = sqrt(2) hbar (g2 + g7)      jy_tilde = sqrt(2) hbar (g2 - g7)
        jz = hbar diag(1, 0, -1)

    ``jz`` is invariant under the reflection, so no tilde partner is listed.
    The tilde triple (jx_tilde, jy_tilde, jz) obeys the standard angular
    momentum commutation relations with the same structure constants.
    """
    g = gellmann_generators()
    s2 = np.sqrt(2.0) * hbar
    return {
        "jx": s2 * (g[0] + g[5]),
        "jy": s2 * (g[1] + g[6]),
        "jz": hbar * np.diag([1.0, 0.0, -1.0]).astype(complex),
        "jx_tilde": s2 * (g[0] - g[5]),
        "jy_tilde": s2 * (g[1] - g[6]),
    }


def reflection_matrix() -> np.ndarray:
    """The diag(1, 1, -1) conjugation relating the two operator sets."""
    return _REFLECTION.copy()


def pauli_matrices() -> dict[str, np.ndarray]:
    """Pauli matrices for two-level dark manifolds."""
    return {
        "x": np.array([[0, 1], [1, 0]], dtype=complex),
        "y": np.array([[0, -1j], [1j, 0]], dtype=complex),
        "z": np.array([[1, 0], [0, -1]], dtype=complex),
    }


@dataclass(frozen=True)
class GellmannCoefficients:
    """Expansion ``m = c0 * I + sum_i c_i g_i`` of a 3x3 Hermitian matrix."""

    c0: float
    c: tuple[float, float, float, float, float, float, float, float]

    def reconstruct(self) -> np.ndarray:
        m = self.c0 * np.eye(3, dtype=complex)
        for ci, gi in zip(self.c, gellmann_generators()):
            m = m + ci * gi
        return m


@dataclass(frozen=True)
class PauliCoefficients:
    """Expansion ``m = c0 * I + sum_a c_a sigma_a / 2`` of a 2x2 Hermitian matrix.

    The sigma_a / 2 normalization mirrors the SU(3) convention, so ``c_a``
    for a charge matrix reads directly as twice the coefficient of sigma_a.
    """

    c0: float
    c: tuple[float, float, float]

    def reconstruct(self) -> np.ndarray:
        pauli = pauli_matrices()
        m = self.c0 * np.eye(2, dtype=complex)
        for ca, key in zip(self.c, ("x", "y", "z")):
            m = m + ca * pauli[key] / 2.0
        return m


def _require_hermitian(m: np.ndarray, shape: tuple[int, int]) -> np.ndarray:
    m = np.asarray(m, dtype=complex)
    if m.shape != shape:
        raise NotHermitian(f"expected a {shape[0]}x{shape[1]} matrix, got shape {m.shape}")
    residual = np.linalg.norm(m - m.conj().T)
    if residual > _HERMITICITY_TOL:
        raise NotHermitian(f"Hermiticity residual {residual:.3e} exceeds {_HERMITICITY_TOL:.1e}")
    return m


def decompose_hermitian(m: np.ndarray) -> GellmannCoefficients:
    """Decompose a 3x3 Hermitian matrix over the identity and g_1..g_8.

    Uses the trace inner product: ``c0 = Tr(m) / 3`` and ``c_i = 2 Tr(g_i m)``
    (real by Hermiticity).  Raises :class:`NotHermitian` above the 1e-10
    residual tolerance.
    """
    m = _require_hermitian(m, (3, 3))
    c0 = float(np.trace(m).real) / 3.0
    coeffs = tuple(float((2.0 * np.trace(gi @ m)).real) for gi in gellmann_generators())
    return GellmannCoefficients(c0=c0, c=coeffs)


def decompose_hermitian_2x2(m: np.ndarray) -> PauliCoefficients:
    """Pauli-basis analogue of :func:`decompose_hermitian` for 2x2 matrices."""
    m = _require_hermitian(m, (2, 2))
    c0 = float(np.trace(m).real) / 2.0
    pauli = pauli_matrices()
    coeffs = tuple(float(np.trace(pauli[key] @ m).real) for key in ("x", "y", "z"))
    return PauliCoefficients(c0=c0, c=coeffs)
