"""Coupling Hamiltonians and dark (null) frames, analytic and numeric.

A coupling scheme pairs ground and excited manifolds through complex Rabi
amplitudes; its dark states span the null space of the excited-from-ground
coupling block.  The double-tripod scheme has five ground and two excited
levels sharing the middle ground state; its three dark states are ordered
(D_l, D_0, D_r) so the connection entry between the two outer states
vanishes identically.  The single tripod carries two dark states, exposed
in two bundled gauges, and the two-level lambda scheme carries one.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .beams import (
    SCHEME_LAMBDA,
    SCHEME_RUBIDIUM,
    SCHEME_SINGLE,
    SCHEME_STRONTIUM,
    TripodLeg,
    TripodParams,
)
from .errors import AmbiguousDarkSpace, DegenerateCoupling

__all__ = [
    "GAUGE_TRIPOD",
    "GAUGE_PAIR12",
    "GAUGE_PAIR13",
    "GAUGE_NUMERIC",
    "CouplingHamiltonian",
    "DarkFrame",
    "coupling_hamiltonian",
    "dark_frame_analytic",
    "dark_frame_numeric",
]

GAUGE_TRIPOD = "analytic-tripod"
GAUGE_PAIR12 = "analytic-pair12"
GAUGE_PAIR13 = "analytic-pair13"
GAUGE_NUMERIC = "aligned-numeric"

_LEVELS = {
    SCHEME_RUBIDIUM: (5, 2),
    SCHEME_STRONTIUM: (5, 2),
    SCHEME_SINGLE: (3, 1),
    SCHEME_LAMBDA: (2, 1),
}


@dataclass(frozen=True)
class CouplingHamiltonian:
    matrix: np.ndarray
    scheme: str
    n_ground: int
    n_excited: int


@dataclass(frozen=True)
class DarkFrame:
    """Orthonormal dark vectors as columns, with the gauge that fixed them."""

    vectors: np.ndarray
    gauge: str

    @property
    def dimension(self) -> int:
        return self.vectors.shape[1]


def _coupling_block(rabi: np.ndarray) -> np.ndarray:
    """Excited-from-ground block; scheme inferred from the amplitude count."""
    v = np.asarray(rabi, dtype=complex)
    if v.shape == (6,):
        block = np.zeros((2, 5), dtype=complex)
        block[0, :3] = v[:3]
        # second tripod runs backwards through the shared middle state
        block[1, 2], block[1, 3], block[1, 4] = v[5], v[4], v[3]
        return block
    if v.shape == (3,):
        return v.reshape(1, 3)
    if v.shape == (2,):
        return v.reshape(1, 2)
    raise ValueError(f"expected 2, 3 or 6 amplitudes, got shape {v.shape}")


def coupling_hamiltonian(rabi, scheme: str, hbar: float = 1.0) -> CouplingHamiltonian:
    """Assemble the Hermitian atom-light coupling matrix for a scheme."""
    try:
        n_ground, n_excited = _LEVELS[scheme]
    except KeyError:
        raise ValueError(f"unknown scheme {scheme!r}") from None
    block = _coupling_block(rabi)
    if block.shape != (n_excited, n_ground):
        raise ValueError(f"amplitude count does not match scheme {scheme!r}")
    n = n_ground + n_excited
    h = np.zeros((n, n), dtype=complex)
    h[n_ground:, :n_ground] = -hbar * block
    h = h + h.conj().T
    return CouplingHamiltonian(matrix=h, scheme=scheme, n_ground=n_ground, n_excited=n_excited)


def _tripod_frame(params: TripodParams) -> np.ndarray:
    pl, pr = params.l, params.r
    e31l = np.exp(1j * (pl.s[2] - pl.s[0]))
    e32l = np.exp(1j * (pl.s[2] - pl.s[1]))
    e31r = np.exp(1j * (pr.s[2] - pr.s[0]))
    e32r = np.exp(1j * (pr.s[2] - pr.s[1]))
    d = np.zeros((7, 3), dtype=complex)
    d[0, 0] = np.sin(pl.phi) * e31l
    d[1, 0] = -np.cos(pl.phi) * e32l
    d[4, 2] = np.sin(pr.phi) * e31r
    d[3, 2] = -np.cos(pr.phi) * e32r
    sl, cl = np.sin(pl.theta), np.cos(pl.theta)
    sr, cr = np.sin(pr.theta), np.cos(pr.theta)
    # renormalized middle vector; the limit at one vanishing mixing angle is
    # finite, only the doubly-degenerate case is rejected
    v = np.zeros(7, dtype=complex)
    v[0] = cl * sr * np.cos(pl.phi) * e31l
    v[1] = cl * sr * np.sin(pl.phi) * e32l
    v[2] = -sl * sr
    v[3] = sl * cr * np.sin(pr.phi) * e32r
    v[4] = sl * cr * np.cos(pr.phi) * e31r
    norm = np.linalg.norm(v)
    if norm < 1e-15:
        raise DegenerateCoupling("middle dark vector undefined: both mixing angles vanish")
    d[:, 1] = v / norm
    return d


_BALANCE_TOL = 1e-9


def _require_balanced(leg: TripodLeg, gauge: str) -> None:
    if abs(leg.phi - np.pi / 4) > _BALANCE_TOL:
        raise ValueError(f"gauge {gauge!r} requires a balanced vortex pair (phi = pi/4)")


def _pair12_frame(leg: TripodLeg) -> np.ndarray:
    _require_balanced(leg, GAUGE_PAIR12)
    e31 = np.exp(1j * (leg.s[2] - leg.s[0]))
    e32 = np.exp(1j * (leg.s[2] - leg.s[1]))
    st, ct = np.sin(leg.theta), np.cos(leg.theta)
    d = np.zeros((4, 2), dtype=complex)
    d[0, 0] = e31 / np.sqrt(2.0)
    d[1, 0] = -e32 / np.sqrt(2.0)
    d[0, 1] = ct * e31 / np.sqrt(2.0)
    d[1, 1] = ct * e32 / np.sqrt(2.0)
    d[2, 1] = -st
    return d


def _pair13_frame(leg: TripodLeg) -> np.ndarray:
    _require_balanced(leg, GAUGE_PAIR13)
    e21 = np.exp(1j * (leg.s[1] - leg.s[0]))
    e23 = np.exp(1j * (leg.s[1] - leg.s[2]))
    st, ct = np.sin(leg.theta), np.cos(leg.theta)
    n = np.sqrt(1.0 + ct * ct)
    d = np.zeros((4, 2), dtype=complex)
    d[0, 0] = np.sqrt(2.0) * ct * e21 / n
    d[2, 0] = -st * e23 / n
    d[0, 1] = np.sqrt(2.0) * st * st * e21 / (2.0 * n)
    d[2, 1] = 2.0 * st * ct * e23 / (2.0 * n)
    d[1, 1] = -np.sqrt(2.0) * (1.0 + ct * ct) / (2.0 * n)
    return d


def dark_frame_analytic(params, gauge: str = GAUGE_TRIPOD) -> DarkFrame:
    """Closed-form dark frame in a fixed gauge.

    ``analytic-tripod`` takes :class:`TripodParams` and returns the 7-level
    frame with columns (D_l, D_0, D_r).  ``analytic-pair12`` and
    ``analytic-pair13`` take a single :class:`TripodLeg` of a balanced
    single tripod and return its two dark states in the two bundled bases.
    Excited components are exactly zero in every case.
    """
    if gauge == GAUGE_TRIPOD:
        if not isinstance(params, TripodParams):
            raise TypeError("analytic-tripod takes TripodParams")
        return DarkFrame(vectors=_tripod_frame(params), gauge=gauge)
    if gauge in (GAUGE_PAIR12, GAUGE_PAIR13):
        if not isinstance(params, TripodLeg):
            raise TypeError(f"{gauge} takes a single TripodLeg")
        build = _pair12_frame if gauge == GAUGE_PAIR12 else _pair13_frame
        return DarkFrame(vectors=build(params), gauge=gauge)
    raise ValueError(f"unknown analytic gauge {gauge!r}")


_RANK_TOL = 1e-12
_OVERLAP_TOL = 1e-8


def dark_frame_numeric(rabi, reference: DarkFrame) -> DarkFrame:
    """Null-space dark frame, gauge-aligned to a reference.

    The null space of the coupling block is computed by SVD and rotated by
    the unitary factor of the polar decomposition of its overlap with the
    reference, leaving that overlap Hermitian positive-definite.  A dark
    space whose dimension differs from the reference's, or one the
    reference cannot resolve, raises AmbiguousDarkSpace.
    """
    block = _coupling_block(np.asarray(rabi, dtype=complex))
    n_excited, n_ground = block.shape
    expected = reference.dimension
    _, sv, vh = np.linalg.svd(block)
    cutoff = _RANK_TOL * sv[0] if sv.size and sv[0] > 0 else 0.0
    rank = int(np.sum(sv > cutoff))
    null_dim = n_ground - rank
    if null_dim != expected:
        raise AmbiguousDarkSpace(
            f"dark space has dimension {null_dim}, reference expects {expected}"
        )
    null = vh.conj().T[:, rank:]
    n_total = reference.vectors.shape[0]
    frame = np.zeros((n_total, expected), dtype=complex)
    frame[:n_ground, :] = null
    overlap = reference.vectors.conj().T @ frame
    x, s_olap, yh = np.linalg.svd(overlap)
    if s_olap.size == 0 or s_olap[-1] < _OVERLAP_TOL:
        raise AmbiguousDarkSpace("reference frame does not resolve the dark space")
    w = yh.conj().T @ x.conj().T
    return DarkFrame(vectors=frame @ w, gauge=GAUGE_NUMERIC)
