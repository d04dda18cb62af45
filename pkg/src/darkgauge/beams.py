"""Idealized laser fields and the tripod angle/phase parametrization.

Points are plain 3-sequences (x, y, z) in units of the transverse beam scale.
Beam models are the near-axis ideal forms: a vortex beam with amplitude
proportional to the cylindrical radius and phase winding, a first-order
nodal-plane beam with amplitude proportional to z, and plane waves.  Full
Gaussian envelopes and Gouy phases are deliberately out of scope; the gauge
structure studied here is built on exactly these ideal profiles.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DegenerateCoupling

__all__ = [
    "LAGUERRE_GAUSS",
    "HERMITE_GAUSS",
    "PLANE_WAVE",
    "SCHEME_RUBIDIUM",
    "SCHEME_STRONTIUM",
    "SCHEME_SINGLE",
    "SCHEME_LAMBDA",
    "scheme_slots",
    "BeamSpec",
    "RabiConfiguration",
    "evaluate_rabi",
    "TripodLeg",
    "TripodParams",
    "TripodLegGradients",
    "TripodGradients",
    "parametrize_leg",
    "parametrize_rabi",
    "synthesize_leg",
    "synthesize_rabi",
    "spherical_coordinates",
    "spherical_basis",
]

LAGUERRE_GAUSS = "laguerre-gauss-ideal"
HERMITE_GAUSS = "hermite-gauss-ideal"
PLANE_WAVE = "plane-wave"

SCHEME_RUBIDIUM = "rubidium-2-tripod"
SCHEME_STRONTIUM = "strontium-2-tripod"
SCHEME_SINGLE = "single-tripod"
SCHEME_LAMBDA = "lambda"

_SLOTS = {
    SCHEME_RUBIDIUM: (("l", 1), ("l", 2), ("l", 3), ("r", 1), ("r", 2), ("r", 3)),
    SCHEME_STRONTIUM: (("l", 1), ("l", 2), ("l", 3), ("r", 1), ("r", 2), ("r", 3)),
    SCHEME_SINGLE: (("l", 1), ("l", 2), ("l", 3)),
    SCHEME_LAMBDA: (("l", 1), ("l", 2)),
}


def scheme_slots(scheme: str) -> tuple[tuple[str, int], ...]:
    """Ordered (side, index) keys for a coupling scheme."""
    try:
        return _SLOTS[scheme]
    except KeyError:
        raise ValueError(f"unknown scheme {scheme!r}") from None


def spherical_coordinates(p) -> tuple[float, float, float, float]:
    """(r, rho, theta, phi_az) for a Cartesian point."""
    x, y, z = (float(v) for v in p)
    rho = np.hypot(x, y)
    r = np.sqrt(x * x + y * y + z * z)
    return r, rho, np.arctan2(rho, z), np.arctan2(y, x)


def spherical_basis(p) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Unit vectors (e_r, e_theta, e_phi) at a point off the z-axis."""
    _, _, th, ph = spherical_coordinates(p)
    st, ct = np.sin(th), np.cos(th)
    cp, sp = np.cos(ph), np.sin(ph)
    er = np.array([st * cp, st * sp, ct])
    eth = np.array([ct * cp, ct * sp, -st])
    eph = np.array([-sp, cp, 0.0])
    return er, eth, eph


@dataclass(frozen=True)
class BeamSpec:
    """One idealized beam.

    ``winding`` applies to the vortex kind only; ``prefactor`` scales plane
    waves only (it carries the mixing-angle weights of constant-amplitude
    configurations).  ``scale`` is the transverse length unit for the two
    structured kinds.
    """

    kind: str
    amplitude: float = 1.0
    winding: int = 0
    wavevector: tuple[float, float, float] = (0.0, 0.0, 0.0)
    scale: float = 1.0
    phase_offset: float = 0.0
    prefactor: float = 1.0

    def evaluate(self, p) -> complex:
        x, y, z = (float(v) for v in p)
        kx, ky, kz = self.wavevector
        phase = kx * x + ky * y + kz * z + self.phase_offset
        if self.kind == LAGUERRE_GAUSS:
            rho = np.hypot(x, y)
            phi_az = np.arctan2(y, x)
            return self.amplitude * (rho / self.scale) * np.exp(1j * (phase + self.winding * phi_az))
        if self.kind == HERMITE_GAUSS:
            return self.amplitude * (z / self.scale) * np.exp(1j * phase)
        if self.kind == PLANE_WAVE:
            return self.prefactor * self.amplitude * np.exp(1j * phase)
        raise ValueError(f"unknown beam kind {self.kind!r}")


@dataclass(frozen=True)
class RabiConfiguration:
    """Beams keyed by the ordered (side, index) slots of a coupling scheme."""

    scheme: str
    beams: tuple[BeamSpec, ...]

    def __post_init__(self) -> None:
        slots = scheme_slots(self.scheme)
        if len(self.beams) != len(slots):
            raise ValueError(
                f"scheme {self.scheme!r} takes {len(slots)} beams, got {len(self.beams)}"
            )

    @property
    def slots(self) -> tuple[tuple[str, int], ...]:
        return scheme_slots(self.scheme)


def evaluate_rabi(config: RabiConfiguration, p) -> np.ndarray:
    """Complex Rabi amplitudes at a point, in slot order."""
    return np.array([beam.evaluate(p) for beam in config.beams], dtype=complex)


@dataclass(frozen=True)
class TripodLeg:
    """Angle/phase parametrization of one tripod's three amplitudes.

    The magnitude convention keeps theta and phi in [0, pi/2] and pushes all
    signs into the phases; scenario presets use smooth signed extensions of
    the same formulas and may exceed those ranges.
    """

    omega: float
    theta: float
    phi: float
    s: tuple[float, float, float]


@dataclass(frozen=True)
class TripodParams:
    l: TripodLeg
    r: TripodLeg


@dataclass(frozen=True)
class TripodLegGradients:
    """Cartesian gradients of one leg's parametrization fields."""

    theta: np.ndarray
    phi: np.ndarray
    s: np.ndarray  # rows are grad S_1, grad S_2, grad S_3


@dataclass(frozen=True)
class TripodGradients:
    l: TripodLegGradients
    r: TripodLegGradients


def parametrize_leg(values, side: str = "") -> TripodLeg:
    """Convert three complex amplitudes to (omega, theta, phi, phases).

    omega = sqrt(sum |v_i|^2); theta = arccos(|v_3|/omega);
    phi = atan2(|v_2|, |v_1|) (0 when both vanish); s_i = arg(v_i).
    Raises DegenerateCoupling when all three amplitudes are zero.
    """
    v = np.asarray(values, dtype=complex)
    if v.shape != (3,):
        raise ValueError("a tripod leg takes exactly three amplitudes")
    mags = np.abs(v)
    omega = float(np.sqrt(np.sum(mags * mags)))
    if omega == 0.0:
        tag = f" on side {side}" if side else ""
        raise DegenerateCoupling(f"all three amplitudes vanish{tag}")
    theta = float(np.arccos(np.clip(mags[2] / omega, -1.0, 1.0)))
    phi = float(np.arctan2(mags[1], mags[0]))
    s = tuple(float(np.angle(vi)) for vi in v)
    return TripodLeg(omega=omega, theta=theta, phi=phi, s=s)


def parametrize_rabi(values) -> TripodParams:
    """Parametrize six amplitudes in slot order (l1, l2, l3, r1, r2, r3)."""
    v = np.asarray(values, dtype=complex)
    if v.shape != (6,):
        raise ValueError("expected six amplitudes")
    return TripodParams(l=parametrize_leg(v[:3], "l"), r=parametrize_leg(v[3:], "r"))


def synthesize_leg(leg: TripodLeg) -> np.ndarray:
    """Rebuild the three complex amplitudes from a leg's parametrization."""
    st, ct = np.sin(leg.theta), np.cos(leg.theta)
    mags = leg.omega * np.array([st * np.cos(leg.phi), st * np.sin(leg.phi), ct])
    return mags * np.exp(1j * np.asarray(leg.s))


def synthesize_rabi(params: TripodParams) -> np.ndarray:
    return np.concatenate([synthesize_leg(params.l), synthesize_leg(params.r)])
