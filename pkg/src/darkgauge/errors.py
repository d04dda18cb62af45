"""Exception types raised by the darkgauge package."""


class DarkGaugeError(Exception):
    """Base class for all package-specific errors."""


class InvalidGenerator(DarkGaugeError):
    """Generator index outside 1..8."""


class NotHermitian(DarkGaugeError):
    """Matrix fails the Hermiticity tolerance required for a decomposition."""


class DegenerateCoupling(DarkGaugeError):
    """All coupling amplitudes on one leg vanish; mixing angles are undefined."""


class AmbiguousDarkSpace(DarkGaugeError):
    """Numeric dark subspace has the wrong dimension or cannot be aligned."""


class NearSingularity(DarkGaugeError):
    """Requested point is inside the guard region around a field singularity."""


class NonUnitary(DarkGaugeError):
    """Gauge-transformation matrix fails the unitarity tolerance."""


class ProfileNotConverged(DarkGaugeError):
    """Pole extrapolation of an angular profile fails its convergence check."""


class ExcessiveAzimuthalVariation(DarkGaugeError):
    """Field is not of profile form: azimuthal spread exceeds the bound."""


class UnknownScenario(DarkGaugeError):
    """Scenario identifier not recognized."""
