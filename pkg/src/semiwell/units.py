"""Conversions between physical well parameters and dimensionless form.

hbar is a field on the well description rather than a global so natural
unit systems (hbar = 1) coexist with SI in one process.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .dimensionless import WellStrength
from .errors import DomainError

HBAR_SI = 1.054571817e-34  # J s
ELECTRON_MASS_SI = 9.1093837015e-31  # kg
EV_SI = 1.602176634e-19  # J
NM_SI = 1e-9  # m


@dataclass(frozen=True)
class PhysicalWell:
    """Particle mass, well width and depth in mutually consistent units."""

    mass: float
    width_a: float
    depth_v0: float
    hbar: float = HBAR_SI

    def __post_init__(self) -> None:
        for label, value in (
            ("mass", self.mass),
            ("width_a", self.width_a),
            ("depth_v0", self.depth_v0),
            ("hbar", self.hbar),
        ):
            if not (math.isfinite(value) and value > 0.0):
                raise DomainError(f"{label} must be finite and positive, got {value!r}")


def strength_from_physical(well: PhysicalWell) -> WellStrength:
    """z0 = sqrt(2 m V0) a / hbar for a physical well."""
    z0 = math.sqrt(2.0 * well.mass * well.depth_v0) * well.width_a / well.hbar
    if not math.isfinite(z0) or z0 > 1e300:
        raise DomainError(
            "well parameters overflow the dimensionless strength; "
            "check units for consistency"
        )
    return WellStrength(z0)


def energy_from_z(z: float, well: PhysicalWell) -> float:
    """E = hbar^2 z^2 / (2 m a^2), in the energy unit of the well's depth."""
    z0 = strength_from_physical(well).z0
    if not 0.0 < z < z0:
        raise DomainError(f"z must lie in (0, z0): z={z!r}, z0={z0!r}")
    return (well.hbar * z) ** 2 / (2.0 * well.mass * well.width_a**2)


def critical_depth(mass: float, width_a: float, hbar: float = HBAR_SI) -> float:
    """Depth pi^2 hbar^2 / (8 m a^2) below which the well holds no state.

    At exactly this depth z0 = pi/2 and the would-be state merges with the
    continuum, so the count is still zero.
    """
    for label, value in (("mass", mass), ("width_a", width_a), ("hbar", hbar)):
        if not (math.isfinite(value) and value > 0.0):
            raise DomainError(f"{label} must be finite and positive, got {value!r}")
    return math.pi**2 * hbar**2 / (8.0 * mass * width_a**2)
