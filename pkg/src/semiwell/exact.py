"""The closed-form family of wells with an exactly solvable member.

Whenever sin(2z) = -1 and z_tilde = z, both the eigenvalue equation and
the circle constraint hold with elementary values.  That happens at

    z_n = (8n + 3) pi / 4,      z0_n = sqrt(2) z_n,      n = 0, 1, 2, ...

where the state sits exactly halfway up the well, E / V0 = 1/2, and the
normalization integral collapses to a rational expression.  In natural
units (hbar = 1, m = 1/2, a = 1) the matching depth is
V0 = (8n + 3)^2 pi^2 / 16.  These members double as an analytic
cross-check of the Newton solver.

Note the index n ranges over wells, not energy levels: each record pairs
one energy with its own specially chosen depth z0_n, so different n are
eigenstates of different wells, never a ladder of levels in a single one.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError
from .solver import SolveConfig, solve_all


@dataclass(frozen=True)
class ExactSolutionRecord:
    """Closed-form data for family member n.

    amplitude_sq_times_a is A^2 a, the squared normalization constant made
    dimensionless with the well width; p_inside is the probability of
    finding the particle inside [0, a].
    """

    n: int
    z: float
    z0: float
    z_tilde: float
    energy_over_v0: float
    v0_natural: float
    amplitude_sq_times_a: float
    p_inside: float


def exact_solution(n: int) -> ExactSolutionRecord:
    """Closed-form record for the n-th exactly solvable well."""
    if n < 0:
        raise DomainError(f"family index must be >= 0, got {n}")
    odd = 8 * n + 3
    z = odd * math.pi / 4.0
    return ExactSolutionRecord(
        n=n,
        z=z,
        z0=math.sqrt(2.0) * z,
        z_tilde=z,
        energy_over_v0=0.5,
        v0_natural=odd * odd * math.pi * math.pi / 16.0,
        amplitude_sq_times_a=2.0 * odd * math.pi / (odd * math.pi + 4.0),
        p_inside=(odd * math.pi + 2.0) / (odd * math.pi + 4.0),
    )


def cross_validate(n: int, config: SolveConfig = SolveConfig()) -> bool:
    """Does the Newton solver reproduce family member n?

    Solves the full spectrum at z0 = sqrt(2) (8n + 3) pi / 4 and checks
    that one of the returned roots equals (8n + 3) pi / 4 to within the
    solver's root tolerance (plus a few ulps at large z).  The member
    lands in band m = 2n + 1: its z sits in the second-quadrant part of
    ((4n + 1) pi / 2, (2n + 1) pi).
    """
    record = exact_solution(n)
    tol = 10.0 * config.root_tol + 8.0 * math.ulp(record.z)
    return any(
        abs(state.z - record.z) <= tol for state in solve_all(record.z0, config)
    )
