"""Root counting and the safeguarded Newton solve for the full spectrum.

The number of bound states follows from where the circle of radius z0
meets the bands with cot(z) < 0: with t = 2 z0 / pi,

    N = 0                 if t <= 1,
    N = floor((t + 1)/2)  otherwise,

except at the degenerate thresholds t = 3, 5, 7, ... where the circle is
tangent to a band edge and the grazing intersection z = z0 carries no
normalizable state, so N drops back by one.  Those thresholds are snapped
to within 1e-12 relative.

Each root is found by Newton's method on the smooth per-band surrogate
f(z) = z + (-1)^m z0 sin(z), started from the band midpoint and kept
honest by a shrinking sign-change bracket: any step that leaves the
bracket, or lands where |f'| is negligible, is replaced by a bisection
step.  Every routine here is a pure function, so solves for different
bands or depths can run concurrently without shared state.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .dimensionless import (
    BoundState,
    WellStrength,
    energy_ratio,
    residual_interval,
    residual_interval_derivative,
    strength_value,
)
from .errors import ConvergenceError, DomainError

_HALF_PI = math.pi / 2.0

# relative snap width for the tangency thresholds 2 z0 / pi = 3, 5, 7, ...
_THRESHOLD_SNAP = 1e-12

# a Newton step is refused when |f'| falls below this
_DERIVATIVE_FLOOR = 1e-14


@dataclass(frozen=True)
class SolveConfig:
    """Tolerances for the Newton solve.

    root_tol is the absolute step-size target (widened internally to a few
    ulps of the iterate when z is large enough that 1e-12 is below float
    resolution).  residual_tol double-checks |f| at the accepted root.
    """

    root_tol: float = 1e-12
    residual_tol: float = 1e-9
    max_newton_iters: int = 50

    def __post_init__(self) -> None:
        if not (math.isfinite(self.root_tol) and self.root_tol > 0.0):
            raise DomainError(f"root_tol must be positive, got {self.root_tol!r}")
        if not (math.isfinite(self.residual_tol) and self.residual_tol > 0.0):
            raise DomainError(
                f"residual_tol must be positive, got {self.residual_tol!r}"
            )
        if self.max_newton_iters < 1:
            raise DomainError(
                f"max_newton_iters must be >= 1, got {self.max_newton_iters!r}"
            )


@dataclass(frozen=True)
class NewtonTrace:
    """Iterate history of one root solve.

    iterates[0] is the starting guess; each later entry is one accepted
    step (Newton where safe, bisection otherwise).  fallback_bisections
    counts the replaced steps.
    """

    iterates: tuple[float, ...]
    converged: bool
    fallback_bisections: int


def count_bound_states(z0: WellStrength | float) -> int:
    """Number of bound states held by a well of strength z0.

    Always at least one for z0 > pi/2; exactly zero at and below pi/2.
    At the degenerate thresholds z0 = m pi / 2 (odd m > 1) the grazing
    solution z = z0 is excluded, which lowers the count by one relative
    to the generic formula.
    """
    v = strength_value(z0)
    t = 2.0 * v / math.pi
    if t <= 1.0:
        return 0
    nearest = round(t)
    if (
        nearest % 2 == 1
        and nearest > 1
        and abs(t - nearest) <= _THRESHOLD_SNAP * max(1.0, t)
    ):
        return (nearest - 1) // 2
    return int(math.floor((t + 1.0) / 2.0))


def bracket_for(m: int, z0: WellStrength | float) -> tuple[float, float]:
    """Open interval ((2m - 1) pi / 2, m pi) bracketing the m-th root.

    Raises DomainError when m exceeds the state count for this z0, since
    the band then holds no root to bracket.
    """
    v = strength_value(z0)
    if m < 1:
        raise DomainError(f"interval index must be >= 1, got {m}")
    n = count_bound_states(v)
    if m > n:
        raise DomainError(
            f"band m={m} holds no root: z0={v!r} supports {n} bound state(s)"
        )
    return ((2 * m - 1) * _HALF_PI, m * math.pi)


def newton_solve(
    m: int,
    z0: WellStrength | float,
    config: SolveConfig = SolveConfig(),
) -> tuple[BoundState, NewtonTrace]:
    """Solve for the m-th root of a well of strength z0.

    Newton's method on f(z) = z + (-1)^m z0 sin(z) from the band midpoint
    (4m - 1) pi / 4.  The bracket shrinks around the root using the sign
    of f (f' > 0 throughout the band, so f is negative left of the root
    and positive right of it); a candidate step outside the open bracket,
    or taken where |f'| < 1e-14, is discarded for the bracket midpoint.
    Terminates when the step size drops below config.root_tol (or a few
    ulps of z if that is larger), then double-checks the residual.
    """
    v = strength_value(z0)
    lo, hi = bracket_for(m, v)
    z = (4 * m - 1) * math.pi / 4.0
    iterates = [z]
    fallbacks = 0
    converged = False

    for _ in range(config.max_newton_iters):
        fz = residual_interval(z, m, v)
        if fz == 0.0:
            converged = True
            break
        if fz < 0.0:
            lo = z
        else:
            hi = z
        dfz = residual_interval_derivative(z, m, v)
        if abs(dfz) < _DERIVATIVE_FLOOR:
            candidate = 0.5 * (lo + hi)
            fallbacks += 1
        else:
            candidate = z - fz / dfz
            if candidate == z:
                # correction below float resolution: z is the root
                converged = True
                break
            if not lo < candidate < hi:
                candidate = 0.5 * (lo + hi)
                fallbacks += 1
        iterates.append(candidate)
        step = abs(candidate - z)
        z = candidate
        if step < max(config.root_tol, 4.0 * math.ulp(z)):
            converged = True
            break

    if not converged:
        raise ConvergenceError(
            f"no convergence after {config.max_newton_iters} iterations "
            f"for m={m}, z0={v!r}"
        )
    # residual_tol is the floor; a deliberately loose root_tol widens the
    # double-check so a coarse solve is not rejected as a failure
    residual_cap = max(config.residual_tol, 10.0 * config.root_tol * max(1.0, v))
    if abs(residual_interval(z, m, v)) > residual_cap:
        raise ConvergenceError(
            f"step size converged but |f(z)| exceeds tolerance "
            f"for m={m}, z0={v!r}, z={z!r}"
        )

    # Just above a degenerate threshold the true root is closer to z0 than
    # one ulp; pin it inside (0, z0) so the decay constant stays positive.
    if z >= v:
        z = math.nextafter(v, 0.0)
    z_tilde = math.sqrt((v - z) * (v + z))
    state = BoundState(
        m=m,
        z=z,
        z_tilde=z_tilde,
        energy_ratio=energy_ratio(z, v),
    )
    return state, NewtonTrace(
        iterates=tuple(iterates),
        converged=converged,
        fallback_bisections=fallbacks,
    )


def solve_all(
    z0: WellStrength | float,
    config: SolveConfig = SolveConfig(),
) -> list[BoundState]:
    """All bound states of a well of strength z0, in increasing energy.

    One Newton solve per band; the per-band brackets are disjoint, so the
    returned roots are strictly increasing by construction.
    """
    v = strength_value(z0)
    return [
        newton_solve(m, v, config)[0]
        for m in range(1, count_bound_states(v) + 1)
    ]
