"""Graphical-solution variants of the eigenvalue equation.

Multiplying sqrt(z0^2 - z^2) = -z cot(z) by sin(z) and using the circle
constraint is a popular shortcut, but the bookkeeping of signs along the
way is easy to fumble.  Four rewritings of the equation as z = z0 g(z)
are implemented here:

    SIN        g(z) = sin(z)         sign of sin dropped and sign of cot lost
    ABS_SIN    g(z) = |sin(z)|       sign of cot lost
    NEG_SIN    g(z) = -sin(z)        wrong branch kept
    CORRECT    g(z) = -sin(z) cos(z) / |cos(z)|

Only CORRECT reproduces the true spectrum and nothing else.  The flawed
forms intersect the line y = z in extra places where cot(z) > 0; those
crossings solve the rewritten equation but not the original one, and
``spurious`` marks them.  Filtering them out recovers the true roots for
SIN-type errors only when no genuine root is also lost, which is what
:func:`filtered_equivalence` checks.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .dimensionless import WellStrength, cot, strength_value
from .errors import DomainError
from .solver import SolveConfig, solve_all

_PROBES_PER_CELL = 64
_HALF_PI = math.pi / 2.0


class VariantKind(enum.Enum):
    SIN = "sin"
    ABS_SIN = "abs-sin"
    NEG_SIN = "neg-sin"
    CORRECT = "correct"


def _g(kind: VariantKind, z: float) -> float:
    if kind is VariantKind.SIN:
        return math.sin(z)
    if kind is VariantKind.ABS_SIN:
        return abs(math.sin(z))
    if kind is VariantKind.NEG_SIN:
        return -math.sin(z)
    c = math.cos(z)
    if c == 0.0:
        raise DomainError(
            f"correct-form right-hand side undefined at cos(z) = 0: z={z!r}"
        )
    return -math.sin(z) * c / abs(c)


def variant_residual(kind: VariantKind, z: float, z0: WellStrength | float) -> float:
    """z - z0 g(z) for the chosen rewriting; zero at an intersection."""
    v = strength_value(z0)
    if not z > 0.0:
        raise DomainError(f"z must be positive, got {z!r}")
    return z - v * _g(kind, z)


@dataclass(frozen=True)
class Intersection:
    """One crossing of y = z with y = z0 g(z), flagged if non-physical."""

    z: float
    spurious: bool


@dataclass(frozen=True)
class VariantReport:
    kind: VariantKind
    intersections: tuple[Intersection, ...]

    @property
    def n_total(self) -> int:
        return len(self.intersections)

    @property
    def n_spurious(self) -> int:
        return sum(1 for i in self.intersections if i.spurious)

    def spurious_positions(self) -> list[int]:
        """1-based positions of the spurious crossings, in increasing z."""
        return [
            pos
            for pos, item in enumerate(self.intersections, start=1)
            if item.spurious
        ]

    def genuine_roots(self) -> list[float]:
        return [i.z for i in self.intersections if not i.spurious]


def _bisect(kind: VariantKind, v: float, lo: float, hi: float) -> float:
    # f changes sign on [lo, hi]; plain bisection, ~50 halvings to float limits
    flo = variant_residual(kind, lo, v)
    tol = 1e-13 * max(1.0, hi)
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        fmid = variant_residual(kind, mid, v)
        if fmid == 0.0:
            return mid
        if (flo < 0.0) == (fmid < 0.0):
            lo, flo = mid, fmid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def enumerate_intersections(
    kind: VariantKind, z0: WellStrength | float
) -> VariantReport:
    """All crossings of y = z with y = z0 g(z) on (0, z0], in increasing z.

    The axis is cut into cells on which g is single-signed and monotone
    enough to probe: width pi for SIN and NEG_SIN, pi/2 for ABS_SIN and
    CORRECT.  Each cell is scanned at 64 interior points and every sign
    change of z - z0 g(z) is refined by bisection.  A crossing is spurious
    when cot(z) > 0 there, i.e. when it fails the original equation.
    Crossings can only occur for z <= z0 since |g| <= 1.
    """
    v = strength_value(z0)
    cell = math.pi if kind in (VariantKind.SIN, VariantKind.NEG_SIN) else _HALF_PI
    found: list[Intersection] = []
    j = 0
    while j * cell < v:
        lo = j * cell
        hi = min((j + 1) * cell, v)
        j += 1
        # nudge off the cell edges: g may be non-smooth or z may be 0 there
        pad = 1e-9 * cell
        a = lo + pad
        b = hi - pad
        if not a < b:
            continue
        step = (b - a) / _PROBES_PER_CELL
        prev_t = a
        prev_f = variant_residual(kind, a, v)
        for i in range(1, _PROBES_PER_CELL + 1):
            t = a + i * step
            f = variant_residual(kind, t, v)
            root: float | None = None
            if f == 0.0:
                root = t
            elif prev_f == 0.0:
                pass  # already recorded at the previous probe
            elif (prev_f < 0.0) != (f < 0.0):
                root = _bisect(kind, v, prev_t, t)
            if root is not None:
                found.append(Intersection(z=root, spurious=cot(root) > 0.0))
            prev_t, prev_f = t, f
    return VariantReport(kind=kind, intersections=tuple(found))


def filtered_equivalence(
    kind: VariantKind,
    z0: WellStrength | float,
    config: SolveConfig = SolveConfig(),
) -> bool:
    """Does discarding spurious crossings recover the true spectrum?

    True when the non-spurious crossings of the variant match the output
    of :func:`semiwell.solver.solve_all` one for one.  A variant can fail
    either by keeping no crossing where a genuine root exists (NEG_SIN
    loses entire bands) or by disagreeing in value.
    """
    v = strength_value(z0)
    kept = enumerate_intersections(kind, v).genuine_roots()
    true_roots = [s.z for s in solve_all(v, config)]
    if len(kept) != len(true_roots):
        return False
    tol = max(config.root_tol, 1e-9)
    return all(abs(k - t) <= tol for k, t in zip(kept, true_roots))
