"""Zero loci of the charge cross product and exact phase-order certificates.

For classes a, e the cross product expands to the bivariate polynomial

    N(x, t) = d*w*(t + x^2) + B*x + C,
    w = r_a*n_e - r_e*n_a,   B = r_e*s_a - r_a*s_e,   C = n_a*s_e - n_e*s_a

(the cubic terms of the raw product cancel, and the t- and x^2-coefficients
coincide).  In the (x, y) half plane with t = y^2 the zero locus is therefore
a circle centered on the x-axis when w != 0, and a vertical line, nothing, or
everything when w = 0.

The certificates replay a monotonicity argument: once the wall center sits
weakly beyond the competitor slope and the corner value at (slope, t = 1/d)
has the right sign, N keeps that sign on the whole open region, which proves
the phase inequality there.  Every step is an exact rational comparison and
is recorded, so a failed certification names the first step that broke.
"""

from __future__ import annotations

import math
import os
import random
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .charges import StabilityPoint, charge_cross
from .lattice import (
    MukaiVector,
    SurfaceContext,
    line_bundle_vector,
    self_square,
    spherical_twist,
)


class WallKind(Enum):
    CIRCLE = "circle"
    VERTICAL_LINE = "vertical_line"
    EMPTY = "empty"
    EVERYWHERE = "everywhere"


@dataclass(frozen=True)
class Wall:
    """Zero locus of N in the (x, y) half plane.

    center_x and radius_sq are populated whenever w != 0, even when the locus
    is empty (radius_sq <= 0), because the completed square still drives the
    certificates.  A circle proper requires radius_sq > 0.
    """

    kind: WallKind
    w: int
    center_x: Fraction | None = None
    radius_sq: Fraction | None = None
    x0: Fraction | None = None

    def to_json(self) -> dict:
        return {
            "kind": self.kind.value,
            "center_x": None if self.center_x is None else str(self.center_x),
            "radius_sq": None if self.radius_sq is None else str(self.radius_sq),
            "x0": None if self.x0 is None else str(self.x0),
            "w": self.w,
        }

    @classmethod
    def from_json(cls, data: dict) -> "Wall":
        def frac(key: str) -> Fraction | None:
            return None if data.get(key) is None else Fraction(data[key])

        return cls(
            kind=WallKind(data["kind"]),
            w=int(data["w"]),
            center_x=frac("center_x"),
            radius_sq=frac("radius_sq"),
            x0=frac("x0"),
        )


def cross_coefficients(a: MukaiVector, e: MukaiVector) -> tuple[int, int, int]:
    """Integer coefficients (w, B, C) of N(x, t) = d*w*(t + x^2) + B*x + C."""
    w = a.r * e.n - e.r * a.n
    b = e.r * a.s - a.r * e.s
    c = a.n * e.s - e.n * a.s
    return w, b, c


def wall_between(a: MukaiVector, e: MukaiVector, ctx: SurfaceContext) -> Wall:
    d = ctx.d
    w, b, c = cross_coefficients(a, e)
    if w != 0:
        center = Fraction(-b, 2 * d * w)
        radius_sq = center * center - Fraction(c, d * w)
        kind = WallKind.CIRCLE if radius_sq > 0 else WallKind.EMPTY
        return Wall(kind, w, center_x=center, radius_sq=radius_sq)
    if b != 0:
        return Wall(WallKind.VERTICAL_LINE, 0, x0=Fraction(-c, b))
    return Wall(WallKind.EVERYWHERE if c == 0 else WallKind.EMPTY, 0)


class Window(Enum):
    """Which half plane both charges occupy on the certified region."""

    UPPER = "upper"  # phases in (0, 1): x below both slopes
    LOWER = "lower"  # phases in (-1, 0): x above both slopes


class Verdict(Enum):
    CERTIFIED = "certified"
    HYPOTHESIS_FAILED = "hypothesis_failed"
    REFUTED = "refuted"


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    note: str = ""

    def to_json(self) -> dict:
        return {"name": self.name, "passed": self.passed, "note": self.note}


@dataclass(frozen=True)
class Certificate:
    verdict: Verdict
    checks: tuple[Check, ...]
    reason: str | None = None
    witness: StabilityPoint | None = None

    @property
    def certified(self) -> bool:
        return self.verdict is Verdict.CERTIFIED

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict.value,
            "reason": self.reason,
            "witness": None if self.witness is None else self.witness.to_json(),
            "checks": [check.to_json() for check in self.checks],
        }


def default_seed() -> int:
    """Seed for randomized cross-validation; MUKAISTAB_SEED overrides."""
    return int(os.environ.get("MUKAISTAB_SEED", "0"))


def _sample_region_point(
    rng: random.Random, boundary_slope: Fraction, d: int, window: Window
) -> StabilityPoint:
    """Random rational point of the open region behind the slope and above
    the t = 1/d horizon."""
    dx = Fraction(rng.randint(1, 400), rng.randint(1, 40))
    dt = Fraction(rng.randint(1, 400), rng.randint(1, 40))
    x = boundary_slope - dx if window is Window.UPPER else boundary_slope + dx
    return StabilityPoint(x, Fraction(1, d) + dt)


def _phase_order_certificate(
    e: MukaiVector,
    a: MukaiVector,
    ctx: SurfaceContext,
    window: Window,
    hypothesis_checks: list[Check],
    samples: int,
    seed: int | None,
) -> Certificate:
    """Shared proof replay once the class-specific hypotheses are recorded."""
    d = ctx.d
    checks = list(hypothesis_checks)
    sign = 1 if window is Window.UPPER else -1

    w, _, _ = cross_coefficients(a, e)
    slope_order = Check(
        "slope order",
        sign * w > 0,
        f"w = r_A*n_E - r_E*n_A = {w}, window {window.value}",
    )
    checks.append(slope_order)
    if not slope_order.passed:
        reason = "degenerate slope order (w = 0)" if w == 0 else "slope order incompatible with window"
        return Certificate(Verdict.HYPOTHESIS_FAILED, tuple(checks), reason=reason)

    slope_a = Fraction(a.n, a.r)
    wall = wall_between(a, e, ctx)
    center = wall.center_x
    assert center is not None
    if window is Window.UPPER:
        placement_ok = slope_a <= center
    else:
        placement_ok = center <= slope_a
    offset = Check(
        "wall center beyond competitor slope",
        placement_ok,
        f"center_x = {center}, competitor slope = {slope_a}",
    )
    checks.append(offset)

    corner_pt = StabilityPoint(slope_a, Fraction(1, d))
    corner_value = charge_cross(a, e, corner_pt, ctx)
    corner = Check(
        "corner sign",
        sign * corner_value >= 0,
        f"N(slope_A, 1/d) = {corner_value}; strict for t > 1/d since "
        f"re Z(A) = -1/r_A + d*r_A*t there",
    )
    checks.append(corner)

    if not (offset.passed and corner.passed):
        failed = offset if not offset.passed else corner
        return Certificate(
            Verdict.HYPOTHESIS_FAILED, tuple(checks), reason=f"proof step failed: {failed.name}"
        )

    rng = random.Random(default_seed() if seed is None else seed)
    for _ in range(samples):
        pt = _sample_region_point(rng, slope_a, d, window)
        if sign * charge_cross(a, e, pt, ctx) <= 0:
            checks.append(Check("interior samples", False, f"violated at {pt.to_json()}"))
            return Certificate(Verdict.REFUTED, tuple(checks), witness=pt)
    checks.append(Check("interior samples", True, f"{samples} exact sign checks"))
    return Certificate(Verdict.CERTIFIED, tuple(checks))


def certify_semirigid_order(
    e: MukaiVector,
    a: MukaiVector,
    ctx: SurfaceContext,
    window: Window,
    samples: int = 50,
    seed: int | None = None,
) -> Certificate:
    """Certificate that a semi-rigid class e of small rank keeps its phase
    strictly beyond every spherical competitor a on the certified region.

    Upper window: on {x < n_A/r_A < n_E/r_E, t > 1/d} the phases satisfy
    0 < phase(a) < phase(e) < 1 (cross product positive).  Lower window is
    the mirror image with both phases in (-1, 0).
    """
    d = ctx.d
    checks: list[Check] = []

    sq_e = self_square(e, ctx)
    checks.append(Check("object is semi-rigid", sq_e == 0, f"e^2 = {sq_e}"))
    if sq_e != 0:
        return Certificate(Verdict.HYPOTHESIS_FAILED, tuple(checks), reason="not semi-rigid")
    rank_ok = 0 < e.r and e.r * e.r <= d
    checks.append(Check("object rank bound", rank_ok, f"r_E = {e.r}, r_E^2 <= d = {d}"))
    if not rank_ok:
        reason = "rank exceeds sqrt(d)" if e.r > 0 else "rank not positive"
        return Certificate(Verdict.HYPOTHESIS_FAILED, tuple(checks), reason=reason)

    sq_a = self_square(a, ctx)
    competitor_ok = sq_a == -2 and a.r > 0
    checks.append(Check("competitor is spherical", competitor_ok, f"a^2 = {sq_a}, r_A = {a.r}"))
    if not competitor_ok:
        return Certificate(
            Verdict.HYPOTHESIS_FAILED, tuple(checks), reason="competitor not spherical of positive rank"
        )

    w, _, _ = cross_coefficients(a, e)
    # Center-offset inequality: d*w^2 >= r_E^2 puts the wall center weakly
    # beyond the competitor slope; it holds as soon as w != 0 and r_E^2 <= d.
    if w != 0:
        checks.append(
            Check("center offset inequality", d * w * w >= e.r * e.r, f"d*w^2 = {d * w * w} vs r_E^2 = {e.r * e.r}")
        )
    return _phase_order_certificate(e, a, ctx, window, checks, samples, seed)


def certify_spherical_order(
    e: MukaiVector,
    a: MukaiVector,
    ctx: SurfaceContext,
    window: Window,
    samples: int = 50,
    seed: int | None = None,
) -> Certificate:
    """Certificate that a spherical class e of small rank keeps its phase
    strictly beyond every spherical competitor a; same regions and sign
    conventions as the semi-rigid certificate."""
    d = ctx.d
    checks: list[Check] = []

    sq_e = self_square(e, ctx)
    object_ok = sq_e == -2 and e.r > 0
    checks.append(Check("object is spherical", object_ok, f"e^2 = {sq_e}, r_E = {e.r}"))
    if not object_ok:
        return Certificate(Verdict.HYPOTHESIS_FAILED, tuple(checks), reason="not spherical of positive rank")
    rank_ok = e.r * e.r <= d
    checks.append(Check("object rank bound", rank_ok, f"r_E = {e.r}, r_E^2 <= d = {d}"))
    if not rank_ok:
        return Certificate(Verdict.HYPOTHESIS_FAILED, tuple(checks), reason="rank exceeds sqrt(d)")

    sq_a = self_square(a, ctx)
    competitor_ok = sq_a == -2 and a.r > 0
    checks.append(Check("competitor is spherical", competitor_ok, f"a^2 = {sq_a}, r_A = {a.r}"))
    if not competitor_ok:
        return Certificate(
            Verdict.HYPOTHESIS_FAILED, tuple(checks), reason="competitor not spherical of positive rank"
        )

    w, _, _ = cross_coefficients(a, e)
    # Strict center-offset inequality d*w^2 > r_E^2 - r_A^2; automatic from
    # w != 0 and r_E^2 <= d, but recorded as the proof step it is.
    if w != 0:
        checks.append(
            Check(
                "center offset inequality (strict)",
                d * w * w > e.r * e.r - a.r * a.r,
                f"d*w^2 = {d * w * w} vs r_E^2 - r_A^2 = {e.r * e.r - a.r * a.r}",
            )
        )
    return _phase_order_certificate(e, a, ctx, window, checks, samples, seed)


@dataclass(frozen=True)
class DestabilizingRegion:
    """Wall against the structure-sheaf class, its horizon endpoints, and a
    witness point inside the disc (present exactly when r^2 > d)."""

    wall: Wall
    endpoints: tuple[Fraction, Fraction]
    witness: StabilityPoint | None

    def to_json(self) -> dict:
        return {
            "circle": self.wall.to_json(),
            "endpoints": [str(self.endpoints[0]), str(self.endpoints[1])],
            "witness": None if self.witness is None else self.witness.to_json(),
        }


def destabilizing_region(e: MukaiVector, ctx: SurfaceContext) -> DestabilizingRegion:
    """Wall of a rank-r class (r, 1, d/r) against the structure sheaf.

    At the horizon t = 1/d the wall meets the x-axis at exactly 0 and
    (d - r^2)/(r*d).  When r^2 > d the disc pokes into {x < 0, t > 1/d} and a
    rational witness with negative cross product is returned: the wall center
    with t halfway between horizon and circle top.
    """
    d = ctx.d
    if e.r <= 0 or e.n != 1 or e.r * e.s != d:
        raise ValueError("class must be (r, 1, s) with r > 0 and r*s = d")
    structure = MukaiVector(1, 0, 1)
    wall = wall_between(structure, e, ctx)
    endpoints = (Fraction(0), Fraction(d - e.r * e.r, e.r * d))
    witness = None
    if e.r * e.r > d:
        assert wall.center_x is not None and wall.radius_sq is not None
        t_mid = (Fraction(1, d) + wall.radius_sq) / 2
        witness = StabilityPoint(wall.center_x, t_mid)
        value = charge_cross(structure, e, witness, ctx)
        if not (witness.x < 0 and value < 0):
            raise AssertionError("witness construction failed")
    return DestabilizingRegion(wall, endpoints, witness)


def find_destabilizing_twist(e: MukaiVector, ctx: SurfaceContext) -> tuple[int, MukaiVector]:
    """Smallest line-bundle twist mL with m strictly above the slope of e
    whose image has nonzero rank, together with the twisted class.

    The rank of the image vanishes for at most two values of m, so the scan
    terminates.  Rank-zero input is the skyscraper family; its slope
    threshold is taken to be 0.
    """
    if e.is_zero():
        raise ValueError("zero class")
    if e.r < 0:
        raise ValueError("rank must be nonnegative")
    if self_square(e, ctx) > 0:
        raise ValueError("class must have nonpositive square")
    m = math.floor(Fraction(e.n, e.r)) + 1 if e.r > 0 else 1
    while True:
        twisted = spherical_twist(e, line_bundle_vector(m, ctx), ctx)
        if twisted.r != 0:
            return m, twisted
        m += 1
