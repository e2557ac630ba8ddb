"""Central charges, phase ordering, and parameter-region membership.

A stability parameter is a pair (x, t) of rationals standing for the divisor
classes beta = x*L and omega = y*L with t = y^2 > 0.  The central charge of a
class v = (r, n, s) at (x, t) is

    Z(v) = re + i * 2d*sqrt(t) * lam,
    re   = 2d*x*n - s - r*d*x^2 + r*d*t,
    lam  = n - r*x.

Every decision made here (phase comparison, region membership) depends on y
only through t = y^2 and on the sign/ratio of lam, so all of it runs in exact
rational arithmetic; the irrational factor 2d*sqrt(t) is positive and cancels.

Phases live in half-open unit windows: a charge on the negative real axis has
phase 1, on the positive real axis phase 0, in the open upper (lower) half
plane a phase in (0, 1) (in (-1, 0)).  Within an open half plane the phase is
strictly increasing in -re/lam, so the pair (half-plane, -re/lam) is a total
order surrogate for the phase and no arctangent is ever needed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .lattice import MukaiVector, SurfaceContext


@dataclass(frozen=True)
class StabilityPoint:
    """Parameter pair (x, t): beta = x*L, omega = y*L with t = y^2 > 0."""

    x: Fraction
    t: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "x", Fraction(self.x))
        object.__setattr__(self, "t", Fraction(self.t))
        if self.t <= 0:
            raise ValueError("t must be positive (omega ample)")

    def to_json(self) -> dict:
        return {"x": str(self.x), "t": str(self.t)}

    @classmethod
    def from_json(cls, data: dict) -> "StabilityPoint":
        return cls(Fraction(data["x"]), Fraction(data["t"]))


@dataclass(frozen=True)
class CentralCharge:
    """Exact value Z = re + i * 2d*sqrt(t) * lam."""

    re: Fraction
    lam: Fraction
    d: int
    t: Fraction

    def is_zero(self) -> bool:
        return self.re == 0 and self.lam == 0

    def as_complex(self) -> complex:
        """Float embedding, for cross-checks against transcendental phases."""
        return complex(float(self.re), 2 * self.d * math.sqrt(self.t) * float(self.lam))

    def to_json(self) -> dict:
        return {"re": str(self.re), "lam": str(self.lam), "d": self.d, "t": str(self.t)}


class Bucket(Enum):
    AXIS_POS = "axis_pos"      # positive real axis, phase 0
    UPPER_HALF = "upper_half"  # phase in (0, 1)
    AXIS_NEG = "axis_neg"      # negative real axis, phase 1
    LOWER_HALF = "lower_half"  # phase in (-1, 0)


# Position of each bucket in half-integer steps within the base window
# (-1, 1]; a full shift adds two steps.
_HALF_STEPS = {
    Bucket.LOWER_HALF: -1,
    Bucket.AXIS_POS: 0,
    Bucket.UPPER_HALF: 1,
    Bucket.AXIS_NEG: 2,
}


@dataclass(frozen=True, eq=False)
class PhaseKey:
    """Total-order surrogate for the phase of a nonzero central charge.

    Interior buckets carry slope = -re/lam; within a half plane a larger
    slope means a larger phase.  Axis buckets carry no slope.  Shift counts
    whole phase units added on top of the base window (-1, 1].
    """

    shift: int
    bucket: Bucket
    slope: Fraction | None = None

    def order_key(self) -> tuple[int, Fraction]:
        step = _HALF_STEPS[self.bucket] + 2 * self.shift
        return (step, self.slope if self.slope is not None else Fraction(0))

    def __eq__(self, other) -> bool:
        if not isinstance(other, PhaseKey):
            return NotImplemented
        return self.order_key() == other.order_key()

    def __lt__(self, other: "PhaseKey") -> bool:
        return self.order_key() < other.order_key()

    def __le__(self, other: "PhaseKey") -> bool:
        return self.order_key() <= other.order_key()

    def __gt__(self, other: "PhaseKey") -> bool:
        return self.order_key() > other.order_key()

    def __ge__(self, other: "PhaseKey") -> bool:
        return self.order_key() >= other.order_key()

    def __hash__(self) -> int:
        return hash(self.order_key())

    def to_json(self) -> dict:
        return {
            "shift": self.shift,
            "bucket": self.bucket.value,
            "slope": None if self.slope is None else str(self.slope),
        }


class HeartSide(Enum):
    TORSION = "torsion"  # phase window (0, 1]
    FREE = "free"        # phase window (-1, 0]


def central_charge(v: MukaiVector, pt: StabilityPoint, ctx: SurfaceContext) -> CentralCharge:
    d, x, t = ctx.d, pt.x, pt.t
    re = 2 * d * x * v.n - v.s - v.r * d * x * x + v.r * d * t
    lam = v.n - v.r * x
    return CentralCharge(Fraction(re), Fraction(lam), d, t)


def phase_key(z: CentralCharge) -> PhaseKey:
    """Phase of a nonzero charge in the base window (-1, 1]."""
    if z.is_zero():
        raise ValueError("zero central charge")
    if z.lam > 0:
        return PhaseKey(0, Bucket.UPPER_HALF, -z.re / z.lam)
    if z.lam < 0:
        return PhaseKey(0, Bucket.LOWER_HALF, -z.re / z.lam)
    return PhaseKey(0, Bucket.AXIS_NEG if z.re < 0 else Bucket.AXIS_POS)


def shift_phase(key: PhaseKey, m: int) -> PhaseKey:
    return PhaseKey(key.shift + m, key.bucket, key.slope)


def charge_cross(a: MukaiVector, e: MukaiVector, pt: StabilityPoint, ctx: SurfaceContext) -> Fraction:
    """Cross product of the charges Z(a), Z(e) as plane vectors, with the
    common positive factor 2d*sqrt(t) stripped:

        lam_e * re(Z(a)) - lam_a * re(Z(e)).

    When lam_a and lam_e are both positive this is positive exactly when the
    ray of Z(a) lies clockwise from the ray of Z(e), i.e. when the phase of a
    is the smaller one; for both negative the criterion mirrors.
    """
    za = central_charge(a, pt, ctx)
    ze = central_charge(e, pt, ctx)
    return ze.lam * za.re - za.lam * ze.re


def _real_axis_witness(x: Fraction, d: int) -> tuple[int, int, int] | None:
    """The unique positive-rank square->-2 class whose charge is real at
    beta = x*L, if one exists.

    Writing x = p/q in lowest terms, lam vanishes on (r, n, s) with n = r*x,
    which forces r = q, n = p, s = (d*p^2 + 1)/q; integrality of s is the
    existence condition.
    """
    p, q = x.numerator, x.denominator
    m = d * p * p + 1
    if m % q != 0:
        return None
    return (q, p, m // q)


def in_stability_region(pt: StabilityPoint, ctx: SurfaceContext) -> bool:
    """Whether (x, t) yields a stability function: no positive-rank class of
    square -2 may have charge on the nonpositive real axis.

    On the unique real-charge candidate the real part is -1/q + d*q*t, so the
    point is excluded exactly when the candidate exists and t <= 1/(d*q^2).
    """
    delta = _real_axis_witness(pt.x, ctx.d)
    if delta is None:
        return True
    q = delta[0]
    return pt.t > Fraction(1, ctx.d * q * q)


def in_stability_region_gt2(pt: StabilityPoint, ctx: SurfaceContext) -> bool:
    """The large-volume part omega^2 > 2, i.e. t > 1/d."""
    return pt.t > Fraction(1, ctx.d)


def is_good(pt: StabilityPoint, ctx: SurfaceContext) -> bool:
    """Whether the charge avoids the orthogonal of every square--2 class.

    The positive-definiteness half of the condition is automatic: the Gram
    matrix of the real and imaginary parts of the defining vector is
    diag(2dt, 2dt).  What remains is Z(delta) != 0, which on the real-charge
    family means t != 1/(d*q^2).
    """
    delta = _real_axis_witness(pt.x, ctx.d)
    if delta is None:
        return True
    q = delta[0]
    return pt.t != Fraction(1, ctx.d * q * q)


def heart_side(v: MukaiVector, pt: StabilityPoint) -> HeartSide:
    """Which side of the torsion pair a slope-semistable class of rank >= 0
    falls on: torsion classes and slopes above x go to the torsion side."""
    if v.r < 0:
        raise ValueError("rank must be nonnegative")
    if v.r == 0:
        return HeartSide.TORSION
    return HeartSide.TORSION if Fraction(v.n, v.r) > pt.x else HeartSide.FREE


Matrix2 = tuple[tuple[float, float], tuple[float, float]]


def gl2_apply(matrix: Matrix2, charges: list[tuple[float, float]]) -> list[tuple[float, float]]:
    """Apply an orientation-preserving linear map to (Re, Im) pairs.

    Positive determinant keeps the cyclic order of the nonzero images around
    the origin equal to that of the inputs.
    """
    (a, b), (c, d) = matrix
    if a * d - b * c <= 0:
        raise ValueError("orientation-reversing")
    return [(a * re + b * im, c * re + d * im) for re, im in charges]
