"""Exact arithmetic in the rank-3 numerical lattice of a degree-2d K3 surface.

A class is an integer triple (r, n, s): the rank, the multiple of the ample
generator L in the Neron-Severi part, and the chi-component.  The single
surface parameter d (half the degree, L^2 = 2d) fixes the symmetric pairing

    <(r, n, s), (r', n', s')> = 2*d*n*n' - r*s' - r'*s.

Vectors deliberately do not carry d: every pairing-dependent operation takes
the surface context explicitly, so classes living on different surfaces
cannot be mixed silently.  All arithmetic is exact (int / Fraction).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import gcd


@dataclass(frozen=True)
class SurfaceContext:
    """A degree-2d K3 surface of Picard rank one; d = L^2 / 2."""

    d: int

    def __post_init__(self) -> None:
        if not isinstance(self.d, int) or self.d < 1:
            raise ValueError("d must be a positive integer")

    def to_json(self) -> dict:
        return {"d": self.d}

    @classmethod
    def from_json(cls, data: dict) -> "SurfaceContext":
        return cls(int(data["d"]))


@dataclass(frozen=True)
class MukaiVector:
    """Lattice class r + n*L + s.  The zero vector is allowed; operations
    that need a nonzero class reject it themselves."""

    r: int
    n: int
    s: int

    def __add__(self, other: "MukaiVector") -> "MukaiVector":
        return MukaiVector(self.r + other.r, self.n + other.n, self.s + other.s)

    def __sub__(self, other: "MukaiVector") -> "MukaiVector":
        return MukaiVector(self.r - other.r, self.n - other.n, self.s - other.s)

    def __neg__(self) -> "MukaiVector":
        return MukaiVector(-self.r, -self.n, -self.s)

    def scaled(self, k: int) -> "MukaiVector":
        return MukaiVector(k * self.r, k * self.n, k * self.s)

    def is_zero(self) -> bool:
        return self.r == 0 and self.n == 0 and self.s == 0

    def to_json(self) -> list[int]:
        return [self.r, self.n, self.s]

    @classmethod
    def from_json(cls, data) -> "MukaiVector":
        r, n, s = (int(entry) for entry in data)
        return cls(r, n, s)


class VectorClass(Enum):
    """Numerical type of a nonzero class, read off its self-pairing."""

    SPHERICAL = "spherical"      # square -2
    SEMI_RIGID = "semi_rigid"    # square 0
    POSITIVE = "positive"        # square > 0
    OTHER = "other"              # square < -2


class Ordering(Enum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


def mukai_pairing(a: MukaiVector, b: MukaiVector, ctx: SurfaceContext) -> int:
    """Symmetric bilinear pairing 2d*n_a*n_b - r_a*s_b - r_b*s_a."""
    return 2 * ctx.d * a.n * b.n - a.r * b.s - b.r * a.s


def self_square(v: MukaiVector, ctx: SurfaceContext) -> int:
    return mukai_pairing(v, v, ctx)


def euler_chi(a: MukaiVector, b: MukaiVector, ctx: SurfaceContext) -> int:
    """Euler form chi(a, b); equals minus the pairing by Riemann-Roch."""
    return -mukai_pairing(a, b, ctx)


def classify(v: MukaiVector, ctx: SurfaceContext) -> VectorClass:
    if v.is_zero():
        raise ValueError("zero class")
    sq = self_square(v, ctx)
    if sq == -2:
        return VectorClass.SPHERICAL
    if sq == 0:
        return VectorClass.SEMI_RIGID
    if sq > 0:
        return VectorClass.POSITIVE
    return VectorClass.OTHER


def line_bundle_vector(m: int, ctx: SurfaceContext) -> MukaiVector:
    """Class of the line bundle mL: (1, m, d*m^2 + 1).  Always spherical."""
    return MukaiVector(1, m, ctx.d * m * m + 1)


def skyscraper_vector() -> MukaiVector:
    """Class of a point sheaf: (0, 0, 1)."""
    return MukaiVector(0, 0, 1)


def spherical_twist(v: MukaiVector, sph: MukaiVector, ctx: SurfaceContext) -> MukaiVector:
    """Reflection v -> v + <v, sph>*sph in a spherical class.

    An involution on the lattice (sph^2 = -2 makes the double application
    cancel) and an isometry for the pairing.
    """
    if classify(sph, ctx) is not VectorClass.SPHERICAL:
        raise ValueError("twist class must be spherical (square -2)")
    return v + sph.scaled(mukai_pairing(v, sph, ctx))


def iterated_twist(v: MukaiVector, sph: MukaiVector, k: int, ctx: SurfaceContext) -> MukaiVector:
    """k-fold spherical twist; even k is the identity."""
    if k < 1:
        raise ValueError("k must be a positive integer")
    if classify(sph, ctx) is not VectorClass.SPHERICAL:
        raise ValueError("twist class must be spherical (square -2)")
    return v if k % 2 == 0 else v + sph.scaled(mukai_pairing(v, sph, ctx))


def slope(v: MukaiVector) -> Fraction:
    """Slope surrogate n/r; the ample-degree factor is a common positive
    constant at Picard rank one and never affects comparisons."""
    if v.r == 0:
        raise ValueError("infinite slope")
    return Fraction(v.n, v.r)


def mu_stable_gcd(v: MukaiVector) -> bool:
    """Sufficient slope-stability criterion for a Gieseker-semistable class
    of positive rank: gcd(r, n) = 1."""
    if v.r <= 0:
        raise ValueError("rank must be positive")
    return gcd(v.r, v.n) == 1


def reduced_hilbert(v: MukaiVector, ctx: SurfaceContext) -> tuple[Fraction, Fraction, Fraction]:
    """Coefficients (a2, a1, a0) of the reduced Hilbert polynomial
    a2*k^2 + a1*k + a0 in the twist variable k:

        (d, 2d*n/r, s/r + 1).
    """
    if v.r <= 0:
        raise ValueError("rank must be positive")
    return (
        Fraction(ctx.d),
        Fraction(2 * ctx.d * v.n, v.r),
        Fraction(v.s, v.r) + 1,
    )


def gieseker_compare(a: MukaiVector, b: MukaiVector, ctx: SurfaceContext) -> Ordering:
    """Eventual comparison of reduced Hilbert polynomials, i.e. lexicographic
    comparison of their coefficient triples."""
    pa = reduced_hilbert(a, ctx)
    pb = reduced_hilbert(b, ctx)
    if pa < pb:
        return Ordering.LESS
    if pa > pb:
        return Ordering.GREATER
    return Ordering.EQUAL
