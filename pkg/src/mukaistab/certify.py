"""Top-level stability certificates, partner enumeration, and the closed-form
filtrations of twisted skyscraper classes.

Certificates are conditional on sheaf-level facts (Gieseker stability, local
freeness) that cannot be decided from a lattice class alone; those are
caller-asserted flags and every assumption that went into a verdict is kept
in the certificate for audit.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import gcd, isqrt
from typing import NamedTuple

from .charges import (
    PhaseKey,
    StabilityPoint,
    central_charge,
    in_stability_region_gt2,
    phase_key,
    shift_phase,
)
from .lattice import (
    MukaiVector,
    SurfaceContext,
    VectorClass,
    classify,
    euler_chi,
    iterated_twist,
    self_square,
    skyscraper_vector,
    spherical_twist,
)


class CertVerdict(Enum):
    SIGMA_STABLE = "sigma_stable"
    NOT_APPLICABLE = "not_applicable"


class ScopeKind(Enum):
    SINGLE_POINT = "single_point"
    GT2_SIDE = "gt2_side"
    ALL_GT2 = "all_gt2"


@dataclass(frozen=True)
class Scope:
    kind: ScopeKind
    point: StabilityPoint | None = None
    side: str | None = None

    def to_json(self) -> dict:
        return {
            "kind": self.kind.value,
            "point": None if self.point is None else self.point.to_json(),
            "side": self.side,
        }


@dataclass(frozen=True)
class StabilityCertificate:
    verdict: CertVerdict
    scope: Scope
    hypotheses_used: tuple[str, ...]
    reason: str | None = None

    @property
    def stable(self) -> bool:
        return self.verdict is CertVerdict.SIGMA_STABLE

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict.value,
            "scope": self.scope.to_json(),
            "hypotheses_used": list(self.hypotheses_used),
            "reason": self.reason,
        }


class SheafHypothesis(Enum):
    GIESEKER_STABLE = "gieseker_stable"
    MU_STABLE_LOCALLY_FREE = "mu_stable_locally_free"


def certify_semirigid(
    v: MukaiVector, pt: StabilityPoint, ctx: SurfaceContext, hyp: SheafHypothesis
) -> StabilityCertificate:
    """Stability certificate for a semi-rigid class of rank at most sqrt(d)
    at a single parameter point with omega^2 > 2.

    The Gieseker-stable route needs the slope strictly above x (torsion
    side); the locally-free slope-stable route needs the slope at most x
    (free side).  The sheaf-level hypothesis itself is taken on trust from
    the caller and recorded.
    """
    scope = Scope(ScopeKind.SINGLE_POINT, point=pt)
    hyps = [f"caller-asserted: {hyp.value}"]

    def fail(reason: str) -> StabilityCertificate:
        return StabilityCertificate(CertVerdict.NOT_APPLICABLE, scope, tuple(hyps), reason)

    if v.is_zero() or self_square(v, ctx) != 0:
        return fail("not semi-rigid")
    hyps.append("semi-rigid: v^2 = 0")
    if v.r <= 0:
        return fail("rank not positive")
    if v.r * v.r > ctx.d:
        return fail("rank exceeds sqrt(d)")
    hyps.append(f"rank bound: r^2 = {v.r * v.r} <= d = {ctx.d}")
    if not in_stability_region_gt2(pt, ctx):
        return fail("omega^2 <= 2 at this point")
    hyps.append("omega^2 > 2")

    mu = Fraction(v.n, v.r)
    if hyp is SheafHypothesis.GIESEKER_STABLE:
        if not mu > pt.x:
            return fail("wrong heart side: slope <= x")
        hyps.append("torsion side: slope > x")
    else:
        if not mu <= pt.x:
            return fail("wrong heart side: slope > x")
        hyps.append("free side: slope <= x")
    return StabilityCertificate(CertVerdict.SIGMA_STABLE, scope, tuple(hyps))


def certify_spherical(
    v: MukaiVector, ctx: SurfaceContext, pt: StabilityPoint | None = None
) -> StabilityCertificate:
    """Stability certificate for a spherical class of rank at most sqrt(d).

    No caller-supplied sheaf flags are needed: a spherical sheaf is
    automatically slope-stable and locally free (gcd(r, n) = 1 follows from
    r*s = d*n^2 + 1).  With a point the scope is that point; without one the
    certificate covers the whole omega^2 > 2 region and its
    orientation-preserving reparametrizations.
    """
    scope = (
        Scope(ScopeKind.SINGLE_POINT, point=pt)
        if pt is not None
        else Scope(ScopeKind.ALL_GT2)
    )
    hyps: list[str] = []

    def fail(reason: str) -> StabilityCertificate:
        return StabilityCertificate(CertVerdict.NOT_APPLICABLE, scope, tuple(hyps), reason)

    if v.is_zero():
        return fail("zero class")
    sq = self_square(v, ctx)
    if sq != -2:
        return fail(f"not spherical: v^2 = {sq}")
    hyps.append("spherical: v^2 = -2")
    if v.r <= 0:
        return fail("rank not positive")
    if v.r * v.r > ctx.d:
        return fail("rank exceeds sqrt(d)")
    hyps.append(f"rank bound: r^2 = {v.r * v.r} <= d = {ctx.d}")
    hyps.append("mu-stable locally free: automatic for spherical sheaves (gcd(r, n) = 1)")
    if pt is not None:
        if not in_stability_region_gt2(pt, ctx):
            return fail("omega^2 <= 2 at this point")
        hyps.append("omega^2 > 2")
    else:
        hyps.append("point-independent argument extends over all of the omega^2 > 2 orbit")
    return StabilityCertificate(CertVerdict.SIGMA_STABLE, scope, tuple(hyps))


def certify_semirigid_everywhere(
    v: MukaiVector, ctx: SurfaceContext, locally_free: bool = True
) -> StabilityCertificate:
    """Stability certificate for a semi-rigid class over the whole
    omega^2 > 2 orbit.

    Needs gcd(r, n) = 1 (slope stability of the class) and the caller's
    assertion that a locally free representative is meant; stability is then
    invariant under orientation-preserving reparametrizations, so the single
    parameter disappears from the statement.
    """
    scope = Scope(ScopeKind.ALL_GT2)
    hyps: list[str] = []

    def fail(reason: str) -> StabilityCertificate:
        return StabilityCertificate(CertVerdict.NOT_APPLICABLE, scope, tuple(hyps), reason)

    if not locally_free:
        return fail("local freeness not asserted")
    hyps.append("caller-asserted: locally free")
    if v.is_zero() or self_square(v, ctx) != 0:
        return fail("not semi-rigid")
    hyps.append("semi-rigid: v^2 = 0")
    if v.r <= 0:
        return fail("rank not positive")
    if v.r * v.r > ctx.d:
        return fail("rank exceeds sqrt(d)")
    hyps.append(f"rank bound: r^2 = {v.r * v.r} <= d = {ctx.d}")
    if gcd(v.r, v.n) != 1:
        return fail("gcd(r, n) != 1")
    hyps.append("mu-stable via gcd(r, n) = 1")
    hyps.append("stability invariant under orientation-preserving reparametrization")
    return StabilityCertificate(CertVerdict.SIGMA_STABLE, scope, tuple(hyps))


class ChiPositivity(NamedTuple):
    """chi value together with whether the positivity hypotheses hold; when
    they do (e^2 <= 0 with r_e > 0, a^2 < 0 with r_a > 0) chi > 0 is
    guaranteed.  A sheaf class of negative square has positive rank
    automatically, so the rank condition on a only rules out non-sheaf
    vectors."""

    chi: int
    positive: bool


def chi_positivity(a: MukaiVector, e: MukaiVector, ctx: SurfaceContext) -> ChiPositivity:
    chi = euler_chi(a, e, ctx)
    hypotheses = (
        self_square(e, ctx) <= 0 and e.r > 0 and self_square(a, ctx) < 0 and a.r > 0
    )
    return ChiPositivity(chi, hypotheses)


def fm_partners(ctx: SurfaceContext) -> list[tuple[int, int]]:
    """Index set of derived-equivalent partner surfaces: coprime ordered
    factorizations r*s = d with r <= s, ascending in r."""
    d = ctx.d
    return [
        (r, d // r)
        for r in range(1, isqrt(d) + 1)
        if d % r == 0 and gcd(r, d // r) == 1
    ]


class HNStatus(Enum):
    UNSTABLE = "unstable"
    SEMISTABLE = "semistable"
    STABLE = "stable"


@dataclass(frozen=True)
class HNFactor:
    """One semistable factor: the class of the unshifted object, the
    homological shift applied to it, its multiplicity, and its phase."""

    vector: MukaiVector
    shift: int
    multiplicity: int
    phase: PhaseKey

    def to_json(self) -> dict:
        return {
            "vector": self.vector.to_json(),
            "shift": self.shift,
            "multiplicity": self.multiplicity,
            "phase": self.phase.to_json(),
        }


@dataclass(frozen=True)
class HNResult:
    status: HNStatus
    factors: tuple[HNFactor, ...]

    @property
    def vector(self) -> MukaiVector:
        """Class of the filtered object (signed factor sum)."""
        total = MukaiVector(0, 0, 0)
        for f in self.factors:
            sign = -1 if f.shift % 2 else 1
            total = total + f.vector.scaled(sign * f.multiplicity)
        return total

    def to_json(self) -> dict:
        return {
            "status": self.status.value,
            "factors": [f.to_json() for f in self.factors],
        }


def twisted_skyscraper_hn(
    sph: MukaiVector, k: int, pt: StabilityPoint, ctx: SurfaceContext
) -> HNResult:
    """Filtration of the k-fold twist of a point class in a small-rank
    spherical class, at a parameter point with omega^2 > 2.

    With b = x and the twisting slope n/r there are three regimes:

    * b > n/r: unstable; factors are the point class followed by r copies of
      the twisting class at shifts 1, 0, ..., 2-k.
    * b = n/r, k = 1: semistable, with the same two factors now sharing
      phase 1.
    * b <= n/r otherwise (needs r^4 <= d): the single twist is stable with
      class equal to the twisted point class; higher twists are unstable
      with that stable object followed by r copies of the twisting class at
      shifts 0, -1, ..., 2-k.

    For b < n/r with r^4 > d no filtration is determined and the call is
    rejected.  The strict phase decrease (equality in the semistable case)
    is checked before returning.
    """
    if k < 1:
        raise ValueError("k must be a positive integer")
    if classify(sph, ctx) is not VectorClass.SPHERICAL or sph.r <= 0:
        raise ValueError("twisting class must be spherical of positive rank")
    if sph.r * sph.r > ctx.d:
        raise ValueError("rank exceeds sqrt(d)")
    if not in_stability_region_gt2(pt, ctx):
        raise ValueError("point must satisfy omega^2 > 2")

    b = pt.x
    mu = Fraction(sph.n, sph.r)
    point_class = skyscraper_vector()
    key_point = phase_key(central_charge(point_class, pt, ctx))
    key_sph = phase_key(central_charge(sph, pt, ctx))

    if b > mu:
        factors = [HNFactor(point_class, 0, 1, key_point)]
        factors += [
            HNFactor(sph, j, sph.r, shift_phase(key_sph, j)) for j in range(1, 1 - k, -1)
        ]
        result = HNResult(HNStatus.UNSTABLE, tuple(factors))
    elif b == mu and k == 1:
        factors = [
            HNFactor(point_class, 0, 1, key_point),
            HNFactor(sph, 1, sph.r, shift_phase(key_sph, 1)),
        ]
        result = HNResult(HNStatus.SEMISTABLE, tuple(factors))
    else:
        if sph.r ** 4 > ctx.d:
            raise ValueError("rank exceeds d^(1/4): filtration not determined here")
        twisted = spherical_twist(point_class, sph, ctx)
        # The twisted point object is a sheaf of rank r^2 placed in degree
        # -1; its charge pins the phase only mod 2, the sheaf convention
        # pins it exactly: phase of the negated class, plus one.
        key_twisted = shift_phase(phase_key(central_charge(-twisted, pt, ctx)), 1)
        if k == 1:
            result = HNResult(HNStatus.STABLE, (HNFactor(twisted, 0, 1, key_twisted),))
        else:
            factors = [HNFactor(twisted, 0, 1, key_twisted)]
            factors += [
                HNFactor(sph, j, sph.r, shift_phase(key_sph, j)) for j in range(0, 1 - k, -1)
            ]
            result = HNResult(HNStatus.UNSTABLE, tuple(factors))

    phases = [f.phase for f in result.factors]
    if result.status is HNStatus.SEMISTABLE:
        assert all(p == phases[0] for p in phases), "equal-phase factors expected"
    else:
        assert all(phases[i] > phases[i + 1] for i in range(len(phases) - 1)), (
            "factor phases must strictly decrease"
        )
    assert result.vector == iterated_twist(point_class, sph, k, ctx), (
        "signed factor sum must reproduce the twisted class"
    )
    return result


def in_gt2_torsion_side(pt: StabilityPoint, m: int, ctx: SurfaceContext) -> bool:
    """Membership in the omega^2 > 2 subregion where the line bundle mL sits
    on the torsion side: t > 1/d and x < m."""
    return in_stability_region_gt2(pt, ctx) and pt.x < m
