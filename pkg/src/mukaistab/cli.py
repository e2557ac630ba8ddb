"""Command-line surface: lattice queries, certificates, grid scans, and
deterministic SVG figures of walls.

Rationals on the command line accept both "p/q" and decimal strings; decimals
convert exactly (never through binary floats).  Vector arguments are JSON
arrays "[r,n,s]".  All JSON output uses rationals as strings.  Errors exit
nonzero with a single-line JSON object on stderr.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass
from fractions import Fraction

from .certify import (
    SheafHypothesis,
    certify_semirigid,
    certify_semirigid_everywhere,
    certify_spherical,
    fm_partners,
    twisted_skyscraper_hn,
)
from .charges import (
    StabilityPoint,
    central_charge,
    charge_cross,
    in_stability_region,
    in_stability_region_gt2,
    is_good,
    phase_key,
)
from .lattice import (
    MukaiVector,
    SurfaceContext,
    euler_chi,
    line_bundle_vector,
    mukai_pairing,
    self_square,
    spherical_twist,
)
from .walls import Wall, WallKind, destabilizing_region, find_destabilizing_twist, wall_between


class CliError(Exception):
    def __init__(self, message: str, code: int = 1):
        super().__init__(message)
        self.code = code


class _Parser(argparse.ArgumentParser):
    """argparse that reports usage problems as single-line errors."""

    def error(self, message):
        raise CliError(message, code=2)


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise CliError(f"not a rational: {text!r}") from exc


def parse_vector(text: str) -> MukaiVector:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CliError(f"not a JSON vector: {text!r}") from exc
    if (
        not isinstance(data, list)
        or len(data) != 3
        or not all(isinstance(entry, int) for entry in data)
    ):
        raise CliError(f"vector must be a JSON array of three integers: {text!r}")
    return MukaiVector.from_json(data)


def parse_point(x_text: str, t_text: str) -> StabilityPoint:
    try:
        return StabilityPoint(parse_rational(x_text), parse_rational(t_text))
    except ValueError as exc:
        raise CliError(str(exc)) from exc


@dataclass(frozen=True)
class ScanGrid:
    """Rectangular rational grid; sample points interpolate the endpoints."""

    x_range: tuple[Fraction, Fraction]
    t_range: tuple[Fraction, Fraction]
    steps: tuple[int, int]

    def __post_init__(self) -> None:
        if self.steps[0] < 1 or self.steps[1] < 1:
            raise ValueError("steps must be >= 1")

    @staticmethod
    def _axis(lo: Fraction, hi: Fraction, count: int) -> list[Fraction]:
        if count == 1:
            return [lo]
        return [lo + (hi - lo) * i / (count - 1) for i in range(count)]

    def xs(self) -> list[Fraction]:
        return self._axis(self.x_range[0], self.x_range[1], self.steps[0])

    def ts(self) -> list[Fraction]:
        return self._axis(self.t_range[0], self.t_range[1], self.steps[1])


def parse_grid(text: str) -> ScanGrid:
    try:
        x_part, t_part = text.split(",")
        x0, x1, nx = x_part.split(":")
        t0, t1, nt = t_part.split(":")
        return ScanGrid(
            (parse_rational(x0), parse_rational(x1)),
            (parse_rational(t0), parse_rational(t1)),
            (int(nx), int(nt)),
        )
    except CliError:
        raise
    except ValueError as exc:
        raise CliError(f"grid must be X0:X1:NX,T0:T1:NT, got {text!r}") from exc


def _fmt(value: float) -> str:
    return f"{value:.6f}"


def wall_svg(wall: Wall, ctx: SurfaceContext) -> str:
    """Static SVG 1.1 picture of a wall in the (x, y) half plane together
    with the omega^2 = 2 horizon y = 1/sqrt(d).

    Only exact geometry enters: the circle's center and radius come straight
    off the wall, the viewport is a fixed function of them, and number
    formatting is fixed-precision, so output is byte-identical across runs.
    """
    horizon = 1.0 / math.sqrt(ctx.d)
    if wall.kind is WallKind.CIRCLE:
        cx = float(wall.center_x)
        radius = math.sqrt(float(wall.radius_sq))
        half_span = 1.6 * max(radius, 0.5)
        xmin, xmax = cx - half_span, cx + half_span
        ymax = 1.3 * max(radius, horizon)
    elif wall.kind is WallKind.VERTICAL_LINE:
        x0 = float(wall.x0)
        xmin, xmax = x0 - 2.0, x0 + 2.0
        ymax = 1.3 * max(1.0, horizon)
    else:
        xmin, xmax = -2.0, 2.0
        ymax = 1.3 * max(1.0, horizon)

    width, height, margin = 640, 440, 40
    inner_w, inner_h = width - 2 * margin, height - 2 * margin

    def sx(wx: float) -> float:
        return margin + (wx - xmin) / (xmax - xmin) * inner_w

    def sy(wy: float) -> float:
        return height - margin - wy / ymax * inner_h

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width}" height="{height}" viewBox="0 0 {width} {height}">',
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="white"/>',
        f'<clipPath id="upper"><rect x="{margin}" y="{margin}" '
        f'width="{inner_w}" height="{inner_h}"/></clipPath>',
        # x-axis (y = 0)
        f'<line x1="{_fmt(sx(xmin))}" y1="{_fmt(sy(0.0))}" x2="{_fmt(sx(xmax))}" '
        f'y2="{_fmt(sy(0.0))}" stroke="black" stroke-width="1"/>',
    ]
    if xmin < 0.0 < xmax:
        parts.append(
            f'<line x1="{_fmt(sx(0.0))}" y1="{_fmt(sy(0.0))}" x2="{_fmt(sx(0.0))}" '
            f'y2="{_fmt(sy(ymax))}" stroke="black" stroke-width="1"/>'
        )
    if horizon < ymax:
        parts.append(
            f'<line x1="{_fmt(sx(xmin))}" y1="{_fmt(sy(horizon))}" x2="{_fmt(sx(xmax))}" '
            f'y2="{_fmt(sy(horizon))}" stroke="gray" stroke-width="1" stroke-dasharray="6,4"/>'
        )
        parts.append(
            f'<text x="{_fmt(sx(xmin) + 4)}" y="{_fmt(sy(horizon) - 4)}" '
            f'font-size="12" fill="gray">omega^2 = 2</text>'
        )
    if wall.kind is WallKind.CIRCLE:
        cx = float(wall.center_x)
        radius = math.sqrt(float(wall.radius_sq))
        rx = radius / (xmax - xmin) * inner_w
        ry = radius / ymax * inner_h
        parts.append(
            f'<ellipse cx="{_fmt(sx(cx))}" cy="{_fmt(sy(0.0))}" rx="{_fmt(rx)}" '
            f'ry="{_fmt(ry)}" fill="none" stroke="blue" stroke-width="1.5" '
            f'clip-path="url(#upper)"/>'
        )
        parts.append(
            f'<circle cx="{_fmt(sx(cx))}" cy="{_fmt(sy(0.0))}" r="2.5" fill="blue"/>'
        )
    elif wall.kind is WallKind.VERTICAL_LINE:
        x0 = float(wall.x0)
        parts.append(
            f'<line x1="{_fmt(sx(x0))}" y1="{_fmt(sy(0.0))}" x2="{_fmt(sx(x0))}" '
            f'y2="{_fmt(sy(ymax))}" stroke="blue" stroke-width="1.5"/>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def _emit(obj) -> None:
    print(json.dumps(obj))


def _cmd_pair(args) -> int:
    ctx = SurfaceContext(args.d)
    a, b = parse_vector(args.a), parse_vector(args.b)
    _emit(
        {
            "pairing": mukai_pairing(a, b, ctx),
            "chi": euler_chi(a, b, ctx),
            "square_a": self_square(a, ctx),
            "square_b": self_square(b, ctx),
        }
    )
    return 0


def _cmd_charge(args) -> int:
    ctx = SurfaceContext(args.d)
    v = parse_vector(args.v)
    pt = parse_point(args.x, args.t)
    z = central_charge(v, pt, ctx)
    out = z.to_json()
    out["phase"] = phase_key(z).to_json() if not z.is_zero() else None
    _emit(out)
    return 0


def _cmd_inv(args) -> int:
    ctx = SurfaceContext(args.d)
    pt = parse_point(args.x, args.t)
    _emit(
        {
            "in_V": in_stability_region(pt, ctx),
            "in_V_gt2": in_stability_region_gt2(pt, ctx),
            "is_good": is_good(pt, ctx),
        }
    )
    return 0


def _cmd_wall(args) -> int:
    ctx = SurfaceContext(args.d)
    a, e = parse_vector(args.a), parse_vector(args.e)
    wall = wall_between(a, e, ctx)
    if args.svg:
        with open(args.svg, "w", encoding="ascii") as handle:
            handle.write(wall_svg(wall, ctx))
    _emit(wall.to_json())
    return 0


def _cmd_region53(args) -> int:
    ctx = SurfaceContext(args.d)
    if args.r <= 0 or args.d % args.r != 0:
        raise CliError(f"r must be a positive divisor of d, got r={args.r}, d={args.d}")
    e = MukaiVector(args.r, 1, args.d // args.r)
    region = destabilizing_region(e, ctx)
    out = region.to_json()
    if region.witness is not None:
        out["witness_n"] = str(charge_cross(MukaiVector(1, 0, 1), e, region.witness, ctx))
    _emit(out)
    return 0


def _cmd_partners(args) -> int:
    _emit([[r, s] for r, s in fm_partners(SurfaceContext(args.d))])
    return 0


def _cmd_certify(args) -> int:
    ctx = SurfaceContext(args.d)
    v = parse_vector(args.v)
    if args.which == "t47":
        pt = parse_point(args.x, args.t)
        hyp = (
            SheafHypothesis.MU_STABLE_LOCALLY_FREE
            if args.hyp == "mu-locally-free"
            else SheafHypothesis.GIESEKER_STABLE
        )
        cert = certify_semirigid(v, pt, ctx, hyp)
    elif args.which == "c48":
        cert = certify_semirigid_everywhere(v, ctx, locally_free=not args.no_locally_free)
    else:  # p52
        if (args.x is None) != (args.t is None):
            raise CliError("provide both -x and -t or neither")
        pt = parse_point(args.x, args.t) if args.x is not None else None
        cert = certify_spherical(v, ctx, pt)
    _emit(cert.to_json())
    return 0


def _cmd_hn(args) -> int:
    ctx = SurfaceContext(args.d)
    sph = parse_vector(args.s)
    pt = parse_point(args.x, args.t)
    try:
        result = twisted_skyscraper_hn(sph, args.k, pt, ctx)
    except ValueError as exc:
        raise CliError(str(exc)) from exc
    _emit(result.to_json())
    return 0


def _cmd_scan(args) -> int:
    ctx = SurfaceContext(args.d)
    a, e = parse_vector(args.a), parse_vector(args.e)
    grid = parse_grid(args.grid)
    if grid.t_range[0] <= 0 or grid.t_range[1] <= 0:
        raise CliError("t range must be positive")
    print("x,t,N,sign")
    for x in grid.xs():
        for t in grid.ts():
            value = charge_cross(a, e, StabilityPoint(x, t), ctx)
            sign = (value > 0) - (value < 0)
            print(f"{x},{t},{value},{sign}")
    return 0


def _cmd_twist(args) -> int:
    ctx = SurfaceContext(args.d)
    v = parse_vector(args.v)
    twisted = spherical_twist(v, line_bundle_vector(args.m, ctx), ctx)
    _emit({"m": args.m, "twisted": twisted.to_json()})
    return 0


def _cmd_destab(args) -> int:
    ctx = SurfaceContext(args.d)
    e = parse_vector(args.e)
    try:
        m, twisted = find_destabilizing_twist(e, ctx)
    except ValueError as exc:
        raise CliError(str(exc)) from exc
    _emit({"m": m, "twisted": twisted.to_json()})
    return 0


def _build_parser() -> _Parser:
    parser = _Parser(prog="mukaistab", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("-d", type=int, required=True, help="half-degree of the surface")
        return p

    p = add("pair", "pairing, Euler form, and squares of two classes")
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=_cmd_pair)

    p = add("charge", "central charge and phase of a class at a point")
    p.add_argument("v")
    p.add_argument("-x", required=True)
    p.add_argument("-t", required=True)
    p.set_defaults(func=_cmd_charge)

    p = add("inv", "region membership of a parameter point")
    p.add_argument("-x", required=True)
    p.add_argument("-t", required=True)
    p.set_defaults(func=_cmd_inv)

    p = add("wall", "wall between two classes; optionally draw it")
    p.add_argument("a")
    p.add_argument("e")
    p.add_argument("--svg", metavar="FILE", help="write an SVG figure of the wall")
    p.set_defaults(func=_cmd_wall)

    p = add("region53", "destabilizing disc of the class (r, 1, d/r)")
    p.add_argument("-r", type=int, required=True)
    p.set_defaults(func=_cmd_region53)

    p = add("partners", "coprime factorization index of partner surfaces")
    p.set_defaults(func=_cmd_partners)

    p = add("certify", "stability certificates")
    p.add_argument("which", choices=["t47", "c48", "p52"])
    p.add_argument("v")
    p.add_argument("-x")
    p.add_argument("-t")
    p.add_argument(
        "--hyp",
        choices=["gieseker", "mu-locally-free"],
        default="gieseker",
        help="sheaf-level hypothesis for t47",
    )
    p.add_argument(
        "--no-locally-free",
        action="store_true",
        help="decline the local-freeness assertion for c48",
    )
    p.set_defaults(func=_cmd_certify)

    p = add("hn", "filtration of the k-fold twist of a point class")
    p.add_argument("s")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("-x", required=True)
    p.add_argument("-t", required=True)
    p.set_defaults(func=_cmd_hn)

    p = add("scan", "CSV of the cross product over a rational grid")
    p.add_argument("a")
    p.add_argument("e")
    p.add_argument(
        "--grid",
        required=True,
        help="X0:X1:NX,T0:T1:NT (use --grid=... when X0 is negative)",
    )
    p.set_defaults(func=_cmd_scan)

    p = add("twist", "twist a class in the line bundle mL")
    p.add_argument("v")
    p.add_argument("-m", type=int, required=True)
    p.set_defaults(func=_cmd_twist)

    p = add("destab", "smallest slope-exceeding line-bundle twist with nonzero rank")
    p.add_argument("e")
    p.set_defaults(func=_cmd_destab)

    return parser


def run(argv: list[str]) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "certify":
            if args.which == "t47" and (args.x is None or args.t is None):
                raise CliError("t47 requires -x and -t")
        try:
            return args.func(args)
        except ValueError as exc:
            raise CliError(str(exc)) from exc
    except CliError as exc:
        print(json.dumps({"error": str(exc)}), file=sys.stderr)
        return exc.code


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
