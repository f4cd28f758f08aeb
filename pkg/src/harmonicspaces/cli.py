"""Command-line interface.

Subcommands: phi-table, verify, quotient, bounds.  Exit codes: 0 success,
1 verification failure, 2 usage error.  All angles are radians; CSV is the
single data format and SVG the single figure format, both deterministic
for a fixed configuration (seed included).
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass

import numpy as np

from . import harmonic, quotients, topology, verify as verify_mod
from .errors import DomainViolation, HarmonicSpacesError, UnsupportedModel
from .spaces import domain_end, parse_model_id, theta
from .svgfig import SvgFigure

USAGE_ERROR = 2
VERIFY_FAIL = 1


@dataclass(frozen=True)
class RunConfig:
    """Fully resolved run parameters, echoed at the top of every output."""

    command: str
    args: dict
    output_path: str | None
    csv_precision: int = 12
    seed: int = 42
    tol: float = 1e-10

    def __post_init__(self):
        if not (6 <= self.csv_precision <= 17):
            raise ValueError("precision must lie in [6, 17]")

    def comment_line(self) -> str:
        payload = {
            "command": self.command,
            "precision": self.csv_precision,
            "seed": self.seed,
            "tol": self.tol,
            "out": self.output_path,
            **self.args,
        }
        return "# config " + json.dumps(payload, sort_keys=True)


def _fmt(value: float | None, precision: int) -> str:
    if value is None:
        return ""
    return f"{value:.{precision}g}"


def _write_text(path: str | None, text: str) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _fail_usage(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return USAGE_ERROR


# --- phi-table ---------------------------------------------------------------


def cmd_phi_table(args: argparse.Namespace) -> int:
    try:
        model = parse_model_id(args.model)
    except UnsupportedModel as exc:
        return _fail_usage(str(exc))
    end = domain_end(model)
    if not (0.0 < args.r_min < args.r_max < end) or not (0.0 < args.r_ref < end):
        return _fail_usage(
            f"grid [{args.r_min}, {args.r_max}] with r_ref={args.r_ref} must lie "
            f"inside the open domain (0, {end})"
        )
    if args.n < 1:
        return _fail_usage("n must be >= 1")
    closed = harmonic.has_closed_form(model)
    if not closed and not args.numeric_only:
        return _fail_usage(
            f"{model.model_id} has no closed form; numeric only with --numeric-only"
        )
    config = RunConfig(
        command="phi-table",
        args={
            "model": args.model,
            "r_min": args.r_min,
            "r_max": args.r_max,
            "n": args.n,
            "r_ref": args.r_ref,
            "numeric_only": bool(args.numeric_only),
        },
        output_path=args.out,
        csv_precision=args.precision,
        seed=args.seed,
        tol=args.tol,
    )
    p = args.precision
    grid = (
        [args.r_min + (args.r_max - args.r_min) * i / (args.n - 1) for i in range(args.n)]
        if args.n > 1
        else [args.r_min]
    )
    if closed:
        phi0_fn = harmonic.phi0_closed_function(model)
    else:
        phi0_fn = harmonic.phi0_numeric_function(model, args.r_ref)
    lines = [config.comment_line()]
    lines.append("r,theta,phi1,phi0_closed,phi0_numeric_diff,laplacian_residual")
    for r in grid:
        phi0_val = harmonic.phi0_closed(model, r) if closed else None
        residual = harmonic.harmonicity_residual(model, phi0_fn, r)
        lines.append(
            ",".join(
                (
                    _fmt(r, p),
                    _fmt(theta(model, r), p),
                    _fmt(harmonic.phi1(model, r), p),
                    _fmt(phi0_val, p),
                    _fmt(harmonic.phi0_numeric(model, r, args.r_ref, tol=args.tol), p),
                    f"{residual:.3e}",
                )
            )
        )
    _write_text(args.out, "\n".join(lines) + "\n")
    return 0


# --- verify -------------------------------------------------------------------


def cmd_verify(args: argparse.Namespace) -> int:
    config = RunConfig(
        command="verify",
        args={"scope": args.scope},
        output_path=args.out,
        csv_precision=args.precision,
        seed=args.seed,
        tol=args.tol,
    )
    try:
        results = verify_mod.run_all(scope=args.scope, seed=args.seed)
    except (UnsupportedModel, ValueError) as exc:
        return _fail_usage(str(exc))
    lines = [config.comment_line()]
    lines += [r.line() for r in results]
    n_fail = sum(1 for r in results if r.status == "FAIL")
    n_warn = sum(1 for r in results if r.status == "WARN")
    lines.append(
        f"# checked={len(results)} fail={n_fail} warn={n_warn}"
    )
    _write_text(args.out, "\n".join(lines) + "\n")
    return VERIFY_FAIL if n_fail else 0


# --- quotient ----------------------------------------------------------------


def _parse_basepoint(group, text: str | None):
    if text is None:
        return verify_mod.default_basepoint(group)
    try:
        values = [float(tok) for tok in text.split(",")]
    except ValueError:
        raise ValueError(f"basepoint {text!r} is not comma-separated reals") from None
    if group.ambient == "flat":
        if len(values) != 2:
            raise ValueError("flat basepoints take 2 coordinates")
        return np.asarray(values)
    if group.ambient == "sphere":
        v = np.asarray(values)
        n = np.linalg.norm(v)
        if n == 0:
            raise ValueError("sphere basepoint must be nonzero")
        return v / n
    # projective: 2n reals interpreted as interleaved re,im; n reals as real
    if len(values) == group.ambient_dim:
        v = np.asarray(values, dtype=complex)
    elif len(values) == 2 * group.ambient_dim:
        v = np.asarray(values[0::2]) + 1j * np.asarray(values[1::2])
    else:
        raise ValueError(
            f"projective basepoints take {group.ambient_dim} or "
            f"{2 * group.ambient_dim} reals"
        )
    n = np.linalg.norm(v)
    if n == 0:
        raise ValueError("projective basepoint must be nonzero")
    return v / n


def _quotient_svg(group, base, grid, config) -> str:
    fig = SvgFigure(metadata=config.comment_line())
    if group.ambient == "flat":
        hw = 1.5
        cx, cy = float(base[0]), float(base[1])
        fig.x_range = (cx - hw, cx + hw)
        fig.y_range = (cy - hw, cy + hw)
        assert grid is not None
        boundary = grid.points[grid.regions == quotients.Region.BOUNDARY]
        stride = max(1, len(boundary) // 4000)
        for pt in boundary[::stride]:
            fig.dot(pt, radius=1.0, color="#1f3b70")
        fig.dot((cx, cy), radius=3.0, color="#b02020")
        fig.text((cx + 0.05, cy + 0.05), "P")
    else:
        # schematic slice: unit circle, fundamental wedge at 45 degrees,
        # cap of radius pi/4 about the pole
        fig.x_range = (-1.3, 1.3)
        fig.y_range = (-1.3, 1.3)
        fig.circle((0.0, 0.0), 1.0, color="#888888")
        s = math.sqrt(0.5)
        fig.line((0.0, 0.0), (s, s), color="#1f3b70", width=1.5)
        fig.line((0.0, 0.0), (-s, s), color="#1f3b70", width=1.5)
        steps = 64
        arc = [
            (math.sin(t), math.cos(t))
            for t in [(-0.25 + 0.5 * i / steps) * math.pi for i in range(steps + 1)]
        ]
        fig.polyline(arc, color="#b02020", width=2.0)
        fig.dot((0.0, 1.0), radius=3.0, color="#b02020")
        fig.text((0.05, 1.08), "P")
        label = "lens slice: 90-degree wedge" if group.name == "lens" else (
            "projective slice: 45-degree cone"
        )
        fig.text((-1.2, -1.15), label)
    return fig.render()


def _group_with_inferred_size(group_id: str, basepoint: str | None):
    """Sphere and projective groups size themselves from the basepoint."""
    if basepoint is None or group_id in ("torus", "klein"):
        return verify_mod.make_group(group_id)
    n = len(basepoint.split(","))
    if group_id == "rp":
        if n < 3:
            raise ValueError("rp basepoints live on S^m, m >= 2: give m+1 reals")
        return verify_mod.make_group(group_id, m=n - 1)
    if group_id == "lens":
        if n < 4 or n % 2 != 0:
            raise ValueError("lens basepoints live on S^(2k+1): give 2k+2 reals")
        return verify_mod.make_group(group_id, k=n // 2 - 1)
    if group_id == "cpq":
        # n reals (real vector) or 2n interleaved re,im
        if n % 4 == 0 and n >= 8:
            return verify_mod.make_group(group_id, k=n // 4 - 1)
        if n % 2 == 0 and n >= 4:
            return verify_mod.make_group(group_id, k=n // 2 - 1)
        raise ValueError("cpq basepoints take 2k+2 reals or 4k+4 interleaved re,im")
    return verify_mod.make_group(group_id)


def cmd_quotient(args: argparse.Namespace) -> int:
    try:
        group = _group_with_inferred_size(args.group, args.basepoint)
    except ValueError as exc:
        return _fail_usage(str(exc))
    try:
        base = _parse_basepoint(group, args.basepoint)
    except ValueError as exc:
        return _fail_usage(str(exc))
    config = RunConfig(
        command="quotient",
        args={
            "group": args.group,
            "basepoint": args.basepoint,
            "resolution": args.resolution,
            "svg": args.svg,
        },
        output_path=args.out,
        csv_precision=args.precision,
        seed=args.seed,
        tol=args.tol,
    )
    p = args.precision
    report = quotients.injectivity_radius(group, base)
    lines = [config.comment_line()]
    lines.append(
        f"# iota={report.radius:.{p}g} minimizer={report.minimizer} "
        f"method={report.method}"
    )
    grid = None
    if group.ambient == "flat":
        grid = quotients.classify_grid(group, base, args.resolution)
        lines.append("x,y,class")
        for pt, region in zip(grid.points, grid.regions):
            lines.append(f"{_fmt(pt[0], p)},{_fmt(pt[1], p)},{region.value}")
    _write_text(args.out, "\n".join(lines) + "\n")
    if args.svg is not None:
        path = args.svg if args.svg != "" else f"quotient_{args.group}.svg"
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(_quotient_svg(group, base, grid, config))
    return 0


# --- bounds -------------------------------------------------------------------


def cmd_bounds(args: argparse.Namespace) -> int:
    try:
        model = parse_model_id(args.model)
    except UnsupportedModel as exc:
        return _fail_usage(str(exc))
    if model.curvature_sign != -1:
        return _fail_usage(f"{model.model_id} is not a negative-curvature model")
    orientable = args.orientable == "true"
    config = RunConfig(
        command="bounds",
        args={"model": args.model, "orientable": orientable},
        output_path=args.out,
        csv_precision=args.precision,
        seed=args.seed,
        tol=args.tol,
    )
    try:
        report = topology.volume_bounds(model, orientable=orientable)
    except UnsupportedModel as exc:
        return _fail_usage(str(exc))
    payload = report.to_json_dict()
    payload["config"] = json.loads(config.comment_line()[len("# config ") :])
    _write_text(args.out, json.dumps(payload, sort_keys=True, indent=2) + "\n")
    return 0


# --- parser -------------------------------------------------------------------


def _add_common(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--tol", type=float, default=1e-10, help="quadrature tolerance")
    sub.add_argument("--seed", type=int, default=42, help="RNG seed for sampling")
    sub.add_argument(
        "--precision", type=int, default=12, help="CSV decimal digits (6..17)"
    )
    sub.add_argument("--out", default=None, help="output path (default stdout)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="harmonic-spaces",
        description=(
            "Radial harmonic functions, quotient injectivity radii, and "
            "volume lower bounds on rank-1 symmetric spaces"
        ),
    )
    subs = parser.add_subparsers(dest="command", required=True)

    pt = subs.add_parser("phi-table", help="tabulate theta, phi1, phi0 on a grid")
    pt.add_argument("model", help="model id, e.g. S3, CP2, hHP4, E2")
    pt.add_argument("r_min", type=float)
    pt.add_argument("r_max", type=float)
    pt.add_argument("n", type=int)
    pt.add_argument("r_ref", type=float)
    pt.add_argument(
        "--numeric-only",
        action="store_true",
        help="allow models without a closed form (phi0_closed column left empty)",
    )
    _add_common(pt)
    pt.set_defaults(func=cmd_phi_table)

    vf = subs.add_parser("verify", help="run the oracle verification suite")
    vf.add_argument("scope", nargs="?", default="all", help="'all' or a model id")
    _add_common(vf)
    vf.set_defaults(func=cmd_verify)

    qt = subs.add_parser("quotient", help="injectivity radius and cut locus")
    qt.add_argument("group", help="torus | klein | rp | lens | cpq")
    qt.add_argument("basepoint", nargs="?", default=None, help="comma-separated reals")
    qt.add_argument("--resolution", type=int, default=200, help="grid points per axis")
    qt.add_argument(
        "--svg",
        nargs="?",
        const="",
        default=None,
        help="write an SVG figure (optional path)",
    )
    _add_common(qt)
    qt.set_defaults(func=cmd_quotient)

    bd = subs.add_parser("bounds", help="volume lower bounds for hyperbolic duals")
    bd.add_argument("model", help="negative-curvature model id, e.g. hCP2")
    bd.add_argument(
        "--orientable", choices=("true", "false"), default="true"
    )
    _add_common(bd)
    bd.set_defaults(func=cmd_bounds)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (DomainViolation, ValueError) as exc:
        return _fail_usage(str(exc))
    except HarmonicSpacesError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return VERIFY_FAIL


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
