"""Command-line interface: construct | check | lift | plot | verify.

Exit codes: 0 success, 1 failed check or computation error, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import criteria
from .grid import GridSpec
from .io import (
    MapDocumentError,
    export_obj,
    export_planar,
    parse_map,
    planar_to_csv,
    planar_to_svg,
    serialize_map,
)
from .mapping import ConstructionParams, HarmonicMap, build_map, default_trunc, ensure_resolution
from .specfun import DomainError, PowerSeries
from .surface import OddDilatationPower, lift, lift_spec_for
from .verify import verify


def complex_literal(text: str) -> complex:
    """Parse ``RE`` or ``RE,IM``."""
    parts = text.split(",")
    try:
        if len(parts) == 1:
            return complex(float(parts[0]), 0.0)
        if len(parts) == 2:
            return complex(float(parts[0]), float(parts[1]))
    except ValueError:
        pass
    raise argparse.ArgumentTypeError(f"expected RE or RE,IM, got {text!r}")


def _add_construct_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--variant", required=True, type=str.lower, choices=["t1", "t2"])
    p.add_argument("--a", required=True, type=complex_literal)
    p.add_argument("--b", required=True, type=complex_literal)
    p.add_argument("--m", required=True, type=int)
    p.add_argument("--alpha", required=True, type=complex_literal)
    p.add_argument("--trunc", type=int, default=None, help="truncation order (default 400 or $HCC_TRUNC)")


def _params(args) -> ConstructionParams:
    return ConstructionParams(args.a, args.b, args.m, args.alpha, args.variant.upper(),
                              args.trunc or default_trunc())


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hcc", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a map and write its JSON document")
    _add_construct_flags(p)
    p.add_argument("--out", required=True)

    p = sub.add_parser("check", help="run one class criterion on a map document")
    p.add_argument("--in", dest="inp", required=True)
    p.add_argument("--class", dest="kind", required=True,
                   choices=["f", "f1", "f2", "coeff-f1", "coeff-f2"])
    p.add_argument("--radius", type=float, default=0.95)
    p.add_argument("--grid", default="64x64")
    p.add_argument("--theta", type=float, default=0.0)
    p.add_argument("--json", action="store_true", help="print the report as JSON")

    p = sub.add_parser("lift", help="export the minimal surface as OBJ")
    p.add_argument("--in", dest="inp", required=True)
    p.add_argument("--radius", type=float, default=0.9)
    p.add_argument("--grid", default="200x64")
    p.add_argument("--out", required=True)

    p = sub.add_parser("plot", help="export images of grid circles and spokes")
    p.add_argument("--in", dest="inp", required=True)
    p.add_argument("--radius", type=float, default=0.98)
    p.add_argument("--circles", type=int, default=20)
    p.add_argument("--spokes", type=int, default=32)
    p.add_argument("--out", required=True)
    p.add_argument("--pre-shear", action="store_true", help="plot the analytic map h + g instead")

    p = sub.add_parser("verify", help="run every check for one parameter set")
    _add_construct_flags(p)
    return parser


def _read_map(path: str) -> HarmonicMap:
    return parse_map(Path(path).read_text(encoding="utf-8"))


def _cmd_construct(args) -> int:
    f = build_map(_params(args))
    Path(args.out).write_text(serialize_map(f), encoding="utf-8")
    print(f"wrote {args.out} ({f.params.variant}, trunc {f.trunc_order})")
    return 0


def _cmd_check(args) -> int:
    f = _read_map(args.inp)
    if args.kind == "coeff-f1":
        rep = criteria.coeff_sum_F1(f)
    elif args.kind == "coeff-f2":
        rep = criteria.coeff_sum_F2(f)
    else:
        grid = GridSpec.parse(args.grid, args.radius)
        rep = criteria.pointwise_class_check(f, args.kind.upper(), grid, args.theta)
    print(json.dumps(rep.as_dict()) if args.json else rep)
    return 0 if rep.passed else 1


def _cmd_lift(args) -> int:
    f = _read_map(args.inp)
    spec = lift_spec_for(f)
    grid = GridSpec.parse(args.grid, args.radius)
    mesh = lift(ensure_resolution(f, args.radius), spec, grid)
    Path(args.out).write_text(export_obj(mesh), encoding="utf-8")
    print(f"wrote {args.out}: {len(mesh.vertices)} vertices, {len(mesh.faces)} faces")
    return 0


def _cmd_plot(args) -> int:
    f = ensure_resolution(_read_map(args.inp), args.radius)
    if args.pre_shear:
        f = HarmonicMap(f.pre_shear(), PowerSeries.zeros(f.trunc_order))
    grid = GridSpec(args.radius, args.circles, args.spokes)
    img = export_planar(f, grid)
    suffix = Path(args.out).suffix.lower()
    if suffix == ".csv":
        text = planar_to_csv(img)
    elif suffix == ".svg":
        text = planar_to_svg(img)
    else:
        print(f"hcc plot: output must end in .csv or .svg, got {args.out}", file=sys.stderr)
        return 2
    Path(args.out).write_text(text, encoding="utf-8")
    print(f"wrote {args.out}: {len(img.polylines)} polylines")
    return 0


def _cmd_verify(args) -> int:
    items = verify(_params(args))
    for item in items:
        print(item)
    ok = all(i.passed for i in items)
    print("ALL PASS" if ok else "FAILED")
    return 0 if ok else 1


COMMANDS = {
    "construct": _cmd_construct,
    "check": _cmd_check,
    "lift": _cmd_lift,
    "plot": _cmd_plot,
    "verify": _cmd_verify,
}


COMPLEX_FLAGS = ("--a", "--b", "--alpha")


def _glue_complex_flags(argv: list[str]) -> list[str]:
    # "--alpha -1,0" would otherwise be read as an unknown option "-1,0"
    out, i = [], 0
    while i < len(argv):
        if argv[i] in COMPLEX_FLAGS and i + 1 < len(argv):
            out.append(f"{argv[i]}={argv[i + 1]}")
            i += 2
        else:
            out.append(argv[i])
            i += 1
    return out


def main(argv=None) -> int:
    parser = build_parser()
    argv = _glue_complex_flags(list(sys.argv[1:] if argv is None else argv))
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args)
    except OddDilatationPower as exc:
        print(f"hcc {args.command}: OddDilatationPower: {exc}", file=sys.stderr)
        return 1
    except MapDocumentError as exc:
        print(f"hcc {args.command}: invalid map document: {exc}", file=sys.stderr)
        return 1
    except (DomainError, ValueError, ArithmeticError, OSError) as exc:
        print(f"hcc {args.command}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
