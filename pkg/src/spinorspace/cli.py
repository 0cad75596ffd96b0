"""Command-line interface: convert, rotate, gauge, verify, fixtures.

Exit codes: 0 success or pass, 1 verification failure or singular gauge,
2 usage or range errors.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from .core import SpinorRotation, quadruple_from_spinor, scaled_residual
from .fixtures import (
    construct,
    dumps_record,
    fixture_record,
    generate_fixtures,
    load_fixtures,
    write_fixtures,
)
from .gauge_fixing import (
    SingularGaugeError,
    canonical_phase_minus,
    canonical_phase_plus,
    gauge_minus,
    gauge_plus,
    psi_from_direction,
)
from .rotation_algebra import rotate_spinor, so3_from_rotation
from .spinor_maps import project_eta, project_xi
from .verify import SUITE_NAMES, replay_fixtures, run_all, run_suite


def _fmt(values) -> str:
    return "(" + ", ".join(repr(float(v)) for v in values) + ")"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spinorspace",
        description="Spatial spinors on the 4pi double cover: constructors, "
                    "rotations, gauges, verification suites and golden fixtures.")
    sub = parser.add_subparsers(dest="command", required=True)

    convert = sub.add_parser(
        "convert", help="build a spinor record from coordinates and print it")
    convert.add_argument("system", choices=["cartesian", "spherical", "parabolic"])
    convert.add_argument("values", nargs=3, type=float, metavar="V")
    convert.add_argument("--model", choices=["xi", "eta"], default="xi")
    convert.add_argument("--sheet", type=int, choices=[1, -1], default=1)
    convert.add_argument("--tolerance", type=float, default=1e-12)
    convert.add_argument("--seed", type=int, default=0)

    verify = sub.add_parser(
        "verify", help="run identity suites or replay a fixture file")
    verify.add_argument("--suite", choices=("all",) + SUITE_NAMES, default="all")
    verify.add_argument("--samples", type=int, default=1000)
    verify.add_argument("--seed", type=int, default=42)
    verify.add_argument("--tolerance", type=float, default=None)
    verify.add_argument("--fixtures", metavar="PATH", default=None,
                        help="replay this fixture file instead of running suites")

    gauge = sub.add_parser(
        "gauge", help="canonical gauge data for a direction")
    gauge.add_argument("values", nargs=3, type=float, metavar="N")
    gauge.add_argument("--sign", choices=["plus", "minus"], default="plus")
    gauge.add_argument("--gamma", type=float, default=0.0)

    fixtures = sub.add_parser(
        "fixtures", help="write a seeded golden fixture file")
    fixtures.add_argument("--count", type=int, default=100)
    fixtures.add_argument("--seed", type=int, default=1)
    fixtures.add_argument("--out", required=True, metavar="PATH")
    fixtures.add_argument("--tolerance", type=float, default=1e-12)

    rotate = sub.add_parser(
        "rotate", help="apply a rotation along both the spinor and vector paths")
    rotate.add_argument("rotation", nargs=4, type=float, metavar="C")
    rotate.add_argument("system", choices=["cartesian", "spherical", "parabolic"])
    rotate.add_argument("values", nargs=3, type=float, metavar="V")
    rotate.add_argument("--model", choices=["xi", "eta"], default="xi")
    rotate.add_argument("--sheet", type=int, choices=[1, -1], default=1)
    rotate.add_argument("--tolerance", type=float, default=1e-12)
    return parser


def _cmd_convert(args) -> int:
    record = fixture_record(args.system, args.values, args.model, args.sheet,
                            args.seed, args.tolerance)
    print(dumps_record(record))
    return 0


def _cmd_verify(args, parser) -> int:
    if args.fixtures is not None:
        reports = [replay_fixtures(load_fixtures(args.fixtures), args.tolerance)]
    else:
        if args.samples < 1:
            parser.error("--samples must be >= 1")
        tolerance = 1e-12 if args.tolerance is None else args.tolerance
        if args.suite == "all":
            reports = run_all(args.samples, args.seed, tolerance)
        else:
            reports = [run_suite(args.suite, args.samples, args.seed, tolerance)]
    for report in reports:
        for line in report.lines():
            print(line)
    return 0 if all(r.passed for r in reports) else 1


def _cmd_gauge(args) -> int:
    n = np.asarray(args.values, dtype=float)
    norm = float(np.linalg.norm(n))
    if norm == 0.0 or not np.all(np.isfinite(n)):
        raise ValueError("direction must be a finite nonzero vector")
    n /= norm
    psi = psi_from_direction(n, args.gamma)
    if args.sign == "plus":
        data = canonical_phase_plus(psi)
        aligner = gauge_plus(psi, 0.0)
    else:
        data = canonical_phase_minus(psi)
        aligner = gauge_minus(psi, 0.0)
    print(f"direction n = {_fmt(n)}")
    print(f"psi = ({psi.c1!r}, {psi.c2!r})")
    print(f"gamma = {data.gamma!r}")
    print(f"aligner a = {_fmt(aligner.as_tuple())}")
    print(f"rotation c = {_fmt(data.rotation.as_tuple())}")
    print(f"vector parameter C = {_fmt(data.vector_parameter)}")
    return 0


def _cmd_fixtures(args, parser) -> int:
    if args.count < 0:
        parser.error("--count must be >= 0")
    records = generate_fixtures(args.count, args.seed, args.tolerance)
    try:
        written = write_fixtures(records, args.out)
    except OSError as exc:
        print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
        return 1
    print(f"wrote {written} records to {args.out}")
    return 0


def _cmd_rotate(args) -> int:
    rot = SpinorRotation(*args.rotation)
    spinor = construct(args.system, args.values, args.model, args.sheet)
    moved = rotate_spinor(rot, spinor)
    o = so3_from_rotation(rot)
    if args.model == "eta":
        before = project_eta(spinor)
        after = project_eta(moved)
        spinor_path = np.concatenate([after.x, after.a])
        vector_path = np.concatenate([o @ before.x, o @ before.a])
    else:
        _, x_before = project_xi(spinor)
        _, x_after = project_xi(moved)
        spinor_path = x_after
        vector_path = o @ x_before
    residual = float(scaled_residual(spinor_path, vector_path))
    print(f"rotation c = {_fmt(rot.as_tuple())}")
    print(f"rotated spinor = ({moved.c1!r}, {moved.c2!r})")
    print(f"rotated quadruple = {_fmt(quadruple_from_spinor(moved).as_tuple())}")
    print(f"spinor path   x' = {_fmt(spinor_path)}")
    print(f"vector path O x  = {_fmt(vector_path)}")
    verdict = "pass" if residual <= args.tolerance else "FAIL"
    print(f"residual {residual:.3e} (tolerance {args.tolerance:.1e}): {verdict}")
    return 0 if residual <= args.tolerance else 1


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "convert":
            return _cmd_convert(args)
        if args.command == "verify":
            return _cmd_verify(args, parser)
        if args.command == "gauge":
            return _cmd_gauge(args)
        if args.command == "fixtures":
            return _cmd_fixtures(args, parser)
        return _cmd_rotate(args)
    except SingularGaugeError as exc:
        print(f"singular gauge: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
