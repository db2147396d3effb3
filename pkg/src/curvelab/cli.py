"""Command-line front end.

Subcommands: ``census``, ``verify lemma21|lemma22``, ``curves enumerate``,
``intersect``, ``complex build``, ``rigidity search``, ``fixtures run``.
Reports are deterministic ``key: value`` lines written to stdout (and to
``--out`` when given).  Exit codes: 0 all checks pass, 1 a verified
violation was found, 2 usage or hypothesis error.
"""

from __future__ import annotations

import argparse
import os
import sys

from .errors import (
    CurvelabError,
    FormatError,
    NoPantsDecomposition,
    OutOfHypothesis,
    PropagatorHypothesisViolated,
    UnknownFixture,
    WrongTriangulation,
)
from .surface_core import SurfaceSpec

DEFAULT_SWEEP_BOUND = 8
DEFAULT_WEIGHT_BOUND = 10
DEFAULT_WORD_BOUND = 5
MAX_CENSUS_GN = 9

_CONVENTION = "self-intersection-convention: two-sided 0, one-sided 1"


class UsageError(Exception):
    pass


def _threads():
    """Worker count from CURVELAB_THREADS; reports stay byte-identical.

    The library modules are deterministic and presently run serially, so
    the value only gets validated.
    """
    raw = os.environ.get("CURVELAB_THREADS")
    if raw is None:
        return None
    try:
        value = int(raw)
    except ValueError:
        raise UsageError("CURVELAB_THREADS must be an integer, got %r" % (raw,))
    if value < 1:
        raise UsageError("CURVELAB_THREADS must be >= 1, got %d" % value)
    return value


def _surface(g, n):
    try:
        return SurfaceSpec(g, n)
    except ValueError as exc:
        raise UsageError(str(exc))


def cmd_census(args):
    from .pants_census import enumerate_decompositions

    s = _surface(args.genus, args.boundary)
    if s.genus + s.boundary > MAX_CENSUS_GN:
        raise UsageError(
            "census capped at g+n <= %d by default; got %s" % (MAX_CENSUS_GN, s)
        )
    lines = ["surface: %s" % s]
    dims = {}
    total = 0
    for pg in enumerate_decompositions(s):
        dims[pg.dimension()] = dims.get(pg.dimension(), 0) + 1
        total += 1
    lines.append("classes: %d" % total)
    for d in sorted(dims):
        lines.append("dim %d: %d" % (d, dims[d]))
    return 0, lines


def cmd_verify(args):
    from .pants_census import verify_lemma_2_1, verify_lemma_2_2

    bound = args.max_gn
    lines = []
    failures = 0
    for g in range(2, bound + 1):
        for n in range(0, bound + 1 - g):
            if (g, n) == (2, 0):
                continue
            s = SurfaceSpec(g, n)
            if args.lemma == "lemma21":
                report = verify_lemma_2_1(s)
                achieved = ",".join(str(d) for d in report.achieved_dims)
                expected = "%d..%d" % (report.expected.lo, report.expected.hi)
                status = "pass" if report.passed else "FAIL"
                lines.append("%s: achieved %s expected %s %s" % (s, achieved, expected, status))
                failures += 0 if report.passed else 1
            else:
                if not ((g, n) == (3, 0) or g + n >= 4):
                    continue
                report = verify_lemma_2_2(s)
                status = "pass" if report.passed else "FAIL"
                lines.append(
                    "%s: top %d census (%d,%d) %s"
                    % (s, report.top_count, report.expected_counts[0], report.expected_counts[1], status)
                )
                for v in report.violations:
                    lines.append("violation: %s: %s" % (s, v))
                failures += 0 if report.passed else 1
    lines.append("result: %s" % ("pass" if failures == 0 else "FAIL"))
    return (0 if failures == 0 else 1), lines


def cmd_curves_enumerate(args):
    from .curve_engine.classes import enumerate_curve_classes
    from .curve_engine.cutting import cut_along
    from .curve_engine.normal import ONE_SIDED, sidedness
    from .curve_engine.triangulation import model_surface

    s = _surface(args.genus, args.boundary)
    try:
        tri = model_surface(s.genus, s.boundary)
    except ValueError as exc:
        raise UsageError(str(exc))
    classes = enumerate_curve_classes(s, args.bound)
    lines = ["surface: %s" % s, "weight-bound: %d" % args.bound, "classes: %d" % len(classes)]
    for i, c in enumerate(classes):
        side = "1s" if sidedness(tri, c) == ONE_SIDED else "2s"
        pieces = cut_along(tri, c)
        sep = "sep" if len(pieces) == 2 else "nonsep"
        orient = "or" if all(p.orientable for p in pieces) else "nonor"
        lines.append("curve %d: %s %s %s %s" % (i, c.ref(), side, sep, orient))
    return 0, lines


def cmd_intersect(args):
    from .curve_engine.cover import double_cover_oracle
    from .curve_engine.files import curve_from_text, model_for_curve
    from .curve_engine.intersection import intersection_number
    from .curve_engine.normal import validate_normal

    try:
        with open(args.curve_a) as fh:
            a = curve_from_text(fh.read())
        with open(args.curve_b) as fh:
            b = curve_from_text(fh.read())
    except OSError as exc:
        raise UsageError(str(exc))
    if a.model != b.model:
        raise UsageError("curves live on different models: %s vs %s" % (a.model, b.model))
    tri = model_for_curve(a)
    for label, c in (("a", a), ("b", b)):
        if not validate_normal(tri, c):
            raise UsageError("curve %s is not a valid single normal curve" % label)
    value = intersection_number(tri, a, b)
    lines = [
        "model: %s" % a.model,
        "curve-a: %s" % a.ref(),
        "curve-b: %s" % b.ref(),
        "intersection: %d" % value,
    ]
    try:
        oracle = double_cover_oracle(tri, a, b)
        lines.append("oracle: %d" % oracle)
        lines.append("agreement: %s" % ("pass" if oracle == value else "FAIL"))
        code = 0 if oracle == value else 1
    except CurvelabError:
        lines.append("oracle: unavailable")
        code = 0
    lines.append(_CONVENTION)
    return code, lines


def cmd_complex_build(args):
    from .rigidity_lab.complexes import build_complex

    s = _surface(args.genus, args.boundary)
    try:
        cc = build_complex(s, args.bound)
    except ValueError as exc:
        raise UsageError(str(exc))
    lines = cc.dump().rstrip("\n").split("\n")
    return 0, lines


def cmd_rigidity_search(args):
    from .rigidity_lab.complexes import build_complex
    from .rigidity_lab.search import certify_geometric, search_injective_maps

    s = _surface(args.genus, args.boundary)
    try:
        cc = build_complex(s, args.bound)
    except ValueError as exc:
        raise UsageError(str(exc))
    maps = search_injective_maps(cc, tuple(args.prune))
    lines = ["surface: %s" % s, "weight-bound: %d" % args.bound]
    if args.prune:
        lines.append("propagators: %s" % ",".join(args.prune))
    lines.append("maps: %d" % len(maps))
    code = 0
    for k, images in enumerate(maps):
        lines.append("map %d" % k)
        for i, m in enumerate(images):
            lines.append("m %d %d" % (i, m))
        if args.certify is not None:
            cert = certify_geometric(cc, images, args.certify)
            if cert.found:
                word = " ".join(cert.word) if cert.word else "<identity>"
                lines.append("certificate: %s" % word)
            else:
                lines.append("certificate: not-found-at-bound %d" % args.certify)
                code = 1
    return code, lines


def cmd_fixtures_run(args):
    from .rigidity_lab.fixtures import fixture_names, run_fixture

    names = [args.name] if args.name else fixture_names()
    lines = []
    failures = 0
    for name in names:
        report = run_fixture(name)
        lines.append("fixture: %s" % report.name)
        for claim, ok in report.claims:
            lines.append("claim: %s: %s" % (claim, "pass" if ok else "FAIL"))
        if not report.passed:
            failures += 1
    lines.append("result: %s" % ("pass" if failures == 0 else "FAIL"))
    return (0 if failures == 0 else 1), lines


def build_parser():
    parser = argparse.ArgumentParser(
        prog="curvelab",
        description="Curve complexes of nonorientable surfaces at desk scale.",
    )
    parser.add_argument("--out", help="also write the report to this path")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("census", help="enumerate pants decompositions")
    p.add_argument("genus", type=int)
    p.add_argument("boundary", type=int)
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("verify", help="lemma sweeps over small surfaces")
    p.add_argument("lemma", choices=["lemma21", "lemma22"])
    p.add_argument("--max-gn", type=int, default=DEFAULT_SWEEP_BOUND)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("curves", help="curve class operations")
    curves_sub = p.add_subparsers(dest="curves_command", required=True)
    pe = curves_sub.add_parser("enumerate", help="essential classes up to a weight bound")
    pe.add_argument("genus", type=int)
    pe.add_argument("boundary", type=int)
    pe.add_argument("bound", type=int, nargs="?", default=DEFAULT_WEIGHT_BOUND)
    pe.set_defaults(func=cmd_curves_enumerate)

    p = sub.add_parser("intersect", help="intersection number of two curve files")
    p.add_argument("curve_a")
    p.add_argument("curve_b")
    p.set_defaults(func=cmd_intersect)

    p = sub.add_parser("complex", help="finite curve complex operations")
    complex_sub = p.add_subparsers(dest="complex_command", required=True)
    pb = complex_sub.add_parser("build", help="build and dump a truncation")
    pb.add_argument("genus", type=int)
    pb.add_argument("boundary", type=int)
    pb.add_argument("bound", type=int, nargs="?", default=DEFAULT_WEIGHT_BOUND)
    pb.set_defaults(func=cmd_complex_build)

    p = sub.add_parser("rigidity", help="injective simplicial map search")
    rig_sub = p.add_subparsers(dest="rigidity_command", required=True)
    ps = rig_sub.add_parser("search", help="search self-maps of a truncation")
    ps.add_argument("genus", type=int)
    ps.add_argument("boundary", type=int)
    ps.add_argument("bound", type=int, nargs="?", default=DEFAULT_WEIGHT_BOUND)
    ps.add_argument("--prune", action="append", default=[],
                    choices=["L2.3", "L2.4", "L2.5", "L2.9", "L2.10"])
    ps.add_argument("--certify", type=int, nargs="?", const=DEFAULT_WORD_BOUND, default=None)
    ps.set_defaults(func=cmd_rigidity_search)

    p = sub.add_parser("fixtures", help="named curve configurations")
    fix_sub = p.add_subparsers(dest="fixtures_command", required=True)
    pf = fix_sub.add_parser("run", help="re-verify fixture claims")
    pf.add_argument("name", nargs="?", default=None)
    pf.set_defaults(func=cmd_fixtures_run)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        _threads()
        code, lines = args.func(args)
    except UsageError as exc:
        sys.stderr.write("usage error: %s\n" % exc)
        return 2
    except (NoPantsDecomposition, OutOfHypothesis, PropagatorHypothesisViolated,
            UnknownFixture, FormatError, WrongTriangulation) as exc:
        sys.stderr.write("%s: %s\n" % (type(exc).__name__, exc))
        return 2
    report = "\n".join(lines) + "\n"
    sys.stdout.write(report)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(report)
    return code


if __name__ == "__main__":
    sys.exit(main())
