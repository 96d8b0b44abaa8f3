"""Command-line interface: ``altdist <subcommand> ...``.

Exit codes: 0 success, 1 computation or input error, 2 usage error,
3 a reproduction claim failed.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from fractions import Fraction

from .bracket import DEFAULT_CAP as BRACKET_CAP
from .corpus import read_file
from .diagram import braid_closure, from_pd
from .errors import AltDistError, ParameterRangeError
from .families import known_values, modified_torus_braid, torus_braid, whitehead_double
from .intervals import _num_json, _num_text
from .khovanov import DEFAULT_CAP as KH_CAP
from .report import DISTANCES, compute_report, diagram_invariants
from .reproduce import SUITES, run_suite
from .signature import goeritz_form, goeritz_signature
from .warping import component_warp, warping_span_diagram

INVARIANT_COLUMNS = (
    "name", "crossings", "components", "writhe", "alternating", "dalt",
    "turaev_genus", "warp", "span", "sigma", "kh_width", "jones",
)
REPORT_COLUMNS = ("distance", "lower", "upper", "lower_source", "upper_source")

EPILOG = f"""\
CSV columns
  invariants: {",".join(INVARIANT_COLUMNS)}
  report:     {",".join(REPORT_COLUMNS)}
  signature:  name,sigma,matrix_signature,correction
  warp:       name,warp,spn,component_warps
  family:     fact,lower,upper,citation
Empty cells mean "not computed" (over a cap, or needs a connected diagram);
an empty upper bound means infinity.  Non-integers are written as p/q.

Exit codes: 0 ok, 1 computation or input error, 2 usage error,
3 reproduce claim failed.
"""


class UsageError(Exception):
    pass


def _default_jobs() -> int:
    return max(1, min(os.cpu_count() or 1, 8))


def _positive(text: str) -> int:
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return n


def _cell(x) -> str:
    if x is None:
        return ""
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, Fraction):
        return _num_text(x)
    if hasattr(x, "to_text"):
        return x.to_text()
    return str(x)


def _json_value(x):
    if isinstance(x, Fraction):
        return _num_json(x)
    if hasattr(x, "to_text"):
        return x.to_text()
    return x


def _dump_json(obj, out) -> None:
    json.dump(obj, out, indent=2)
    out.write("\n")


def _write_csv(columns, rows, out) -> None:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(columns)
    for r in rows:
        w.writerow([_cell(r.get(c)) for c in columns])
    out.write(buf.getvalue())


def _write_text(columns, rows, out) -> None:
    table = [list(columns)] + [[_cell(r.get(c)) for c in columns] for r in rows]
    widths = [max(len(row[i]) for row in table) for i in range(len(columns))]
    for row in table:
        out.write("  ".join(x.ljust(w) for x, w in zip(row, widths)).rstrip() + "\n")


def _emit_rows(fmt, columns, rows, out) -> None:
    if fmt == "json":
        _dump_json([{c: _json_value(r.get(c)) for c in columns} for r in rows], out)
    elif fmt == "csv":
        _write_csv(columns, rows, out)
    else:
        _write_text(columns, rows, out)


def parse_facts(spec: str):
    """``FAMILY:P,Q`` (for example ``torus:3,4`` or ``whitehead:2``)."""
    family, sep, params = spec.partition(":")
    if not sep or not params:
        raise UsageError(f"--facts expects FAMILY:P,Q, got {spec!r}")
    try:
        values = tuple(int(x) for x in params.split(","))
    except ValueError:
        raise UsageError(f"--facts parameters must be integers, got {params!r}") from None
    return known_values(family.strip(), values)


# ---------------------------------------------------------------------------
# subcommands


def _note_skipped(name: str, c: int, args) -> None:
    for what, cap in (("Jones polynomial", args.bracket_cap), ("Khovanov homology", args.kh_cap)):
        if c > cap:
            print(f"altdist: note: {name}: {what} skipped ({c} crossings > cap {cap})", file=sys.stderr)


def cmd_invariants(args, out) -> int:
    rows = []
    for e in read_file(args.file):
        row = diagram_invariants(e.diagram, args.bracket_cap, args.kh_cap, args.jobs)
        row["name"] = e.name
        _note_skipped(e.name, len(e.diagram.crossings), args)
        rows.append(row)
    _emit_rows(args.format, INVARIANT_COLUMNS, rows, out)
    return 0


def cmd_report(args, out) -> int:
    entries = read_file(args.file) if args.file else []
    facts = parse_facts(args.facts) if args.facts else None
    if not entries and facts is None:
        raise UsageError("report needs a diagram file, --facts, or both")
    link = args.link or (entries[0].link if entries else f"{facts.family}{facts.params}")
    for e in entries:
        _note_skipped(e.name, len(e.diagram.crossings), args)
    r = compute_report([e.diagram for e in entries], facts, link, args.bracket_cap, args.kh_cap, args.jobs)
    if args.format == "json":
        _dump_json(r.to_json(), out)
        return 0
    rows = [
        {
            "distance": name,
            "lower": r.distances[name].lower,
            "upper": r.distances[name].upper,
            "lower_source": r.distances[name].lower_source,
            "upper_source": r.distances[name].upper_source,
        }
        for name in DISTANCES
    ]
    if args.format == "csv":
        _write_csv(REPORT_COLUMNS, rows, out)
    else:
        out.write(f"link: {link}\n")
        for row in rows:
            iv = r.distances[row["distance"]]
            out.write(f"  {row['distance']:<13} {iv}  ({', '.join(iv.provenance)})\n")
    return 0


FIGURE_EIGHT = ((4, 2, 5, 1), (8, 6, 1, 5), (6, 3, 7, 4), (2, 7, 3, 8))


def family_diagram(family: str, params: tuple, twists: int = 0):
    """A diagram for a family member, or None when it is too large to build."""
    if family == "torus":
        return braid_closure(torus_braid(*params)), torus_braid(*params).to_text()
    if family == "modified":
        return braid_closure(modified_torus_braid(*params)), modified_torus_braid(*params).to_text()
    if family == "whitehead":
        (n,) = params
        if n == 0:
            return from_pd(FIGURE_EIGHT), None
        if n == 1:
            return whitehead_double(from_pd(FIGURE_EIGHT), twists), None
        return None, None
    raise ParameterRangeError(f"unknown family {family!r}")


def cmd_family(args, out) -> int:
    params = tuple(args.params)
    facts = known_values(args.family, params)
    d, braid = family_diagram(args.family, params, args.twists)
    obj = {
        "family": args.family,
        "params": list(params),
        "braid": braid,
        "diagram": d.to_text() if d is not None else None,
        "crossings": len(d.crossings) if d is not None else None,
        "facts": facts.to_json()["facts"],
    }
    if args.format == "json":
        _dump_json(obj, out)
        return 0
    if args.format == "csv":
        rows = [
            {"fact": name, "lower": f.interval.lo, "upper": f.interval.hi, "citation": f.citation}
            for name, f in sorted(facts.facts.items())
        ]
        _write_csv(("fact", "lower", "upper", "citation"), rows, out)
    else:
        if braid:
            out.write(f"braid: {braid}\n")
        out.write(f"diagram: {obj['diagram'] if d is not None else '(not generated)'}\n")
        for name, f in facts.facts.items():
            out.write(f"  {name:<15} {f.interval}  [{f.citation}]\n")
    return 0


def cmd_reproduce(args, out) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    failed = 0
    for name in names:
        for claim in run_suite(name, jobs=args.jobs):
            out.write(claim.line() + "\n")
            failed += not claim.passed
    return 3 if failed else 0


def cmd_signature(args, out) -> int:
    rows = []
    for e in read_file(args.file):
        d = e.diagram
        if d.crossings:
            g = goeritz_form(d)
            rows.append({
                "name": e.name, "sigma": g.signature,
                "matrix_signature": g.signature + g.correction, "correction": g.correction,
            })
        else:
            rows.append({"name": e.name, "sigma": goeritz_signature(d), "matrix_signature": 0, "correction": 0})
    _emit_rows(args.format, ("name", "sigma", "matrix_signature", "correction"), rows, out)
    return 0


def cmd_warp(args, out) -> int:
    rows = []
    for e in read_file(args.file):
        d = e.diagram
        w = warping_span_diagram(d)
        per = [component_warp(d, k) for k in range(len(d.components))]
        rows.append({
            "name": e.name, "warp": w, "spn": 2 * w + 1,
            "component_warps": " ".join(_num_text(x) for x in per),
        })
    _emit_rows(args.format, ("name", "warp", "spn", "component_warps"), rows, out)
    return 0


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "text"), default=None)
    common.add_argument("--bracket-cap", type=_positive, default=BRACKET_CAP,
                        help=f"largest crossing count for the state sum (default {BRACKET_CAP})")
    common.add_argument("--kh-cap", type=_positive, default=KH_CAP,
                        help=f"largest crossing count for Khovanov homology (default {KH_CAP})")
    common.add_argument("--jobs", type=_positive, default=_default_jobs(),
                        help="worker processes (default: cores, at most 8)")

    p = argparse.ArgumentParser(
        prog="altdist",
        description="Diagram invariants and interval bounds on how far a link is from alternating.",
        epilog=EPILOG,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("invariants", parents=[common], help="per-diagram invariant table")
    s.add_argument("file")
    s.set_defaults(func=cmd_invariants, default_format="text")

    s = sub.add_parser("report", parents=[common], help="interval report for one link")
    s.add_argument("file", nargs="?")
    s.add_argument("--facts", metavar="FAMILY:P,Q", help="cited values, e.g. torus:3,4 or whitehead:2")
    s.add_argument("--link", help="link name for the report")
    s.set_defaults(func=cmd_report, default_format="json")

    s = sub.add_parser("family", parents=[common], help="family member diagram and cited values")
    s.add_argument("family", choices=("torus", "modified", "whitehead"))
    s.add_argument("params", type=int, nargs="+")
    s.add_argument("--twists", type=int, default=0, help="framing of the Whitehead double")
    s.set_defaults(func=cmd_family, default_format="json")

    s = sub.add_parser("reproduce", parents=[common], help="run a reproduction suite")
    s.add_argument("suite", choices=tuple(SUITES) + ("all",))
    s.set_defaults(func=cmd_reproduce, default_format="text")

    s = sub.add_parser("signature", parents=[common], help="Goeritz signature of each diagram")
    s.add_argument("file")
    s.set_defaults(func=cmd_signature, default_format="text")

    s = sub.add_parser("warp", parents=[common], help="warping span of each diagram")
    s.add_argument("file")
    s.set_defaults(func=cmd_warp, default_format="text")
    return p


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.format is None:
        args.format = args.default_format
    try:
        return args.func(args, out)
    except UsageError as exc:
        print(f"altdist: error: {exc}", file=sys.stderr)
        return 2
    except (AltDistError, OSError) as exc:
        print(f"altdist: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
