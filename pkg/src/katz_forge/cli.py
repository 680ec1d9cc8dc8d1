"""Command-line surface.

Exit codes: 0 success, 1 check failure (including contradiction outcomes
under `replay`), 2 usage or malformed input, 3 out-of-scope input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .scalars import parse_eigenvalue, parse_scalar
from .formal_type import render_formal_type
from .fourier import OutOfScopeError
from .engine import (ConnectionDescriptor, ContradictionError, INF,
                     descriptor_from_json, descriptor_to_json,
                     op_fourier, op_middle_convolution, op_twist, parse_script,
                     render_location, rigidity_index, run_script)
from . import classify


def golden_dir() -> str:
    env = os.environ.get("KATZ_FORGE_GOLDEN_DIR")
    if env:
        return env
    return os.path.join(os.path.dirname(__file__), "goldens")


def golden_path(name: str) -> str:
    return os.path.join(golden_dir(), name)


def _load(path: str) -> ConnectionDescriptor:
    try:
        with open(path) as fh:
            data = json.load(fh)
    except FileNotFoundError:
        print(f"error: no such file: {path}", file=sys.stderr)
        raise SystemExit(2)
    except json.JSONDecodeError as exc:
        print(f"error: malformed JSON in {path} at line {exc.lineno} column "
              f"{exc.colno} (char {exc.pos}): {exc.msg}", file=sys.stderr)
        raise SystemExit(2)
    try:
        c = descriptor_from_json(data)
    except Exception as exc:
        print(f"error: malformed descriptor in {path}: {exc}", file=sys.stderr)
        raise SystemExit(2)
    if not c.points:
        print(f"error: malformed descriptor in {path}: no singular points",
              file=sys.stderr)
        raise SystemExit(2)
    return c


def _check_report(c: ConnectionDescriptor) -> dict:
    points = {}
    for loc, ft in c.points:
        end = ft.end()
        points[render_location(loc)] = {
            "type": render_formal_type(ft),
            "slopes": {str(s): d for s, d in sorted(ft.slopes().items())},
            "irr": ft.irregularity(),
            "end_irr": end.irregularity(),
            "end_soln": end.soln_dim(),
        }
    inf_ft = c.inf_type()
    self_dual = all(ft.checks()["self_dual"] for _, ft in c.points)
    det_trivial = all(ft.checks()["det_trivial"] for _, ft in c.points)
    mono = inf_ft.formal_monodromy().eigenvalue_multiset()
    pattern = classify.g2_pattern_check(mono) if len(mono) == 7 else None
    return {
        "rank": c.rank,
        "points": points,
        "rig": rigidity_index(c),
        "self_dual": self_dual,
        "det_trivial": det_trivial,
        "torus_dim": inf_ft.exponential_torus_dim(),
        "g2_pattern": pattern,
    }


def cmd_check(args) -> int:
    c = _load(args.descriptor)
    rep = _check_report(c)
    if args.json:
        print(json.dumps(rep, indent=2, sort_keys=True))
    else:
        print(f"rank = {rep['rank']}")
        for loc, p in rep["points"].items():
            print(f"point {loc}: {p['type']}")
            print(f"  slopes {p['slopes']}  irr = {p['irr']}  "
                  f"irr(End) = {p['end_irr']}  soln(End) = {p['end_soln']}")
        print(f"rig = {rep['rig']}")
        print(f"self-dual = {rep['self_dual']}  det-trivial = {rep['det_trivial']}")
        print(f"exponential torus dim = {rep['torus_dim']}")
        print(f"monodromy pattern (G2 necessary condition) = {rep['g2_pattern']}")
    if args.expect_rigid and rep["rig"] != 2:
        return 1
    return 0


def _print_descriptor(c: ConnectionDescriptor, as_json: bool):
    if as_json:
        print(json.dumps(descriptor_to_json(c), indent=2, sort_keys=True))
    else:
        print(f"rank {c.rank}")
        for loc, ft in c.points:
            print(f"  {render_location(loc)}: {render_formal_type(ft)}")


def cmd_replay(args) -> int:
    c = _load(args.descriptor)
    try:
        with open(args.script) as fh:
            steps = parse_script(fh.read())
    except FileNotFoundError:
        print(f"error: no such file: {args.script}", file=sys.stderr)
        return 2
    try:
        trace = run_script(c, steps)
    except ContradictionError as exc:
        print(f"contradiction: {exc.report}")
        return 1
    except OutOfScopeError as exc:
        print(f"out of scope: {exc}", file=sys.stderr)
        return 3
    if args.trace:
        labels = ["start"] + [s.op for s in steps]
        for label, d in zip(labels, trace):
            print(f"--- {label} (rank {d.rank})")
            for loc, ft in d.points:
                print(f"    {render_location(loc)}: {render_formal_type(ft)}")
    _print_descriptor(trace[-1], args.json)
    return 0


def _single_op(args, fn) -> int:
    c = _load(args.descriptor)
    try:
        out = fn(c)
    except ContradictionError as exc:
        print(f"contradiction: {exc.report}")
        return 1
    except OutOfScopeError as exc:
        print(f"out of scope: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    _print_descriptor(out, args.json)
    return 0


def cmd_fourier(args) -> int:
    return _single_op(args, op_fourier)


def cmd_mc(args) -> int:
    chi = parse_eigenvalue(args.chi)
    return _single_op(args, lambda c: op_middle_convolution(c, chi))


def cmd_twist(args) -> int:
    def do(c):
        twists = {}
        for chunk in args.twists.split(","):
            loc_s, _, eig_s = chunk.rpartition(":")
            loc = INF if loc_s.strip() == INF else parse_scalar(loc_s.strip())
            twists[loc] = parse_eigenvalue(eig_s.strip())
        return op_twist(c, twists)
    return _single_op(args, do)


def cmd_classify(args) -> int:
    did = False
    if args.profiles:
        did = True
        rows = classify.enumerate_slope_profiles()
        if args.json:
            print(json.dumps([[ [str(s), d] for s, d in row] for row in rows]))
        else:
            print("slopes & dimensions")
            for row in rows:
                print("  " + ",".join(str(s) for s, _ in row).ljust(12)
                      + " | " + ",".join(str(d) for _, d in row))
    if args.tables:
        did = True
        rows = classify.enumerate_local_invariants()
        if args.json:
            print(json.dumps([{"slopes": [str(s) for s in r["slopes"]],
                               "dims": list(r["dims"]),
                               "soln": sorted(r["soln"]),
                               "irr": sorted(r["irr"])} for r in rows]))
        else:
            print("slopes | dims | dim Soln(END) | irr(END)")
            for r in rows:
                print("  " + ",".join(str(s) for s in r["slopes"]).ljust(10)
                      + " | " + ",".join(str(d) for d in r["dims"]).ljust(5)
                      + " | " + ",".join(str(x) for x in sorted(r["soln"])).ljust(16)
                      + " | " + ",".join(str(x) for x in sorted(r["irr"])))
    if args.tuples is not None:
        did = True
        tups = classify.solve_rigidity_tuples(args.tuples)
        if args.json:
            print(json.dumps(tups))
        else:
            print(f"r = {args.tuples}: {len(tups)} tuples")
            for t in tups:
                print("  " + str(t))
    if args.verify:
        did = True
        rep = classify.verify_classification()
        if args.json:
            print(json.dumps(rep, indent=2, sort_keys=True, default=str))
        else:
            for name, _, _ in classify.CLASSIFICATION_ROWS:
                r = rep[name]
                chi = r.get("lambda3_chi", "-")
                print(f"  {name}: rig={r['rig']} self_dual={r['self_dual']} "
                      f"det_trivial={r['det_trivial']} torus={r['torus_dim']} "
                      f"pattern={r['pattern_zero'] and r['pattern_inf']} "
                      f"lambda3_chi={chi} -> {'PASS' if r['pass'] else 'FAIL'}")
            ex = rep["excluded"]
            print(f"  excluded: rig={ex['rig']} adjoint_dim={ex['adjoint_dim']} != "
                  f"{classify.ADJOINT_DIM_AT_ZERO['e2']} -> "
                  f"{'PASS' if ex['pass'] else 'FAIL (excluded as required)'}")
        if not rep["ok"]:
            return 1
    if not did:
        print("classify: nothing to do (use --tables, --tuples R, --profiles or --verify)",
              file=sys.stderr)
        return 2
    return 0


def cmd_pullback(args) -> int:
    if args.verify:
        rep = classify.pullback_identities()
        if args.json:
            print(json.dumps(rep))
        else:
            for k, v in rep.items():
                print(f"  {k}: {v}")
        return 0 if rep["ok"] else 1
    c = _load(args.descriptor)
    out = classify.kummer_pullback_descriptor(c, args.k)
    _print_descriptor(out, args.json)
    return 0


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(prog="katz-forge")
    ap.add_argument("--seed", type=int, default=0,
                    help="seed for the randomized property-test harness")
    sub = ap.add_subparsers(dest="cmd")

    p = sub.add_parser("check")
    p.add_argument("descriptor")
    p.add_argument("--json", action="store_true")
    p.add_argument("--expect-rigid", action="store_true")
    p.set_defaults(fn=cmd_check)

    p = sub.add_parser("replay")
    p.add_argument("script")
    p.add_argument("descriptor")
    p.add_argument("--trace", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_replay)

    p = sub.add_parser("fourier")
    p.add_argument("descriptor")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_fourier)

    p = sub.add_parser("mc")
    p.add_argument("chi")
    p.add_argument("descriptor")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_mc)

    p = sub.add_parser("twist")
    p.add_argument("twists", help="comma-separated loc:eigenvalue pairs")
    p.add_argument("descriptor")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_twist)

    p = sub.add_parser("classify")
    p.add_argument("--tables", action="store_true")
    p.add_argument("--tuples", type=int, default=None, metavar="R")
    p.add_argument("--profiles", action="store_true")
    p.add_argument("--verify", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_classify)

    p = sub.add_parser("pullback")
    p.add_argument("--verify", action="store_true")
    p.add_argument("k", type=int, nargs="?")
    p.add_argument("descriptor", nargs="?")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_pullback)

    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0,) else 0
    if not getattr(args, "fn", None):
        ap.print_usage(sys.stderr)
        return 2
    if args.cmd == "pullback" and not args.verify and (args.k is None or args.descriptor is None):
        print("pullback: need either --verify or K DESCRIPTOR", file=sys.stderr)
        return 2
    try:
        return args.fn(args)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    except OutOfScopeError as exc:
        print(f"out of scope: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    raise SystemExit(main())
