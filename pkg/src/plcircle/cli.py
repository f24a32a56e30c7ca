"""Batch command line front end.

Exit codes: 0 success, 1 reported domain outcome (obstruction, truncated,
infeasible, no finite orbit), 2 malformed input or invariant violation.
Output is deterministic for identical inputs and seeds.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import cantor_bendixson as cb
from . import io
from .circle import CirclePoint, frac_mod1
from .cocycle import (breakpoint_growth, growth_params, jump_cocycle,
                      l2_norm_sq, orbit_norm_seq)
from .homeo import ExoticParams, exotic_element, random_pl
from .rotnum import rotation_number
from .smoothing import commensuration_defect, detect_finite_orbit, smooth_group


def _write_element(h, path):
    doc = json.dumps(io.element_to_json(h), indent=2)
    if path:
        with open(path, "w") as fh:
            fh.write(doc + "\n")
    else:
        print(doc)


def cmd_show(args):
    h = io.element_from_json(io.load_json(args.element))
    if args.format == "json":
        print(json.dumps(io.element_to_json(h), indent=2))
        return 0
    print("vertices (lift):")
    for x, y in h.verts:
        print(f"  {io.format_rational(x)} -> {io.format_rational(y)}")
    print(f"breakpoints: {len(h.breakpoints)}")
    for p, v in jump_cocycle(h).entries:
        print(f"  jump at {io.format_rational(p.value)}: {io.format_rational(v)}")
    return 0


def cmd_eval(args):
    h = io.element_from_json(io.load_json(args.element))
    p = CirclePoint(frac_mod1(io.parse_rational(args.point)))
    print(io.format_rational(h.eval(p).value))
    return 0


def cmd_compose(args):
    g = io.element_from_json(io.load_json(args.left))
    h = io.element_from_json(io.load_json(args.right))
    _write_element(g.compose(h), args.output)
    return 0


def cmd_exotic(args):
    h = exotic_element(ExoticParams(io.parse_rational(args.A),
                                    io.parse_rational(args.lam)))
    _write_element(h, args.output)
    return 0


def cmd_random(args):
    _write_element(random_pl(args.seed, args.breakpoints, args.denom_bound),
                   args.output)
    return 0


def cmd_commensuration(args):
    h = io.element_from_json(io.load_json(args.element))
    print(commensuration_defect(h))
    return 0


def cmd_rotnum(args):
    h = io.element_from_json(io.load_json(args.element))
    print(rotation_number(h, max_q=args.max_q, depth=args.depth))
    return 0


def _growth_header(f):
    try:
        gp = growth_params(f)
        return {
            "component": [io.format_rational(gp.component.start.value),
                          io.format_rational(gp.component.end.value)],
            "c0": gp.c0, "c1": gp.c1, "mu": gp.mu, "beta": gp.beta,
            "analyzed_inverse": gp.analyzed_inverse,
        }, (gp.c1 - gp.c0) / gp.mu
    except ValueError:
        return None, 0.0


def cmd_orbit_norms(args):
    f = io.element_from_json(io.load_json(args.element))
    header, rate = _growth_header(f)
    norms = orbit_norm_seq(f, args.N)
    growth = breakpoint_growth(f, args.N)
    print("# " + json.dumps({"growth_params": header}))
    print("n,M_n,norm_sq,bound")
    for n, (m, ns) in enumerate(zip(growth, norms), start=1):
        print(f"{n},{m},{ns!r},{(n * rate)!r}")
    return 0


def cmd_breakpoint_growth(args):
    f = io.element_from_json(io.load_json(args.element))
    print("n,M_n")
    for n, m in enumerate(breakpoint_growth(f, args.N), start=1):
        print(f"{n},{m}")
    return 0


def cmd_smooth(args):
    G = io.group_from_json(io.load_json(args.group))
    outcome = smooth_group(G, max_vertices=args.max_vertices)
    print(json.dumps(io.outcome_to_json(outcome), indent=2))
    return 0 if outcome.kind == "success" else 1


def cmd_finite_orbit(args):
    G = io.group_from_json(io.load_json(args.group))
    orbit = detect_finite_orbit(G, max_period=args.max_period)
    if orbit is None:
        print(json.dumps({"finite_orbit": None}))
        return 1
    print(json.dumps({"finite_orbit":
                      [io.format_rational(p.value) for p in orbit]}))
    return 0


def cmd_cb_rank(args):
    S = io.symbolic_set_from_json(io.load_json(args.set))
    try:
        cb.validate_realization(S)
    except ValueError as exc:
        raise io.FormatError(str(exc))
    r = cb.cb_rank(S)
    print(f"rank {r.rank}")
    print(f"top finite set size {r.top_finite_set_size}")
    print("derivative chain sizes: "
          + " ".join(str(n) for n in cb.derivative_chain(S)))
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="plcircle",
        description="Exact dynamics of piecewise linear circle homeomorphisms")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("show", help="print an element's canonical data")
    p.add_argument("element")
    p.add_argument("--format", choices=["table", "json"], default="table")
    p.set_defaults(func=cmd_show)

    p = sub.add_parser("eval", help="evaluate an element at a point")
    p.add_argument("element")
    p.add_argument("point")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("compose", help="compose two elements (left o right)")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_compose)

    p = sub.add_parser("exotic", help="construct an exotic-circle element")
    p.add_argument("A")
    p.add_argument("lam", metavar="lambda")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_exotic)

    p = sub.add_parser("random", help="seeded random element")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("-k", "--breakpoints", type=int, default=4)
    p.add_argument("--denom-bound", type=int, default=64)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_random)

    p = sub.add_parser("commensuration", help="commensuration defect of an element")
    p.add_argument("element")
    p.set_defaults(func=cmd_commensuration)

    p = sub.add_parser("rotnum", help="rotation number (exact or bracketed)")
    p.add_argument("element")
    p.add_argument("--max-q", type=int, default=32)
    p.add_argument("--depth", type=int, default=16)
    p.set_defaults(func=cmd_rotnum)

    p = sub.add_parser("orbit-norms",
                       help="CSV of breakpoint counts and orbit norms of iterates")
    p.add_argument("element")
    p.add_argument("-N", type=int, default=50)
    p.set_defaults(func=cmd_orbit_norms)

    p = sub.add_parser("breakpoint-growth", help="CSV of breakpoint counts")
    p.add_argument("element")
    p.add_argument("-N", type=int, default=50)
    p.set_defaults(func=cmd_breakpoint_growth)

    p = sub.add_parser("smooth", help="run the conjugation pipeline on a group")
    p.add_argument("group")
    p.add_argument("--max-vertices", type=int, default=4096)
    p.set_defaults(func=cmd_smooth)

    p = sub.add_parser("finite-orbit", help="search for a finite group orbit")
    p.add_argument("group")
    p.add_argument("--max-period", type=int, default=6)
    p.set_defaults(func=cmd_finite_orbit)

    p = sub.add_parser("cb-rank", help="Cantor-Bendixson rank of a symbolic set")
    p.add_argument("set")
    p.set_defaults(func=cmd_cb_rank)

    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (io.FormatError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
