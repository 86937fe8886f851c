"""Command-line front end.

All subcommands emit deterministic JSON on stdout (classes sorted by
(trace, norm2), exact rationals as "p/q" strings, floats as shortest
round-trip decimals).  Domain errors print a JSON object on stderr and exit
1; usage errors exit 2.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass

from .decompose import decompose
from .divisors import spherical_divisors, zero_structure
from .errors import QuatPolyError
from .golden import run_golden
from .lcm import llcm_general, lrcm_general
from .parsing import (
    ParseError,
    parse_poly,
    parse_quaternion,
    poly_str,
    quat_str,
    scalar_json,
)
from .polynomials import QPolynomial, mult_left, mult_right, mult_spherical
from .quaternions import class_of, classes_equal, in_class_point
from .roots import find_all_roots
from .scalars import Context, context
from .series import complete_to_blaschke


@dataclass(frozen=True)
class RunConfig:
    backend: str = "exact"
    eps: float | None = None
    truncation_order: int = 30
    output: str = "json"
    seed: int = 0

    def ctx(self) -> Context:
        return context(self.backend, self.eps)


def _class_json(v):
    return {"trace": scalar_json(v.trace), "norm2": scalar_json(v.norm2)}


def _cmd_eval(cfg: RunConfig, args) -> dict:
    ctx = cfg.ctx()
    f = parse_poly(args.poly, ctx)
    a = parse_quaternion(args.point, ctx)
    value = f.eval_left(a) if args.side == "left" else f.eval_right(a)
    return {"side": args.side, "value": quat_str(value)}


def _cmd_roots(cfg: RunConfig, args) -> dict:
    ctx = cfg.ctx()
    f = parse_poly(args.poly, ctx)
    report = find_all_roots(f, ctx)
    classes = []
    for c in report.classes:
        classes.append({
            "trace": scalar_json(c.cls.trace),
            "norm2": scalar_json(c.cls.norm2),
            "kind": c.kind,
            "left": None if c.left_root is None else quat_str(c.left_root),
            "right": None if c.right_root is None else quat_str(c.right_root),
            "mult": c.multiplicity,
        })
    return {"classes": classes, "warnings": list(report.warnings)}


def full_linear_factorization(f: QPolynomial, ctx: Context, probes=None):
    """Ordered roots g_1..g_N with f = lead * (z-g_1)...(z-g_N), peeling the
    class with the smallest key first."""
    if f.degree < 1:
        raise ValueError("need degree >= 1")
    monic, lead = f.monic_right()
    roots = []
    cur = monic
    while cur.degree >= 1:
        pair = zero_structure(cur, ctx, probes)[0]
        if pair.cls.is_real:
            roots.extend(pair.left_chain)
        else:
            anchor = pair.left_chain[0] if pair.left_chain else in_class_point(
                pair.cls, ctx, probes and _probe_for(pair.cls, probes, ctx))
            for _ in range(pair.kappa):
                roots.extend([anchor, anchor.conjugate()])
            roots.extend(pair.left_chain)
        cur = pair.left_cofactor
    return lead, roots


def _probe_for(v, probes, ctx):
    for p in probes:
        if classes_equal(v, class_of(p, ctx), ctx, 1 + abs(v.norm2)):
            return p
    return None


def _cmd_factor(cfg: RunConfig, args) -> dict:
    ctx = cfg.ctx()
    f = parse_poly(args.poly, ctx)
    lead, roots = full_linear_factorization(f, ctx)
    return {"leading": quat_str(lead), "roots": [quat_str(r) for r in roots]}


def _cmd_divisors(cfg: RunConfig, args) -> dict:
    ctx = cfg.ctx()
    f = parse_poly(args.poly, ctx)
    if args.cls:
        trace, norm2 = (ctx.scalar(s.strip()) for s in args.cls.split(","))
        probe_cls = class_of(parse_quaternion(args.probe, ctx), ctx) if args.probe else None
        from .quaternions import ConjugacyClass
        four = ctx.scalar(4)
        v = ConjugacyClass(trace, norm2, norm2 == trace * trace / four)
        probe = parse_quaternion(args.probe, ctx) if args.probe else None
        pairs = [spherical_divisors(f, v, ctx, probe)]
        del probe_cls
    else:
        pairs = zero_structure(f, ctx)
    classes = []
    for p in pairs:
        classes.append({
            "trace": scalar_json(p.cls.trace),
            "norm2": scalar_json(p.cls.norm2),
            "kappa": p.kappa,
            "left_chain": [quat_str(a) for a in p.left_chain],
            "right_chain": [quat_str(a) for a in p.right_chain],
            "left_cofactor": poly_str(p.left_cofactor),
            "right_cofactor": poly_str(p.right_cofactor),
        })
    return {"classes": classes}


def _cmd_mult(cfg: RunConfig, args) -> dict:
    ctx = cfg.ctx()
    f = parse_poly(args.poly, ctx)
    a = parse_quaternion(args.point, ctx)
    if args.kind == "left":
        m = mult_left(a, f, ctx)
    elif args.kind == "right":
        m = mult_right(a, f, ctx)
    else:
        m = mult_spherical(class_of(a, ctx), f, ctx, probe=a)
    return {"kind": args.kind, "multiplicity": m}


def _cmd_lcm(cfg: RunConfig, args) -> dict:
    ctx = cfg.ctx()
    polys = [parse_poly(s, ctx) for s in args.polys]
    if args.side == "right":
        result = lrcm_general(polys, ctx)
        quotients = [poly_str(result.divide_right(p.monic_right()[0])[0]) for p in polys]
    else:
        result = llcm_general(polys, ctx)
        quotients = [poly_str(result.divide_left(p.monic_right()[0])[0]) for p in polys]
    return {
        "side": args.side,
        "result": poly_str(result),
        "per_input_quotients": quotients,
        "input_units": [quat_str(p.leading()) for p in polys],
    }


def _cmd_decompose(cfg: RunConfig, args) -> dict:
    ctx = cfg.ctx()
    f = parse_poly(args.poly, ctx)
    dec = decompose(f, args.side, ctx)
    return {
        "side": dec.side,
        "parts": [{
            "poly": poly_str(p.poly),
            "role": p.role,
            "class": _class_json(p.cls),
        } for p in dec.parts],
    }


def _cmd_blaschke(cfg: RunConfig, args) -> dict:
    ctx = cfg.ctx()
    roots = [parse_quaternion(s, ctx) for s in args.roots]
    comp = complete_to_blaschke(roots, ctx)
    return {
        "ordered_roots": [quat_str(r) for r in comp.ordered_roots],
        "betas": [quat_str(b) for b in comp.betas],
        "gammas": [quat_str(g) for g in comp.gammas],
        "phase": quat_str(comp.phase),
        "residual_norm": comp.residual(cfg.truncation_order, ctx),
        "order": cfg.truncation_order,
    }


def _cmd_golden(cfg: RunConfig, args) -> int:
    results = run_golden()
    failed = 0
    for r in results:
        print(f"{'PASS' if r.ok else 'FAIL'}  {r.name}")
        if not r.ok:
            failed += 1
            print(f"      got:      {r.got}")
            print(f"      expected: {r.expected}")
    print(f"{len(results) - failed}/{len(results)} golden checks passed")
    return 0 if failed == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="quatpoly",
        description="zeros, divisors and least common multiples of quaternion polynomials")
    ap.add_argument("--backend", choices=("exact", "float64"), default="exact")
    ap.add_argument("--eps", type=float, default=None,
                    help="float-backend zero tolerance (env QUATPOLY_EPS)")
    ap.add_argument("--order", type=int, default=30, help="series truncation order")
    ap.add_argument("--json", action="store_true", help="JSON output (the default)")
    ap.add_argument("--seed", type=int, default=0)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="left/right evaluation at a point")
    p.add_argument("--side", choices=("left", "right"), default="left")
    p.add_argument("poly")
    p.add_argument("point")

    p = sub.add_parser("roots", help="all left/right/spherical zeros")
    p.add_argument("poly")

    p = sub.add_parser("factor", help="full factorization into linear factors")
    p.add_argument("poly")

    p = sub.add_parser("divisors", help="per-class spherical divisor pairs")
    p.add_argument("poly")
    p.add_argument("--cls", default=None, metavar="TRACE,NORM2",
                   help="restrict to one conjugacy class")
    p.add_argument("--probe", default=None, help="in-class point for --cls")

    p = sub.add_parser("mult", help="zero multiplicity at a point or its class")
    p.add_argument("--kind", choices=("left", "right", "spherical"), default="left")
    p.add_argument("poly")
    p.add_argument("point")

    p = sub.add_parser("lcm", help="least right/left common multiple")
    p.add_argument("--side", choices=("right", "left"), default="right")
    p.add_argument("polys", nargs="+")

    p = sub.add_parser("decompose", help="relatively prime indecomposable parts")
    p.add_argument("--side", choices=("left", "right"), default="left")
    p.add_argument("poly")

    p = sub.add_parser("blaschke", help="complete roots to a finite Blaschke product")
    p.add_argument("roots", nargs="+")

    sub.add_parser("golden", help="run the built-in worked examples")
    return ap


_COMMANDS = {
    "eval": _cmd_eval,
    "roots": _cmd_roots,
    "factor": _cmd_factor,
    "divisors": _cmd_divisors,
    "mult": _cmd_mult,
    "lcm": _cmd_lcm,
    "decompose": _cmd_decompose,
    "blaschke": _cmd_blaschke,
}


def dispatch(argv) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    eps = args.eps
    if eps is None and os.environ.get("QUATPOLY_EPS"):
        eps = float(os.environ["QUATPOLY_EPS"])
    if args.backend == "exact":
        eps = None
    cfg = RunConfig(backend=args.backend, eps=eps,
                    truncation_order=args.order, output="json", seed=args.seed)
    if args.command == "golden":
        return _cmd_golden(cfg, args)
    try:
        payload = _COMMANDS[args.command](cfg, args)
    except (QuatPolyError, ParseError, ZeroDivisionError, ValueError) as e:
        json.dump({"error": type(e).__name__, "message": str(e)},
                  sys.stderr, ensure_ascii=False)
        sys.stderr.write("\n")
        return 1
    json.dump(payload, sys.stdout, ensure_ascii=False)
    sys.stdout.write("\n")
    return 0


def main(argv=None) -> int:
    return dispatch(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())
