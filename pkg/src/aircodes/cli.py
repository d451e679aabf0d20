"""Command-line front end: ``aircodes <command> ...``.

Exit status is 0 on success, 1 when verification fails and 2 for bad
parameters.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from .air import build_air, lambda_chain
from .codec import (
    build_codebook,
    derive_recipes,
    format_code_symbols,
    format_extended_map,
    simulate_many,
    verify_decodability,
)
from .errors import DecodingError, ParameterError
from .field import GF
from .oracle import N_LIMIT, minimal_scalar_code
from .problem import SciInstance
from .rates import (
    achieved_rate,
    bounds,
    enumerate_members,
    fallback_pair,
    find_optimal_pair,
    gap_bound,
)

EXIT_OK, EXIT_FAIL, EXIT_PARAM = 0, 1, 2


def fmt_rational(q) -> str:
    """``num/den (~d.ddd)``; integers drop the denominator."""
    return f"{q} (~{float(q):.3f})"


def _rational_json(q) -> dict:
    return {"exact": str(q), "approx": round(float(q), 6)}


def _grid(M) -> list:
    return [" ".join(str(int(v)) for v in row) for row in M]


def _pair(text: str):
    try:
        a, b = (int(v) for v in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a,b got {text!r}") from None
    return a, b


def _instance(text: str) -> SciInstance:
    try:
        return SciInstance.parse(text)
    except ParameterError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _pair_or_optimal(inst, pair):
    return pair if pair is not None else tuple(find_optimal_pair(inst))


def cmd_air(args):
    A = build_air(args.g, args.h)
    chain = lambda_chain(args.g, args.h)
    if args.format == "json":
        return EXIT_OK, {
            "rows": args.g,
            "cols": args.h,
            "data": A.matrix.tolist(),
            "trace": [step.as_dict() for step in A.trace],
            "lambdas": list(chain.lambdas),
            "betas": list(chain.betas),
        }
    lines = _grid(A.matrix)
    lines.append(f"# lambda: {' '.join(map(str, chain.lambdas))}")
    lines.append(f"# beta: {' '.join(map(str, chain.betas))}")
    lines.append(f"# blocks: {'; '.join(step.label for step in A.trace)}")
    return EXIT_OK, lines


def cmd_bounds(args):
    inst = args.instance
    rb = bounds(inst)
    opt = find_optimal_pair(inst)
    try:
        gap = gap_bound(inst)
    except ParameterError:
        gap = None
    if args.format == "json":
        return EXIT_OK, {
            "instance": str(inst),
            "lower": _rational_json(rb.lower),
            "upper": _rational_json(rb.upper),
            "a_min": opt.a_min,
            "b_min": opt.b_min,
            "gap_bound": None if gap is None else _rational_json(gap),
            "capacity": None if rb.capacity is None else _rational_json(rb.capacity),
            "diagnostic": opt.diagnostic,
        }
    lines = [
        f"instance {inst}",
        f"lower {fmt_rational(rb.lower)}",
        f"upper {fmt_rational(rb.upper)} a_min={opt.a_min} b_min={opt.b_min}",
        f"gap_bound {'n/a' if gap is None else fmt_rational(gap)}",
    ]
    if rb.capacity is not None:
        lines.append(f"capacity {fmt_rational(rb.capacity)} beta {fmt_rational(1 / rb.capacity)}")
    if opt.diagnostic:
        lines.append(f"warning: {opt.diagnostic}")
    return EXIT_OK, lines


def cmd_pairs(args):
    inst = args.instance
    members = enumerate_members(inst, args.a_max, args.b_max)
    opt = tuple(find_optimal_pair(inst))
    fb = tuple(fallback_pair(inst))
    rows = []
    for p in members:
        marks = [m for m, hit in (("optimal", (p.a, p.b) == opt), ("fallback", (p.a, p.b) == fb)) if hit]
        rows.append((p, marks))
    warning = None
    if not members:
        warning = f"no member pair with a <= {args.a_max}, b <= {args.b_max}; fallback (alpha, gamma) = {fb}"
    if args.format == "json":
        return EXIT_OK, {
            "instance": str(inst),
            "pairs": [
                {"a": p.a, "b": p.b, "gcd": p.gcd_witness, "length": p.length, "marks": marks}
                for p, marks in rows
            ],
            "optimal": list(opt),
            "fallback": list(fb),
            "warning": warning,
        }
    lines = [f"instance {inst}", "a b gcd rate"]
    for p, marks in rows:
        tag = f" [{', '.join(marks)}]" if marks else ""
        lines.append(f"{p.a} {p.b} {p.gcd_witness} {fmt_rational(achieved_rate(inst, p.a, p.b))}{tag}")
    if warning:
        lines.append(f"warning: {warning}")
    return EXIT_OK, lines


def cmd_codebook(args):
    inst = args.instance
    cb = build_codebook(inst, _pair_or_optimal(inst, args.pair))
    if args.format == "json":
        return EXIT_OK, {
            "instance": str(inst),
            "pair": [cb.pair.a, cb.pair.b],
            "t": cb.t,
            "N": cb.N,
            "rate": _rational_json(cb.rate),
            "extended_map": format_extended_map(cb),
            "code_symbols": format_code_symbols(cb),
            "encoding_matrix": cb.encoding_matrix.tolist(),
        }
    lines = [
        f"instance {inst} pair ({cb.pair.a},{cb.pair.b}) t={cb.t} N={cb.N} rate {fmt_rational(cb.rate)}",
        *format_extended_map(cb),
        *format_code_symbols(cb),
    ]
    return EXIT_OK, lines


def _term(coef: int, name: str) -> str:
    return name if coef == 1 else f"{coef}*{name}"


def format_recipe(cb, recipe, field: GF) -> list:
    """``x[k,c] = <code symbols> + <side-information terms>`` per coordinate."""
    lines = []
    t = cb.t
    for c in range(t):
        terms = [_term(int(w), f"c[{i}]") for i, w in enumerate(recipe.combos[c]) if w]
        for row, corr in zip(recipe.side_rows, recipe.corrections[c]):
            coef = int(-corr) % field.p
            if coef:
                terms.append(_term(coef, f"x[{int(row) // t},{int(row) % t + 1}]"))
        lines.append(f"x[{recipe.k},{c + 1}] = {' + '.join(terms)}")
    return lines


def _verify(args):
    inst = args.instance
    field = GF(args.field)
    cb = build_codebook(inst, _pair_or_optimal(inst, args.pair))
    report = verify_decodability(cb, field)
    recipes, sims = None, []
    if report.ok:
        recipes = derive_recipes(cb, field)
        sims = simulate_many(cb, range(args.seed, args.seed + args.seeds), field, recipes=recipes)
    ok = report.ok and all(s.ok for s in sims)
    return cb, field, report, recipes, sims, ok


def cmd_verify(args):
    cb, field, report, recipes, sims, ok = _verify(args)
    status = EXIT_OK if ok else EXIT_FAIL
    if args.format == "json":
        return status, {
            "instance": str(cb.inst),
            "pair": [cb.pair.a, cb.pair.b],
            "field": field.p,
            "ok": ok,
            "failures": [list(f) for f in report.failures],
            "recipes": None if recipes is None else {
                str(r.k): format_recipe(cb, r, field) for r in recipes
            },
            "simulation": [{"seed": s.seed, "recovered": s.recovered, "total": s.total} for s in sims],
        }
    lines = [f"instance {cb.inst} pair ({cb.pair.a},{cb.pair.b}) over {field}: {'PASS' if ok else 'FAIL'}"]
    for k, flags in report.receivers.items():
        lines.append(f"receiver {k}: {'ok' if all(flags) else 'FAIL ' + str([i for i, f in enumerate(flags) if not f])}")
    for r in recipes or []:
        lines.extend(format_recipe(cb, r, field))
    for s in sims:
        lines.append(f"seed {s.seed}: recovered {s.recovered}/{s.total}")
    return status, lines


def cmd_simulate(args):
    cb, field, report, _, sims, ok = _verify(args)
    status = EXIT_OK if ok else EXIT_FAIL
    if args.format == "json":
        return status, {
            "instance": str(cb.inst),
            "field": field.p,
            "ok": ok,
            "runs": [
                {"seed": s.seed, "recovered": s.recovered, "total": s.total, "mismatches": [list(m) for m in s.mismatches]}
                for s in sims
            ],
            "failures": [list(f) for f in report.failures],
        }
    lines = [f"seed {s.seed}: recovered {s.recovered}/{s.total}" for s in sims]
    if not report.ok:
        lines.append(f"undecodable (receiver, coordinate): {report.failures}")
    return status, lines


def cmd_oracle(args):
    inst = args.instance
    res = minimal_scalar_code(inst, args.n_max)
    if args.format == "json":
        return EXIT_OK, {
            "instance": str(inst),
            "minimal_length": None if res is None else res.minimal_length,
            "witness": None if res is None else res.witness.tolist(),
        }
    if res is None:
        return EXIT_OK, [f"no decodable scalar code with N <= {args.n_max}"]
    return EXIT_OK, [f"minimal_length {res.minimal_length}", *_grid(res.witness)]


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--output", "-o", help="write here instead of stdout")

    code = argparse.ArgumentParser(add_help=False)
    code.add_argument("instance", type=_instance, help="e.g. K=18,D=7,U=1,m=2")
    code.add_argument("--pair", type=_pair, help="a,b (default: optimal pair)")

    run = argparse.ArgumentParser(add_help=False)
    run.add_argument("--field", type=int, default=2, help="prime p of GF(p)")
    run.add_argument("--seed", type=int, default=0)
    run.add_argument("--seeds", type=int, default=1, help="number of consecutive seeds")

    parser = argparse.ArgumentParser(prog="aircodes", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("air", parents=[common], help="print an AIR matrix")
    p.add_argument("g", type=int)
    p.add_argument("h", type=int)
    p.set_defaults(func=cmd_air)

    p = sub.add_parser("bounds", parents=[common], help="broadcast-rate bounds")
    p.add_argument("instance", type=_instance)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("pairs", parents=[common], help="member (a, b) pairs")
    p.add_argument("instance", type=_instance)
    p.add_argument("--a-max", type=int, default=10)
    p.add_argument("--b-max", type=int, default=10)
    p.set_defaults(func=cmd_pairs)

    p = sub.add_parser("codebook", parents=[common, code], help="dump the encoder")
    p.set_defaults(func=cmd_codebook)

    p = sub.add_parser("verify", parents=[common, code, run], help="check decodability and recipes")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("simulate", parents=[common, code, run], help="encode and decode random messages")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("oracle", parents=[common], help="brute-force minimal scalar code")
    p.add_argument("instance", type=_instance)
    p.add_argument("--n-max", type=int, default=N_LIMIT)
    p.set_defaults(func=cmd_oracle)
    return parser


def _emit(payload, args):
    if isinstance(payload, (dict, list)) and args.format == "json":
        text = json.dumps(payload, indent=2, default=_json_default)
    else:
        text = "\n".join(payload)
    text += "\n"
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _json_default(obj):
    if isinstance(obj, np.integer):
        return int(obj)
    raise TypeError(f"not JSON serializable: {type(obj).__name__}")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        status, payload = args.func(args)
    except (ParameterError, DecodingError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARAM if isinstance(exc, ParameterError) else EXIT_FAIL
    _emit(payload, args)
    return status


if __name__ == "__main__":
    sys.exit(main())
