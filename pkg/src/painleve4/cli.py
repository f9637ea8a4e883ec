"""Command-line interface.

Subcommands: generate, verify, transform, orbit, relations, export.
All records are UTF-8 JSON; trajectory output is JSON-lines (one record per
step) so arbitrarily long walks never buffer.

Exit codes (total over outcome classes):
  0  success, every residual zero
  1  a verification failed (nonzero residual)
  2  domain or usage error (bad indices, unknown word letter, ...)
  3  input did not parse
  4  a transformation word degenerated (step index reported)
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction

from . import hierarchies, weyl
from .errors import P4Error, ZeroFunction
from .hamilton import HamiltonianFrame, verify_hamilton
from .solutions import (P4Solution, RhoSolution, SymMultiplet, build_multiplet,
                        verify_p4, verify_rho, verify_symmetric)

_OK, _FAIL, _DOMAIN, _PARSE, _DEGENERATE = 0, 1, 2, 3, 4


def _emit(record: dict, out) -> None:
    print(json.dumps(record), file=out, flush=True)


def _open_out(path: str | None):
    if path in (None, "-"):
        return sys.stdout, False
    return open(path, "w", encoding="utf-8"), True


def _generate_record(args) -> dict:
    h = args.hierarchy
    if h in ("2x", "2x-hat"):
        if args.k is None or args.n is None:
            raise ValueError("--k and --n are required for the -2x family")
        rho, sol = hierarchies.gen_2x(args.k, args.n, hatted=h.endswith("hat"))
        indices = {"k": args.k, "n": args.n}
    elif h in ("1x", "1x-hat"):
        if args.k is None or args.n is None or args.variant is None:
            raise ValueError("--k, --n and --variant are required for the -1/x family")
        sol = hierarchies.gen_1x(args.k, args.n, args.variant, hatted=h.endswith("hat"))
        rho = None
        indices = {"k": args.k, "n": args.n, "variant": args.variant}
    elif h == "2x3":
        if args.k is None or args.n is None or args.variant is None:
            raise ValueError("--k, --n and --variant are required for the -2x/3 family")
        direction = +1 if args.dir != "-" else -1
        rho, sol = hierarchies.gen_2x3(args.variant, args.n, args.k, direction)
        indices = {"k": args.k, "n": args.n, "variant": args.variant, "dir": args.dir}
    else:
        raise ValueError(f"unknown hierarchy {h!r}")
    p4_report = verify_p4(sol)
    record = {
        "hierarchy": h,
        "indices": indices,
        "solution": sol.to_json(),
        "p4_residual": p4_report.checks[0].residual.to_json(),
        "ok": p4_report.ok,
    }
    if rho is not None:
        rho_report = verify_rho(rho, 0)
        record["rho"] = rho.to_json()
        record["rho_residual"] = rho_report.checks[0].residual.to_json()
        record["ok"] = record["ok"] and rho_report.ok
    return record


def cmd_generate(args) -> int:
    out, close = _open_out(args.out)
    try:
        try:
            record = _generate_record(args)
        except (ValueError, P4Error) as exc:
            print(f"error: {exc}", file=sys.stderr)
            return _DOMAIN
        _emit(record, out)
        return _OK if record["ok"] else _FAIL
    finally:
        if close:
            out.close()


_KINDS = {
    "p4": (P4Solution.from_json, verify_p4),
    "rho": (RhoSolution.from_json, lambda r: verify_rho(r, 0)),
    "multiplet": (SymMultiplet.from_json, verify_symmetric),
    "frame": (HamiltonianFrame.from_json, verify_hamilton),
}


def _load_json(path: str):
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


def cmd_verify(args) -> int:
    parse, check = _KINDS[args.kind]
    try:
        obj = parse(_load_json(args.input))
    except (OSError, ValueError, KeyError, TypeError) as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return _PARSE
    report = check(obj)
    _emit(report.to_json(), sys.stdout)
    return _OK if report.ok else _FAIL


def _walk(multiplet: SymMultiplet, v, word_text: str, out) -> int:
    try:
        word = weyl.parse_word(word_text)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _DOMAIN
    try:
        steps = weyl.orbit(multiplet, v, word)
    except ZeroFunction as exc:
        print(f"degenerate step {exc.position}: {exc}", file=sys.stderr)
        return _DEGENERATE
    ok = True
    for step in steps:
        _emit(step.to_json(), out)
        ok = ok and step.report.ok
    return _OK if ok else _FAIL


def cmd_transform(args) -> int:
    try:
        data = _load_json(args.input)
        multiplet = SymMultiplet.from_json(data)
    except (OSError, ValueError, KeyError, TypeError) as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return _PARSE
    # Sum(alpha) = -2 makes the three alphas equivalent to a VTriple
    v1 = (2 * multiplet.alpha1 + multiplet.alpha2) / 6
    v2 = (multiplet.alpha2 - multiplet.alpha1) / 6
    v3 = -(multiplet.alpha1 + 2 * multiplet.alpha2) / 6
    out, close = _open_out(args.out)
    try:
        return _walk(multiplet, weyl.VTriple(v1, v2, v3), args.word, out)
    finally:
        if close:
            out.close()


def cmd_orbit(args) -> int:
    try:
        if args.hierarchy in ("2x", "2x-hat"):
            rho, _ = hierarchies.gen_2x(args.k, args.n,
                                        hatted=args.hierarchy.endswith("hat"))
        elif args.hierarchy == "2x3":
            rho, _ = hierarchies.gen_2x3(args.variant or 1, args.n, args.k,
                                         +1 if args.dir != "-" else -1)
        elif args.hierarchy == "seed":
            rho = hierarchies.cubic_seed()
        else:
            print(f"error: unknown hierarchy {args.hierarchy!r}", file=sys.stderr)
            return _DOMAIN
        multiplet = build_multiplet(rho)
        v = weyl.seed_vtriple(rho.mu_sq, rho.nu)
    except (ValueError, P4Error) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _DOMAIN
    out, close = _open_out(args.out)
    try:
        return _walk(multiplet, v, args.word, out)
    finally:
        if close:
            out.close()


def cmd_relations(args) -> int:
    rng = random.Random(args.seed)
    ok = True
    for trial in range(args.count):
        a = Fraction(rng.randint(-24, 24), rng.randint(1, 12))
        b = Fraction(rng.randint(-24, 24), rng.randint(1, 12))
        v = weyl.VTriple(a, b, -a - b)
        for name, passed in weyl.parameter_relations_hold(v):
            ok = ok and passed
            if not passed:
                _emit({"level": "parameters", "trial": trial, "relation": name,
                       "ok": False, "v": v.to_json()}, sys.stdout)
    _emit({"level": "parameters", "trials": args.count, "ok": ok}, sys.stdout)
    if not args.params_only:
        seeds = {
            "cubic-seed": hierarchies.cubic_seed(),
            "hermite-1-1": hierarchies.gen_2x(1, 1)[0],
            "hermite-2-2": hierarchies.gen_2x(2, 2)[0],
        }
        for label, rho in seeds.items():
            multiplet = build_multiplet(rho)
            v = weyl.seed_vtriple(rho.mu_sq, rho.nu)
            report = weyl.check_relations(multiplet, v)
            ok = ok and report.ok
            _emit({"level": "functions", "seed": label, "ok": report.ok,
                   "failures": [c.to_json() for c in report.failures()]},
                  sys.stdout)
    return _OK if ok else _FAIL


def cmd_export(args) -> int:
    try:
        data = _load_json(args.input)
    except (OSError, ValueError) as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return _PARSE
    if args.format == "json":
        _emit(data, sys.stdout)
        return _OK
    lines = []
    try:
        if "y" in data:
            sol = P4Solution.from_json(data)
            lines.append(rf"y(x) = {sol.y.to_latex()}, \quad a = {sol.a}, \; b = {sol.b}")
        elif "solution" in data:  # a generate record
            sol = P4Solution.from_json(data["solution"])
            lines.append(rf"y(x) = {sol.y.to_latex()}, \quad a = {sol.a}, \; b = {sol.b}")
            if "rho" in data:
                rho = RhoSolution.from_json(data["rho"])
                lines.append(rf"\rho(x) = {rho.rho.to_latex()}, \quad \mu^2 = {rho.mu_sq}, "
                             rf"\; \nu = {rho.nu}")
        elif "rho" in data:
            rho = RhoSolution.from_json(data)
            lines.append(rf"\rho(x) = {rho.rho.to_latex()}, \quad \mu^2 = {rho.mu_sq}, "
                         rf"\; \nu = {rho.nu}")
        elif "f0" in data:
            m = SymMultiplet.from_json(data)
            for idx, f in enumerate(m.fs):
                lines.append(rf"f_{idx}(x) = {f.to_latex()}")
            lines.append(rf"(\alpha_0, \alpha_1, \alpha_2) = "
                         rf"({m.alpha0}, {m.alpha1}, {m.alpha2})")
        else:
            print("error: record kind not recognized", file=sys.stderr)
            return _DOMAIN
    except (ValueError, KeyError, TypeError) as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return _PARSE
    for line in lines:
        print(line)
    return _OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="painleve4",
        description="Construct and exactly verify rational Painleve IV solutions.")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="emit one hierarchy member as JSON")
    gen.add_argument("--hierarchy", required=True,
                     choices=["2x", "2x-hat", "1x", "1x-hat", "2x3"])
    gen.add_argument("--k", type=int)
    gen.add_argument("--n", type=int)
    gen.add_argument("--variant", type=int, choices=[1, 2])
    gen.add_argument("--dir", default="+", choices=["+", "-"])
    gen.add_argument("--out", default=None)
    gen.set_defaults(func=cmd_generate)

    ver = sub.add_parser("verify", help="run the matching verifier on a record")
    ver.add_argument("input")
    ver.add_argument("--kind", required=True, choices=sorted(_KINDS))
    ver.set_defaults(func=cmd_verify)

    tra = sub.add_parser("transform", help="apply a generator word to a multiplet record")
    tra.add_argument("input")
    tra.add_argument("--word", required=True)
    tra.add_argument("--out", default=None)
    tra.set_defaults(func=cmd_transform)

    orb = sub.add_parser("orbit", help="build a multiplet from a hierarchy seed and walk it")
    orb.add_argument("--hierarchy", default="seed",
                     choices=["seed", "2x", "2x-hat", "2x3"])
    orb.add_argument("--k", type=int, default=0)
    orb.add_argument("--n", type=int, default=0)
    orb.add_argument("--variant", type=int, choices=[1, 2])
    orb.add_argument("--dir", default="+", choices=["+", "-"])
    orb.add_argument("--word", required=True)
    orb.add_argument("--out", default=None)
    orb.set_defaults(func=cmd_orbit)

    rel = sub.add_parser("relations", help="run the group-relation suite")
    rel.add_argument("--count", type=int, default=100)
    rel.add_argument("--seed", type=int, default=20240809)
    rel.add_argument("--params-only", action="store_true")
    rel.set_defaults(func=cmd_relations)

    exp = sub.add_parser("export", help="re-emit a record as JSON or LaTeX")
    exp.add_argument("input")
    exp.add_argument("--format", default="json", choices=["json", "latex"])
    exp.set_defaults(func=cmd_export)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
