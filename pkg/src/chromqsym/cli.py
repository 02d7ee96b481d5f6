"""Command-line front end.

Exit status: 0 on success, 1 when a verification fails, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .biject import NotFirstClass, bijection_report
from .formulas import (
    ClassParams,
    InvalidParams,
    center_of_symmetry,
    coeff_en_product,
    formula_4_2,
    formula_4_3,
    formula_4_4,
    formula_kchain,
)
from .oracle import check_symmetry, coloring_table, expand_to_monomials, first_difference
from .orders import (
    InvalidMSequence,
    b_sequence,
    bounce_number,
    classify,
    inc_graph,
    is_connected_order,
    longest_chain,
    num_edges,
    parse_m,
    reflect,
    to_catalan,
)
from .qpoly import format_factored
from .symfun import e_expansion, expansion_to_json, expansions_equal, render
from .tableaux import schur_expansion
from .verify import BudgetExceeded, DEFAULT_BUDGET, survey, write_csv


class UsageError(Exception):
    pass


def _order(args):
    if args.m is None:
        raise UsageError("--m is required")
    try:
        return parse_m(args.m)
    except InvalidMSequence as exc:
        raise UsageError(str(exc)) from exc


def _config(args) -> dict:
    skip = {"func", "json", "out"}
    cfg = {k: v for k, v in sorted(vars(args).items()) if k not in skip and v is not None}
    cfg["version"] = __version__
    return cfg


class _Output:
    def __init__(self, args):
        self.args = args
        self.fh = open(args.out, "w") if getattr(args, "out", None) else sys.stdout

    def emit(self, result: dict, human: str):
        if self.args.json:
            doc = {"config": _config(self.args), "result": result}
            self.fh.write(json.dumps(doc, sort_keys=True) + "\n")
        else:
            cfg = " ".join(f"{k}={v}" for k, v in _config(self.args).items())
            self.fh.write(f"# {cfg}\n{human}\n")

    def close(self):
        if self.fh is not sys.stdout:
            self.fh.close()


def cmd_expand(args, out: _Output) -> int:
    P = _order(args)
    E = e_expansion(P)
    out.emit({"order": P.key, "n": P.n, "e": expansion_to_json(E)}, render(E, "e", P.n))
    return 0


def cmd_schur(args, out: _Output) -> int:
    P = _order(args)
    S = schur_expansion(P)
    count = sum(p(1) for p in S.values())
    human = render(S, "s", P.n) + f"\nP-tableaux: {count}"
    out.emit({"order": P.key, "n": P.n, "s": expansion_to_json(S), "tableaux": count}, human)
    return 0


def cmd_formula(args, out: _Output) -> int:
    which = args.which
    try:
        if which == "en-product":
            P = _order(args)
            p = coeff_en_product(P)
            out.emit(
                {"order": P.key, "e": {str(P.n): p.to_json()}},
                f"e_({P.n}): {format_factored(p, P.n)}    [{p}]",
            )
            return 0
        if args.n is None or args.r is None:
            raise UsageError("--n and --r are required")
        if which == "4.2":
            if args.s is None:
                raise UsageError("--s is required for 4.2")
            E = formula_4_2(ClassParams(args.n, args.r, args.s))
        elif which == "4.3":
            E = formula_4_3(args.n, args.r)
        elif which == "kchain":
            E = formula_kchain(args.n, args.r)
        else:
            if args.s is None:
                raise UsageError("--s is required for 4.4")
            E = formula_4_4(ClassParams(args.n, args.r, args.s))
    except InvalidParams as exc:
        raise UsageError(str(exc)) from exc
    out.emit({"e": expansion_to_json(E)}, render(E, "e", args.n))
    return 0


def cmd_oracle(args, out: _Output) -> int:
    P = _order(args)
    N = args.colors if args.colors is not None else P.n
    if N < 1:
        raise UsageError("--colors must be positive")
    table = coloring_table(inc_graph(P), N)
    if args.compare == "e":
        other = expand_to_monomials(e_expansion(P), N, "e")
    else:
        other = expand_to_monomials(schur_expansion(P), N, "s")
    diff = first_difference(table, other)
    symmetric = check_symmetry(table)
    ok = diff is None and symmetric
    result = {
        "status": "PASS" if ok else "FAIL",
        "monomials": len(table),
        "symmetric": symmetric,
        "faithful": N >= P.n,
        "first_difference": None
        if diff is None
        else {"exponent": list(diff[0]), "coloring": diff[1].to_json(), "expansion": diff[2].to_json()},
    }
    human = f"{result['status']} ({len(table)} monomials, symmetric={symmetric}, colors={N})"
    if diff is not None:
        human += f"\nfirst difference at {diff[0]}: coloring {diff[1]} vs expansion {diff[2]}"
    out.emit(result, human)
    return 0 if ok else 1


def cmd_bijection(args, out: _Output) -> int:
    P = _order(args)
    ells = [args.l] if args.l is not None else list(range(P.n // 2 + 1))
    try:
        reports = [bijection_report(P, ell) for ell in ells]
    except NotFirstClass as exc:
        raise UsageError(str(exc)) from exc
    ok = all(r["ok"] for r in reports)
    lines = [
        f"l={r['l']}: tbar={r['tbar_count']} tprime={r['tprime_count']} "
        f"coeff=[{' '.join(map(str, r['coeff']))}] {'ok' if r['ok'] else 'FAIL'}"
        for r in reports
    ]
    out.emit({"order": P.key, "levels": reports, "ok": ok}, "\n".join(lines))
    return 0 if ok else 1


def cmd_reflect(args, out: _Output) -> int:
    P = _order(args)
    Q = reflect(P)
    same = expansions_equal(e_expansion(P), e_expansion(Q))
    out.emit(
        {"order": P.key, "reflected": Q.key, "expansions_equal": same},
        f"{Q.key}\nexpansions-equal: {str(same).lower()}",
    )
    return 0 if same else 1


def cmd_info(args, out: _Output) -> int:
    P = _order(args)
    G = inc_graph(P)
    C = to_catalan(P)
    info = {
        "order": P.key,
        "n": P.n,
        "edges": num_edges(P),
        "b_sequence": b_sequence(G),
        "bounce": bounce_number(C),
        "longest_chain": longest_chain(P),
        "connected": is_connected_order(P),
        "catalan_path": C.steps,
        "classes": sorted(str(t) for t in classify(P)),
        "center": str(center_of_symmetry(P)),
    }
    human = "\n".join(
        f"{k}={str(v).lower() if isinstance(v, bool) else v}" for k, v in info.items()
    )
    out.emit(info, human)
    return 0


def cmd_survey(args, out: _Output) -> int:
    try:
        verdicts, census = survey(args.n, budget=args.budget, workers=args.workers, jsonl=args.out)
    except BudgetExceeded as exc:
        raise UsageError(str(exc)) from exc
    fh = sys.stdout
    fh.write(json.dumps({"config": _config(args)}, sort_keys=True) + "\n")
    if args.out is None:
        for v in verdicts:
            fh.write(json.dumps(v.to_json(), sort_keys=True) + "\n")
    fh.write(json.dumps({"census": census.to_json(), "ok": census.ok}, sort_keys=True) + "\n")
    if args.csv:
        write_csv(verdicts, args.csv)
    return 0 if census.ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="chromqsym", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_, m=True, out=True):
        p = sub.add_parser(name, help=help_)
        if m:
            p.add_argument("--m", help="comma-separated m-sequence, e.g. 3,3,4,6,6")
        p.add_argument("--json", action="store_true", help="machine-readable output")
        if out:
            p.add_argument("--out", help="write output to this path")
        p.set_defaults(func=func)
        return p

    add("expand", cmd_expand, "e-basis expansion of X_G(x,t)")
    add("schur", cmd_schur, "Schur expansion from P-tableaux")
    p = add("formula", cmd_formula, "closed-form e-expansion")
    p.add_argument("--which", required=True, choices=["4.2", "4.3", "4.4", "kchain", "en-product"])
    p.add_argument("--n", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--s", type=int)
    p = add("oracle", cmd_oracle, "compare against brute-force colorings")
    p.add_argument("--colors", type=int)
    p.add_argument("--compare", choices=["e", "s"], default="e")
    p = add("bijection", cmd_bijection, "verify the psi/phi bijection")
    p.add_argument("--l", type=int)
    add("reflect", cmd_reflect, "reflect the Catalan path and compare expansions")
    add("info", cmd_info, "order metadata")
    p = add("survey", cmd_survey, "check every prime order on n elements", m=False)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--workers", type=int)
    p.add_argument("--csv", help="also write a CSV summary here")
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    out = _Output(args) if args.command != "survey" else None
    try:
        return args.func(args, out)
    except UsageError as exc:
        print(f"chromqsym {args.command}: {exc}", file=sys.stderr)
        return 2
    finally:
        if out is not None:
            out.close()


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
