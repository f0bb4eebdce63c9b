"""Command-line front end.

Exit codes: 0 success, 1 failed verification or route mismatch, 2 usage
error, 3 out-of-region / divisibility / regularization error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence, TextIO

from .algebra import NonDivisibleError, UniPoly, UniRatFunc
from .algebra.hirota import GaugeMismatchError
from .algebra.numbers import fmt_rational, latex_rational
from .algebra.serialize import multipoly_to_dict, ratfunc_to_dict, rational_to_str, unipoly_to_list
from .checks import CheckResult, OutOfRegionError, RegularizationError, Report, WordParseError
from .lattice import FIRST, SECOND, RouteMismatchError, f_triple, hermite_H, hermite_H_schur, okamoto_Q, okamoto_Q_schur
from .painleve import (
    ALPHAS,
    FS,
    GVAR,
    SEED_A,
    SEED_B,
    WeylWord,
    apply_word_to_solution,
    format_linear,
    linear_form,
    verify_solution,
    weyl_apply,
)
from .partitions import Partition, lambda_mn, maya_mn
from .schur import schur
from .verify import SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_DOMAIN = 0, 1, 2, 3
FORMATS = ("plain", "latex", "json")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="painleve4", description="Exact computations for the symmetric fourth Painleve equation.")
    p.add_argument("--format", choices=FORMATS, default="plain")
    # also accepted after the subcommand
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default=argparse.SUPPRESS)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    _add = sub.add_parser
    sub.add_parser = lambda *a, **k: _add(*a, parents=[common], **k)

    for fam in ("okamoto", "hermite"):
        s = sub.add_parser(fam, help=f"{fam} polynomial at (m, n)")
        s.add_argument("m", type=int)
        s.add_argument("n", type=int)
        s.add_argument("--route", choices=("toda", "schur", "both"), default="toda")

    s = sub.add_parser("schur", help="Schur function S_lambda(t)")
    s.add_argument("partition")

    s = sub.add_parser("maya", help="partition lambda(m, n)")
    s.add_argument("m", type=int)
    s.add_argument("n", type=int)

    s = sub.add_parser("backlund", help="apply a Weyl word to a generator")
    s.add_argument("word")
    s.add_argument("--target", choices=("f0", "f1", "f2", "alpha", "g"), default="alpha")
    s.add_argument("--seed", choices=("A", "B"), help="apply to a seed solution instead of the generic one")

    s = sub.add_parser("solution", help="rational solution from the tau lattice")
    s.add_argument("family", choices=("okamoto", "hermite"))
    s.add_argument("m", type=int)
    s.add_argument("n", type=int)
    s.add_argument("--kind", choices=(FIRST, SECOND), default=FIRST)

    s = sub.add_parser("verify", help="run a verification suite")
    s.add_argument("suite", choices=tuple(SUITES) + ("all",))
    return p


# -- rendering --------------------------------------------------------------------

def _poly(p: UniPoly, fmt: str) -> str:
    return p.to_latex() if fmt == "latex" else p.format()


def _ratfunc(r: UniRatFunc, fmt: str) -> str:
    return r.to_latex() if fmt == "latex" else r.format()


def _rational(q, fmt: str) -> str:
    return latex_rational(q) if fmt == "latex" else fmt_rational(q)


def _checks_json(checks: Sequence[CheckResult]) -> list[dict]:
    return [{"name": c.name, "pass": c.passed} for c in checks]


class _Result:
    def __init__(self, query: dict, text: list[str], result=None, routes=None, checks=(), ok=True):
        self.query, self.text, self.result = query, text, result
        self.routes, self.checks, self.ok = routes, list(checks), ok


# -- commands ---------------------------------------------------------------------

def _cmd_polynomial(args, fmt) -> _Result:
    toda, via_schur = (okamoto_Q, okamoto_Q_schur) if args.command == "okamoto" else (hermite_H, hermite_H_schur)
    query = {"command": args.command, "m": args.m, "n": args.n, "route": args.route}
    routes = {}
    if args.route in ("toda", "both"):
        routes["toda"] = toda(args.m, args.n)
    if args.route in ("schur", "both"):
        routes["schur"] = via_schur(args.m, args.n)
    value = next(iter(routes.values()))
    checks = []
    if args.route == "both":
        agree = routes["toda"] == routes["schur"]
        checks.append(CheckResult("routes agree", agree))
        if not agree:
            raise RouteMismatchError(
                f"toda route gives {routes['toda']}, schur route gives {routes['schur']}"
            )
    return _Result(
        query,
        [_poly(value, fmt)],
        unipoly_to_list(value),
        {k: unipoly_to_list(v) for k, v in routes.items()},
        checks,
    )


def _cmd_schur(args, fmt) -> _Result:
    try:
        lam = Partition.parse(args.partition)
    except ValueError as e:
        raise UsageError(str(e)) from None
    S = schur(lam).polynomial
    text = S.to_latex() if fmt == "latex" else S.format()
    return _Result({"command": "schur", "partition": str(lam)}, [text], multipoly_to_dict(S))


def _cmd_maya(args, fmt) -> _Result:
    lam = lambda_mn(args.m, args.n)
    return _Result(
        {"command": "maya", "m": args.m, "n": args.n},
        [str(lam)],
        {"partition": list(lam.parts), "maya": str(maya_mn(args.m, args.n))},
    )


def _cmd_backlund(args, fmt) -> _Result:
    try:
        w = WeylWord.parse(args.word)
    except WordParseError as e:
        raise UsageError(str(e)) from None
    query = {"command": "backlund", "word": str(w), "target": args.target, "seed": args.seed}
    if args.seed and args.target == "g":
        raise UsageError("--target g needs the generic solution (omit --seed)")
    if args.seed:
        seed = SEED_A if args.seed == "A" else SEED_B
        sol = apply_word_to_solution(w, seed)
        rep = verify_solution(sol)
        if args.target == "alpha":
            text = [f"a{i} = {_rational(a, fmt)}" for i, a in enumerate(sol.alphas)]
            result = [rational_to_str(a) for a in sol.alphas]
        else:
            fi = sol.f[int(args.target[1])]
            text = [_ratfunc(fi, fmt)]
            result = ratfunc_to_dict(fi)
        return _Result(query, text, result, checks=rep.checks, ok=rep.passed)

    if args.target == "alpha":
        text, result = [], []
        for i, a in enumerate(ALPHAS):
            form = linear_form(weyl_apply(w, a))
            s = format_linear(form, latex=fmt == "latex")
            text.append(f"a{i} -> {s}")
            result.append(s)
    else:
        gen = GVAR if args.target == "g" else FS[int(args.target[1])]
        img = weyl_apply(w, gen)
        s = img.to_latex() if fmt == "latex" else img.format()
        text, result = [s], s
    return _Result(query, text, result)


def _cmd_solution(args, fmt) -> _Result:
    sol = f_triple(args.family, args.m, args.n, args.kind)
    rep = verify_solution(sol)
    text = [f"alpha = ({', '.join(_rational(a, fmt) for a in sol.alphas)})"]
    text += [f"f{i} = {_ratfunc(fi, fmt)}" for i, fi in enumerate(sol.f)]
    text.append(f"verified: {'yes' if rep.passed else 'NO'}")
    result = {"alpha": [rational_to_str(a) for a in sol.alphas], "f": [ratfunc_to_dict(fi) for fi in sol.f]}
    query = {"command": "solution", "family": args.family, "m": args.m, "n": args.n, "kind": args.kind}
    return _Result(query, text, result, checks=rep.checks, ok=rep.passed)


def _cmd_verify(args, fmt) -> _Result:
    rep: Report = run_suite(args.suite)
    text = [c.line() for c in rep.checks] + [rep.summary()]
    return _Result({"command": "verify", "suite": args.suite}, text, rep.summary(), checks=rep.checks, ok=rep.passed)


_COMMANDS = {
    "okamoto": _cmd_polynomial,
    "hermite": _cmd_polynomial,
    "schur": _cmd_schur,
    "maya": _cmd_maya,
    "backlund": _cmd_backlund,
    "solution": _cmd_solution,
    "verify": _cmd_verify,
}


def run(argv: Sequence[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    """Run the CLI and return the exit code."""
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except UsageError as e:
        print(e, file=err)
        return EXIT_USAGE
    except SystemExit as e:  # --help
        return EXIT_OK if not e.code else EXIT_USAGE
    fmt = args.format
    try:
        res = _COMMANDS[args.command](args, fmt)
    except UsageError as e:
        print(f"painleve4: {e}", file=err)
        return EXIT_USAGE
    except RouteMismatchError as e:
        print(f"painleve4: route mismatch: {e}", file=err)
        return EXIT_FAIL
    except (OutOfRegionError, NonDivisibleError, RegularizationError, GaugeMismatchError) as e:
        print(f"painleve4: {e}", file=err)
        return EXIT_DOMAIN
    if fmt == "json":
        doc = {"query": res.query, "result": res.result, "routes": res.routes, "checks": _checks_json(res.checks)}
        print(json.dumps(doc, indent=2), file=out)
    else:
        for line in res.text:
            print(line, file=out)
    if not res.ok:
        print("painleve4: verification failed", file=err)
        return EXIT_FAIL
    return EXIT_OK


def main() -> None:
    sys.exit(run())
