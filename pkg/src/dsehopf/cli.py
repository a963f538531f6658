"""Command-line front end.

Exit codes: 0 success, 2 verification failure (a JSON witness is printed),
1 usage error.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import jsonio
from .algebra import AlgebraElement, coproduct
from .rational import format_rational, parse_rational
from .series import parse_series
from .trees import MODES, PLANAR, enumerate_forests, enumerate_trees

DEFAULT_WEIGHT = 5
DEFAULT_CAP = 10


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def weight_cap() -> int:
    raw = os.environ.get("HOPF_FOREST_MAX_WEIGHT", str(DEFAULT_CAP))
    try:
        cap = int(raw)
    except ValueError:
        raise UsageError(f"HOPF_FOREST_MAX_WEIGHT: {raw!r} is not an integer") from None
    if cap < 1:
        raise UsageError("HOPF_FOREST_MAX_WEIGHT must be >= 1")
    return cap


def _weight(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if n < 1:
        raise argparse.ArgumentTypeError("weight must be >= 1")
    return n


def _check_weight(n: int, name: str = "--weight") -> int:
    cap = weight_cap()
    if n > cap:
        raise UsageError(f"{name} {n} exceeds HOPF_FOREST_MAX_WEIGHT={cap}")
    return n


def _rational(name: str):
    def parse(text: str) -> Fraction:
        try:
            return parse_rational(text, name)
        except ValueError as exc:
            raise argparse.ArgumentTypeError(str(exc)) from None
    return parse


def _series(text: str):
    try:
        return parse_series(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _params(text: str, name: str):
    """``"alpha,beta"`` as two rationals."""
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"{name}: expected 'alpha,beta', got {text!r}")
    try:
        return tuple(parse_rational(p, name) for p in parts)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _emit(payload, args, human: str | None = None) -> None:
    text = jsonio.dumps(payload) if args.json or human is None else human
    if getattr(args, "output", None):
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def cmd_enumerate(args) -> int:
    n = _check_weight(args.weight)
    items = enumerate_forests(n, args.mode) if args.forests else enumerate_trees(n, args.mode)
    if args.count:
        _emit({"weight": n, "mode": args.mode, "count": len(items)}, args, str(len(items)))
        return 0
    if args.forests:
        payload = [jsonio.encode_forest(f) for f in items]
        human = "\n".join("".join(repr(t) for t in f) or "1" for f in items)
    else:
        payload = [jsonio.encode_tree(t) for t in items]
        human = "\n".join(repr(t) for t in items)
    _emit(payload, args, human)
    return 0


def cmd_coproduct(args) -> int:
    try:
        obj = json.loads(args.tree)
    except json.JSONDecodeError as exc:
        raise UsageError(f"--tree: invalid JSON ({exc})") from None
    try:
        if isinstance(obj, list):
            forest = jsonio.decode_forest(obj, "--tree", args.mode)
        else:
            forest = jsonio.decode_forest([obj], "--tree", args.mode)
    except jsonio.DecodeError as exc:
        raise UsageError(str(exc)) from None
    x = AlgebraElement({forest: 1}, args.mode)
    _check_weight(max(x.weights()), "tree weight")
    delta = coproduct(x)
    _emit(jsonio.encode_tensor(delta), args, repr(delta))
    return 0


def cmd_dse(args) -> int:
    from .dse import solve

    n = _check_weight(args.weight)
    p = args.series.at(n)
    if p[0] != 1:
        raise UsageError("--series: constant term must be 1")
    sol = solve(p, n, args.mode)
    payload = {"series": repr(args.series), "mode": args.mode, "weight": n,
               "components": [jsonio.encode_element(sol.a(k)) for k in range(1, n + 1)]}
    human = "\n".join(f"a_{k} = {sol.a(k)!r}" for k in range(1, n + 1))
    _emit(payload, args, human)
    return 0


def cmd_hopf_check(args) -> int:
    from .hopfcheck import is_hopf

    n = _check_weight(args.weight)
    p = args.series.at(n)
    if p[0] != 1:
        raise UsageError("--series: constant term must be 1")
    v = is_hopf(p, n, args.mode)
    payload = jsonio.encode_verdict(v)
    if v.passed:
        human = f"pass: Hopf up to weight {n}"
        if v.candidate:
            human += f"; candidate (alpha, beta) = ({', '.join(map(str, v.candidate))})"
        _emit(payload, args, human)
        return 0
    print(jsonio.dumps(payload))
    return 2


def cmd_hopf_equal(args) -> int:
    from .hopfcheck import equality_predicate, spans_equal

    n = _check_weight(args.weight)
    (a, b), (a2, b2) = args.a, args.b
    equal = spans_equal(a, b, a2, b2, n, args.mode)
    payload = {"a": [format_rational(a), format_rational(b)],
               "b": [format_rational(a2), format_rational(b2)],
               "weight": n, "mode": args.mode, "equal": equal,
               "predicate": equality_predicate(a, b, a2, b2)}
    _emit(payload, args, "equal" if equal else "not equal")
    return 0


def cmd_hopf_bracket(args) -> int:
    from .hopfcheck import bracket_constants

    n = _check_weight(args.max, "--max")
    lam = bracket_constants(args.beta, n)
    payload = {"beta": format_rational(args.beta), "max": n,
               "brackets": [{"i": i, "j": j, "lambda": format_rational(v)}
                            for (i, j), v in sorted(lam.items())]}
    human = "\n".join(f"lambda_{i},{j} = {v}" for (i, j), v in sorted(lam.items()))
    _emit(payload, args, human)
    return 0


def cmd_fdb_multi(args) -> int:
    from . import fdbmulti

    try:
        word = fdbmulti.as_word(args.word, args.d)
        if not 1 <= args.i <= args.d:
            raise ValueError(f"--i {args.i} out of range 1..{args.d}")
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _check_weight(len(word), "--word length")
    y = fdbmulti.y_element(args.i, word, args.d)
    payload = {"d": args.d, "i": args.i, "word": list(word), "element": jsonio.encode_element(y)}
    human = repr(y)
    if args.verify:
        ok = fdbmulti.verify_multi_coproduct(args.i, word, args.d)
        payload["coproduct_law"] = ok
        human += f"\ncoproduct law: {'holds' if ok else 'FAILS'}"
        if not ok:
            print(jsonio.dumps(payload))
            return 2
    _emit(payload, args, human)
    return 0


def cmd_selftest(args) -> int:
    from .acceptance import run_all

    n = _check_weight(args.weight)
    results = run_all(n)
    if args.json:
        print(jsonio.dumps([{"criterion": r.number, "title": r.title, "pass": r.passed,
                             "detail": r.detail} for r in results]))
    else:
        for r in results:
            print(r.line())
    return 0 if all(r.passed for r in results) else 2


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="dsehopf", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    def common(p, mode=True, weight=True):
        if mode:
            p.add_argument("--mode", choices=MODES, default=PLANAR)
        if weight:
            p.add_argument("--weight", type=_weight, default=DEFAULT_WEIGHT)
        p.add_argument("--json", action="store_true", help="JSON output")
        p.add_argument("--output", help="write output to this file")
        return p

    p = common(sub.add_parser("enumerate", help="list or count trees of a weight"))
    p.add_argument("--count", action="store_true")
    p.add_argument("--forests", action="store_true", help="forests instead of trees")
    p.set_defaults(func=cmd_enumerate)

    p = common(sub.add_parser("coproduct", help="coproduct of a tree given as JSON"), weight=False)
    p.add_argument("--tree", required=True, help='e.g. {"d": null, "c": [{"d": null, "c": []}]}')
    p.set_defaults(func=cmd_coproduct)

    dse = sub.add_parser("dse", help="Dyson-Schwinger equation").add_subparsers(
        dest="action", parser_class=_Parser)
    dse.required = True
    p = common(dse.add_parser("solve"))
    p.add_argument("--series", type=_series, required=True)
    p.set_defaults(func=cmd_dse)

    hopf = sub.add_parser("hopf", help="Hopf subalgebra checks").add_subparsers(
        dest="action", parser_class=_Parser)
    hopf.required = True
    p = common(hopf.add_parser("check"))
    p.add_argument("--series", type=_series, required=True)
    p.set_defaults(func=cmd_hopf_check)
    for parent in (hopf, sub):
        p = common(parent.add_parser("equal", help="compare two family subalgebras"))
        p.add_argument("--a", type=lambda s: _params(s, "--a"), required=True, help="alpha,beta")
        p.add_argument("--b", type=lambda s: _params(s, "--b"), required=True, help="alpha,beta")
        p.set_defaults(func=cmd_hopf_equal)
        p = common(parent.add_parser("bracket", help="Lie bracket constants"), mode=False, weight=False)
        p.add_argument("--beta", type=_rational("--beta"), required=True)
        p.add_argument("--max", type=_weight, default=6)
        p.set_defaults(func=cmd_hopf_bracket)

    fdb = sub.add_parser("fdb", help="multivariable construction").add_subparsers(
        dest="action", parser_class=_Parser)
    fdb.required = True
    p = common(fdb.add_parser("multi"), mode=False, weight=False)
    p.add_argument("--d", type=_weight, required=True)
    p.add_argument("--word", required=True, help="letters, e.g. 121 or 1,2,1")
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--verify", action="store_true")
    p.set_defaults(func=cmd_fdb_multi)

    p = common(sub.add_parser("selftest", help="run the acceptance suite"), mode=False)
    p.set_defaults(func=cmd_selftest)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if getattr(args, "command", None) == "fdb" and "," in args.word:
            args.word = [w for w in args.word.split(",")]
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())
