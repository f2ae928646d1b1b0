"""Command-line front end.

    negbeta expand --base quad-:3,1 --value -1/1
    negbeta scan-L --base quad-:3,1 --op add --max-digits 4
    negbeta dlb --base quad+:2,1 --machine

With --machine every answer is a single line of ``key=value`` pairs in a
fixed key order; errors become ``status=error error=<Name>``.
"""
from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass

from . import admissibility, analysis, arithmetic, expansion, transform
from .base import Base, parse_base, parse_value
from .errors import NegBetaError
from .words import DigitWord, PeriodicWord


@dataclass(frozen=True)
class CommandResult:
    exit_code: int
    human_text: str
    machine_record: str | None = None


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.format_usage()}{self.prog}: error: {message}")


def format_record(fields) -> str:
    """One machine record: ``key=value`` pairs joined by single spaces."""
    parts = []
    for key, value in (fields.items() if isinstance(fields, dict) else fields):
        text = _text(value)
        if " " in text or "=" in key or not text:
            raise ValueError(f"cannot encode {key}={text!r} in a record")
        parts.append(f"{key}={text}")
    return " ".join(parts)


def parse_record(line: str) -> dict[str, str]:
    record = {}
    for part in line.split(" "):
        key, sep, value = part.partition("=")
        if not sep or not key or not value:
            raise ValueError(f"malformed record field {part!r}")
        record[key] = value
    return record


def _text(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def _word(text: str):
    return PeriodicWord.parse(text) if "^w" in text else DigitWord.parse(text)


# --- subcommands: each returns (human text, ordered record fields) -------------

def _expand(args, base):
    x = parse_value(args.value, base)
    result = expansion.expand(x, base, args.max_iter)
    return _expansion_answer(result, [("op", "expand"), ("base", base), ("value", x)])


def _expansion_answer(result, head):
    fields = head + [
        ("expansion", result),
        ("status", result.status.value),
        ("frac_length", result.frac_length),
    ]
    return f"{result} [{result.status.value}]", fields


def _dlb(args, base):
    word = transform.d_lb(base, args.max_iter)
    return str(word), [("op", "dlb"), ("base", base), ("word", word)]


def _dstar(args, base):
    word = admissibility.d_star_r(base, args.max_iter)
    return str(word), [("op", "dstar"), ("base", base), ("word", word)]


def _admissible(args, base):
    word = _word(args.word)
    verdict = admissibility.is_admissible(word, base)
    return _text(verdict), [("op", "admissible"), ("base", base), ("word", word), ("admissible", verdict)]


def _binary(op):
    def run(args, base):
        w1, w2 = DigitWord.parse(args.left), DigitWord.parse(args.right)
        result = op(w1, w2, base, args.max_iter)
        return _expansion_answer(result, [("op", op.__name__), ("base", base), ("left", w1), ("right", w2)])
    return run


def _add_one(args, base):
    word = DigitWord.parse(args.word)
    result = arithmetic.add_one_rewrite(word, base)
    return str(result), [("op", "add-one"), ("base", base), ("word", word), ("result", result)]


def _enumerate(args, base):
    words = list(analysis.enumerate_z(base, args.max_digits))
    text = "\n".join(str(w) for w in words)
    fields = [("op", "enumerate"), ("base", base), ("max_digits", args.max_digits),
              ("count", len(words)), ("words", "|".join(str(w) for w in words))]
    return text, fields


def _scan(args, base):
    report = analysis.scan_L(base, analysis.Op(args.op), args.max_digits, args.max_frac, args.workers)
    if report.witness is None:
        witness, result = "none", "none"
    else:
        w1, w2, res = report.witness
        witness, result = f"{w1}|{w2}", str(res)
    text = f"observed_L={report.observed_L} witness={witness}"
    fields = [("op", f"scan-L-{args.op}"), ("base", base), ("max_digits", report.max_digits),
              ("observed_L", report.observed_L), ("witness", witness), ("result", result),
              ("infinite_count", report.infinite_count), ("pairs_tested", report.pairs_tested)]
    return text, fields


def _sign_text(sign: int) -> str:
    return {1: "positive", -1: "negative", 0: "none"}[sign]


def _classify(args, base):
    c = analysis.classify(base)
    fields = [("op", "classify"), ("base", base), ("kind", c.kind.value), ("pisot", c.pisot),
              ("conjugate_sign", _sign_text(c.conjugate_sign)),
              ("ring_candidate", c.ring_candidate), ("z_ring", c.z_ring)]
    return format_record(fields[2:]), fields


def _hk(args, base):
    hk = analysis.hk_bounds(base, args.empirical_digits)
    fields = [("op", "hk"), ("base", base), ("H", hk.H), ("K", hk.K),
              ("bound_add", hk.bound_add), ("bound_mul", hk.bound_mul),
              ("strict", hk.strict), ("empirical", hk.empirical)]
    return format_record(fields[2:]), fields


def _fin_trivial(args, base):
    verdict = analysis.fin_trivial(base)
    return _text(verdict), [("op", "fin-trivial"), ("base", base), ("fin_trivial", verdict)]


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--base", required=True, help="int:<b> | quad-:<m>,<n> | quad+:<m>,<n> | real:<dec>[@bits]")
    common.add_argument("--max-iter", type=int, default=transform.DEFAULT_MAX_ITER,
                        help="digit budget for expansions")
    common.add_argument("--machine", action="store_true", help="print key=value records")

    parser = _Parser(prog="negbeta", description="Exact (-beta)-expansions and their arithmetic.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def command(name, handler, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(handler=handler)
        return p

    command("expand", _expand, "expansion of a value").add_argument("--value", required=True)
    command("dlb", _dlb, "d(l), expansion of the left end point")
    command("dstar", _dstar, "the upper reference string d*(r)")
    command("admissible", _admissible, "is a digit string an expansion").add_argument("word")
    for name, op in (("add", arithmetic.add), ("sub", arithmetic.sub), ("mul", arithmetic.mul)):
        p = command(name, _binary(op), f"{name} two finite expansions")
        p.add_argument("left")
        p.add_argument("right")
    command("add-one", _add_one, "x + 1 by digit rewriting").add_argument("word")
    p = command("enumerate", _enumerate, "list (-beta)-integers")
    p.add_argument("--max-digits", type=int, default=analysis.DEFAULT_MAX_DIGITS)
    p = command("scan-L", _scan, "lower bound for L_add or L_mul")
    p.add_argument("--op", choices=[op.value for op in analysis.Op], required=True)
    p.add_argument("--max-digits", type=int, default=analysis.DEFAULT_MAX_DIGITS)
    p.add_argument("--max-frac", type=int, default=analysis.DEFAULT_MAX_FRAC)
    p.add_argument("--workers", type=int, default=1)
    command("classify", _classify, "Pisot and ring properties of the base")
    command("hk", _hk, "H, K and the bounds they imply").add_argument(
        "--empirical-digits", type=int, default=analysis.DEFAULT_EMPIRICAL_DIGITS)
    command("fin-trivial", _fin_trivial, "is Fin(-beta) = {0}")
    return parser


_VALUE_OPTIONS = ("--value",)


def _glue_negative_values(argv: list[str]) -> list[str]:
    # argparse reads "-1/1" as an option; bind it to the preceding --value
    out, i = [], 0
    while i < len(argv):
        token = argv[i]
        if token in _VALUE_OPTIONS and i + 1 < len(argv) and argv[i + 1].startswith("-"):
            out.append(f"{token}={argv[i + 1]}")
            i += 2
            continue
        out.append(token)
        i += 1
    return out


def run(argv: list[str]) -> CommandResult:
    parser = build_parser()
    try:
        args = parser.parse_args(_glue_negative_values(list(argv)))
    except SystemExit as exc:  # --help has already printed
        return CommandResult(int(exc.code or 0), "")
    except UsageError as exc:
        return CommandResult(2, str(exc))
    machine = args.machine
    try:
        base: Base = parse_base(args.base)
        text, fields = args.handler(args, base)
    except NegBetaError as exc:
        record = format_record([("status", "error"), ("error", exc.name)]) if machine else None
        return CommandResult(1, f"error: {exc.name}: {exc}", record)
    record = format_record(fields) if machine else None
    return CommandResult(0, text, record)


def main(argv: list[str] | None = None) -> int:
    result = run(sys.argv[1:] if argv is None else argv)
    text = result.machine_record if result.machine_record is not None else result.human_text
    stream = sys.stdout if result.exit_code == 0 else sys.stderr
    if result.machine_record is not None and result.exit_code == 1:
        stream = sys.stdout
    if text:
        print(text, file=stream)
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
