"""Command-line front end.

Machine output is JSON on stdout (one document per line); anything meant
for people goes to stderr under ``--verbose``.

Exit status: 0 success, 1 verification failure, 2 parse error,
3 domain/invariant error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .errors import DomainError, MalformedInputError
from .identity import (
    fermionic_polynomial,
    verify_bijection,
    verify_bose_fermi,
    verify_kr,
    verify_transport,
)
from .kkr import kkr_insert, kkr_ramify
from .paths import _as_word, bosonic_polynomial, check_vacuum_word, energy_E, energy_H, iter_paths
from .rigged import RiggedConfiguration, is_admissible, iter_rcs, momentum, takahashi
from .tableaux import StandardTableau, charge, tableau_from_word, thomas_p, word_from_tableau

EXIT_OK, EXIT_FAILED, EXIT_PARSE, EXIT_DOMAIN = 0, 1, 2, 3

KINDS = ("word", "tableau", "rc")


def _dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _emit(obj) -> None:
    sys.stdout.write(_dump(obj) + "\n")


def _say(args, msg: str) -> None:
    if getattr(args, "verbose", False):
        sys.stderr.write(msg + "\n")


def _read_input(args) -> str:
    if args.input_path is not None:
        if args.value is not None:
            raise MalformedInputError("give the object inline or via --input, not both")
        if args.input_path == "-":
            return sys.stdin.read().strip()
        try:
            with open(args.input_path, encoding="utf-8") as fh:
                return fh.read().strip()
        except OSError as exc:
            raise MalformedInputError(f"cannot read {args.input_path}: {exc}") from exc
    if args.value is None:
        raise MalformedInputError("no input given (pass it inline, or use --input PATH / --input -)")
    return args.value


def _parse_word(text: str) -> str:
    # accept both the bare form 0011 and a JSON string "0011"
    if text.startswith('"'):
        try:
            text = json.loads(text)
        except json.JSONDecodeError as exc:
            raise MalformedInputError(f"invalid JSON string: {exc}") from exc
        if not isinstance(text, str):
            raise MalformedInputError("word must be a string")
    if not text.isdigit() and text != "":
        raise MalformedInputError(f"word must consist of digits: {text!r}")
    return text


def _parse(kind: str, text: str):
    if kind == "word":
        return _parse_word(text)
    if kind == "tableau":
        return StandardTableau.from_json(text)
    return RiggedConfiguration.from_json(text)


def _require_level(args) -> int:
    if args.level is None:
        raise MalformedInputError("--level is required for conversions to a rigged configuration")
    if args.level < 1:
        raise DomainError(f"--level must be positive, got {args.level}")
    return args.level


def _trace_hook(args):
    if not args.trace:
        return None
    return lambda record: _emit({"trace": record})


def cmd_convert(args) -> int:
    src, dst = args.from_kind, args.to_kind
    obj = _parse(src, _read_input(args))
    hook = _trace_hook(args)

    if src == "rc":
        if args.level is not None and args.level != obj.level:
            raise DomainError(f"--level {args.level} disagrees with configuration level {obj.level}")
        if not is_admissible(obj):
            raise DomainError("rigged configuration is not admissible")
        if dst == "rc":
            _emit(obj.to_dict())
            return EXIT_OK
        word = kkr_ramify(obj, trace=hook)
    elif src == "tableau":
        word = word_from_tableau(obj)
    else:
        word = obj
        tableau_from_word(word)  # raises on non-lattice input

    if dst == "word":
        _emit(word)
    elif dst == "tableau":
        _emit(tableau_from_word(word).to_list())
    else:
        level = _require_level(args)
        if any(ch not in "01" for ch in word):
            raise DomainError("rigged configurations need a word over 0/1 (a two-row tableau)")
        rc = kkr_insert(word, level, trace=hook)
        _emit(rc.to_dict())
    return EXIT_OK


def _json_number(x: Fraction):
    return int(x) if x.denominator == 1 else float(x)


def cmd_stats(args) -> int:
    obj = _parse(args.kind, _read_input(args))
    if args.kind == "word":
        word = check_vacuum_word(_as_word(obj))
        record = {"H": energy_H(word), "E": energy_E(word)}
    elif args.kind == "tableau":
        record = {"p": thomas_p(obj), "charge": charge(obj)}
    else:
        if not is_admissible(obj):
            raise DomainError("rigged configuration is not admissible")
        record = {
            "momentum": momentum(obj),
            "vacancies": obj.vacancies(),
            "takahashi": [_json_number(x) for x in takahashi(obj)],
        }
    _emit(record)
    return EXIT_OK


def cmd_enumerate(args) -> int:
    level, length = args.level, args.length
    if args.kind == "paths":
        items = (w for w in iter_paths(level, length))
        render = lambda w: w
    elif args.kind == "rcs":
        items = iter_rcs(level, length)
        render = lambda rc: rc.to_dict()
    else:
        items = (tableau_from_word(w) for w in iter_paths(level, length))
        render = lambda t: t.to_list()
    if args.format == "count":
        _emit(sum(1 for _ in items))
    else:
        for x in items:
            _emit(render(x))
    return EXIT_OK


SUITES = ("bijection", "identity", "kr", "transport")


def _run_suite(name: str, level: int, max_length: int):
    if name == "bijection":
        return [(r.to_dict(), r.passed) for r in verify_bijection(level, max_length)]
    if name == "identity":
        return [({"suite": "identity", **r.to_dict()}, r.equal) for r in verify_bose_fermi(level, max_length)]
    if name == "kr":
        return [({"suite": "kr", **r.to_dict()}, r.equal) for r in verify_kr(max_length)]
    return [(r.to_dict(), r.passed) for r in verify_transport(level, max_length)]


def cmd_verify(args) -> int:
    if args.level < 1:
        raise DomainError(f"--level must be positive, got {args.level}")
    if args.max_length < 0:
        raise DomainError(f"--max-length must be non-negative, got {args.max_length}")
    suites = SUITES if args.suite == "all" else (args.suite,)
    ok = True
    for name in suites:
        results = _run_suite(name, args.level, args.max_length)
        passed = sum(p for _, p in results)
        for record, p in results:
            _emit(record)
            ok &= p
        _say(args, f"{name:<10} {passed}/{len(results)} passed")
    return EXIT_OK if ok else EXIT_FAILED


def cmd_poly(args) -> int:
    fn = bosonic_polynomial if args.which == "bosonic" else fermionic_polynomial
    poly = fn(args.level, args.length)
    _emit(list(poly.coeffs))
    _say(args, f"B_{args.length}(q) at level {args.level} = {poly}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="riggedpaths",
        description="Paths, standard tableaux and rigged configurations of the ABF vacuum sectors.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_input(p):
        p.add_argument("value", nargs="?", help="object given inline")
        p.add_argument("--input", dest="input_path", help="read the object from a file ('-' for stdin)")

    def add_verbose(p):
        p.add_argument("--verbose", action="store_true", help="human-readable summary on stderr")

    p = sub.add_parser("convert", help="convert between words, tableaux and rigged configurations")
    p.add_argument("--from", dest="from_kind", choices=KINDS, required=True)
    p.add_argument("--to", dest="to_kind", choices=KINDS, required=True)
    p.add_argument("--level", type=int)
    p.add_argument("--trace", action="store_true", help="emit KKR step records before the result")
    add_input(p)
    add_verbose(p)
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("stats", help="statistics of a word, tableau or rigged configuration")
    p.add_argument("kind", choices=KINDS)
    add_input(p)
    add_verbose(p)
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("enumerate", help="list vacuum paths, configurations or tableaux")
    p.add_argument("kind", choices=("paths", "rcs", "tableaux"))
    p.add_argument("--level", type=int, required=True)
    p.add_argument("--length", type=int, required=True)
    p.add_argument("--format", choices=("json", "count"), default="json")
    add_verbose(p)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", help="run an exhaustive verification suite")
    p.add_argument("--suite", choices=SUITES + ("all",), default="all")
    p.add_argument("--level", type=int, required=True)
    p.add_argument("--max-length", type=int, required=True)
    add_verbose(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("poly", help="bosonic or fermionic generating polynomial")
    p.add_argument("which", choices=("bosonic", "fermionic"))
    p.add_argument("--level", type=int, required=True)
    p.add_argument("--length", type=int, required=True)
    add_verbose(p)
    p.set_defaults(func=cmd_poly)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except MalformedInputError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_PARSE
    except (DomainError, OverflowError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
