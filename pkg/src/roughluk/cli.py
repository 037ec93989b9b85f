"""Command-line interface.

Every command writes JSON documents to stdout, one per line, with a stable
key order. Human-readable summaries go to stderr (suppressed by ``--json``).
Exit codes: 0 success or all checks pass, 1 a verification check failed,
2 bad input.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Callable

from . import finite_lukasiewicz as fl
from . import monteiro as mq
from . import rough_algebra as ra
from .approximation import BoundExceeded, ObjectSet, check_monadic_axioms
from .info_table import Partition, TableError, indiscernibility_partition, parse_table
from .report import Check, Report

SUITES = ("monadic", "lukasiewicz", "determination", "representation", "quotient", "membership", "all")
TABLE_ONLY = {"monadic", "quotient", "membership"}


class InputError(Exception):
    pass


@dataclass
class RunReport:
    command: str
    inputs: dict[str, str]
    checks: list[Check] = field(default_factory=list)
    elapsed_ms: int = 0

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json(self, timing: bool = False) -> dict[str, Any]:
        out: dict[str, Any] = {
            "command": self.command,
            "inputs": self.inputs,
            "status": "pass" if self.passed else "fail",
            "checks": [c.to_json() for c in self.checks],
        }
        if timing:
            out["elapsed_ms"] = self.elapsed_ms
        return out


def _emit(doc: Any) -> None:
    sys.stdout.write(json.dumps(doc, ensure_ascii=False) + "\n")


def _read(path: str) -> bytes:
    try:
        return Path(path).read_bytes()
    except OSError as e:
        raise InputError(f"cannot read {path}: {e.strerror or e}") from None


def _digest(data: bytes) -> str:
    return "sha256:" + hashlib.sha256(data).hexdigest()


def _load_table(path: str) -> tuple[Partition, bytes]:
    data = _read(path)
    try:
        table = parse_table(data.decode("utf-8"))
    except UnicodeDecodeError:
        raise InputError(f"{path} is not UTF-8") from None
    except TableError as e:
        raise InputError(f"{path}: {e}") from None
    return indiscernibility_partition(table), data


def _load_algebra(path: str) -> tuple[fl.FiniteAlgebra, bytes]:
    data = _read(path)
    try:
        return fl.FiniteAlgebra.loads(data.decode("utf-8")), data
    except (UnicodeDecodeError, fl.MalformedAlgebra) as e:
        raise InputError(f"{path}: {e}") from None


def _parse_set(p: Partition, spec: str) -> ObjectSet:
    ids = [s.strip() for s in spec.split(",") if s.strip()]
    unknown = [x for x in ids if x not in p.class_of]
    if unknown:
        raise InputError(f"unknown object id {unknown[0]}")
    return ObjectSet.of(p.universe, ids)


def _require(args, name: str) -> str:
    value = getattr(args, name)
    if value is None:
        raise InputError(f"--{name} is required")
    return value


def cmd_partition(args) -> int:
    p, _ = _load_table(_require(args, "table"))
    _emit(p.to_json())
    _say(args, f"{len(p.blocks)} blocks over {p.size} objects")
    return 0


def cmd_approx(args) -> int:
    p, _ = _load_table(_require(args, "table"))
    x = _parse_set(p, args.set or "")
    r = ra.rough_of(p, x)
    _emit(r.to_json())
    _say(args, f"lower={r.lower!r} upper={r.upper!r}")
    return 0


def cmd_membership(args) -> int:
    p, _ = _load_table(_require(args, "table"))
    x = _parse_set(p, args.set or "")
    if args.object is not None:
        if args.object not in p.class_of:
            raise InputError(f"unknown object id {args.object}")
        grades = {args.object: mq.membership(p, x, args.object)}
    else:
        grades = mq.membership_function(p, x)
    for doc in mq.membership_json(grades):
        _emit(doc)
    return 0


def cmd_quotient(args) -> int:
    p, _ = _load_table(_require(args, "table"))
    q = mq.quotient_algebra(p, args.max_universe)
    _emit(q.to_json())
    _say(args, f"{len(q)} congruence classes")
    return 0


def _table_suites(p: Partition, args) -> dict[str, Callable[[], list[Report]]]:
    mu, me = args.max_universe, args.max_elements

    def lukasiewicz():
        a = fl.import_rough_algebra(p, mu)
        return [fl.check_axioms(a), fl.derived_operator_checks(a)]

    def representation():
        a = fl.import_rough_algebra(p, mu)
        return [fl.verify_representation(a, me), fl.verify_round_trip(a, mu)]

    def quotient():
        q = mq.quotient_algebra(p, mu)
        return [mq.verify_congruence(p, mu), fl.check_axioms(q), mq.verify_distribution_identities(p, max_universe=mu),
                mq.quotient_iso_b_star(p, mu), mq.verify_end_notes(p, mu)]

    return {
        "monadic": lambda: [check_monadic_axioms(p, max_universe=mu)],
        "lukasiewicz": lukasiewicz,
        "determination": lambda: [ra.verify_b_star(p, mu), ra.verify_moisil(p, mu)],
        "representation": representation,
        "quotient": quotient,
        "membership": lambda: [mq.verify_membership_extension(p, mu)],
    }


def _algebra_suites(a: fl.FiniteAlgebra, args) -> dict[str, Callable[[], list[Report]]]:
    def guarded(fn):
        def run():
            try:
                return fn()
            except fl.AxiomError as e:
                r = Report("representation")
                r.add("algebra satisfies the axioms", {"error": str(e)})
                return [r]
        return run

    return {
        "lukasiewicz": lambda: [fl.check_axioms(a), fl.derived_operator_checks(a)],
        "determination": lambda: [fl.check_heyting_kleene(a)],
        "representation": guarded(lambda: [fl.verify_representation(a, args.max_elements),
                                           fl.verify_round_trip(a, args.max_universe)]),
    }


def cmd_verify(args) -> int:
    start = time.perf_counter()
    if (args.table is None) == (args.algebra is None):
        raise InputError("give exactly one of --table or --algebra")
    if args.table is not None:
        p, data = _load_table(args.table)
        suites = _table_suites(p, args)
        inputs = {"table": _digest(data)}
    else:
        a, data = _load_algebra(args.algebra)
        if args.suite in TABLE_ONLY:
            raise InputError(f"suite {args.suite} needs --table")
        suites = _algebra_suites(a, args)
        inputs = {"algebra": _digest(data)}
    names = list(suites) if args.suite == "all" else [args.suite]
    run = RunReport(f"verify {args.suite}", inputs)
    reports = []
    for name in names:
        for rep in suites[name]():
            reports.append(rep)
            run.checks.extend(Check(f"{name}/{c.name}", c.passed, c.counterexample, c.cases) for c in rep.checks)
    run.elapsed_ms = round((time.perf_counter() - start) * 1000)
    _emit(run.to_json(args.timing))
    for rep in reports:
        _say(args, rep.summary())
    _say(args, f"{'PASS' if run.passed else 'FAIL'} ({len(run.checks)} checks, {run.elapsed_ms} ms)")
    return 0 if run.passed else 1


def cmd_represent(args) -> int:
    start = time.perf_counter()
    a, data = _load_algebra(_require(args, "algebra"))
    try:
        rep = fl.represent(a)
    except fl.AxiomError as e:
        raise InputError(str(e)) from None
    _emit(rep.to_json())
    report = fl.verify_representation(a, args.max_elements)
    run = RunReport("represent", {"algebra": _digest(data)}, list(report.checks))
    run.elapsed_ms = round((time.perf_counter() - start) * 1000)
    _emit(run.to_json(args.timing))
    _say(args, f"{len(rep.filters)} prime filters in {len(rep.space.blocks)} chains")
    _say(args, report.summary())
    return 0 if run.passed else 1


def _say(args, text: str) -> None:
    if not args.json:
        print(text, file=sys.stderr)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="roughluk",
        description="Rough sets of information tables and their three-valued Lukasiewicz algebras.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--table", help="information table CSV (header: object,attr1,...)")
    common.add_argument("--algebra", help="finite algebra JSON")
    common.add_argument("--set", help='comma-separated object ids, e.g. "1,3"')
    common.add_argument("--object", help="single object id")
    common.add_argument("--max-universe", type=int, default=6, help="largest universe checked exhaustively")
    common.add_argument("--max-elements", type=int, default=16,
                        help="largest algebra whose prime filters are also enumerated by brute force")
    common.add_argument("--json", action="store_true", help="machine mode: no summary on stderr")
    common.add_argument("--timing", action="store_true", help="include elapsed_ms in run reports")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("partition", parents=[common], help="indiscernibility partition").set_defaults(func=cmd_partition)
    sub.add_parser("approx", parents=[common], help="lower and upper approximation").set_defaults(func=cmd_approx)
    sub.add_parser("membership", parents=[common], help="three-valued membership grades") \
        .set_defaults(func=cmd_membership)
    verify = sub.add_parser("verify", parents=[common], help="run verification suites")
    verify.add_argument("--suite", choices=SUITES, default="all")
    verify.set_defaults(func=cmd_verify)
    sub.add_parser("represent", parents=[common], help="prime-filter representation of an algebra") \
        .set_defaults(func=cmd_represent)
    sub.add_parser("quotient", parents=[common], help="quotient algebra of a table") \
        .set_defaults(func=cmd_quotient)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InputError, BoundExceeded) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
