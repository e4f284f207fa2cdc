"""Command-line front end: ``demo``, ``laws``, ``export`` and ``effects``."""
from __future__ import annotations

import argparse
import json
import os
import sys

from . import oracles
from .effects import REGISTRY
from .em import handle_em
from .errors import ScopedEffectsError
from .functorial import handle
from .generators import GenConfig
from .indexed import handle_ix
from .laws import SUITES, run_law_suite
from .serialize import program_from_json, show, to_json
from .values import Just, StateFn

HANDLER_KINDS = ("functorial", "em", "indexed", "oracle")


class UsageError(Exception):
    pass


def _interpret(effect, kind: str, p):
    if kind == "functorial":
        return handle(effect.algebra, effect.gen, p)
    if kind == "em":
        return handle_em(effect.em, effect.gen, p)
    if kind == "indexed":
        return handle_ix(effect.ix, effect.gen, p)
    return oracles.oracle_interpret(effect.name, p)


def _effect(name: str):
    try:
        return REGISTRY[name]
    except KeyError:
        raise UsageError(f"unknown effect {name!r}; choose from {', '.join(REGISTRY)}") from None


def _find_program(name: str, effect=None):
    pools = [effect] if effect is not None else list(REGISTRY.values())
    for e in pools:
        if name in e.programs:
            return e.programs[name]
    known = sorted({n for e in pools for n in e.programs})
    raise UsageError(f"unknown program {name!r}; choose from {', '.join(known)}")


def _write_json(path: str, doc) -> None:
    with open(path, "w") as fh:
        json.dump(doc, fh, indent=2)
        fh.write("\n")


def _show_entry(entry) -> str:
    """Render a state-table entry: a ``(state, value)`` pair, possibly under Just."""
    if isinstance(entry, Just):
        return f"Just {_show_entry(entry.value)}"
    if isinstance(entry, tuple):
        return f"({show(entry[0])}, {show(entry[1])})"
    return show(entry)


def cmd_demo(args) -> int:
    effect = _effect(args.effect)
    if args.stdin_json:
        p = program_from_json(json.load(sys.stdin), effect.signature)
        label = "<stdin>"
    else:
        label = args.program or next(iter(effect.programs))
        p = _find_program(label, effect)
    result = _interpret(effect, args.kind, p)
    shown = result
    if args.s0 is not None:
        if not isinstance(result, StateFn):
            raise UsageError("--s0 only applies to the state effect")
        if not 0 <= args.s0 < result.states:
            raise UsageError(f"--s0 must lie in 0..{result.states - 1}")
        shown = result.table[args.s0]
    print(_show_entry(shown) if args.s0 is not None else show(shown))
    if args.json:
        _write_json(args.json, {"effect": effect.name, "handler": args.kind, "program": to_json(p),
                                "result": to_json(shown)})
    return 0


def cmd_laws(args) -> int:
    seed = args.seed
    env = os.environ.get("SCOPED_EFFECTS_SEED")
    if env is not None:
        try:
            seed = int(env)
        except ValueError:
            raise UsageError(f"SCOPED_EFFECTS_SEED must be an integer, got {env!r}") from None
    cfg = GenConfig(seed=seed, max_depth=args.depth, corpus_size=args.cases)
    names = SUITES if args.suite == "all" else (args.suite,)
    reports = []
    for name in names:
        report = run_law_suite(name, cfg)
        reports.append(report)
        status = "PASS" if report.passed else "FAIL"
        print(f"{status}  {name:<20} cases={report.cases:<6} failures={len(report.failures):<4} {report.millis} ms")
        for failure in report.failures[:3]:
            print(f"      {failure['law']} [{failure['algebras']}]: "
                  f"{show(program_from_json(failure['program']))}")
            print(f"        expected {failure['expected']}  actual {failure['actual']}")
    if args.json:
        docs = [r.to_json() for r in reports]
        _write_json(args.json, docs[0] if len(docs) == 1 else docs)
    return 0 if all(r.passed for r in reports) else 1


def cmd_export(args) -> int:
    effect = _effect(args.effect) if args.effect else None
    p = _find_program(args.program, effect)
    print(json.dumps(to_json(p), indent=None if args.compact else 2))
    return 0


def cmd_effects(args) -> int:
    for e in REGISTRY.values():
        print(f"{e.name:<18} {e.description}")
        print(f"{'':<18} programs: {', '.join(e.programs)}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="scoped-effects",
                                     description="Scoped effects: handlers, translations and law suites.")
    sub = parser.add_subparsers(dest="command", required=True)

    demo = sub.add_parser("demo", help="run a demo program under one handler discipline")
    demo.add_argument("effect", help=f"one of: {', '.join(REGISTRY)}")
    demo.add_argument("kind", choices=HANDLER_KINDS)
    src = demo.add_mutually_exclusive_group()
    src.add_argument("--program", help="named demo program (default: the effect's first)")
    src.add_argument("--stdin-json", action="store_true", help="read a canonical program from stdin")
    demo.add_argument("--s0", type=int, help="initial state; prints (final state, value)")
    demo.add_argument("--json", metavar="PATH", help="also write a result document")
    demo.set_defaults(func=cmd_demo)

    laws = sub.add_parser("laws", help="run law suites over generated corpora")
    laws.add_argument("suite", choices=SUITES + ("all",))
    laws.add_argument("--seed", type=int, default=0)
    laws.add_argument("--depth", type=int, default=5)
    laws.add_argument("--cases", type=int, default=300, help="corpus size per signature")
    laws.add_argument("--json", metavar="PATH", help="write LawReport JSON")
    laws.set_defaults(func=cmd_laws)

    export = sub.add_parser("export", help="print a demo program as canonical JSON")
    export.add_argument("program")
    export.add_argument("--effect")
    export.add_argument("--compact", action="store_true")
    export.set_defaults(func=cmd_export)

    effects = sub.add_parser("effects", help="list registered effects and their demo programs")
    effects.set_defaults(func=cmd_effects)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ScopedEffectsError, ValueError, json.JSONDecodeError) as exc:
        print(f"scoped-effects: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
