"""Eilenberg-Moore algebras: scope clauses see the still-unhandled body."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable

from . import _trampoline as tr
from .errors import UnhandledOperation
from .prog import Call, Enter, OpNode, Prog, Return, ScopeNode, map_gen


@dataclass(frozen=True)
class EMAlg:
    """``call_em : OpNode[X] -> X`` and ``enter_em : ScopeNode[Prog[X]] -> X``."""
    call_em: Callable[[OpNode], Any]
    enter_em: Callable[[ScopeNode], Any]
    base_domain: str = ""


def _handle_em(alg: EMAlg, gen, p: Prog):
    match p:
        case Return(x):
            return gen(x)
        case Call(node):
            kids = []
            for k in node.kids:
                kids.append((yield _handle_em(alg, gen, k)))
            return alg.call_em(node.replace(kids))
        case Enter(node):
            def inner(q):
                return (yield _handle_em(alg, gen, q))

            bodies = []
            for b in node.bodies:
                bodies.append((yield map_gen(b, inner)))
            return alg.enter_em(node.replace(bodies))


def handle_em(alg: EMAlg, gen: Callable, p: Prog):
    return tr.run(_handle_em(alg, gen, p))


def mk_once_alg_em() -> EMAlg:
    """Lists for Fail/Or, with Once handled by recursively running the body."""
    def call_em(node):
        if node.tag == "Fail":
            return ()
        if node.tag == "Or":
            x, y = node.kids
            return x + y
        raise UnhandledOperation(f"onceAlgEM has no clause for {node.tag!r}")

    def enter_em(node):
        if node.tag != "Once":
            raise UnhandledOperation(f"onceAlgEM has no clause for {node.tag!r}")
        (body,) = node.bodies
        results = handle_em(alg, lambda x: (x,), body)
        return results[0] if results else ()

    alg = EMAlg(call_em, enter_em, "List a")
    return alg
