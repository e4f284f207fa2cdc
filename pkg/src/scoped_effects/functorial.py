"""Functorial algebras: an endofunctor algebra for everything inside scopes and
a base algebra for the outermost layer.

``hcata`` folds a program with the endofunctor algebra alone; ``handle`` uses
the base algebra for the outer layer and ``hcata`` for each scope's body.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable

from . import _trampoline as tr
from .errors import UnhandledOperation
from .prog import Call, Enter, OpNode, Prog, Return, ScopeNode, map_gen


@dataclass(frozen=True)
class CarrierF:
    """An endofunctor over the value universe.

    ``fmap(f, v)`` lifts ``f`` to carrier values; ``member(v)`` recognises
    values of the carrier's shape (used by sanity checks, not by folds).
    """
    name: str
    fmap: Callable[[Callable, Any], Any]
    member: Callable[[Any], bool] = lambda v: True


@dataclass(frozen=True)
class EndoAlg:
    carrier: CarrierF
    return_e: Callable[[Any], Any]
    call_e: Callable[[OpNode], Any]
    enter_e: Callable[[ScopeNode], Any]


@dataclass(frozen=True)
class BaseAlg:
    call_b: Callable[[OpNode], Any]
    enter_b: Callable[[ScopeNode], Any]


@dataclass(frozen=True)
class FunctorialAlgebra:
    endo: EndoAlg
    base: BaseAlg
    base_domain: str = ""


def dispatch(kind: str, table: dict) -> Callable:
    """Build an algebra clause from ``{tag: fn(node)}``; unknown tags raise."""
    def clause(node):
        fn = table.get(node.tag)
        if fn is None:
            raise UnhandledOperation(f"{kind} has no clause for {node.tag!r}")
        return fn(node)
    clause.tags = frozenset(table)
    return clause


def endo_as_base(endo: EndoAlg) -> BaseAlg:
    return BaseAlg(endo.call_e, endo.enter_e)


def full(endo: EndoAlg) -> FunctorialAlgebra:
    """The functorial algebra interpreting the outer layer like the inner ones."""
    return FunctorialAlgebra(endo, endo_as_base(endo), f"{endo.carrier.name} a")


def _hcata(alg: EndoAlg, p: Prog):
    match p:
        case Return(x):
            return alg.return_e(x)
        case Call(node):
            kids = []
            for k in node.kids:
                kids.append((yield _hcata(alg, k)))
            return alg.call_e(node.replace(kids))
        case Enter(node):
            def inner(q):
                return (yield _hcata(alg, q))

            bodies = []
            for b in node.bodies:
                folded_inner = yield map_gen(b, inner)
                bodies.append((yield _hcata(alg, folded_inner)))
            return alg.enter_e(node.replace(bodies))


def hcata(alg: EndoAlg, p: Prog):
    return tr.run(_hcata(alg, p))


def _handle(alg: FunctorialAlgebra, gen, p: Prog):
    match p:
        case Return(x):
            return gen(x)
        case Call(node):
            kids = []
            for k in node.kids:
                kids.append((yield _handle(alg, gen, k)))
            return alg.base.call_b(node.replace(kids))
        case Enter(node):
            def inner(q):
                return (yield _handle(alg, gen, q))

            bodies = []
            for b in node.bodies:
                handled_inner = yield map_gen(b, inner)
                bodies.append((yield _hcata(alg.endo, handled_inner)))
            return alg.base.enter_b(node.replace(bodies))


def handle(alg: FunctorialAlgebra, gen: Callable, p: Prog):
    return tr.run(_handle(alg, gen, p))


def handle_e(endo: EndoAlg, p: Prog):
    return handle(full(endo), endo.return_e, p)
