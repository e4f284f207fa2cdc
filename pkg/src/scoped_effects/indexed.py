"""Level-indexed algebras and the hybrid fold.

Values carry their level explicitly (:class:`Leveled`).  ``hfold`` checks the
level of every value it feeds to or receives from the algebra, so a clause
that promotes or demotes incorrectly fails with :class:`LevelError` at the
step where it happens.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable, Optional

from . import _trampoline as tr
from .errors import LevelError, UnhandledOperation
from .prog import Call, Enter, OpNode, Prog, Return, ScopeNode, map_gen


@dataclass(frozen=True)
class Leveled:
    level: int
    value: Any

    def __post_init__(self):
        if not isinstance(self.level, int) or self.level < 0:
            raise LevelError(f"invalid level {self.level!r}")


@dataclass(frozen=True)
class IxAlg:
    """``action(n, OpNode[A_n]) -> A_n``, ``demote(n, ScopeNode[A_{n+1}]) -> A_n``,
    ``promote(n, A_n) -> A_{n+1}``; all values are :class:`Leveled`.
    """
    action: Callable[[int, OpNode], Leveled]
    demote: Callable[[int, ScopeNode], Leveled]
    promote: Callable[[int, Leveled], Leveled]
    validate: Optional[Callable[[int, Any], bool]] = None


def _check(alg: IxAlg, v, level: int, what: str) -> Leveled:
    if not isinstance(v, Leveled):
        raise LevelError(f"{what} produced untagged value {v!r}, expected level {level}")
    if v.level != level:
        raise LevelError(f"{what} produced level {v.level}, expected {level}")
    if alg.validate is not None and not alg.validate(level, v.value):
        raise LevelError(f"{what} produced {v.value!r}, not a level-{level} carrier value")
    return v


def _hfold(alg: IxAlg, n: int, p: Prog):
    match p:
        case Return(x):
            return _check(alg, x, n, "leaf")
        case Call(node):
            kids = []
            for k in node.kids:
                kids.append((yield _hfold(alg, n, k)))
            return _check(alg, alg.action(n, node.replace(kids)), n, f"action[{n}] {node.tag}")
        case Enter(node):
            def inner(q):
                v = yield _hfold(alg, n, q)
                return _check(alg, alg.promote(n, v), n + 1, f"promote[{n}]")

            bodies = []
            for b in node.bodies:
                promoted = yield map_gen(b, inner)
                bodies.append((yield _hfold(alg, n + 1, promoted)))
            return _check(alg, alg.demote(n, node.replace(bodies)), n, f"demote[{n}] {node.tag}")


def hfold(alg: IxAlg, n: int, p: Prog) -> Leveled:
    """Fold ``p``, whose leaves are level-``n`` values, into a level-``n`` value."""
    return tr.run(_hfold(alg, n, p))


def handle_ix(alg: IxAlg, gen: Callable, p: Prog):
    """Interpret ``p`` at level 0 after generating leaves with ``gen``; returns the raw value."""
    from .prog import fmap
    return hfold(alg, 0, fmap(p, lambda a: Leveled(0, gen(a)))).value


def mk_once_ix() -> IxAlg:
    """Nondeterminism with Once: ``A_0 = List X``, ``A_{i+1} = List A_i``."""
    def action(n, node):
        if node.tag == "Fail":
            return Leveled(n, ())
        if node.tag == "Or":
            x, y = node.kids
            return Leveled(n, x.value + y.value)
        raise UnhandledOperation(f"onceIx has no action for {node.tag!r}")

    def demote(n, node):
        if node.tag != "Once":
            raise UnhandledOperation(f"onceIx has no demote for {node.tag!r}")
        (body,) = node.bodies
        return Leveled(n, body.value[0] if body.value else ())

    def promote(n, v):
        return Leveled(n + 1, (v.value,))

    return IxAlg(action, demote, promote, validate=lambda n, v: isinstance(v, tuple))
