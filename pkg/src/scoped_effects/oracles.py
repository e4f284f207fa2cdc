"""Reference semantics written directly against the tree, sharing no code with
the algebras: Python exceptions for Throw/Catch, generators for
nondeterminism, a mutable cell for state, depth-annotated leaf lists for
search strategies.
"""
from __future__ import annotations

from itertools import islice

from .errors import ConfigError, UnhandledOperation
from .prog import Call, Enter, OpNode, Prog, Return, bind
from .values import NOTHING, Just, StateFn


class _Thrown(Exception):
    pass


def exceptions(p: Prog, recover: bool = True):
    def run(q):
        match q:
            case Return(v):
                return v
            case Call(node) if node.tag == "Throw":
                raise _Thrown
            case Enter(node) if node.tag == "Catch":
                body, recovery = node.bodies
                try:
                    k = run(body)
                except _Thrown:
                    if not recover:
                        raise
                    k = run(recovery)
                return run(k)
        raise UnhandledOperation(f"exceptions oracle: unexpected {q!r}")

    try:
        return Just(run(p))
    except _Thrown:
        return NOTHING


def _solutions(q):
    match q:
        case Return(v):
            yield v
        case Call(node) if node.tag == "Fail":
            return
        case Call(node) if node.tag == "Or":
            for kid in node.kids:
                yield from _solutions(kid)
        case Enter(node) if node.tag == "Once":
            for k in islice(_solutions(node.bodies[0]), 1):
                yield from _solutions(k)
        case _:
            raise UnhandledOperation(f"nondet oracle: unexpected {q!r}")


def nondet(p: Prog) -> tuple:
    """All outcomes, Once pruning its scope to the first solution."""
    return tuple(_solutions(p))


def nondet_algebraic_once(p: Prog) -> tuple:
    """Outcomes if Once were algebraic, i.e. also pruned the continuation."""
    def flat(q):
        match q:
            case Return(_):
                return q
            case Call(node):
                return Call(node.map(flat))
            case Enter(node) if node.tag == "Once":
                joined = bind(node.bodies[0], lambda k: k)
                first = tuple(islice(_solutions(flat(joined)), 1))
                return Return(first[0]) if first else Call(OpNode("Fail", None, ()))
        raise UnhandledOperation(f"nondet oracle: unexpected {q!r}")

    return tuple(_solutions(flat(p)))


def state(p: Prog, s0: int):
    """Run from ``s0`` with a mutable state cell; returns (final state, value)."""
    cell = [s0]

    def run(q):
        match q:
            case Return(v):
                return v
            case Call(node) if node.tag == "Put":
                cell[0] = node.payload
                return run(node.kids[0])
            case Call(node) if node.tag == "Get":
                return run(node.kids[cell[0]])
            case Enter(node) if node.tag == "Local":
                saved = cell[0]
                cell[0] = node.payload
                k = run(node.bodies[0])
                cell[0] = saved
                return run(k)
        raise UnhandledOperation(f"state oracle: unexpected {q!r}")

    v = run(p)
    return cell[0], v


def exceptions_state(p: Prog, s0: int):
    """Mutable cell plus Python exceptions; Catch restores the cell before recovering."""
    cell = [s0]

    def run(q):
        match q:
            case Return(v):
                return v
            case Call(node) if node.tag == "Throw":
                raise _Thrown
            case Call(node) if node.tag == "Put":
                cell[0] = node.payload
                return run(node.kids[0])
            case Call(node) if node.tag == "Get":
                return run(node.kids[cell[0]])
            case Enter(node) if node.tag == "Catch":
                body, recovery = node.bodies
                saved = cell[0]
                try:
                    k = run(body)
                except _Thrown:
                    cell[0] = saved
                    k = run(recovery)
                return run(k)
        raise UnhandledOperation(f"exceptions-state oracle: unexpected {q!r}")

    try:
        v = run(p)
    except _Thrown:
        return NOTHING
    return Just((cell[0], v))


def state_table(p: Prog, n: int) -> StateFn:
    return StateFn(tuple(state(p, s) for s in range(n)))


def _outcomes(q, max_depth):
    """Leaves as (Or-depth, value) pairs in left-to-right order, scopes resolved."""
    match q:
        case Return(v):
            return [(0, v)]
        case Call(node) if node.tag == "Fail":
            return []
        case Call(node) if node.tag == "Or":
            return [(d + 1, v) for kid in node.kids for d, v in _outcomes(kid, max_depth)]
        case Enter(node) if node.tag in ("DFS", "BFS", "DBS"):
            inner = _outcomes(node.bodies[0], max_depth)
            if node.tag == "BFS":
                inner = sorted(inner, key=lambda dv: dv[0])
            elif node.tag == "DBS":
                if node.payload > max_depth:
                    raise ConfigError(f"DBS bound {node.payload} exceeds {max_depth}")
                inner = [dv for dv in inner if dv[0] <= node.payload]
            return [dv for _, k in inner for dv in _outcomes(k, max_depth)]
    raise UnhandledOperation(f"strategy oracle: unexpected {q!r}")


def strategy(p: Prog, max_depth: int = 8) -> tuple:
    """Outcomes of the outermost layer, which searches depth-first."""
    return tuple(v for _, v in _outcomes(p, max_depth))


def oracle_interpret(effect: str, p: Prog, **params):
    """Reference result for ``p`` in the base carrier of the registry effect ``effect``."""
    if effect == "exceptions":
        return exceptions(p)
    if effect == "exceptions-abort":
        return exceptions(p, recover=False)
    if effect == "nondet":
        return nondet(p)
    if effect == "nondet-count":
        return len(nondet(p))
    if effect == "nondet-empty":
        return not nondet(p)
    if effect == "state":
        if "s0" in params:
            return state(p, params["s0"])
        return state_table(p, params.get("states", 8))
    if effect == "exceptions-state":
        n = params.get("states", 8)
        if "s0" in params:
            return exceptions_state(p, params["s0"])
        return StateFn(tuple(exceptions_state(p, s) for s in range(n)))
    if effect == "strategy":
        return strategy(p, params.get("max_depth", 8))
    raise ValueError(f"no oracle for effect {effect!r}")
