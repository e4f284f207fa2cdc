"""Program trees with algebraic (``Call``) and scoped (``Enter``) operations.

A ``Prog`` is one of

* ``Return(value)``
* ``Call(OpNode(tag, payload, kids))`` -- kid ``i`` is the continuation taken
  when the operation produces its ``i``-th result;
* ``Enter(ScopeNode(tag, payload, bodies))`` -- every body is itself a program
  whose leaves are the continuation programs to run after the scope.

Trees are immutable, hash-consed on construction (each node caches its hash),
and every traversal is trampolined, so a chain of 10**4 operations is fine.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable, Iterable, Mapping

from . import _trampoline as tr
from .errors import SignatureError


@dataclass(frozen=True)
class OpNode:
    tag: str
    payload: Any
    kids: tuple

    def replace(self, kids) -> "OpNode":
        return OpNode(self.tag, self.payload, tuple(kids))

    def map(self, f) -> "OpNode":
        return OpNode(self.tag, self.payload, tuple(f(k) for k in self.kids))


@dataclass(frozen=True)
class ScopeNode:
    tag: str
    payload: Any
    bodies: tuple

    def replace(self, bodies) -> "ScopeNode":
        return ScopeNode(self.tag, self.payload, tuple(bodies))

    def map(self, f) -> "ScopeNode":
        return ScopeNode(self.tag, self.payload, tuple(f(b) for b in self.bodies))


def _value_hash(v) -> int:
    try:
        return hash(v)
    except TypeError:
        return hash(type(v).__name__)


class Prog:
    __slots__ = ("_hash",)

    def __eq__(self, other):
        if not isinstance(other, Prog):
            return NotImplemented
        return equal(self, other)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        from .serialize import show
        return show(self)

    def __setattr__(self, name, value):
        raise AttributeError("Prog nodes are immutable")

    # fluent sugar; the module-level functions are the primary API
    def bind(self, k):
        return bind(self, k)

    def fmap(self, f):
        return fmap(self, f)


class Return(Prog):
    __slots__ = ("value",)
    __match_args__ = ("value",)

    def __init__(self, value):
        object.__setattr__(self, "value", value)
        object.__setattr__(self, "_hash", hash(("return", _value_hash(value))))


class Call(Prog):
    __slots__ = ("node",)
    __match_args__ = ("node",)

    def __init__(self, node: OpNode):
        object.__setattr__(self, "node", node)
        object.__setattr__(
            self, "_hash",
            hash(("call", node.tag, _value_hash(node.payload), tuple(k._hash for k in node.kids))),
        )


class Enter(Prog):
    __slots__ = ("node",)
    __match_args__ = ("node",)

    def __init__(self, node: ScopeNode):
        object.__setattr__(self, "node", node)
        object.__setattr__(
            self, "_hash",
            hash(("enter", node.tag, _value_hash(node.payload), tuple(b._hash for b in node.bodies))),
        )


# -- signatures ---------------------------------------------------------------

def _anything(payload) -> bool:
    return True


def const(n: int) -> Callable[[Any], int]:
    return lambda payload: n


@dataclass(frozen=True)
class OpSpec:
    """An algebraic operation: ``arity(payload)`` continuations."""
    tag: str
    arity: Callable[[Any], int]
    accepts: Callable[[Any], bool] = _anything


@dataclass(frozen=True)
class ScopeSpec:
    """A scoped operation: ``scopes(payload)`` enclosed bodies."""
    tag: str
    scopes: Callable[[Any], int]
    accepts: Callable[[Any], bool] = _anything


@dataclass(frozen=True)
class Signature:
    name: str
    ops: Mapping[str, OpSpec] = field(default_factory=dict)
    scopes: Mapping[str, ScopeSpec] = field(default_factory=dict)

    @classmethod
    def build(cls, name: str, ops: Iterable[OpSpec] = (), scopes: Iterable[ScopeSpec] = ()) -> "Signature":
        op_map: dict = {}
        for spec in ops:
            if spec.tag in op_map:
                raise SignatureError(f"duplicate algebraic tag {spec.tag!r}")
            op_map[spec.tag] = spec
        sc_map: dict = {}
        for spec in scopes:
            if spec.tag in sc_map:
                raise SignatureError(f"duplicate scoped tag {spec.tag!r}")
            sc_map[spec.tag] = spec
        return cls(name, op_map, sc_map)

    def arity(self, tag: str, payload) -> int:
        spec = self.ops.get(tag)
        if spec is None:
            raise SignatureError(f"{tag!r} is not an algebraic operation of {self.name}")
        if not spec.accepts(payload):
            raise SignatureError(f"payload {payload!r} rejected by {tag}")
        return spec.arity(payload)

    def scope_count(self, tag: str, payload) -> int:
        spec = self.scopes.get(tag)
        if spec is None:
            raise SignatureError(f"{tag!r} is not a scoped operation of {self.name}")
        if not spec.accepts(payload):
            raise SignatureError(f"payload {payload!r} rejected by {tag}")
        return spec.scopes(payload)

    def check_op(self, node: OpNode) -> None:
        n = self.arity(node.tag, node.payload)
        if len(node.kids) != n:
            raise SignatureError(f"{node.tag}({node.payload!r}) expects {n} continuations, got {len(node.kids)}")

    def check_scope(self, node: ScopeNode) -> None:
        n = self.scope_count(node.tag, node.payload)
        if len(node.bodies) != n:
            raise SignatureError(f"{node.tag}({node.payload!r}) expects {n} scopes, got {len(node.bodies)}")

    def op(self, tag: str, payload=None, kids: Iterable[Prog] = ()) -> Prog:
        return op(self, tag, payload, kids)

    def sc(self, tag: str, payload=None, bodies: Iterable[Prog] = ()) -> Prog:
        return sc(self, tag, payload, bodies)

    def validate(self, p: Prog) -> Prog:
        """Check every node of ``p`` (inner continuation programs included)."""
        tr.run(_validate(self, p))
        return p


def _validate(sig: Signature, p):
    match p:
        case Return(_):
            return None
        case Call(node):
            sig.check_op(node)
            for k in node.kids:
                yield _validate(sig, k)
        case Enter(node):
            sig.check_scope(node)

            def inner(q):
                if not isinstance(q, Prog):
                    raise SignatureError(f"scope body leaf {q!r} is not a continuation program")
                yield _validate(sig, q)
                return q

            for b in node.bodies:
                yield _map_gen(b, inner)
        case _:
            raise SignatureError(f"not a program: {p!r}")


# -- monad structure ----------------------------------------------------------

def _map_gen(p: Prog, step):
    """Rebuild ``p`` with every outer-layer leaf ``v`` replaced by ``yield step(v)``."""
    match p:
        case Return(v):
            return Return((yield step(v)))
        case Call(node):
            kids = []
            for k in node.kids:
                kids.append((yield _map_gen(k, step)))
            return Call(node.replace(kids))
        case Enter(node):
            def inner(q):
                return (yield _map_gen(q, step))

            bodies = []
            for b in node.bodies:
                bodies.append((yield _map_gen(b, inner)))
            return Enter(node.replace(bodies))


def _bind_gen(p: Prog, k):
    match p:
        case Return(v):
            return k(v)
        case Call(node):
            kids = []
            for c in node.kids:
                kids.append((yield _bind_gen(c, k)))
            return Call(node.replace(kids))
        case Enter(node):
            # the continuation goes into the second Prog layer only
            def inner(q):
                return (yield _bind_gen(q, k))

            bodies = []
            for b in node.bodies:
                bodies.append((yield _map_gen(b, inner)))
            return Enter(node.replace(bodies))


def ret(a) -> Prog:
    return Return(a)


def bind(p: Prog, k: Callable[[Any], Prog]) -> Prog:
    return tr.run(_bind_gen(p, k))


def fmap(p: Prog, f: Callable) -> Prog:
    return tr.run(_map_gen(p, tr.lift(f)))


def map_gen(p: Prog, step):
    """Trampolined ``fmap`` whose leaf function is itself a trampolined generator."""
    return _map_gen(p, step)


def seq(p: Prog, q: Prog) -> Prog:
    """``p >> q``."""
    return bind(p, lambda _: q)


def op(sig: Signature, tag: str, payload=None, kids: Iterable[Prog] = ()) -> Prog:
    node = OpNode(tag, payload, tuple(kids))
    sig.check_op(node)
    return Call(node)


def sc(sig: Signature, tag: str, payload=None, bodies: Iterable[Prog] = ()) -> Prog:
    node = ScopeNode(tag, payload, tuple(bodies))
    sig.check_scope(node)
    return Enter(node.map(lambda b: fmap(b, Return)))


# -- structural queries -------------------------------------------------------

def _equal(p: Prog, q: Prog):
    if p is q:
        return True
    if type(p) is not type(q) or p._hash != q._hash:
        return False
    match p:
        case Return(a):
            b = q.value
            if isinstance(a, Prog) and isinstance(b, Prog):
                return (yield _equal(a, b))
            return a == b
        case Call(node) | Enter(node):
            other = q.node
            if node.tag != other.tag or node.payload != other.payload:
                return False
            left = node.kids if isinstance(p, Call) else node.bodies
            right = other.kids if isinstance(p, Call) else other.bodies
            if len(left) != len(right):
                return False
            for x, y in zip(left, right):
                if not (yield _equal(x, y)):
                    return False
            return True


def equal(p: Prog, q: Prog) -> bool:
    return tr.run(_equal(p, q))


def _measure(p: Prog):
    """(node count, height) counting through scope bodies into continuations."""
    match p:
        case Return(v):
            if isinstance(v, Prog):
                return (yield _measure(v))
            return 1, 1
        case Call(node):
            size, height = 1, 0
            for k in node.kids:
                s, h = yield _measure(k)
                size += s
                height = max(height, h)
            return size, height + 1
        case Enter(node):
            size, height = 1, 0
            for b in node.bodies:
                s, h = yield _measure(b)
                size += s
                height = max(height, h)
            return size, height + 1


def size(p: Prog) -> int:
    return tr.run(_measure(p))[0]


def depth(p: Prog) -> int:
    """Node height; a bare ``Return`` has depth 0."""
    return tr.run(_measure(p))[1] - 1


def tags(p: Prog) -> set:
    """All operation tags occurring anywhere in ``p``."""
    found = set()

    def walk(q):
        match q:
            case Return(v):
                if isinstance(v, Prog):
                    yield walk(v)
            case Call(node):
                found.add(node.tag)
                for k in node.kids:
                    yield walk(k)
            case Enter(node):
                found.add(node.tag)
                for b in node.bodies:
                    yield walk(b)

    tr.run(walk(p))
    return found
