"""Concrete effects: exceptions, nondeterminism with Once, state with Local,
and scoped search strategies.  Each comes with its signature, smart
constructors and handlers; :data:`REGISTRY` bundles them by name.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable

from .em import EMAlg, mk_once_alg_em
from .errors import ConfigError
from .functorial import BaseAlg, CarrierF, EndoAlg, FunctorialAlgebra, dispatch, full
from .indexed import IxAlg, mk_once_ix
from .prog import OpSpec, Prog, Return, ScopeSpec, Signature, bind, const, seq
from .translate import functorial_to_em, functorial_to_indexed
from .values import NOTHING, Just, Nothing, StateFn, Strat, maybe_join, maybe_map

STATE_SIZE = 8
MAX_SEARCH_DEPTH = 8


def _unit(payload) -> bool:
    return payload is None


def _nat(payload) -> bool:
    return isinstance(payload, int) and not isinstance(payload, bool) and payload >= 0


# -- signatures ---------------------------------------------------------------

EXCEPTIONS = Signature.build(
    "exceptions",
    [OpSpec("Throw", const(0), _unit)],
    [ScopeSpec("Catch", const(2), _unit)],
)

NONDET = Signature.build(
    "nondet",
    [OpSpec("Fail", const(0), _unit), OpSpec("Or", const(2), _unit)],
    [ScopeSpec("Once", const(1), _unit)],
)


def state_sig(n: int = STATE_SIZE) -> Signature:
    """Put/Get/Local over the finite state domain ``0..n-1``; Get has one kid per state."""
    if n < 1:
        raise ConfigError("state domain must be non-empty")

    def in_domain(s):
        return _nat(s) and s < n

    return Signature.build(
        f"state{n}",
        [OpSpec("Put", const(1), in_domain), OpSpec("Get", const(n), _unit)],
        [ScopeSpec("Local", const(1), in_domain)],
    )


STATE = state_sig()


def exc_state_sig(n: int = STATE_SIZE) -> Signature:
    """Throw/Put/Get with Catch, the state domain being ``0..n-1``."""
    if n < 1:
        raise ConfigError("state domain must be non-empty")

    def in_domain(s):
        return _nat(s) and s < n

    return Signature.build(
        "exceptions-state",
        [OpSpec("Throw", const(0), _unit), OpSpec("Put", const(1), in_domain),
         OpSpec("Get", const(n), _unit)],
        [ScopeSpec("Catch", const(2), _unit)],
    )


EXC_STATE = exc_state_sig()

STRATEGY = Signature.build(
    "strategy",
    [OpSpec("Fail", const(0), _unit), OpSpec("Or", const(2), _unit)],
    [ScopeSpec("DFS", const(1), _unit), ScopeSpec("BFS", const(1), _unit),
     ScopeSpec("DBS", const(1), _nat)],
)


# -- smart constructors -------------------------------------------------------

def throw(sig: Signature = EXCEPTIONS) -> Prog:
    return sig.op("Throw")


def catch(h: Prog, r: Prog, sig: Signature = EXCEPTIONS) -> Prog:
    return sig.sc("Catch", None, [h, r])


def fail(sig: Signature = NONDET) -> Prog:
    return sig.op("Fail")


def or_(p: Prog, q: Prog, sig: Signature = NONDET) -> Prog:
    return sig.op("Or", None, [p, q])


def once(p: Prog, sig: Signature = NONDET) -> Prog:
    return sig.sc("Once", None, [p])


def get(sig: Signature = STATE) -> Prog:
    n = sig.arity("Get", None)
    return sig.op("Get", None, [Return(s) for s in range(n)])


def put(s: int, sig: Signature = STATE) -> Prog:
    return sig.op("Put", s, [Return(None)])


def local(s: int, p: Prog, sig: Signature = STATE) -> Prog:
    return sig.sc("Local", s, [p])


def dfs(p: Prog) -> Prog:
    return STRATEGY.sc("DFS", None, [p])


def bfs(p: Prog) -> Prog:
    return STRATEGY.sc("BFS", None, [p])


def dbs(d: int, p: Prog) -> Prog:
    return STRATEGY.sc("DBS", d, [p])


# -- exceptions ---------------------------------------------------------------

MAYBE = CarrierF("Maybe", maybe_map, lambda v: isinstance(v, (Just, Nothing)))


def _catch_recover(node):
    h, r = node.bodies
    return maybe_join(r) if h is NOTHING else h.value


def _catch_abort(node):
    h, _ = node.bodies
    return NOTHING if h is NOTHING else h.value


def mk_exc_e() -> EndoAlg:
    """Maybe-carried exceptions where Catch runs its recovery scope."""
    return EndoAlg(MAYBE, Just,
                   dispatch("excE", {"Throw": lambda node: NOTHING}),
                   dispatch("excE", {"Catch": _catch_recover}))


def mk_exc_e_abort() -> EndoAlg:
    """Like :func:`mk_exc_e` but a caught exception still aborts."""
    return EndoAlg(MAYBE, Just,
                   dispatch("excE'", {"Throw": lambda node: NOTHING}),
                   dispatch("excE'", {"Catch": _catch_abort}))


# -- nondeterminism -----------------------------------------------------------

LIST = CarrierF("List", lambda f, xs: tuple(f(x) for x in xs), lambda v: isinstance(v, tuple))


def _or_concat(node):
    x, y = node.kids
    return x + y


def _first_or(empty):
    def clause(node):
        (xs,) = node.bodies
        return xs[0] if xs else empty
    return clause


def mk_ndet_e() -> EndoAlg:
    return EndoAlg(LIST, lambda x: (x,),
                   dispatch("ndetE", {"Fail": lambda node: (), "Or": _or_concat}),
                   dispatch("ndetE", {"Once": _first_or(())}))


def mk_ndet_count_base() -> BaseAlg:
    """Counts outcomes of the outermost layer; Once keeps the first inner count."""
    return BaseAlg(dispatch("count", {"Fail": lambda node: 0, "Or": lambda node: node.kids[0] + node.kids[1]}),
                   dispatch("count", {"Once": _first_or(0)}))


def mk_ndet_empty_base() -> BaseAlg:
    """Whether the outermost layer has no outcome at all."""
    return BaseAlg(dispatch("isEmpty", {"Fail": lambda node: True, "Or": lambda node: node.kids[0] and node.kids[1]}),
                   dispatch("isEmpty", {"Once": _first_or(True)}))


# -- state ----------------------------------------------------------------------

def state_carrier(n: int = STATE_SIZE) -> CarrierF:
    return CarrierF(
        f"State{n}",
        lambda f, m: StateFn(tuple((s, f(x)) for s, x in m.table)),
        lambda v: isinstance(v, StateFn) and v.states == n,
    )


def mk_state_e(n: int = STATE_SIZE) -> EndoAlg:
    """State transformers as tables; Local runs its body from the payload state
    and resumes the continuation from the state held before the scope."""
    states = range(n)

    def return_e(x):
        return StateFn(tuple((s, x) for s in states))

    def put_(node):
        (k,) = node.kids
        return StateFn(tuple(k.table[node.payload] for _ in states))

    def get_(node):
        return StateFn(tuple(node.kids[s].table[s] for s in states))

    def local_(node):
        (f,) = node.bodies
        _, k = f.table[node.payload]
        return StateFn(tuple(k.table[s] for s in states))

    return EndoAlg(state_carrier(n), return_e,
                   dispatch("stateE", {"Put": put_, "Get": get_}),
                   dispatch("stateE", {"Local": local_}))


def run_state(m: StateFn, s0: int):
    return m.table[s0]


# -- exceptions with state ----------------------------------------------------

def mk_exc_state_e(n: int = STATE_SIZE) -> EndoAlg:
    """State tables whose entries are ``Just((s', x))`` or ``Nothing``.

    A throw discards the state; Catch runs its recovery scope from the state
    the scope was entered with.
    """
    states = range(n)

    def fmap(f, m):
        return StateFn(tuple(maybe_map(lambda sx: (sx[0], f(sx[1])), e) for e in m.table))

    def return_e(x):
        return StateFn(tuple(Just((s, x)) for s in states))

    def resume(entry):
        if entry is NOTHING:
            return NOTHING
        s1, k = entry.value
        return k.table[s1]

    def catch_(node):
        h, r = node.bodies
        return StateFn(tuple(resume(h.table[s]) if h.table[s] is not NOTHING else resume(r.table[s])
                             for s in states))

    carrier = CarrierF(f"MaybeState{n}", fmap, lambda v: isinstance(v, StateFn) and v.states == n)
    return EndoAlg(carrier, return_e,
                   dispatch("excStateE", {
                       "Throw": lambda node: StateFn(tuple(NOTHING for _ in states)),
                       "Put": lambda node: StateFn(tuple(node.kids[0].table[node.payload] for _ in states)),
                       "Get": lambda node: StateFn(tuple(node.kids[s].table[s] for s in states)),
                   }),
                   dispatch("excStateE", {"Catch": catch_}))


# -- search strategies --------------------------------------------------------

def _merge_levels(a: tuple, b: tuple) -> tuple:
    n = max(len(a), len(b))
    return tuple((a[i] if i < len(a) else ()) + (b[i] if i < len(b) else ()) for i in range(n))


def _concat(xss) -> tuple:
    out: tuple = ()
    for xs in xss:
        out += xs
    return out


def strategy_carrier(max_depth: int = MAX_SEARCH_DEPTH) -> CarrierF:
    def fmap(f, v):
        return Strat(tuple(f(x) for x in v.dfs),
                     tuple(tuple(f(x) for x in lvl) for lvl in v.bfs),
                     tuple(tuple(f(x) for x in row) for row in v.dbs))

    return CarrierF(f"Strategy{max_depth}", fmap,
                    lambda v: isinstance(v, Strat) and len(v.dbs) == max_depth + 1)


def mk_strategy_alg(max_depth: int = MAX_SEARCH_DEPTH) -> FunctorialAlgebra:
    """DFS, BFS and depth-bounded search in one carrier; the outer layer is DFS."""
    bounds = range(max_depth + 1)

    def selected(node, v: Strat) -> tuple:
        if node.tag == "DFS":
            return v.dfs
        if node.tag == "BFS":
            return _concat(v.bfs)
        if node.payload > max_depth:
            raise ConfigError(f"DBS bound {node.payload} exceeds the configured maximum {max_depth}")
        return v.dbs[node.payload]

    def return_e(x):
        return Strat((x,), ((x,),), tuple((x,) for _ in bounds))

    def fail_e(node):
        return Strat((), (), tuple(() for _ in bounds))

    def or_e(node):
        l, r = node.kids
        merged = _merge_levels(l.bfs, r.bfs)
        return Strat(l.dfs + r.dfs,
                     ((),) + merged if merged else (),
                     tuple(() if d == 0 else l.dbs[d - 1] + r.dbs[d - 1] for d in bounds))

    def enter_e(node):
        (body,) = node.bodies
        ks = selected(node, body)
        bfs_levels: tuple = ()
        for k in ks:
            bfs_levels = _merge_levels(bfs_levels, k.bfs)
        return Strat(_concat(k.dfs for k in ks), bfs_levels,
                     tuple(_concat(k.dbs[d] for k in ks) for d in bounds))

    def enter_b(node):
        (body,) = node.bodies
        return _concat(selected(node, body))

    scopes = {"DFS": enter_e, "BFS": enter_e, "DBS": enter_e}
    endo = EndoAlg(strategy_carrier(max_depth), return_e,
                   dispatch("strategy", {"Fail": fail_e, "Or": or_e}),
                   dispatch("strategy", scopes))
    base = BaseAlg(dispatch("strategy/base", {"Fail": lambda node: (), "Or": _or_concat}),
                   dispatch("strategy/base", {t: enter_b for t in scopes}))
    return FunctorialAlgebra(endo, base, "List a")


# -- demo programs ------------------------------------------------------------

def catch42() -> Prog:
    """Throw inside a Catch that recovers with 42, then add one to the result."""
    return bind(catch(throw(), Return(42)), lambda x: Return(x + 1))


def once_pair() -> Prog:
    """Pick the first of 1 and 3 with Once, then branch on ``n`` and ``n + 1``."""
    return bind(once(or_(Return(1), Return(3))), lambda n: or_(Return(n), Return(n + 1)))


def safe_div(n: int, sig: Signature = EXC_STATE) -> Prog:
    """Divide ``n`` by the current state, throwing on zero and storing the quotient."""
    def step(s):
        if s == 0:
            return throw(sig)
        return seq(put(n // s, sig), Return(n // s))
    return bind(get(sig), step)


def or_chain(n: int, sig: Signature = NONDET) -> Prog:
    """A right-nested chain of ``n`` Or nodes with leaves ``0..n``; built iteratively."""
    p: Prog = Return(n)
    for i in range(n - 1, -1, -1):
        p = sig.op("Or", None, [Return(i), p])
    return p


def _search_tree() -> Prog:
    # leaf Or-depths: 1 -> 2, 2 -> 3, 3 -> 3, 4 -> 1
    s = STRATEGY
    return s.op("Or", None, [s.op("Or", None, [Return(1), s.op("Or", None, [Return(2), Return(3)])]), Return(4)])


def _dbs_tree() -> Prog:
    s = STRATEGY
    return s.op("Or", None, [Return(1), s.op("Or", None, [Return(2), Return(3)])])


# -- registry -----------------------------------------------------------------

@dataclass(frozen=True)
class Effect:
    """Everything the harness needs to exercise one effect.

    ``gen`` turns a program's return value into the algebra's base carrier.
    ``em`` and ``ix`` are hand-written when the effect has a known direct
    formulation, otherwise translated from ``algebra``.
    """
    name: str
    signature: Signature
    algebra: FunctorialAlgebra
    gen: Callable[[Any], Any]
    em: EMAlg
    ix: IxAlg
    programs: dict = field(default_factory=dict)
    description: str = ""


def _effect(name, sig, alg, gen, programs, description, em=None, ix=None) -> Effect:
    return Effect(name, sig, alg, gen,
                  em if em is not None else functorial_to_em(alg),
                  ix if ix is not None else functorial_to_indexed(alg),
                  programs, description)


def _build_registry() -> dict:
    exc, exc_abort, ndet, st = mk_exc_e(), mk_exc_e_abort(), mk_ndet_e(), mk_state_e()
    exc_st = mk_exc_state_e()
    state_programs = {
        "getState": bind(get(), Return),
        "putGet": seq(put(4), get()),
        "localRestore": seq(local(5, put(7)), get()),
    }
    effects = [
        _effect("exceptions", EXCEPTIONS, full(exc), Just, {"catch42": catch42()},
                "Throw/Catch with recovery"),
        _effect("exceptions-abort", EXCEPTIONS, full(exc_abort), Just, {"catch42": catch42()},
                "Throw/Catch where a caught exception still aborts"),
        _effect("nondet", NONDET, full(ndet), lambda x: (x,), {"oncePair": once_pair()},
                "Fail/Or/Once, all outcomes as a list",
                em=mk_once_alg_em(), ix=mk_once_ix()),
        _effect("nondet-count", NONDET, FunctorialAlgebra(ndet, mk_ndet_count_base(), "Nat"),
                lambda x: 1, {"oncePair": once_pair()}, "number of outcomes"),
        _effect("nondet-empty", NONDET, FunctorialAlgebra(ndet, mk_ndet_empty_base(), "Bool"),
                lambda x: False, {"oncePair": once_pair()}, "whether there is no outcome"),
        _effect("state", STATE, full(st), st.return_e, state_programs,
                f"Put/Get/Local over states 0..{STATE_SIZE - 1}"),
        _effect("exceptions-state", EXC_STATE, full(exc_st), exc_st.return_e,
                {"safeDiv5": safe_div(5), "safeDivCaught": catch(safe_div(5), Return(42), EXC_STATE)},
                f"Throw/Catch with Put/Get over states 0..{STATE_SIZE - 1}; Catch rolls state back"),
        _effect("strategy", STRATEGY, mk_strategy_alg(), lambda x: (x,),
                {"dfsTree": dfs(_search_tree()), "bfsTree": bfs(_search_tree()),
                 "dbsTree": dbs(1, _dbs_tree())},
                "Fail/Or under DFS/BFS/DBS scopes"),
    ]
    return {e.name: e for e in effects}


REGISTRY = _build_registry()
