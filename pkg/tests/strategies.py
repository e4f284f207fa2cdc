"""Hypothesis strategies for programs over the shipped signatures."""
from hypothesis import strategies as st

from scoped_effects.effects import EXCEPTIONS, NONDET, STRATEGY, exc_state_sig, state_sig
from scoped_effects.prog import Call, Enter, OpNode, Return, ScopeNode

STATE3 = state_sig(3)
EXC_STATE3 = exc_state_sig(3)

SIGS = {"exceptions": EXCEPTIONS, "nondet": NONDET, "state": STATE3, "strategy": STRATEGY,
        "exceptions-state": EXC_STATE3}

leaves = st.integers(0, 3)


def _payloads(sig, tag):
    if tag in ("Put", "Local"):
        return st.integers(0, sig.arity("Get", None) - 1)
    if tag == "DBS":
        return st.integers(0, 3)
    return st.none()


@st.composite
def programs(draw, sig=NONDET, max_depth=4, leaf=leaves):
    choices = [("op", t) for t in sig.ops] + [("sc", t) for t in sig.scopes]

    def go(d, mk_leaf):
        i = draw(st.integers(0, len(choices))) if d > 0 else 0
        if i == 0:
            return Return(mk_leaf())
        kind, tag = choices[i - 1]
        payload = draw(_payloads(sig, tag))
        if kind == "op":
            n = sig.arity(tag, payload)
            return Call(OpNode(tag, payload, tuple(go(d - 1, mk_leaf) for _ in range(n))))
        bodies = []
        for _ in range(sig.scope_count(tag, payload)):
            inner = draw(st.integers(0, d - 1))
            bodies.append(go(inner, lambda inner=inner: go(d - 1 - inner, mk_leaf)))
        return Enter(ScopeNode(tag, payload, tuple(bodies)))

    return go(max_depth, lambda: draw(leaf))


def any_program(max_depth=4):
    return st.sampled_from(sorted(SIGS)).flatmap(lambda name: programs(SIGS[name], max_depth))


@st.composite
def kleisli(draw, sig=NONDET, max_depth=2):
    """A tabulated continuation over the leaf domain 0..3."""
    table = {a: draw(programs(sig, max_depth)) for a in range(4)}
    return lambda a: table[a]
