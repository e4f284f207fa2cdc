"""Deterministic random program corpora and counterexample shrinking."""
from __future__ import annotations

import random
from dataclasses import dataclass, replace
from typing import Callable

from .effects import EXC_STATE, EXCEPTIONS, NONDET, STATE, STRATEGY
from .errors import ConfigError
from .prog import Call, Enter, OpNode, Prog, Return, ScopeNode, Signature, bind

SIGNATURES = {
    "exceptions": EXCEPTIONS,
    "nondet": NONDET,
    "state": STATE,
    "strategy": STRATEGY,
    "exceptions-state": EXC_STATE,
}

# payload samplers for tags whose payload is not unit
_PAYLOADS = {
    "Put": lambda rng, sig: rng.randrange(sig.arity("Get", None)),
    "Local": lambda rng, sig: rng.randrange(sig.arity("Get", None)),
    "DBS": lambda rng, sig: rng.randrange(4),
}


@dataclass(frozen=True)
class GenConfig:
    signature: str = "nondet"
    max_depth: int = 5
    max_width: int = 8
    leaf_domain: tuple = (0, 1, 2, 3)
    seed: int = 0
    corpus_size: int = 300
    max_nodes: int = 60

    def __post_init__(self):
        if self.max_depth < 0:
            raise ConfigError("max_depth must be >= 0")
        if self.corpus_size < 1:
            raise ConfigError("corpus_size must be >= 1")
        if not self.leaf_domain:
            raise ConfigError("leaf_domain must be non-empty")

    def with_(self, **changes) -> "GenConfig":
        return replace(self, **changes)


def resolve_signature(name: str) -> Signature:
    try:
        return SIGNATURES[name]
    except KeyError:
        raise ConfigError(f"unknown signature {name!r}; known: {', '.join(SIGNATURES)}") from None


def _nullary(sig: Signature, tag: str) -> bool:
    try:
        return sig.arity(tag, None) == 0
    except Exception:
        return False


class _Builder:
    def __init__(self, sig: Signature, cfg: GenConfig, rng: random.Random):
        self.sig, self.cfg, self.rng = sig, cfg, rng
        self.budget = cfg.max_nodes
        self.choices = [("op", t) for t in sig.ops] + [("sc", t) for t in sig.scopes]
        # nullary operations end a branch; keep them rarer so corpora are not mostly leaves
        self.weights = [1 if k == "op" and _nullary(sig, t) else 3 for k, t in self.choices]

    def payload(self, tag):
        sampler = _PAYLOADS.get(tag)
        return sampler(self.rng, self.sig) if sampler else None

    def leaf(self):
        return self.rng.choice(self.cfg.leaf_domain)

    def prog(self, depth: int, leaf: Callable) -> Prog:
        rng = self.rng
        if depth == 0 or self.budget <= 0 or rng.random() < 0.15:
            return Return(leaf())
        kind, tag = rng.choices(self.choices, self.weights)[0]
        payload = self.payload(tag)
        if kind == "op":
            n = self.sig.arity(tag, payload)
            if n > self.cfg.max_width:
                return Return(leaf())
            self.budget -= 1 + n
            return Call(OpNode(tag, payload, tuple(self.prog(depth - 1, leaf) for _ in range(n))))
        self.budget -= 1
        bodies = []
        for _ in range(self.sig.scope_count(tag, payload)):
            inner = rng.randint(0, depth - 1)
            bodies.append(self.prog(inner, lambda: self.prog(depth - 1 - inner, leaf)))
        return Enter(ScopeNode(tag, payload, tuple(bodies)))


def gen_program(cfg: GenConfig, rng: random.Random, depth: int | None = None) -> Prog:
    sig = resolve_signature(cfg.signature)
    b = _Builder(sig, cfg, rng)
    return b.prog(cfg.max_depth if depth is None else depth, b.leaf)


def gen_programs(cfg: GenConfig) -> list:
    """A corpus of ``cfg.corpus_size`` programs; identical configs give identical corpora."""
    sig = resolve_signature(cfg.signature)
    master = random.Random(f"{cfg.seed}:{cfg.signature}")
    corpus = []
    for _ in range(cfg.corpus_size):
        rng = random.Random(master.getrandbits(64))
        b = _Builder(sig, cfg, rng)
        corpus.append(b.prog(cfg.max_depth, b.leaf))
    return corpus


def gen_kleisli(cfg: GenConfig, rng: random.Random, depth: int = 2) -> Callable[[object], Prog]:
    """A tabulated continuation ``leaf -> Prog`` over ``cfg.leaf_domain``.

    Leaves outside the domain map to ``Return`` of themselves.
    """
    table = {a: gen_program(cfg, rng, depth) for a in cfg.leaf_domain}

    def k(a):
        return table.get(a, Return(a))
    k.table = table
    return k


# -- shrinking ----------------------------------------------------------------

def _first_leaf(p: Prog):
    while True:
        match p:
            case Return(v):
                return v
            case Call(node):
                if not node.kids:
                    return None
                p = node.kids[0]
            case Enter(node):
                q = _first_leaf(node.bodies[0])
                if not isinstance(q, Prog):
                    return None
                p = q


def _candidates(p: Prog):
    match p:
        case Return(v):
            if isinstance(v, Prog):
                for c in _candidates(v):
                    yield Return(c)
            return
        case Call(node):
            leaf = _first_leaf(p)
            if leaf is not None:
                yield Return(leaf)
            yield from node.kids
            for i, kid in enumerate(node.kids):
                for c in _candidates(kid):
                    yield Call(node.replace(node.kids[:i] + (c,) + node.kids[i + 1:]))
        case Enter(node):
            leaf = _first_leaf(p)
            if leaf is not None:
                yield Return(leaf)
            for body in node.bodies:
                q = _first_leaf(body)
                if isinstance(q, Prog):
                    yield q
            # dissolve the scope: run one body straight into its continuations
            for body in node.bodies:
                yield bind(body, lambda k: k)
            for i, body in enumerate(node.bodies):
                for c in _candidates(body):
                    yield Enter(node.replace(node.bodies[:i] + (c,) + node.bodies[i + 1:]))


def shrink(p: Prog, fails: Callable[[Prog], bool], max_steps: int = 500) -> Prog:
    """Greedily replace ``p`` by smaller programs on which ``fails`` still holds."""
    steps = 0
    improved = True
    while improved and steps < max_steps:
        improved = False
        for c in _candidates(p):
            steps += 1
            try:
                still = fails(c)
            except Exception:
                still = True
            if still:
                p, improved = c, True
                break
            if steps >= max_steps:
                break
    return p
