"""Executable law suites over generated corpora.

Every suite returns a :class:`LawReport`; a failing case is data, never an
exception.  Counterexamples are shrunk before they are reported.
"""
from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from typing import Callable

from . import oracles
from .effects import REGISTRY, mk_ndet_count_base, mk_ndet_e, mk_ndet_empty_base
from .em import handle_em
from .functorial import FunctorialAlgebra, handle, handle_e, hcata
from .generators import GenConfig, gen_kleisli, gen_programs, shrink
from .indexed import handle_ix, hfold, Leveled
from .prog import Call, Enter, Prog, Return, bind, fmap
from .serialize import to_json
from .translate import (SYNTAX, SYNTAX_ENDO, em_to_functorial, functorial_to_em,
                        functorial_to_indexed, indexed_to_em)

SUITES = ("monad", "preservation", "fusion", "hybrid-fold", "oracle-equivalence", "naturality")

MONAD_SIGNATURES = ("exceptions", "nondet", "state", "strategy", "exceptions-state")
ORACLE_EFFECTS = ("exceptions", "exceptions-abort", "nondet", "nondet-count",
                  "nondet-empty", "state", "exceptions-state", "strategy")


@dataclass
class LawReport:
    suite: str
    cases: int = 0
    failures: list = field(default_factory=list)
    millis: int = 0

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {"suite": self.suite, "cases": self.cases, "failures": self.failures, "millis": self.millis}


def _encode(v):
    try:
        return to_json(v)
    except TypeError:
        return repr(v)


class _Checker:
    """Collects cases for one report."""

    def __init__(self, report: LawReport):
        self.report = report

    def check(self, p: Prog, law: str, algebras: str, expected: Callable, actual: Callable) -> bool:
        """Compare ``expected(q)`` with ``actual(q)`` at ``q = p``; shrink on mismatch."""
        self.report.cases += 1

        def outcome(q):
            try:
                return expected(q), actual(q), None
            except Exception as exc:  # noqa: BLE001 - a crashing law is a failed law
                return None, None, f"{type(exc).__name__}: {exc}"

        def fails(q):
            e, a, err = outcome(q)
            return err is not None or e != a

        if not fails(p):
            return True
        small = shrink(p, fails)
        e, a, err = outcome(small)
        self.report.failures.append({
            "law": law,
            "algebras": algebras,
            "program": to_json(small),
            "expected": _encode(e),
            "actual": err if err is not None else _encode(a),
        })
        return False


def _timed(name: str, body: Callable[[_Checker], None]) -> LawReport:
    report = LawReport(name)
    start = time.perf_counter()
    body(_Checker(report))
    report.millis = int((time.perf_counter() - start) * 1000)
    return report


def _corpus(cfg: GenConfig, signature: str) -> list:
    return gen_programs(cfg.with_(signature=signature))


# -- suites -------------------------------------------------------------------

def monad_suite(cfg: GenConfig) -> LawReport:
    def body(ck: _Checker):
        for sig in MONAD_SIGNATURES:
            scfg = cfg.with_(signature=sig)
            rng = random.Random(f"{cfg.seed}:kleisli:{sig}")
            for p in gen_programs(scfg):
                k, h = gen_kleisli(scfg, rng), gen_kleisli(scfg, rng)
                for a in cfg.leaf_domain:
                    ck.check(Return(a), "left identity", sig,
                             lambda q: k(q.value), lambda q: bind(q, k))
                ck.check(p, "right identity", sig, lambda q: q, lambda q: bind(q, Return))
                ck.check(p, "associativity", sig,
                         lambda q: bind(bind(q, k), h),
                         lambda q: bind(q, lambda a: bind(k(a), h)))
                if isinstance(p, Call):
                    ck.check(p, "algebraicity", sig,
                             lambda q: Call(q.node.map(lambda c: bind(c, k))) if isinstance(q, Call) else bind(q, k),
                             lambda q: bind(q, k))
                elif isinstance(p, Enter):
                    ck.check(p, "scope boundary", sig,
                             lambda q: _skeleton(q),
                             lambda q: _skeleton(bind(q, k)) if isinstance(q, Enter) else _skeleton(q))
    return _timed("monad", body)


def _skeleton(p: Prog):
    """The outer layer of each scope body with continuations erased."""
    if not isinstance(p, Enter):
        return None
    return tuple(fmap(b, lambda _: None) for b in p.node.bodies)


def _discipline_runs(effect):
    return {
        "functorial": lambda q: handle(effect.algebra, effect.gen, q),
        "em": lambda q: handle_em(effect.em, effect.gen, q),
        "indexed": lambda q: handle_ix(effect.ix, effect.gen, q),
    }


def oracle_suite(cfg: GenConfig) -> LawReport:
    def body(ck: _Checker):
        for name in ORACLE_EFFECTS:
            effect = REGISTRY[name]
            corpus = _corpus(cfg, _sig_name(effect))
            for p in corpus:
                for kind, run in _discipline_runs(effect).items():
                    ck.check(p, f"{kind} = oracle", name,
                             lambda q: oracles.oracle_interpret(name, q), run)
    return _timed("oracle-equivalence", body)


def _sig_name(effect) -> str:
    return "state" if effect.signature.name.startswith("state") else effect.signature.name


def preservation_suite(cfg: GenConfig) -> LawReport:
    def body(ck: _Checker):
        for name, effect in REGISTRY.items():
            alg, em, ix, gen = effect.algebra, effect.em, effect.ix, effect.gen
            em_fn, fn_em, fn_ix, ix_em = (em_to_functorial(em), functorial_to_em(alg),
                                          functorial_to_indexed(alg), indexed_to_em(ix))
            round_trip = functorial_to_em(em_fn)
            for p in _corpus(cfg, _sig_name(effect)):
                ck.check(p, "emToFunctorial", name,
                         lambda q: handle_em(em, gen, q), lambda q: handle(em_fn, gen, q))
                ck.check(p, "functorialToEM", name,
                         lambda q: handle(alg, gen, q), lambda q: handle_em(fn_em, gen, q))
                ck.check(p, "functorialToIndexed", name,
                         lambda q: handle(alg, gen, q), lambda q: handle_ix(fn_ix, gen, q))
                ck.check(p, "indexedToEM", name,
                         lambda q: handle_ix(ix, gen, q), lambda q: handle_em(ix_em, gen, q))
                ck.check(p, "round trip EM->Fn->EM", name,
                         lambda q: handle_em(em, gen, q), lambda q: handle_em(round_trip, gen, q))
    return _timed("preservation", body)


def fusion_pairs():
    """(name, f, source algebra, target algebra) instances of the fusion law."""
    ndet = mk_ndet_e()
    source = FunctorialAlgebra(ndet, REGISTRY["nondet"].algebra.base, "List x")
    return [
        ("length", len, source, FunctorialAlgebra(ndet, mk_ndet_count_base(), "Nat")),
        ("is-empty", lambda xs: not xs, source, FunctorialAlgebra(ndet, mk_ndet_empty_base(), "Bool")),
    ]


def _fusion_gen(a):
    # any List-valued generator works; vary lengths including empty
    return tuple(range(a % 3))


def fusion_suite(cfg: GenConfig) -> LawReport:
    def body(ck: _Checker):
        corpus = _corpus(cfg, "nondet")
        for label, f, alpha, beta in fusion_pairs():
            fg = lambda a, f=f: f(_fusion_gen(a))
            for p in corpus:
                # the target algebra must agree with the reference semantics on its own
                ck.check(p, f"{label}: target algebra = oracle", "nondet",
                         lambda q, f=f: f(tuple(x for v in oracles.nondet(q) for x in _fusion_gen(v))),
                         lambda q, beta=beta, fg=fg: handle(beta, fg, q))
                ck.check(p, f"{label}: f . handle(alpha, g) = handle(beta, f . g)", "nondet",
                         lambda q, f=f, alpha=alpha: f(handle(alpha, _fusion_gen, q)),
                         lambda q, beta=beta, fg=fg: handle(beta, fg, q))
    return _timed("fusion", body)


def hybrid_fold_suite(cfg: GenConfig) -> LawReport:
    def body(ck: _Checker):
        for name, effect in REGISTRY.items():
            alg, gen = effect.algebra, effect.gen
            ix = functorial_to_indexed(alg)
            for p in _corpus(cfg, _sig_name(effect)):
                ck.check(p, "hfold(K(alg), 0) = handle(alg, id)", name,
                         lambda q: handle(alg, lambda x: x, fmap(q, gen)),
                         lambda q: hfold(ix, 0, fmap(q, lambda a: Leveled(0, gen(a)))).value)
        once_ix, ndet = REGISTRY["nondet"].ix, mk_ndet_e()
        for p in _corpus(cfg, "nondet"):
            ck.check(p, "hfold(onceIx, 0) = handleE(ndetE)", "nondet",
                     lambda q: handle_e(ndet, q),
                     lambda q: hfold(once_ix, 0, fmap(q, lambda a: Leveled(0, (a,)))).value)
    return _timed("hybrid-fold", body)


def _nat_f(a):
    return (3 * a + 1) % 5 if isinstance(a, int) else a


def _nat_g(a):
    return a % 2 if isinstance(a, int) else a


def naturality_suite(cfg: GenConfig) -> LawReport:
    def body(ck: _Checker):
        seen = set()
        endos = []
        for effect in REGISTRY.values():
            endo = effect.algebra.endo
            if id(endo) not in seen:
                seen.add(id(endo))
                endos.append((effect, endo))
        endos.append((None, SYNTAX_ENDO))
        for effect, endo in endos:
            sig = _sig_name(effect) if effect else "nondet"
            mp = endo.carrier.fmap
            label = endo.carrier.name
            for p in _corpus(cfg, sig):
                ck.check(p, "map id = id", label,
                         lambda q: hcata(endo, q), lambda q: mp(lambda x: x, hcata(endo, q)))
                ck.check(p, "map (g . f) = map g . map f", label,
                         lambda q: mp(lambda x: _nat_g(_nat_f(x)), hcata(endo, q)),
                         lambda q: mp(_nat_g, mp(_nat_f, hcata(endo, q))))
                ck.check(p, "map f . hcata = hcata . fmap f", label,
                         lambda q: mp(_nat_f, hcata(endo, q)), lambda q: hcata(endo, fmap(q, _nat_f)))
                ck.check(p, "carrier membership", label,
                         lambda q: True, lambda q: endo.carrier.member(hcata(endo, q)))
                if endo is SYNTAX_ENDO:
                    ck.check(p, "hcata(constructors) = id", label, lambda q: q, lambda q: hcata(endo, q))
                else:
                    ck.check(p, "handleE = hcata", label,
                             lambda q: hcata(endo, q), lambda q: handle_e(endo, q))
    return _timed("naturality", body)


_RUNNERS = {
    "monad": monad_suite,
    "preservation": preservation_suite,
    "fusion": fusion_suite,
    "hybrid-fold": hybrid_fold_suite,
    "oracle-equivalence": oracle_suite,
    "naturality": naturality_suite,
}


def run_law_suite(name: str, cfg: GenConfig | None = None) -> LawReport:
    if name not in _RUNNERS:
        raise ValueError(f"unknown suite {name!r}; known: {', '.join(SUITES)}")
    return _RUNNERS[name](cfg or GenConfig())
