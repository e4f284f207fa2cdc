"""Acceptance gate: one check per criterion, each within its time budget.

Every check appends a PASS/FAIL line that is echoed in the terminal summary.
"""
import time

import pytest

from conftest import ACCEPTANCE_LINES
from scoped_effects import oracles
from scoped_effects.effects import catch42, mk_exc_e, mk_exc_e_abort, mk_ndet_e, once_pair, or_chain
from scoped_effects.em import handle_em, mk_once_alg_em
from scoped_effects.functorial import handle_e
from scoped_effects.generators import GenConfig
from scoped_effects.indexed import handle_ix, mk_once_ix
from scoped_effects.laws import ORACLE_EFFECTS, run_law_suite
from scoped_effects.values import NOTHING, Just

pytestmark = pytest.mark.acceptance

CORPUS = GenConfig(seed=0, max_depth=5, corpus_size=300)


def _record(label, ok, seconds, budget, detail=""):
    within = seconds < budget
    status = "PASS" if ok and within else "FAIL"
    ACCEPTANCE_LINES.append(f"{status}  {label:<34} {seconds:7.3f}s (< {budget}s) {detail}".rstrip())
    print(ACCEPTANCE_LINES[-1])
    assert ok, detail
    assert within, f"{label} took {seconds:.2f}s, budget {budget}s"


def _suite(label, name, budget, cfg=CORPUS, min_cases=0):
    start = time.perf_counter()
    report = run_law_suite(name, cfg)
    seconds = time.perf_counter() - start
    ok = report.passed and report.cases >= min_cases
    _record(label, ok, seconds, budget, f"cases={report.cases} failures={len(report.failures)}")


def test_1_worked_examples():
    start = time.perf_counter()
    results = {
        "catch recovers": handle_e(mk_exc_e(), catch42()) == Just(43),
        "catch aborts": handle_e(mk_exc_e_abort(), catch42()) == NOTHING,
        "once is scoped": handle_e(mk_ndet_e(), once_pair()) == (1, 2),
        "algebraic once": oracles.nondet_algebraic_once(once_pair()) == (1,),
    }
    seconds = time.perf_counter() - start
    bad = [k for k, ok in results.items() if not ok]
    _record("1 worked examples", not bad, seconds, 0.5, ", ".join(bad))


def test_2_monad_laws():
    _suite("2 monad laws", "monad", 5, min_cases=4 * 300 * 3)


def test_3_oracle_equivalence():
    assert {"exceptions", "nondet", "state"} <= set(ORACLE_EFFECTS)
    _suite("3 oracle equivalence", "oracle-equivalence", 30, min_cases=3 * 3 * 300)


def test_4_preservation():
    _suite("4 preservation of interpretation", "preservation", 60)


def test_5_fusion():
    _suite("5 fusion", "fusion", 5, min_cases=200)


def test_6_hybrid_fold():
    _suite("6 hybrid fold", "hybrid-fold", 30)


def test_7_deep_program():
    n = 10_000
    start = time.perf_counter()
    p = or_chain(n)
    expected = tuple(range(n + 1))
    ok = (handle_e(mk_ndet_e(), p) == expected
          and handle_em(mk_once_alg_em(), lambda a: (a,), p) == expected
          and handle_ix(mk_once_ix(), lambda a: (a,), p) == expected)
    _record("7 deep Or-chain (10^4)", ok, time.perf_counter() - start, 2)


def test_8_naturality():
    _suite("8 functor laws and naturality", "naturality", 10)
