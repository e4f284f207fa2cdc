from hypothesis import given, strategies as st

from scoped_effects.effects import (EXCEPTIONS, NONDET, REGISTRY, STRATEGY, catch42, mk_exc_e, mk_ndet_e,
                                    mk_once_alg_em, mk_state_e, once_pair, or_, once, state_sig)
from scoped_effects.em import handle_em
from scoped_effects.functorial import full, handle, hcata
from scoped_effects.indexed import handle_ix, mk_once_ix
from scoped_effects.prog import Call, OpNode, ScopeNode, ret
from scoped_effects.translate import (SYNTAX_ENDO, em_to_functorial, functorial_to_em, functorial_to_indexed,
                                      indexed_to_em)
from scoped_effects.values import Just
from strategies import SIGS, any_program, programs

single = lambda a: (a,)


def test_syntax_fold_is_identity_example():
    p = once_pair()
    assert hcata(SYNTAX_ENDO, p) == p


@given(any_program(5))
def test_syntax_fold_is_identity(p):
    assert hcata(SYNTAX_ENDO, p) == p


def test_em_to_functorial_example():
    alg = em_to_functorial(mk_once_alg_em())
    assert handle(alg, single, once_pair()) == (1, 2)
    assert alg.endo is SYNTAX_ENDO


def test_functorial_to_em_example():
    em = functorial_to_em(full(mk_exc_e()))
    assert handle_em(em, Just, catch42()) == Just(43)
    assert em.enter_em(ScopeNode("Catch", None, (Call(OpNode("Throw", None, ())), ret(Just(5))))) == Just(5)


def test_functorial_to_indexed_clauses():
    ix = functorial_to_indexed(full(mk_ndet_e()))
    assert ix.promote(0, ix.action(0, OpNode("Fail", None, ()))).value == ((),)
    from scoped_effects.indexed import Leveled
    node = ScopeNode("Once", None, (Leveled(1, ((1, 2), (3,))),))
    assert ix.demote(0, node) == Leveled(0, (1, 2))


def test_functorial_to_indexed_matches_hand_written():
    ix, ref = functorial_to_indexed(full(mk_ndet_e())), mk_once_ix()
    for p in (once_pair(), once(or_(once(ret(1)), ret(2))), or_(ret(0), once(ret(4)))):
        assert handle_ix(ix, single, p) == handle_ix(ref, single, p)


def test_indexed_to_em_example():
    em = indexed_to_em(mk_once_ix())
    assert handle_em(em, single, once_pair()) == (1, 2)


@given(programs(NONDET, 5))
def test_translated_indexed_agrees_with_hand_written(p):
    ix, ref = functorial_to_indexed(full(mk_ndet_e())), mk_once_ix()
    assert handle_ix(ix, single, p) == handle_ix(ref, single, p)


@given(st.sampled_from(sorted(REGISTRY)).flatmap(
    lambda name: st.tuples(st.just(name), programs(REGISTRY[name].signature, 4,
                                                   leaf=st.integers(0, 3)))))
def test_every_translation_preserves_interpretation(case):
    name, p = case
    eff = REGISTRY[name]
    alg, gen = eff.algebra, eff.gen
    expected = handle(alg, gen, p)
    assert handle_em(functorial_to_em(alg), gen, p) == expected
    assert handle_ix(functorial_to_indexed(alg), gen, p) == expected
    assert handle_em(indexed_to_em(functorial_to_indexed(alg)), gen, p) == expected
    assert handle(em_to_functorial(functorial_to_em(alg)), gen, p) == expected


@given(programs(state_sig(3), 4))
def test_translations_on_small_state(p):
    alg = full(mk_state_e(3))
    gen = alg.endo.return_e
    expected = handle(alg, gen, p)
    assert handle_em(indexed_to_em(functorial_to_indexed(alg)), gen, p) == expected
