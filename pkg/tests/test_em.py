import pytest
from hypothesis import given

from scoped_effects.effects import NONDET, fail, mk_ndet_e, once, once_pair, or_
from scoped_effects.em import EMAlg, handle_em, mk_once_alg_em
from scoped_effects.errors import UnhandledOperation
from scoped_effects.functorial import handle_e
from scoped_effects.prog import Call, Enter, OpNode, Return, ScopeNode, ret
from strategies import programs

ALG = mk_once_alg_em()
single = lambda a: (a,)


def test_call_clauses():
    assert ALG.call_em(OpNode("Fail", None, ())) == ()
    assert ALG.call_em(OpNode("Or", None, ((1,), (2, 3)))) == (1, 2, 3)


def test_enter_clause_runs_body_then_continuation():
    assert ALG.enter_em(ScopeNode("Once", None, (fail(),))) == ()
    body = or_(ret((4,)), ret((5, 6)))
    assert ALG.enter_em(ScopeNode("Once", None, (body,))) == (4,)


def test_handle_em_examples():
    assert handle_em(ALG, single, ret(3)) == (3,)
    assert handle_em(ALG, single, once_pair()) == (1, 2)
    assert handle_em(ALG, single, once(fail())) == ()


def test_scope_clause_sees_unhandled_body():
    seen = []

    def enter(node):
        seen.append(node.bodies[0])
        return 0

    alg = EMAlg(lambda node: 0, enter)
    handle_em(alg, lambda a: a, once(or_(ret(1), ret(2))))
    (body,) = seen
    # continuations are already handled, the body's own operations are not
    assert body == or_(ret(1), ret(2))


def test_unhandled():
    with pytest.raises(UnhandledOperation):
        handle_em(ALG, single, Call(OpNode("Throw", None, ())))
    with pytest.raises(UnhandledOperation):
        handle_em(ALG, single, Enter(ScopeNode("Catch", None, (Return(ret(1)), Return(ret(1))))))


@given(programs(NONDET, 5))
def test_agrees_with_functorial(p):
    assert handle_em(ALG, single, p) == handle_e(mk_ndet_e(), p)
