import pytest

from scoped_effects import oracles
from scoped_effects.effects import catch, catch42, fail, get, local, once, once_pair, or_, put, throw
from scoped_effects.errors import UnhandledOperation
from scoped_effects.prog import Call, OpNode, ret, seq
from scoped_effects.values import NOTHING, Just


def test_exceptions():
    assert oracles.exceptions(catch42()) == Just(43)
    assert oracles.exceptions(catch42(), recover=False) == NOTHING
    assert oracles.exceptions(catch(ret(1), throw())) == Just(1)


def test_nondet():
    assert oracles.nondet(or_(ret(1), fail())) == (1,)
    assert oracles.nondet(once_pair()) == (1, 2)
    assert oracles.nondet(once(fail())) == ()


def test_algebraic_once_counterfactual():
    assert oracles.nondet_algebraic_once(once_pair()) == (1,)
    assert oracles.nondet_algebraic_once(or_(ret(1), ret(2))) == (1, 2)


def test_state():
    assert oracles.state(seq(put(3), get()), 0) == (3, 3)
    assert oracles.state(seq(local(5, put(7)), get()), 2) == (2, 2)


def test_strategy_oracle_depth_bound():
    from scoped_effects.effects import dbs
    from scoped_effects.errors import ConfigError
    with pytest.raises(ConfigError):
        oracles.strategy(dbs(5, ret(1)), max_depth=4)


def test_unexpected_node():
    with pytest.raises(UnhandledOperation):
        oracles.nondet(Call(OpNode("Throw", None, ())))
    with pytest.raises(ValueError):
        oracles.oracle_interpret("nope", ret(1))
