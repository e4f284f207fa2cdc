import pytest
from hypothesis import given, strategies as st

from scoped_effects.effects import EXCEPTIONS, NONDET, STRATEGY, catch, or_, once, throw
from scoped_effects.errors import SignatureError
from scoped_effects.prog import (Call, Enter, OpNode, OpSpec, Return, ScopeNode, ScopeSpec, Signature,
                                 bind, const, depth, equal, fmap, op, ret, sc, size, tags)
from strategies import SIGS, any_program, kleisli, programs


def test_ret():
    assert ret(5) == Return(5)
    assert ret(None) == Return(None)


def test_bind_return_is_application():
    assert bind(ret(3), lambda a: ret(a + 1)) == Return(4)
    k = lambda a: or_(ret(a), ret(a * 2))
    assert bind(ret(5), k) == k(5)


def test_bind_call_pushes_into_kids():
    p = Call(OpNode("Or", None, (ret(1), ret(2))))
    assert bind(p, lambda a: ret(a * 10)) == Call(OpNode("Or", None, (ret(10), ret(20))))


def test_bind_enter_stays_outside_scope():
    k = lambda a: or_(ret(a), ret(a + 1))
    p = Enter(ScopeNode("Once", None, (Return(ret(1)),)))
    assert bind(p, k) == Enter(ScopeNode("Once", None, (Return(k(1)),)))
    # (once p) >>= k differs from once (p >>= k)
    assert bind(once(ret(1)), k) != once(bind(ret(1), k))


def test_fmap():
    assert fmap(ret(1), lambda a: a + 1) == ret(2)


@given(any_program())
def test_fmap_identity(p):
    assert fmap(p, lambda a: a) == p


@given(any_program())
def test_fmap_composition(p):
    f, g = (lambda a: a * 3), (lambda a: a - 1)
    assert fmap(fmap(p, f), g) == fmap(p, lambda a: g(f(a)))


@given(any_program())
def test_fmap_is_bind_return(p):
    assert fmap(p, str) == bind(p, lambda a: ret(str(a)))


def test_op_smart_constructor():
    assert op(EXCEPTIONS, "Throw", None, []) == Call(OpNode("Throw", None, ()))
    assert op(NONDET, "Or", None, [ret(1), ret(2)]) == Call(OpNode("Or", None, (ret(1), ret(2))))
    with pytest.raises(SignatureError):
        op(NONDET, "Or", None, [ret(1)])
    with pytest.raises(SignatureError):
        op(NONDET, "Throw", None, [])


def test_sc_wraps_body_leaves():
    assert sc(NONDET, "Once", None, [ret(7)]) == Enter(ScopeNode("Once", None, (Return(Return(7)),)))
    h, r = throw(), ret(42)
    assert catch(h, r) == sc(EXCEPTIONS, "Catch", None, [h, r])
    assert catch(h, r) == Enter(ScopeNode("Catch", None, (fmap(h, ret), fmap(r, ret))))
    p = or_(ret(1), ret(2), STRATEGY)
    assert sc(STRATEGY, "DBS", 3, [p]) == Enter(ScopeNode("DBS", 3, (fmap(p, ret),)))
    with pytest.raises(SignatureError):
        sc(NONDET, "Once", None, [])
    with pytest.raises(SignatureError):
        sc(STRATEGY, "DBS", -1, [p])


def test_equal():
    assert equal(ret(1), ret(1))
    assert not equal(or_(ret(1), ret(2)), or_(ret(2), ret(1)))
    assert not equal(ret(ret(1)), ret(1))
    assert once(ret(1)) != ret(1)


def test_signature_rejects_duplicates():
    with pytest.raises(SignatureError):
        Signature.build("dup", [OpSpec("A", const(0)), OpSpec("A", const(1))])
    with pytest.raises(SignatureError):
        Signature.build("dup", [], [ScopeSpec("S", const(1)), ScopeSpec("S", const(1))])


def test_empty_scoped_signature_is_a_free_monad():
    free = Signature.build("choice", [OpSpec("Or", const(2))])
    p = free.op("Or", None, [ret(1), ret(2)])
    assert bind(p, lambda a: ret(a + 1)) == free.op("Or", None, [ret(2), ret(3)])
    with pytest.raises(SignatureError):
        free.sc("Once", None, [p])


def test_validate_catches_bad_trees():
    bad = Call(OpNode("Or", None, (ret(1),)))
    with pytest.raises(SignatureError):
        NONDET.validate(bad)
    # the bodies of a scope must end in continuation programs
    with pytest.raises(SignatureError):
        NONDET.validate(Enter(ScopeNode("Once", None, (ret(1),))))
    NONDET.validate(once(bad.node.kids[0]))


def test_measures():
    p = bind(once(or_(ret(1), ret(3))), lambda n: or_(ret(n), ret(n + 1)))
    assert depth(ret(1)) == 0
    assert depth(or_(ret(1), ret(2))) == 1
    assert depth(p) == 3
    assert size(or_(ret(1), ret(2))) == 3
    assert tags(p) == {"Once", "Or"}


# -- monad laws ----------------------------------------------------------------

@given(st.sampled_from(sorted(SIGS)).flatmap(lambda n: st.tuples(st.integers(0, 3), kleisli(SIGS[n]))))
def test_left_identity(case):
    a, k = case
    assert equal(bind(ret(a), k), k(a))


@given(any_program(5))
def test_right_identity(p):
    assert equal(bind(p, ret), p)


@given(st.sampled_from(sorted(SIGS)).flatmap(
    lambda n: st.tuples(programs(SIGS[n], 4), kleisli(SIGS[n]), kleisli(SIGS[n]))))
def test_associativity(case):
    p, k, h = case
    assert equal(bind(bind(p, k), h), bind(p, lambda a: bind(k(a), h)))


@given(programs(NONDET), kleisli(NONDET))
def test_algebraic_operations_commute_with_bind(p, k):
    q = or_(p, p)
    assert bind(q, k) == or_(bind(p, k), bind(p, k))


@given(programs(NONDET), kleisli(NONDET))
def test_bind_never_crosses_a_scope_boundary(p, k):
    q = once(p)
    bound = bind(q, k)
    erase = lambda b: fmap(b, lambda _: None)
    assert [erase(b) for b in bound.node.bodies] == [erase(b) for b in q.node.bodies]


@given(st.sampled_from(sorted(SIGS)).flatmap(lambda n: st.tuples(st.just(n), programs(SIGS[n]), kleisli(SIGS[n]))))
def test_bind_preserves_signature_validity(case):
    name, p, k = case
    SIGS[name].validate(bind(p, k))


@given(any_program())
def test_hash_consistent_with_equality(p):
    q = fmap(p, lambda a: a)
    assert p == q and hash(p) == hash(q)
