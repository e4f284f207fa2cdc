"""Interpretation-preserving translations between the three kinds of algebra."""
from __future__ import annotations

from .em import EMAlg
from .functorial import BaseAlg, CarrierF, EndoAlg, FunctorialAlgebra, hcata
from .indexed import IxAlg, Leveled, hfold
from .prog import Call, Enter, Prog, Return, fmap

SYNTAX = CarrierF("Prog", lambda f, p: fmap(p, f), lambda v: isinstance(v, Prog))

# The constructors of Prog as an endofunctor algebra; hcata with it is the identity.
SYNTAX_ENDO = EndoAlg(SYNTAX, Return, Call, Enter)


def em_to_functorial(alg: EMAlg) -> FunctorialAlgebra:
    """Leave scope bodies as syntax and hand them to the EM scope clause."""
    return FunctorialAlgebra(SYNTAX_ENDO, BaseAlg(alg.call_em, alg.enter_em), alg.base_domain)


def functorial_to_em(alg: FunctorialAlgebra) -> EMAlg:
    endo = alg.endo

    def enter_em(node):
        return alg.base.enter_b(node.map(lambda body: hcata(endo, body)))

    return EMAlg(alg.base.call_b, enter_em, alg.base_domain)


def functorial_to_indexed(alg: FunctorialAlgebra) -> IxAlg:
    """Level ``i`` carries the endofunctor iterated ``i`` times on the base object.

    Level 0 uses the base algebra, every deeper level the endofunctor algebra.
    """
    endo, base = alg.endo, alg.base

    def action(n, node):
        raw = node.map(lambda v: v.value)
        return Leveled(n, base.call_b(raw) if n == 0 else endo.call_e(raw))

    def demote(n, node):
        raw = node.map(lambda v: v.value)
        return Leveled(n, base.enter_b(raw) if n == 0 else endo.enter_e(raw))

    def promote(n, v):
        return Leveled(n + 1, endo.return_e(v.value))

    return IxAlg(action, demote, promote)


def indexed_to_em(alg: IxAlg) -> EMAlg:
    def call_em(node):
        return alg.action(0, node.map(lambda x: Leveled(0, x))).value

    def enter_em(node):
        def level_one(body):
            return hfold(alg, 1, fmap(body, lambda x: alg.promote(0, Leveled(0, x))))

        return alg.demote(0, node.map(level_one)).value

    return EMAlg(call_em, enter_em)
