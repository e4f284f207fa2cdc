"""Syntax and semantics of scoped effects.

Programs (:mod:`.prog`) are interpreted by functorial algebras
(:mod:`.functorial`), Eilenberg-Moore algebras (:mod:`.em`) or indexed
algebras (:mod:`.indexed`); :mod:`.translate` converts between the three
without changing the interpretation.
"""
from .em import EMAlg, handle_em, mk_once_alg_em
from .errors import ConfigError, LevelError, SignatureError, UnhandledOperation
from .functorial import BaseAlg, CarrierF, EndoAlg, FunctorialAlgebra, handle, handle_e, hcata
from .indexed import IxAlg, Leveled, handle_ix, hfold, mk_once_ix
from .prog import (Call, Enter, OpNode, OpSpec, Prog, Return, ScopeNode, ScopeSpec, Signature,
                   bind, equal, fmap, op, ret, sc)
from .translate import em_to_functorial, functorial_to_em, functorial_to_indexed, indexed_to_em
from .values import NOTHING, Just, StateFn, Strat

__all__ = [
    "BaseAlg", "Call", "CarrierF", "ConfigError", "EMAlg", "EndoAlg", "Enter", "FunctorialAlgebra",
    "IxAlg", "Just", "LevelError", "Leveled", "NOTHING", "OpNode", "OpSpec", "Prog", "Return",
    "ScopeNode", "ScopeSpec", "Signature", "SignatureError", "StateFn", "Strat", "UnhandledOperation",
    "bind", "em_to_functorial", "equal", "fmap", "functorial_to_em", "functorial_to_indexed",
    "handle", "handle_e", "handle_em", "handle_ix", "hcata", "hfold", "indexed_to_em",
    "mk_once_alg_em", "mk_once_ix", "op", "ret", "sc",
]
