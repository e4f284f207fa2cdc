"""Canonical JSON encoding of programs and carrier values, plus pretty-printing.

Programs encode as nested records::

    {"kind": "return", "value": v}
    {"kind": "call",  "tag": t, "payload": p, "kids": [...]}
    {"kind": "enter", "tag": t, "payload": p, "kids": [...]}

where the kids of an ``enter`` record are the scope bodies, whose own
``return`` leaves hold continuation programs.
"""
from __future__ import annotations

from . import _trampoline as tr
from .prog import Call, Enter, OpNode, Prog, Return, ScopeNode
from .values import NOTHING, Just, Nothing, StateFn, Strat


# -- JSON ---------------------------------------------------------------------

def _encode(v):
    if isinstance(v, Prog):
        match v:
            case Return(x):
                return {"kind": "return", "value": (yield _encode(x))}
            case Call(node) | Enter(node):
                kids = node.kids if isinstance(v, Call) else node.bodies
                out = []
                for k in kids:
                    out.append((yield _encode(k)))
                return {
                    "kind": "call" if isinstance(v, Call) else "enter",
                    "tag": node.tag,
                    "payload": (yield _encode(node.payload)),
                    "kids": out,
                }
    if v is None or isinstance(v, (bool, int, float, str)):
        return v
    if isinstance(v, tuple):
        out = []
        for x in v:
            out.append((yield _encode(x)))
        return out
    if isinstance(v, Just):
        return {"just": (yield _encode(v.value))}
    if isinstance(v, Nothing):
        return {"nothing": None}
    if isinstance(v, StateFn):
        return {"state": (yield _encode(v.table))}
    if isinstance(v, Strat):
        return {"strat": {"dfs": (yield _encode(v.dfs)),
                          "bfs": (yield _encode(v.bfs)),
                          "dbs": (yield _encode(v.dbs))}}
    from .indexed import Leveled
    if isinstance(v, Leveled):
        return {"level": v.level, "value": (yield _encode(v.value))}
    raise TypeError(f"cannot encode {type(v).__name__} value {v!r}")


def _decode(j):
    if j is None or isinstance(j, (bool, int, float, str)):
        return j
    if isinstance(j, list):
        out = []
        for x in j:
            out.append((yield _decode(x)))
        return tuple(out)
    if not isinstance(j, dict):
        raise ValueError(f"cannot decode {j!r}")
    if "kind" in j:
        kind = j["kind"]
        if kind == "return":
            return Return((yield _decode(j["value"])))
        if kind not in ("call", "enter"):
            raise ValueError(f"unknown program kind {kind!r}")
        kids = []
        for k in j["kids"]:
            kid = yield _decode(k)
            if not isinstance(kid, Prog):
                raise ValueError("children of call/enter records must be programs")
            kids.append(kid)
        payload = yield _decode(j.get("payload"))
        if kind == "call":
            return Call(OpNode(j["tag"], payload, tuple(kids)))
        return Enter(ScopeNode(j["tag"], payload, tuple(kids)))
    if "just" in j:
        return Just((yield _decode(j["just"])))
    if "nothing" in j:
        return NOTHING
    if "state" in j:
        return StateFn((yield _decode(j["state"])))
    if "strat" in j:
        s = j["strat"]
        return Strat((yield _decode(s["dfs"])), (yield _decode(s["bfs"])), (yield _decode(s["dbs"])))
    if "level" in j:
        from .indexed import Leveled
        return Leveled(j["level"], (yield _decode(j["value"])))
    raise ValueError(f"cannot decode record with keys {sorted(j)}")


def to_json(v):
    """Encode a program or carrier value as plain JSON data."""
    return tr.run(_encode(v))


def from_json(j):
    return tr.run(_decode(j))


def program_from_json(j, sig=None) -> Prog:
    p = from_json(j)
    if not isinstance(p, Prog):
        raise ValueError("top-level record is not a program")
    if sig is not None:
        sig.validate(p)
    return p


# -- pretty printing ----------------------------------------------------------

def _compound(s: str) -> bool:
    return " " in s and not (s[0] in "[(" and s[-1] in "])")


def _show(v):
    if isinstance(v, Prog):
        match v:
            case Return(x):
                inner = yield _show(x)
                return f"ret ({inner})" if _compound(inner) else f"ret {inner}"
            case Call(node) | Enter(node):
                kids = node.kids if isinstance(v, Call) else node.bodies
                parts = []
                for k in kids:
                    parts.append((yield _show(k)))
                head = node.tag if node.payload is None else f"{node.tag}({(yield _show(node.payload))})"
                open_, close = ("[", "]") if isinstance(v, Call) else ("<", ">")
                return f"{head}{open_}{', '.join(parts)}{close}"
    if v is None:
        return "()"
    if isinstance(v, tuple):
        parts = []
        for x in v:
            parts.append((yield _show(x)))
        return "[" + ",".join(parts) + "]"
    if isinstance(v, Just):
        inner = yield _show(v.value)
        return f"Just ({inner})" if _compound(inner) else f"Just {inner}"
    if isinstance(v, Nothing):
        return "Nothing"
    if isinstance(v, StateFn):
        parts = []
        for s, (s2, x) in enumerate(v.table):
            parts.append(f"{s}->({s2},{(yield _show(x))})")
        return "State{" + ", ".join(parts) + "}"
    if isinstance(v, Strat):
        return (f"Strat(dfs={(yield _show(v.dfs))}, bfs={(yield _show(v.bfs))}, "
                f"dbs={(yield _show(v.dbs))})")
    return str(v)


def show(v) -> str:
    """Human-readable rendering: ``Just 43``, ``[1,2]``, ``Or[ret 1, ret 2]``."""
    return tr.run(_show(v))
