"""Carrier values shared by the shipped algebras.

Lists are represented by tuples throughout so that every value is hashable
and compares structurally.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any


@dataclass(frozen=True)
class Just:
    value: Any


@dataclass(frozen=True)
class Nothing:
    pass


NOTHING = Nothing()


def maybe_map(f, m):
    return Just(f(m.value)) if isinstance(m, Just) else NOTHING


def maybe_join(m):
    return m.value if isinstance(m, Just) else NOTHING


@dataclass(frozen=True)
class StateFn:
    """A state transformer ``s -> (s', x)`` materialized over the state domain ``0..n-1``.

    ``table[s]`` is the pair produced from initial state ``s``.
    """
    table: tuple

    def __call__(self, s: int):
        return self.table[s]

    @property
    def states(self) -> int:
        return len(self.table)


@dataclass(frozen=True)
class Strat:
    """Search results under three strategies at once.

    ``dfs``: outcomes in depth-first order; ``bfs``: outcomes grouped by
    Or-depth; ``dbs[d]``: depth-first outcomes whose Or-depth is at most ``d``.
    """
    dfs: tuple
    bfs: tuple
    dbs: tuple
