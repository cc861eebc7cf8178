"""Respect relations between candidates and the efficient-team property."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from pathlib import Path
from typing import Iterable

from ..errors import ParseError
from ..graphs.automorphisms import (
    DEFAULT_NODE_CAP,
    AutomorphismGroup,
    automorphism_group,
)
from ..graphs.model import Graph

DEFAULT_TEAM_SIZE = 5


@dataclass(frozen=True)
class Relation:
    """respects[y][x] means candidate y respects candidate x.

    No symmetry, transitivity or reflexivity is assumed.
    """

    respects: tuple[tuple[bool, ...], ...]

    def __post_init__(self):
        n = len(self.respects)
        if any(len(row) != n for row in self.respects):
            raise ValueError("respects matrix must be square")

    @classmethod
    def of(cls, rows: Iterable[Iterable[int]]) -> "Relation":
        return cls(tuple(tuple(bool(x) for x in row) for row in rows))

    @property
    def n(self) -> int:
        return len(self.respects)

    @property
    def candidates(self) -> frozenset[int]:
        return frozenset(range(self.n))


def load_relation(source: str | Path) -> Relation:
    """Parse 'n, then n rows of n zeros and ones'."""
    text = Path(source).read_text() if isinstance(source, Path) else str(source)
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ParseError("empty relation file")
    try:
        n = int(lines[0].strip())
        rows = [[int(tok) for tok in ln.split()] for ln in lines[1:]]
    except ValueError as exc:
        raise ParseError(f"bad relation: {exc}") from exc
    if len(rows) != n:
        raise ParseError(f"expected {n} relation rows, found {len(rows)}")
    for i, row in enumerate(rows):
        if len(row) != n or any(x not in (0, 1) for x in row):
            raise ParseError(f"row {i} is not {n} zeros and ones")
    return Relation.of(rows)


def respect_votes(
    rel: Relation, subset: Iterable[int], x: int, self_respect: bool = True
) -> int:
    """How many members of the subset respect x; x's own vote is optional."""
    return sum(
        1
        for y in subset
        if rel.respects[y][x] and (self_respect or y != x)
    )


def efficient_five(
    rel: Relation,
    subset: Iterable[int],
    self_respect: bool = True,
) -> bool:
    """Some member is respected by a majority of the k-subset."""
    group = tuple(subset)
    threshold = len(group) // 2 + 1
    return any(
        respect_votes(rel, group, x, self_respect) >= threshold for x in group
    )


def efficient_team_check(
    rel: Relation,
    team: Iterable[int],
    k: int = DEFAULT_TEAM_SIZE,
    self_respect: bool = True,
) -> bool:
    """Every k-subset of the team contains a majority-respected member.

    Vacuously true for teams smaller than k.
    """
    members = sorted(set(team))
    if any(not 0 <= x < rel.n for x in members):
        raise ValueError("team members must be candidate ids")
    return all(
        efficient_five(rel, subset, self_respect)
        for subset in combinations(members, k)
    )


def respect_graph(rel: Relation) -> Graph:
    edges = [
        (len(row) * i + j, i, j)
        for i, row in enumerate(rel.respects)
        for j, flag in enumerate(row)
        if flag
    ]
    return Graph.build(range(rel.n), edges, directed=True)


def relation_automorphisms(
    rel: Relation, cap: int = DEFAULT_NODE_CAP
) -> AutomorphismGroup:
    """Permutations of candidates preserving the respects digraph."""
    return automorphism_group(respect_graph(rel), cap)
