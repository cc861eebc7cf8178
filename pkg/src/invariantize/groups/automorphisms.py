"""Automorphism groups of finite groups by generator-image search."""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import CapExceeded
from .model import FiniteGroup, _find_isomorphisms

DEFAULT_ORDER_CAP = 128


@dataclass(frozen=True)
class GroupAutomorphisms:
    """Element-permutation generators of Aut(G) plus the full order."""

    degree: int
    generators: tuple[tuple[int, ...], ...]
    order: int

    def as_mappings(self) -> list[dict[int, int]]:
        return [dict(enumerate(perm)) for perm in self.generators]


def _compose(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(p[q[i]] for i in range(len(q)))


def _closure(perms: set[tuple[int, ...]], identity: tuple[int, ...]) -> set[tuple[int, ...]]:
    closed = {identity} | set(perms)
    frontier = list(closed)
    while frontier:
        p = frontier.pop()
        for q in list(closed):
            for r in (_compose(p, q), _compose(q, p)):
                if r not in closed:
                    closed.add(r)
                    frontier.append(r)
    return closed


def automorphism_group(g: FiniteGroup, cap: int = DEFAULT_ORDER_CAP) -> GroupAutomorphisms:
    """All automorphisms, enumerated; generators reduced greedily.

    Enumeration maps a minimal generating sequence to same-order candidates
    and closes each assignment to a bijective endomorphism.  CapExceeded for
    groups larger than the order cap.
    """
    if g.order > cap:
        raise CapExceeded(f"group order {g.order} exceeds automorphism cap {cap}")
    perms = sorted(_find_isomorphisms(g, g, limit=None))
    identity = tuple(range(g.order))
    generators: list[tuple[int, ...]] = []
    generated = {identity}
    for perm in perms:
        if perm not in generated:
            generators.append(perm)
            generated = _closure(set(generators), identity)
    if len(generated) != len(perms):
        raise AssertionError("generator reduction lost automorphisms")
    return GroupAutomorphisms(
        degree=g.order, generators=tuple(generators), order=len(perms)
    )
