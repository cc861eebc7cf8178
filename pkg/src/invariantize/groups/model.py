"""Finite groups as validated Cayley tables over element ids 0..n-1.

Subgroups are plain frozensets of element ids; the functions here provide
generation, products, normality, enumeration, quotients and isomorphism
testing at desk scale (orders up to ~128; full enumeration is meant for
orders up to a few dozen).
"""

from __future__ import annotations

from functools import cached_property
from pathlib import Path
from typing import Iterable, Sequence

from ..errors import NotAGroup, ParseError


class FiniteGroup:
    """A group given by its multiplication table; validated on construction.

    ``table[a][b]`` is the id of the product a*b.  The identity and inverse
    table are derived.  Instances are immutable and hashable by table.
    """

    def __init__(self, table: Sequence[Sequence[int]], name: str = "G"):
        rows = tuple(tuple(row) for row in table)
        n = len(rows)
        if n == 0:
            raise NotAGroup("shape", witness=None)
        for a, row in enumerate(rows):
            if len(row) != n or any(not (0 <= x < n) for x in row):
                raise NotAGroup("shape", witness=a)
        identity = None
        for e in range(n):
            if all(rows[e][x] == x and rows[x][e] == x for x in range(n)):
                identity = e
                break
        if identity is None:
            raise NotAGroup("identity", witness=None)
        inverse = [None] * n
        for a in range(n):
            for b in range(n):
                if rows[a][b] == identity and rows[b][a] == identity:
                    inverse[a] = b
                    break
            if inverse[a] is None:
                raise NotAGroup("inverse", witness=a)
        for a in range(n):
            for b in range(n):
                for c in range(n):
                    if rows[rows[a][b]][c] != rows[a][rows[b][c]]:
                        raise NotAGroup("associativity", witness=(a, b, c))
        self.table = rows
        self.order = n
        self.identity = identity
        self.inverse = tuple(inverse)
        self.name = name

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FiniteGroup) and self.table == other.table

    def __hash__(self) -> int:
        return hash(self.table)

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name!r}, order={self.order})"

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.inverse[a]

    def conjugate(self, x: int, a: int) -> int:
        """x a x^-1."""
        return self.mul(self.mul(x, a), self.inv(x))

    def commutator(self, a: int, b: int) -> int:
        """a^-1 b^-1 a b."""
        return self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))

    def power(self, x: int, k: int) -> int:
        result = self.identity
        base = x if k >= 0 else self.inv(x)
        for _ in range(abs(k)):
            result = self.mul(result, base)
        return result

    @cached_property
    def element_orders(self) -> tuple[int, ...]:
        orders = []
        for x in range(self.order):
            y, k = x, 1
            while y != self.identity:
                y = self.mul(y, x)
                k += 1
            orders.append(k)
        return tuple(orders)

    @cached_property
    def elements(self) -> frozenset[int]:
        return frozenset(range(self.order))

    @cached_property
    def trivial(self) -> frozenset[int]:
        return frozenset({self.identity})

    @cached_property
    def is_abelian(self) -> bool:
        return all(
            self.table[a][b] == self.table[b][a]
            for a in range(self.order)
            for b in range(a)
        )


def load_group(source: str | Path, name: str = "G") -> FiniteGroup:
    """Parse 'n, then n rows of n ids' from a file path or literal text."""
    text = Path(source).read_text() if isinstance(source, Path) else str(source)
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ParseError("empty group file")
    try:
        n = int(lines[0].strip())
        rows = [[int(tok) for tok in ln.split()] for ln in lines[1:]]
    except ValueError as exc:
        raise ParseError(f"bad group table: {exc}") from exc
    if len(rows) != n:
        raise ParseError(f"expected {n} table rows, found {len(rows)}")
    for i, row in enumerate(rows):
        if len(row) != n or any(not (0 <= x < n) for x in row):
            raise ParseError(f"row {i} is not {n} ids in range 0..{n - 1}")
    return FiniteGroup(rows, name=name)


def generate(g: FiniteGroup, seed: Iterable[int]) -> frozenset[int]:
    """Subgroup generated by a set of elements."""
    members = {g.identity}
    frontier = [g.identity]
    gens = sorted(set(seed))
    for x in gens:
        if not 0 <= x < g.order:
            raise ValueError(f"element {x} outside the group")
    while frontier:
        x = frontier.pop()
        for s in gens:
            y = g.mul(x, s)
            if y not in members:
                members.add(y)
                frontier.append(y)
    return frozenset(members)


def product_set(g: FiniteGroup, a: Iterable[int], b: Iterable[int]) -> frozenset[int]:
    """{xy : x in a, y in b}; a subgroup whenever a and b are normal."""
    return frozenset(g.mul(x, y) for x in a for y in b)


def intersect(a: Iterable[int], b: Iterable[int]) -> frozenset[int]:
    return frozenset(a) & frozenset(b)


def is_subgroup(g: FiniteGroup, members: Iterable[int]) -> bool:
    m = frozenset(members)
    if g.identity not in m:
        return False
    return all(g.mul(x, y) in m for x in m for y in m)


def is_normal(g: FiniteGroup, members: Iterable[int]) -> bool:
    m = frozenset(members)
    if not is_subgroup(g, m):
        return False
    return all(g.conjugate(x, a) in m for x in range(g.order) for a in m)


def all_subgroups(g: FiniteGroup) -> list[frozenset[int]]:
    """Every subgroup, found by closure-growing; sorted canonically."""
    found = {generate(g, ())}
    frontier = list(found)
    while frontier:
        s = frontier.pop()
        for x in range(g.order):
            if x in s:
                continue
            t = generate(g, s | {x})
            if t not in found:
                found.add(t)
                frontier.append(t)
    return sorted(found, key=lambda s: (len(s), sorted(s)))


def normal_subgroups(g: FiniteGroup) -> list[frozenset[int]]:
    return [s for s in all_subgroups(g) if is_normal(g, s)]


def commutator_subgroup(
    g: FiniteGroup, a: Iterable[int], b: Iterable[int]
) -> frozenset[int]:
    """Subgroup generated by all commutators [x, y], x in a, y in b."""
    return generate(g, {g.commutator(x, y) for x in a for y in b})


def index(g: FiniteGroup, members: Iterable[int]) -> int:
    m = frozenset(members)
    if g.order % len(m):
        raise ValueError("subset size does not divide the group order")
    return g.order // len(m)


def restrict(g: FiniteGroup, members: Iterable[int], name: str = "H") -> FiniteGroup:
    """A subgroup as a standalone group (elements reindexed by sorted id)."""
    member_set = frozenset(members)
    if not is_subgroup(g, member_set):
        raise ValueError("restrict needs a subgroup")
    ids = sorted(member_set)
    pos = {x: i for i, x in enumerate(ids)}
    table = [[pos[g.mul(x, y)] for y in ids] for x in ids]
    return FiniteGroup(table, name=name)


def section_group(
    g: FiniteGroup,
    upper: Iterable[int],
    lower: Iterable[int],
    name: str = "Q",
) -> FiniteGroup:
    """The quotient upper/lower as a group (lower normal inside upper).

    Cosets are indexed by their smallest member id, sorted, so the result is
    deterministic.
    """
    up = frozenset(upper)
    low = frozenset(lower)
    if not low <= up:
        raise ValueError("lower subgroup is not inside the upper one")
    if not is_subgroup(g, up) or not is_subgroup(g, low):
        raise ValueError("section endpoints must be subgroups")
    if not all(g.conjugate(x, a) in low for x in up for a in low):
        raise ValueError("lower subgroup is not normal in the upper one")
    coset_of: dict[int, int] = {}
    reps: list[int] = []
    for x in sorted(up):
        if x in coset_of:
            continue
        rep = len(reps)
        for a in low:
            coset_of[g.mul(x, a)] = rep
        reps.append(x)
    table = [
        [coset_of[g.mul(x, y)] for y in reps]
        for x in reps
    ]
    return FiniteGroup(table, name=name)


def minimal_generators(g: FiniteGroup) -> list[int]:
    """A small generating sequence, grown greedily; deterministic."""
    gens: list[int] = []
    closure = generate(g, ())
    while len(closure) < g.order:
        best = None
        best_size = len(closure)
        for x in range(g.order):
            if x in closure:
                continue
            size = len(generate(g, set(gens) | {x}))
            if size > best_size:
                best, best_size = x, size
        gens.append(best)
        closure = generate(g, gens)
    return gens


def _find_isomorphisms(
    g: FiniteGroup, h: FiniteGroup, limit: int | None
) -> list[tuple[int, ...]]:
    if g.order != h.order:
        return []
    if sorted(g.element_orders) != sorted(h.element_orders):
        return []
    gens = minimal_generators(g)
    if not gens:
        return [(h.identity,)] if g.order == 1 else []
    by_order: dict[int, list[int]] = {}
    for x in range(h.order):
        by_order.setdefault(h.element_orders[x], []).append(x)
    found: list[tuple[int, ...]] = []

    def close(images: list[int]) -> tuple[int, ...] | None:
        """Extend gen images to a full homomorphism, or report conflict."""
        phi = {g.identity: h.identity}
        frontier = [g.identity]
        while frontier:
            x = frontier.pop()
            for gen, img in zip(gens, images):
                y = g.mul(x, gen)
                fy = h.mul(phi[x], img)
                if y in phi:
                    if phi[y] != fy:
                        return None
                else:
                    phi[y] = fy
                    frontier.append(y)
        if len(phi) != g.order or len(set(phi.values())) != g.order:
            return None
        return tuple(phi[x] for x in range(g.order))

    def assign(i: int, images: list[int]) -> bool:
        if i == len(gens):
            perm = close(images)
            if perm is not None:
                found.append(perm)
                if limit is not None and len(found) >= limit:
                    return True
            return False
        for candidate in by_order.get(g.element_orders[gens[i]], []):
            if assign(i + 1, images + [candidate]):
                return True
        return False

    assign(0, [])
    return found


def are_isomorphic(g: FiniteGroup, h: FiniteGroup) -> bool:
    return g.order == h.order and bool(_find_isomorphisms(g, h, limit=1))
