"""Symmetry-invariant edge-removal constructions on finite graphs.

The lattice is the cofinite-edge lattice of a host graph, with one map per
automorphism generator (plus parallel-class swaps) acting on removed sets.
``forbid_invariant`` runs the engine against a family of forbidden subgraphs
and re-verifies five contract clauses from scratch; ``planarize_invariant``
and ``local_embed_invariant`` are layered applications of it.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import chain, combinations
from typing import Iterable, Sequence

from ..engine import DEFAULT_ORBIT_CAP, EngineTrace, engine_run, orbit_closure
from ..errors import InvariantViolation, ParseError, PreconditionViolated
from ..lattice import CofiniteLattice
from ..numerics import iterate_bound
from ..predicates import Predicate
from .automorphisms import (
    DEFAULT_NODE_CAP,
    AutomorphismGroup,
    automorphism_group,
    edge_orbits,
    symmetry_edge_maps,
)
from .embed import embed_constrained, embeds_into
from .model import Graph, graph_from_json
from .planarity import kuratowski_extract, planarity_test

DEFAULT_SIZE_CAP = 12


@dataclass(frozen=True)
class ForbiddenFamily:
    """A finite family of forbidden pattern graphs.

    Each member's edges are taken in the member's own edge-list order; the
    family arity is the largest member edge count, and members with fewer
    edges constrain only their first few argument slots.
    """

    members: tuple[Graph, ...]

    def __post_init__(self) -> None:
        if not self.members:
            raise ValueError("forbidden family must be nonempty")
        for i, m in enumerate(self.members):
            if not m.edges:
                raise ValueError(f"forbidden member {i} has no edges")

    @property
    def arity(self) -> int:
        return max(len(m.edges) for m in self.members)

    @classmethod
    def from_json(cls, text: str) -> "ForbiddenFamily":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"bad forbidden family JSON: {exc}") from exc
        if not isinstance(data, list):
            raise ParseError("forbidden family must be a JSON array of graphs")
        return cls(tuple(graph_from_json(obj) for obj in data))


def _member_embeds(member: Graph, host: Graph, slots: Sequence[frozenset[int]]) -> bool:
    """Whether ``member`` embeds into ``host`` with edge j kept by slot j."""
    allowed = [slots[j] for j in range(len(member.edges))]
    return embed_constrained(member, host, allowed) is not None


def family_predicate(host: Graph, family: ForbiddenFamily) -> Predicate:
    """The engine predicate: no member embeds with edge j inside kept(A_j).

    Arguments are removed-edge sets; shrinking a kept set can only destroy
    embeddings, and a single pattern edge lands in one argument's kept set,
    which is what makes the predicate monotone and join-compatible.
    """
    t = family.arity
    ground = frozenset(host.edge_ids)

    def fn(*removed_sets: frozenset[int]) -> bool:
        slots = [ground - r for r in removed_sets]
        return not any(_member_embeds(m, host, slots) for m in family.members)

    return Predicate(name="forbidden-family-free", arity=t, fn=fn)


@dataclass(frozen=True)
class ForbidReport:
    """Re-verified contract clauses for one forbid_invariant run."""

    trace: EngineTrace
    arity: int
    group_order: int
    removed_h: frozenset[int]
    removed_n: frozenset[int]
    invariant: bool
    family_free: bool
    bound_ok: bool
    in_orbit_union: bool
    meets_seed: bool

    @property
    def ok(self) -> bool:
        return (
            self.invariant
            and self.family_free
            and self.bound_ok
            and self.in_orbit_union
            and self.meets_seed
        )

    def clauses(self) -> dict[str, bool]:
        return {
            "invariant": self.invariant,
            "family_free": self.family_free,
            "bound": self.bound_ok,
            "orbit_union": self.in_orbit_union,
            "meets_seed": self.meets_seed,
        }


def _edge_lattice(
    g: Graph, aut: AutomorphismGroup
) -> tuple[CofiniteLattice, list[dict[int, int]]]:
    maps = symmetry_edge_maps(g, aut)
    return CofiniteLattice(frozenset(g.edge_ids), tuple(maps)), maps


def forbid_invariant(
    g: Graph,
    removed_n: Iterable[int],
    family: ForbiddenFamily,
    *,
    orbit_cap: int = DEFAULT_ORBIT_CAP,
    aut_cap: int = DEFAULT_NODE_CAP,
) -> tuple[frozenset[int], ForbidReport]:
    """An automorphism-invariant removed set whose complement avoids a family.

    The seed removed set must already make the graph family-free.  The result
    satisfies, and the report re-verifies from scratch: invariance under every
    generator, family-freeness of the complement, the iterated quadratic
    bound on its size, containment in the union of automorphic images of the
    seed, and nonempty intersection with the seed unless empty.
    """
    seed = frozenset(removed_n)
    unknown = seed - set(g.edge_ids)
    if unknown:
        raise PreconditionViolated(
            f"removed set names missing edges {sorted(unknown)}", witness=unknown
        )
    predicate = family_predicate(g, family)
    t = family.arity
    if not predicate(*([seed] * t)):
        kept = frozenset(g.edge_ids) - seed
        culprit = next(
            e
            for m in family.members
            if (e := embed_constrained(m, g, [kept] * len(m.edges))) is not None
        )
        raise PreconditionViolated(
            "graph minus the seed removed set still contains a forbidden member",
            witness=culprit,
        )
    aut = automorphism_group(g, cap=aut_cap)
    lattice, maps = _edge_lattice(g, aut)
    result, trace = engine_run(lattice, seed, rounds=t, cap=orbit_cap)

    invariant = all({m[e] for e in result} == result for m in maps)
    remainder = g.delete_edges(result)
    family_free = not any(embeds_into(m, remainder) for m in family.members)
    bound_ok = len(result) <= iterate_bound(len(seed), t - 1)
    orbit_union = frozenset().union(
        *(elt for elt in orbit_closure(lattice, seed, cap=orbit_cap))
    )
    report = ForbidReport(
        trace=trace,
        arity=t,
        group_order=aut.order,
        removed_h=result,
        removed_n=seed,
        invariant=invariant,
        family_free=family_free,
        bound_ok=bound_ok,
        in_orbit_union=result <= orbit_union,
        meets_seed=bool(result & seed) or not result,
    )
    if not report.ok:
        raise InvariantViolation(f"contract re-verification failed: {report.clauses()}")
    return result, report


def planarize_invariant(
    g: Graph,
    removed_n: Iterable[int],
    *,
    orbit_cap: int = DEFAULT_ORBIT_CAP,
    aut_cap: int = DEFAULT_NODE_CAP,
    reports: list[ForbidReport] | None = None,
) -> frozenset[int]:
    """An automorphism-invariant removed set whose deletion leaves the graph planar.

    Requires that deleting the seed set already planarizes the graph.  Works
    in rounds: extract one edge-minimal nonplanar subgraph, make the graph
    free of it by an invariant layer, delete the layer everywhere, repeat.
    Every layer meets the shrinking seed set, so there are at most |seed|
    rounds.  Layers are invariant under automorphisms of the current graph,
    which include all original automorphisms restricted to it, so the union
    is invariant for the original graph.
    """
    seed = frozenset(removed_n)
    if not planarity_test(g.delete_edges(seed)):
        raise PreconditionViolated(
            "graph minus the seed removed set is still nonplanar", witness=seed
        )
    accumulated: set[int] = set()
    current = g
    current_seed = set(seed)
    while not planarity_test(current):
        pattern = kuratowski_extract(current)
        layer, report = forbid_invariant(
            current,
            frozenset(current_seed),
            ForbiddenFamily((pattern,)),
            orbit_cap=orbit_cap,
            aut_cap=aut_cap,
        )
        if reports is not None:
            reports.append(report)
        if not layer:
            raise InvariantViolation("nonplanar round produced an empty layer")
        accumulated |= layer
        current = current.delete_edges(layer)
        current_seed -= layer
    if not planarity_test(g.delete_edges(accumulated)):
        raise InvariantViolation("accumulated removal did not planarize the graph")
    return frozenset(accumulated)


def _minimal_blockers(g: Graph, target: Graph) -> list[Graph]:
    """Minimal edge subsets of g whose subgraph does not embed into target.

    Minimality is under edge deletion; embeddability is monotone there, so
    ascending-size enumeration that skips supersets of known blockers finds
    exactly the minimal failing subsets.
    """
    ids = sorted(g.edge_ids)
    cache: dict[frozenset[int], bool] = {}

    def embeds(subset: frozenset[int]) -> bool:
        hit = cache.get(subset)
        if hit is None:
            hit = embeds_into(g.edge_subgraph(subset), target)
            cache[subset] = hit
        return hit

    blockers: list[frozenset[int]] = []

    def dominated(subset: frozenset[int]) -> bool:
        return any(b <= subset for b in blockers)

    for size in range(1, len(ids) + 1):
        for combo in combinations(ids, size):
            subset = frozenset(combo)
            if dominated(subset) or embeds(subset):
                continue
            blockers.append(subset)
    return [g.edge_subgraph(b) for b in sorted(blockers, key=lambda b: (len(b), sorted(b)))]


def local_embed_invariant(
    g: Graph,
    removed_m: Iterable[int],
    *,
    size_cap: int = DEFAULT_SIZE_CAP,
    orbit_cap: int = DEFAULT_ORBIT_CAP,
    aut_cap: int = DEFAULT_NODE_CAP,
    reports: list[ForbidReport] | None = None,
) -> frozenset[int]:
    """An invariant removed set whose complement wholly embeds piecewise.

    The target is the graph minus the seed set.  Every edge subset of the
    graph minus the result embeds into the target (for finite graphs this is
    exactly local embeddability), re-verified exhaustively.  Exponential in
    the edge count, hence the size cap.
    """
    seed = frozenset(removed_m)
    if len(g.edges) > size_cap:
        raise PreconditionViolated(
            f"{len(g.edges)} edges exceed the size cap {size_cap}"
        )
    unknown = seed - set(g.edge_ids)
    if unknown:
        raise PreconditionViolated(
            f"removed set names missing edges {sorted(unknown)}", witness=unknown
        )
    target = g.delete_edges(seed)
    blockers = _minimal_blockers(g, target)
    if not blockers:
        return frozenset()
    result, report = forbid_invariant(
        g,
        seed,
        ForbiddenFamily(tuple(blockers)),
        orbit_cap=orbit_cap,
        aut_cap=aut_cap,
    )
    if reports is not None:
        reports.append(report)
    remainder = frozenset(g.edge_ids) - result
    for subset in chain.from_iterable(
        combinations(sorted(remainder), k) for k in range(len(remainder) + 1)
    ):
        if not embeds_into(g.edge_subgraph(frozenset(subset)), target):
            raise InvariantViolation(
                f"complement subset {sorted(subset)} does not embed into the target"
            )
    return result


def invariant_under_group(g: Graph, removed: frozenset[int], aut: AutomorphismGroup) -> bool:
    """Whether a removed set is a union of edge orbits of the given group."""
    orbits = edge_orbits(g, aut)
    return all(orbit <= removed or not (orbit & removed) for orbit in orbits)
