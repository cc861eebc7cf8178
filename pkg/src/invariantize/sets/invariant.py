"""Engine instances over point removal and candidate expulsion lattices.

Both instances live on the cofinite subset lattice (elements are removed-id
sets, codim = how many ids are removed) with symmetry maps induced by the
structure's automorphisms.  The guarded properties quantify one element per
slot, so a failing tuple pins each slot to a single id; that makes the
predicates monotone and multilinear, which is what the engine needs.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from ..engine import DEFAULT_ORBIT_CAP, EngineTrace, engine_run
from ..errors import InvariantViolation, PreconditionViolated
from ..lattice import CofiniteLattice
from ..numerics import iterate_bound
from ..predicates import Predicate
from ..graphs.automorphisms import DEFAULT_NODE_CAP, AutomorphismGroup
from .points import PointSet, isometry_group, on_common_sphere
from .teams import (
    DEFAULT_TEAM_SIZE,
    Relation,
    efficient_five,
    relation_automorphisms,
)

DEFAULT_SPHERE_ARITY = 4


def _assignable(items: Sequence[int], kept_sets: Sequence[frozenset[int]]) -> bool:
    """Can the items fill the slots injectively, item in the slot's kept set?"""
    k = len(items)
    masks = {0}
    for kept in kept_sets:
        masks = {
            mask | (1 << j)
            for mask in masks
            for j in range(k)
            if not mask & (1 << j) and items[j] in kept
        }
        if not masks:
            return False
    return True


def _one_per_slot_predicate(
    name: str,
    ground: frozenset[int],
    k: int,
    bad_subset,
) -> Predicate:
    """No k distinct ids, one from each slot's kept set, form a bad subset."""
    cache: dict[tuple[int, ...], bool] = {}

    def bad(subset: tuple[int, ...]) -> bool:
        if subset not in cache:
            cache[subset] = bad_subset(subset)
        return cache[subset]

    def fn(*removed_sets: frozenset[int]) -> bool:
        kepts = [ground - removed for removed in removed_sets]
        union = sorted(frozenset().union(*kepts))
        return not any(
            bad(subset) and _assignable(subset, kepts)
            for subset in combinations(union, k)
        )

    return Predicate(name=name, arity=k, fn=fn)


def sphere_predicate(
    ps: PointSet, k: int = DEFAULT_SPHERE_ARITY, allow_planes: bool = False
) -> Predicate:
    def bad_subset(subset: tuple[int, ...]) -> bool:
        return on_common_sphere([ps[i] for i in subset], allow_planes)

    return _one_per_slot_predicate(f"sphere-free-{k}", ps.ids, k, bad_subset)


def team_predicate(
    rel: Relation, k: int = DEFAULT_TEAM_SIZE, self_respect: bool = True
) -> Predicate:
    def bad_subset(subset: tuple[int, ...]) -> bool:
        return not efficient_five(rel, subset, self_respect)

    return _one_per_slot_predicate(f"efficient-{k}", rel.candidates, k, bad_subset)


def _point_orbits(ground: frozenset[int], maps: Sequence[dict[int, int]]):
    orbits = []
    seen: set[int] = set()
    for start in sorted(ground):
        if start in seen:
            continue
        orbit = {start}
        frontier = [start]
        while frontier:
            x = frontier.pop()
            for m in maps:
                y = m[x]
                if y not in orbit:
                    orbit.add(y)
                    frontier.append(y)
        seen |= orbit
        orbits.append(frozenset(orbit))
    return orbits


@dataclass(frozen=True)
class SetRunReport:
    """Re-verified clauses for one removal-invariantization run."""

    trace: EngineTrace
    arity: int
    group_order: int
    removed_n: frozenset[int]
    removed_h: frozenset[int]
    invariant: bool
    property_ok: bool
    orbit_union: bool
    bound_ok: bool
    kept_size: int

    @property
    def ok(self) -> bool:
        return self.invariant and self.property_ok and self.orbit_union and self.bound_ok

    def clauses(self) -> list[tuple[str, bool]]:
        return [
            ("invariant", self.invariant),
            ("property", self.property_ok),
            ("orbit-union", self.orbit_union),
            ("bound", self.bound_ok),
        ]


def _run_on_removal_lattice(
    ground: frozenset[int],
    seed: frozenset[int],
    aut: AutomorphismGroup,
    k: int,
    subset_ok,
    orbit_cap: int,
) -> tuple[frozenset[int], SetRunReport]:
    """Shared engine wrapper: run, then re-verify every clause from scratch."""
    if not seed <= ground:
        raise PreconditionViolated("removed ids outside the ground set")
    for subset in combinations(sorted(ground - seed), k):
        if not subset_ok(subset):
            raise PreconditionViolated(
                "the seed removal does not establish the property",
                witness=subset,
            )
    maps = aut.as_mappings()
    lattice = CofiniteLattice(ground, item_maps=maps)
    result, trace = engine_run(lattice, seed, rounds=k, cap=orbit_cap)

    invariant = all(frozenset(m[x] for x in result) == result for m in maps)
    property_ok = all(
        subset_ok(subset) for subset in combinations(sorted(ground - result), k)
    )
    orbit_union = all(
        not (orbit & result) or orbit <= result
        for orbit in _point_orbits(ground, maps)
    )
    bound_ok = len(result) <= iterate_bound(len(seed), k - 1)
    report = SetRunReport(
        trace=trace,
        arity=k,
        group_order=aut.order,
        removed_n=seed,
        removed_h=result,
        invariant=invariant,
        property_ok=property_ok,
        orbit_union=orbit_union,
        bound_ok=bound_ok,
        kept_size=len(ground) - len(result),
    )
    if not report.ok:
        raise InvariantViolation("removal run re-verification failed")
    return result, report


def sphere_invariant_run(
    ps: PointSet,
    remove_n: Iterable[int],
    k: int = DEFAULT_SPHERE_ARITY,
    *,
    allow_planes: bool = False,
    aut_cap: int = DEFAULT_NODE_CAP,
    orbit_cap: int = DEFAULT_ORBIT_CAP,
) -> tuple[frozenset[int], SetRunReport]:
    """An isometry-invariant removal after which no k points share a sphere.

    Precondition: removing ``remove_n`` already leaves no k points on a
    common sphere.  The result is invariant under every distance-preserving
    permutation, keeps the property, and removes at most
    ``iterate_bound(|remove_n|, k - 1)`` points; all clauses re-verified.
    """
    if k < 1:
        raise ValueError("sphere arity must be positive")

    def subset_ok(subset: tuple[int, ...]) -> bool:
        return not on_common_sphere([ps[i] for i in subset], allow_planes)

    return _run_on_removal_lattice(
        ps.ids, frozenset(remove_n), isometry_group(ps, aut_cap), k, subset_ok, orbit_cap
    )


def team_invariant_run(
    rel: Relation,
    expel_n: Iterable[int],
    k: int = DEFAULT_TEAM_SIZE,
    *,
    self_respect: bool = True,
    aut_cap: int = DEFAULT_NODE_CAP,
    orbit_cap: int = DEFAULT_ORBIT_CAP,
) -> tuple[frozenset[int], SetRunReport]:
    """A symmetry-invariant expulsion keeping the remaining team efficient.

    Precondition: expelling ``expel_n`` leaves a team where every k-subset
    has a majority-respected member.  The expelled result is invariant under
    all relation automorphisms, keeps the team efficient, and grows at most
    to ``iterate_bound(|expel_n|, k - 1)``; in particular the remaining team
    is nonempty whenever there are more candidates than that bound.
    """
    if k < 1:
        raise ValueError("team size must be positive")

    def subset_ok(subset: tuple[int, ...]) -> bool:
        return efficient_five(rel, subset, self_respect)

    return _run_on_removal_lattice(
        rel.candidates,
        frozenset(expel_n),
        relation_automorphisms(rel, aut_cap),
        k,
        subset_ok,
        orbit_cap,
    )
