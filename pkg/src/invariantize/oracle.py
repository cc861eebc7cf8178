"""Independent verifiers.

These functions re-derive, by brute force or sampling, the properties the
rest of the package claims by construction: predicate laws, lattice axioms,
minimal invariant solutions, and sublattice membership.  They share no code
with the paths they check beyond the instance interface itself.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Callable, Sequence

from .errors import CapExceeded
from .lattice import Element, LatticeInstance
from .predicates import Predicate

EXHAUSTIVE_ELEMENT_LIMIT = 12
ORBIT_UNION_BUDGET = 1 << 16
DEFAULT_SAMPLES = 500


@dataclass
class LawReport:
    """Outcome of one law check.

    ``counterexample`` is None when the law held everywhere checked;
    otherwise it is a dict with enough data to re-evaluate the violation.
    """

    law: str
    predicate: str
    exhaustive: bool
    checks: int
    counterexample: dict | None = None
    witness: tuple | None = None
    detail: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.counterexample is None

    def to_json(self) -> dict:
        return {
            "law": self.law,
            "predicate": self.predicate,
            "exhaustive": self.exhaustive,
            "checks": self.checks,
            "ok": self.ok,
            "counterexample": self.counterexample,
            "detail": self.detail,
        }


def _eval_cache(predicate: Predicate, lattice: LatticeInstance):
    cache: dict[tuple, bool] = {}

    def ev(args: tuple) -> bool:
        key = tuple(lattice.canon(a) for a in args)
        if key not in cache:
            cache[key] = predicate(*args)
        return cache[key]

    return ev


def check_monotone(
    lattice: LatticeInstance,
    predicate: Predicate,
    elements: Sequence[Element],
    samples: int = DEFAULT_SAMPLES,
    seed: int = 0,
    exhaustive: bool | None = None,
) -> LawReport:
    """Shrinking one argument of a true tuple must keep the predicate true.

    Exhaustive mode walks every tuple over ``elements`` and every one-slot
    replacement by a smaller element; it is the default when the element list
    is small.  Sampled mode draws random tuples and random smaller elements.
    """
    t = predicate.arity
    ev = _eval_cache(predicate, lattice)
    elems = sorted(elements, key=lattice.canon)
    if exhaustive is None:
        exhaustive = len(elems) <= EXHAUSTIVE_ELEMENT_LIMIT
    checks = 0
    if exhaustive:
        below = {
            lattice.canon(b): [a for a in elems if lattice.leq(a, b)] for b in elems
        }
        for args in product(elems, repeat=t):
            if not ev(args):
                continue
            for i in range(t):
                for smaller in below[lattice.canon(args[i])]:
                    weakened = args[:i] + (smaller,) + args[i + 1 :]
                    checks += 1
                    if not ev(weakened):
                        return LawReport(
                            law="monotone",
                            predicate=predicate.name,
                            exhaustive=True,
                            checks=checks,
                            counterexample={
                                "true_tuple": [lattice.describe(a) for a in args],
                                "slot": i,
                                "smaller": lattice.describe(smaller),
                            },
                            witness=(args, weakened),
                        )
    else:
        rng = random.Random(seed)
        for _ in range(samples):
            args = tuple(rng.choice(elems) for _ in range(t))
            if not ev(args):
                continue
            i = rng.randrange(t)
            candidates = [a for a in elems if lattice.leq(a, args[i])]
            smaller = rng.choice(candidates)
            weakened = args[:i] + (smaller,) + args[i + 1 :]
            checks += 1
            if not ev(weakened):
                return LawReport(
                    law="monotone",
                    predicate=predicate.name,
                    exhaustive=False,
                    checks=checks,
                    counterexample={
                        "true_tuple": [lattice.describe(a) for a in args],
                        "slot": i,
                        "smaller": lattice.describe(smaller),
                    },
                    witness=(args, weakened),
                )
    return LawReport(
        law="monotone", predicate=predicate.name, exhaustive=exhaustive, checks=checks
    )


def check_multilinear(
    lattice: LatticeInstance,
    predicate: Predicate,
    elements: Sequence[Element],
    samples: int = DEFAULT_SAMPLES,
    seed: int = 0,
    exhaustive: bool | None = None,
) -> LawReport:
    """True on two values of one slot implies true on their join."""
    t = predicate.arity
    ev = _eval_cache(predicate, lattice)
    elems = sorted(elements, key=lattice.canon)
    if exhaustive is None:
        exhaustive = len(elems) <= EXHAUSTIVE_ELEMENT_LIMIT
    checks = 0

    def violation(context, i, a, b):
        arg_a = context[:i] + (a,) + context[i:]
        arg_b = context[:i] + (b,) + context[i:]
        joined = context[:i] + (lattice.join(a, b),) + context[i:]
        return LawReport(
            law="multilinear",
            predicate=predicate.name,
            exhaustive=exhaustive,
            checks=checks,
            counterexample={
                "context": [lattice.describe(c) for c in context],
                "slot": i,
                "first": lattice.describe(a),
                "second": lattice.describe(b),
                "join": lattice.describe(lattice.join(a, b)),
            },
            witness=(arg_a, arg_b, joined),
        )

    if exhaustive:
        for i in range(t):
            for context in product(elems, repeat=t - 1):
                for a, b in combinations(elems, 2):
                    arg_a = context[:i] + (a,) + context[i:]
                    arg_b = context[:i] + (b,) + context[i:]
                    if not (ev(arg_a) and ev(arg_b)):
                        continue
                    joined = context[:i] + (lattice.join(a, b),) + context[i:]
                    checks += 1
                    if not ev(joined):
                        return violation(context, i, a, b)
    else:
        rng = random.Random(seed)
        for _ in range(samples):
            i = rng.randrange(t)
            context = tuple(rng.choice(elems) for _ in range(t - 1))
            a = rng.choice(elems)
            b = rng.choice(elems)
            arg_a = context[:i] + (a,) + context[i:]
            arg_b = context[:i] + (b,) + context[i:]
            if not (ev(arg_a) and ev(arg_b)):
                continue
            joined = context[:i] + (lattice.join(a, b),) + context[i:]
            checks += 1
            if not ev(joined):
                return violation(context, i, a, b)
    return LawReport(
        law="multilinear", predicate=predicate.name, exhaustive=exhaustive, checks=checks
    )


def brute_min_invariant(
    orbits: Sequence[frozenset[int]],
    satisfies: Callable[[frozenset[int]], bool],
    budget: int = ORBIT_UNION_BUDGET,
) -> frozenset[int] | None:
    """Minimum-cardinality union of orbits satisfying a property.

    Enumerates all 2**len(orbits) orbit unions (CapExceeded past the budget)
    and returns the smallest satisfying union, ties broken by sorted content;
    None when nothing satisfies.
    """
    orbit_list = [frozenset(o) for o in orbits]
    total = 1 << len(orbit_list)
    if total > budget:
        raise CapExceeded(f"{total} orbit unions exceed budget {budget}")
    best: frozenset[int] | None = None
    best_key: tuple | None = None
    for mask in range(total):
        union: set[int] = set()
        for i, orbit in enumerate(orbit_list):
            if mask >> i & 1:
                union |= orbit
        candidate = frozenset(union)
        key = (len(candidate), tuple(sorted(candidate)))
        if (best_key is None or key < best_key) and satisfies(candidate):
            best, best_key = candidate, key
    return best


def sublattice_membership(
    lattice: LatticeInstance,
    orbit: Sequence[Element],
    element: Element,
    budget: int = ORBIT_UNION_BUDGET,
) -> bool:
    """Whether ``element`` lies in the sublattice generated by ``orbit``.

    Closes the orbit under pairwise joins and meets to a fixed point
    (CapExceeded past the budget) and tests membership by canonical key.
    """
    closure = {lattice.canon(x): x for x in orbit}
    frontier = list(closure.values())
    while frontier:
        fresh: list[Element] = []
        items = list(closure.values())
        for a in frontier:
            for b in items:
                for combined in (lattice.join(a, b), lattice.meet(a, b)):
                    key = lattice.canon(combined)
                    if key not in closure:
                        if len(closure) >= budget:
                            raise CapExceeded(
                                f"sublattice closure exceeded budget {budget}"
                            )
                        closure[key] = combined
                        fresh.append(combined)
        frontier = fresh
    return lattice.canon(element) in closure


def check_lattice(lattice: LatticeInstance, elements: Sequence[Element]) -> LawReport:
    """Re-verify the lattice instance contract by enumeration.

    Checks order sanity, join as least upper bound, meet as a lower bound,
    the four codimension laws including the integer gap, and that every
    generator is monotone and join-preserving over the given elements.
    """
    elems = sorted(elements, key=lattice.canon)
    checks = 0

    def report(name, data):
        return LawReport(
            law="lattice-axioms",
            predicate=name,
            exhaustive=True,
            checks=checks,
            counterexample=data,
        )

    for a in elems:
        if lattice.codim(a) < 0:
            return report("codim-nonnegative", {"a": lattice.describe(a)})
        for b in elems:
            checks += 1
            j = lattice.join(a, b)
            m = lattice.meet(a, b)
            if not (lattice.leq(a, j) and lattice.leq(b, j)):
                return report("join-upper-bound", {"a": lattice.describe(a), "b": lattice.describe(b)})
            if not (lattice.leq(m, a) and lattice.leq(m, b)):
                return report("meet-lower-bound", {"a": lattice.describe(a), "b": lattice.describe(b)})
            for c in elems:
                if lattice.leq(a, c) and lattice.leq(b, c) and not lattice.leq(j, c):
                    return report(
                        "join-least",
                        {"a": lattice.describe(a), "b": lattice.describe(b), "c": lattice.describe(c)},
                    )
            if lattice.leq(a, b):
                if lattice.codim(a) < lattice.codim(b):
                    return report("codim-antitone", {"a": lattice.describe(a), "b": lattice.describe(b)})
                if not lattice.eq(a, b) and lattice.codim(b) > lattice.codim(a) - 1:
                    return report("codim-integer-gap", {"a": lattice.describe(a), "b": lattice.describe(b)})
            if lattice.codim(m) > lattice.codim(a) + lattice.codim(b):
                return report("codim-meet-subadditive", {"a": lattice.describe(a), "b": lattice.describe(b)})
    for gi, gen in enumerate(lattice.endo_generators):
        for a in elems:
            checks += 1
            if lattice.codim(gen(a)) > lattice.codim(a):
                return report("codim-generator", {"generator": gi, "a": lattice.describe(a)})
            for b in elems:
                if lattice.leq(a, b) and not lattice.leq(gen(a), gen(b)):
                    return report("generator-monotone", {"generator": gi, "a": lattice.describe(a), "b": lattice.describe(b)})
                if not lattice.eq(gen(lattice.join(a, b)), lattice.join(gen(a), gen(b))):
                    return report("generator-join", {"generator": gi, "a": lattice.describe(a), "b": lattice.describe(b)})
    return LawReport(law="lattice-axioms", predicate="all", exhaustive=True, checks=checks)
