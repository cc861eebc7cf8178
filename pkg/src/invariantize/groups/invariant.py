"""Engine instances over the normal-subgroup lattice of a finite group.

Elements are normal subgroups as frozensets; join is the subgroup product,
meet is intersection, and the grading is the ceiling of log2 of the index.
That ceiling is itself a valid grading (indices multiply along strict
inclusions, so it drops by at least one per strict step), which keeps the
engine's arithmetic exact; the true logarithmic bounds are certified
separately with exact integer comparisons.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from ..engine import DEFAULT_ORBIT_CAP, EngineTrace, engine_run
from ..errors import CapExceeded, InvariantViolation, PreconditionViolated
from ..lattice import LatticeInstance, dualize
from ..numerics import ceil_log2, log2_le_iterated_bound
from ..predicates import Predicate, compose_predicates
from .automorphisms import DEFAULT_ORDER_CAP, GroupAutomorphisms, automorphism_group
from .classes import ClassTester
from .model import (
    FiniteGroup,
    are_isomorphic,
    index,
    intersect,
    is_normal,
    normal_subgroups,
    product_set,
    section_group,
)
from .words import OuterCommutatorWord, verbal_subgroup

DEFAULT_GROUP_ENUM_CAP = 24


class NormalSubgroupLattice(LatticeInstance):
    """Normal subgroups of a fixed finite group, ordered by inclusion."""

    def __init__(
        self,
        group: FiniteGroup,
        aut: GroupAutomorphisms | None = None,
        aut_cap: int = DEFAULT_ORDER_CAP,
    ):
        self.group = group
        self.aut = aut if aut is not None else automorphism_group(group, aut_cap)
        self._gens = [
            self._make_gen(perm) for perm in self.aut.generators
        ] or [lambda a: a]

    @staticmethod
    def _make_gen(perm: tuple[int, ...]):
        def gen(members: frozenset[int]) -> frozenset[int]:
            return frozenset(perm[x] for x in members)

        return gen

    def leq(self, a, b):
        return a <= b

    def join(self, a, b):
        return product_set(self.group, a, b)

    def meet(self, a, b):
        return intersect(a, b)

    def codim(self, a):
        return Fraction(ceil_log2(index(self.group, a)))

    def canon(self, a):
        return tuple(sorted(a))

    def describe(self, a):
        return f"subgroup of order {len(a)}"

    @property
    def endo_generators(self):
        return self._gens

    @property
    def top(self):
        return self.group.elements


def dual_size_codim(a: frozenset[int]) -> Fraction:
    return Fraction(ceil_log2(len(a)))


def spectrum_of_quotient(g: FiniteGroup, k_members: Iterable[int]) -> frozenset[int]:
    """Element orders of G/K for normal K: the least m with x^m in K."""
    k = frozenset(k_members)
    if not is_normal(g, k):
        raise PreconditionViolated("spectrum needs a normal subgroup")
    orders = set()
    for x in range(g.order):
        y, m = x, 1
        while y not in k:
            y = g.mul(y, x)
            m += 1
        orders.add(m)
    return frozenset(orders)


def spectrum_predicate(g: FiniteGroup, spectrum: Sequence[int]) -> Predicate:
    """The per-exponent disjunction: every x has some x^{n_i} in the i-th slot.

    Used on the dualized normal-subgroup lattice, where slot arguments shrink
    by growing as subgroups; a single x witnesses one slot, which gives the
    engine laws.
    """
    ns = tuple(spectrum)

    def fn(*ks: frozenset[int]) -> bool:
        return all(
            any(g.power(x, n) in k for n, k in zip(ns, ks))
            for x in range(g.order)
        )

    return Predicate(name=f"spectrum{sorted(ns)}", arity=len(ns), fn=fn)


@dataclass(frozen=True)
class LawRunReport:
    """Re-verified clauses for one verbal-law invariantization run."""

    trace: EngineTrace
    subgroup: frozenset[int]
    seed: frozenset[int]
    arity: int
    aut_order: int
    characteristic: bool
    condition_results: tuple[tuple[str, str, bool], ...]
    bound_ok: bool

    @property
    def ok(self) -> bool:
        return (
            self.characteristic
            and self.bound_ok
            and all(passed for _, _, passed in self.condition_results)
        )


def law_invariant_run(
    g: FiniteGroup,
    n_members: Iterable[int],
    conditions: Sequence[tuple[OuterCommutatorWord, ClassTester]],
    *,
    aut_cap: int = DEFAULT_ORDER_CAP,
    orbit_cap: int = DEFAULT_ORBIT_CAP,
) -> tuple[frozenset[int], LawRunReport]:
    """A characteristic subgroup of bounded index inheriting verbal conditions.

    Preconditions: the seed subgroup is normal and, for every pair (word w,
    tester R), the verbal subgroup w(N,...,N) passes R.  The result H passes
    the same conditions, is fixed by every automorphism, and satisfies
    log2|G:H| <= f^{t-1}(log2|G:N|) with t the largest word weight, certified
    in exact arithmetic.
    """
    seed = frozenset(n_members)
    if not conditions:
        raise ValueError("need at least one (word, tester) condition")
    if not is_normal(g, seed):
        raise PreconditionViolated("seed subgroup is not normal", witness=seed)
    for word, tester in conditions:
        value = verbal_subgroup(g, word, [seed] * word.weight)
        if not tester.holds(g, value):
            raise PreconditionViolated(
                f"w(N,...,N) fails tester {tester.label} for word {word.text()}",
                witness=value,
            )
    t = max(word.weight for word, _ in conditions)
    lattice = NormalSubgroupLattice(g, aut_cap=aut_cap)
    result, trace = engine_run(lattice, seed, rounds=t, cap=orbit_cap)

    characteristic = all(
        frozenset(perm[x] for x in result) == result
        for perm in lattice.aut.generators
    )
    condition_results = tuple(
        (
            word.text(),
            tester.label,
            tester.holds(g, verbal_subgroup(g, word, [result] * word.weight)),
        )
        for word, tester in conditions
    )
    bound_ok = log2_le_iterated_bound(index(g, result), index(g, seed), t - 1)
    report = LawRunReport(
        trace=trace,
        subgroup=result,
        seed=seed,
        arity=t,
        aut_order=lattice.aut.order,
        characteristic=characteristic,
        condition_results=condition_results,
        bound_ok=bound_ok,
    )
    if not report.ok:
        raise InvariantViolation("law run re-verification failed")
    return result, report


@dataclass(frozen=True)
class SpectrumRunReport:
    """Re-verified clauses for one quotient-spectrum run."""

    trace: EngineTrace
    subgroup: frozenset[int]
    seed: frozenset[int]
    spectrum_seed: tuple[int, ...]
    spectrum_result: tuple[int, ...]
    aut_order: int
    characteristic: bool
    contained: bool
    bound_ok: bool

    @property
    def ok(self) -> bool:
        return self.characteristic and self.contained and self.bound_ok


def spectrum_run(
    g: FiniteGroup,
    n_members: Iterable[int],
    *,
    aut_cap: int = DEFAULT_ORDER_CAP,
    orbit_cap: int = DEFAULT_ORBIT_CAP,
) -> tuple[frozenset[int], SpectrumRunReport]:
    """A characteristic subgroup whose quotient spectrum shrinks.

    Runs the engine on the order-reversed normal-subgroup lattice graded by
    ceil(log2 |A|), seeded at N, with one round per element order of G/N.
    The result H is characteristic, spectrum(G/H) is contained in
    spectrum(G/N), and log2|H| <= f^{t-1}(log2|N|) exactly.
    """
    seed = frozenset(n_members)
    if not is_normal(g, seed):
        raise PreconditionViolated("seed subgroup is not normal", witness=seed)
    spec_seed = tuple(sorted(spectrum_of_quotient(g, seed)))
    t = len(spec_seed)
    base = NormalSubgroupLattice(g, aut_cap=aut_cap)
    dual = dualize(base, dual_size_codim, top=g.trivial)
    result, trace = engine_run(dual, seed, rounds=t, cap=orbit_cap)

    characteristic = all(
        frozenset(perm[x] for x in result) == result
        for perm in base.aut.generators
    )
    spec_result = tuple(sorted(spectrum_of_quotient(g, result)))
    contained = set(spec_result) <= set(spec_seed)
    bound_ok = log2_le_iterated_bound(len(result), len(seed), t - 1)
    report = SpectrumRunReport(
        trace=trace,
        subgroup=result,
        seed=seed,
        spectrum_seed=spec_seed,
        spectrum_result=spec_result,
        aut_order=base.aut.order,
        characteristic=characteristic,
        contained=contained,
        bound_ok=bound_ok,
    )
    if not report.ok:
        raise InvariantViolation("spectrum run re-verification failed")
    return result, report


LayerRequirement = OuterCommutatorWord | ClassTester


def series_predicate(
    g: FiniteGroup,
    n_members: Iterable[int],
    layers: Sequence[LayerRequirement],
    *,
    cap: int = DEFAULT_GROUP_ENUM_CAP,
) -> bool:
    """Whether N has a normal-in-G series realizing the layer requirements.

    True iff there is a chain 1 = A_0 <= A_1 <= ... <= A_m = N of G-normal
    subgroups, m = len(layers), where quotient A_i/A_{i-1} satisfies the i-th
    requirement: for a word w, the identity w = 1 (checked as
    w(A_i,...,A_i) <= A_{i-1}); for a class tester, membership of the section
    group.  Exhaustive over normal subgroups, hence the order cap.
    """
    if g.order > cap:
        raise CapExceeded(f"group order {g.order} exceeds series cap {cap}")
    target = frozenset(n_members)
    if not is_normal(g, target):
        raise PreconditionViolated("series target is not normal", witness=target)
    if not layers:
        return target == g.trivial
    candidates = [p for p in normal_subgroups(g) if p <= target]

    def satisfied(req: LayerRequirement, lower: frozenset[int], upper: frozenset[int]) -> bool:
        if isinstance(req, OuterCommutatorWord):
            return verbal_subgroup(g, req, [upper] * req.weight) <= lower
        quotient = section_group(g, upper, lower)
        return req.holds(quotient, quotient.elements)

    memo: dict[tuple[int, frozenset[int]], bool] = {}

    def search(i: int, current: frozenset[int]) -> bool:
        if i == len(layers):
            return current == target
        key = (i, current)
        if key in memo:
            return memo[key]
        out = False
        for nxt in candidates:
            if current <= nxt and satisfied(layers[i], current, nxt):
                if search(i + 1, nxt):
                    out = True
                    break
        memo[key] = out
        return out

    return search(0, g.trivial)


def extension_predicate(
    g: FiniteGroup,
    word: OuterCommutatorWord,
    tester: ClassTester,
    budget: int = 200_000,
) -> Predicate:
    """Existential layering: some normal M passes the tester and absorbs w.

    The composed predicate holds on (N_1, ..., N_t) when a normal subgroup M
    exists with tester(M) and w(N_1,...,N_t) <= M; it stays monotone and
    join-compatible because the word distributes over subgroup products and
    the shipped testers are closed under products of normal subgroups.
    """
    outer = Predicate(
        name=f"tester[{tester.label}]",
        arity=1,
        fn=lambda m: tester.holds(g, m),
    )

    def row(block: tuple[frozenset[int], ...], m: frozenset[int]) -> bool:
        return verbal_subgroup(g, word, list(block)) <= m

    return compose_predicates(
        outer,
        [row],
        block=word.weight,
        candidates=normal_subgroups(g),
        budget=budget,
    )


def coradical_membership(
    g: FiniteGroup,
    h_members: Iterable[int],
    n_members: Iterable[int],
    *,
    cap: int = DEFAULT_GROUP_ENUM_CAP,
) -> bool:
    """Whether G/H embeds in a finite subdirect power of quotients of G/N.

    Equivalent finite form: the intersection of all normal M >= H whose
    quotient G/M is isomorphic to some quotient of G/N equals H exactly.
    Exhaustive and isomorphism-heavy, hence the order cap.
    """
    if g.order > cap:
        raise CapExceeded(f"group order {g.order} exceeds formation cap {cap}")
    h = frozenset(h_members)
    n = frozenset(n_members)
    if not is_normal(g, h) or not is_normal(g, n):
        raise PreconditionViolated("formation check needs normal subgroups")
    normals = normal_subgroups(g)
    quotient_types = [
        section_group(g, g.elements, k) for k in normals if n <= k
    ]
    meet = g.elements
    for m in normals:
        if not h <= m:
            continue
        gm = section_group(g, g.elements, m)
        if any(are_isomorphic(gm, q) for q in quotient_types):
            meet = intersect(meet, m)
    return meet == h
