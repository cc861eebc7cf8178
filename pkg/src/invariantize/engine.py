"""The invariantization engine.

Given a lattice instance, a seed element N satisfying some monotone
multilinear t-ary predicate diagonally, and the instance's endomorphism
generators, the engine runs t rounds of

    orbit   -- close the previous round's element under the generators,
    join    -- greedily select few orbit members whose join is the orbit sup,
    meet    -- fold the selected members back into a single small element,

and returns H, the sup computed in the final round.  H is invariant under
every generator, and its codimension is bounded by the (t-1)-fold iterate of
x -> x*(x+1) applied to codim(N).  The engine never evaluates the predicate:
predicate evaluation belongs to verification paths only.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import CapExceeded, InvariantViolation
from .lattice import Element, LatticeInstance
from .numerics import iterate_bound

DEFAULT_ORBIT_CAP = 100_000


def orbit_closure(lattice: LatticeInstance, seed: Element, cap: int = DEFAULT_ORBIT_CAP) -> list[Element]:
    """Close ``seed`` under the instance's generators.

    Returns the full orbit sorted by canonical key.  Raises CapExceeded when
    the orbit grows past ``cap`` elements.
    """
    seen = {lattice.canon(seed): seed}
    queue = deque([seed])
    while queue:
        current = queue.popleft()
        for gen in lattice.endo_generators:
            image = gen(current)
            key = lattice.canon(image)
            if key not in seen:
                if len(seen) >= cap:
                    raise CapExceeded(f"orbit closure exceeded cap {cap}")
                seen[key] = image
                queue.append(image)
    return [seen[key] for key in sorted(seen)]


def greedy_select(lattice: LatticeInstance, family: Sequence[Element]) -> tuple[list[Element], Element]:
    """Scan ``family`` in order, keeping an element iff it strictly increases
    the running join.  Returns (selected, join of the whole family).

    With an integer-gap codimension the selected list has at most
    codim(first kept) + 1 members.  Callers wanting deterministic output pass
    the family sorted by canonical key.
    """
    if not family:
        raise ValueError("greedy_select needs a nonempty family")
    selected: list[Element] = []
    running: Element | None = None
    for x in family:
        if running is None:
            selected.append(x)
            running = x
        elif not lattice.leq(x, running):
            selected.append(x)
            running = lattice.join(running, x)
    return selected, running


@dataclass(frozen=True)
class EngineStep:
    """One round of the engine, in the order the quantities are computed."""

    orbit_size: int
    selected: tuple[Element, ...]
    sup: Element
    inf: Element
    codim_sup: Fraction
    codim_inf: Fraction


@dataclass(frozen=True)
class EngineTrace:
    seed: Element
    seed_codim: Fraction
    steps: tuple[EngineStep, ...]

    @property
    def result(self) -> Element:
        return self.steps[-1].sup


def engine_run(
    lattice: LatticeInstance,
    seed: Element,
    rounds: int,
    cap: int = DEFAULT_ORBIT_CAP,
) -> tuple[Element, EngineTrace]:
    """Run ``rounds`` orbit/join/meet rounds from ``seed``; return (H, trace).

    Post-conditions re-checked on every run (InvariantViolation on failure):

    * g(H) <= H for every generator g;
    * codim(H) <= iterate_bound(codim(seed), rounds - 1);
    * H <= the first round's sup, and sups are descending;
    * per round s: codim(inf_s) <= bound_step(codim(inf_{s-1}))
      and codim(sup_s) <= codim(inf_{s-1}).
    """
    if rounds < 1:
        raise ValueError("engine needs at least one round")
    steps: list[EngineStep] = []
    seed_codim = lattice.codim(seed)
    current = seed
    prev_codim = seed_codim
    for _ in range(rounds):
        orbit = orbit_closure(lattice, current, cap)
        selected, sup = greedy_select(lattice, orbit)
        inf = lattice.meet_all(selected)
        codim_sup = lattice.codim(sup)
        codim_inf = lattice.codim(inf)
        if codim_sup > prev_codim:
            raise InvariantViolation(
                f"sup codimension {codim_sup} exceeds previous inf codimension {prev_codim}"
            )
        if codim_inf > iterate_bound(prev_codim, 1):
            raise InvariantViolation(
                f"inf codimension {codim_inf} exceeds bound step of {prev_codim}"
            )
        steps.append(
            EngineStep(
                orbit_size=len(orbit),
                selected=tuple(selected),
                sup=sup,
                inf=inf,
                codim_sup=codim_sup,
                codim_inf=codim_inf,
            )
        )
        current = inf
        prev_codim = codim_inf
    result = steps[-1].sup
    for gen in lattice.endo_generators:
        if not lattice.leq(gen(result), result):
            raise InvariantViolation("engine result is not generator-invariant")
    bound = iterate_bound(seed_codim, rounds - 1)
    if lattice.codim(result) > bound:
        raise InvariantViolation(
            f"engine result codimension {lattice.codim(result)} exceeds bound {bound}"
        )
    for earlier, later in zip(steps, steps[1:]):
        if not lattice.leq(later.sup, earlier.sup):
            raise InvariantViolation("round sups are not descending")
    return result, EngineTrace(seed=seed, seed_codim=seed_codim, steps=tuple(steps))


def trace_satisfies(lattice: LatticeInstance, predicate, trace: EngineTrace) -> bool:
    """Whether a predicate holds along the trace in the shape the theory gives.

    After round s the tuple (inf_s repeated t-s times, sup_s repeated s times)
    must satisfy the predicate, and diagonally on the final result.  This is a
    verification helper; the engine itself never calls the predicate.
    """
    t = predicate.arity
    for s, step in enumerate(trace.steps, start=1):
        args = (step.inf,) * (t - s) + (step.sup,) * s
        if not predicate(*args):
            return False
    return predicate(*(trace.result,) * t)
