"""Predicates over lattice elements and their combinators.

A predicate here is a t-ary boolean function on lattice elements.  The engine
theory requires predicates that are monotone (shrinking any argument keeps
them true) and multilinear (true on two values of one argument implies true
on their join); the oracle module re-verifies those laws empirically.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Sequence

from .errors import ArityMismatch, CapExceeded
from .lattice import Element, LatticeInstance

DEFAULT_COMPOSE_BUDGET = 200_000


@dataclass(frozen=True)
class Predicate:
    """A named t-ary boolean predicate on lattice elements."""

    name: str
    arity: int
    fn: Callable[..., bool] = field(repr=False)

    def __call__(self, *args: Element) -> bool:
        if len(args) != self.arity:
            raise ArityMismatch(
                f"predicate {self.name!r} has arity {self.arity}, got {len(args)} arguments"
            )
        return bool(self.fn(*args))


def compose_predicates(
    outer: Predicate,
    rows: Sequence[Callable[[tuple[Element, ...], Element], bool]],
    block: int,
    candidates: Sequence[Element],
    budget: int = DEFAULT_COMPOSE_BUDGET,
) -> Predicate:
    """Existential composition of predicates.

    The result takes k*block arguments (k = outer.arity = len(rows)) and holds
    when some assignment M_1..M_k from ``candidates`` satisfies the outer
    predicate while every row predicate links its block of arguments to its
    M_i.  The search over candidate tuples is exhaustive; CapExceeded is
    raised when len(candidates)**k would exceed the budget.
    """
    if len(rows) != outer.arity:
        raise ArityMismatch(
            f"outer predicate has arity {outer.arity}, got {len(rows)} row predicates"
        )
    if block < 1:
        raise ValueError("block size must be positive")
    k = outer.arity
    total = len(candidates) ** k
    if total > budget:
        raise CapExceeded(f"{total} candidate tuples exceed compose budget {budget}")
    cands = list(candidates)

    def fn(*args: Element) -> bool:
        blocks = [args[i * block : (i + 1) * block] for i in range(k)]
        for ms in product(cands, repeat=k):
            if not outer(*ms):
                continue
            if all(row(blk, m) for row, blk, m in zip(rows, blocks, ms)):
                return True
        return False

    return Predicate(name=f"exists[{outer.name}]", arity=k * block, fn=fn)


def transfer_check(
    lattice: LatticeInstance,
    predicate: Predicate,
    m: int,
    family: Sequence[Element],
    top: Element | None = None,
) -> bool:
    """Evaluate the predicate on the family's meet and join.

    Given a family whose every member N satisfies
    ``predicate(N, ..., N, top, ..., top)`` with N in the first m slots, a
    monotone multilinear predicate also holds on the tuple

        (meet of family) x (m - 1)  followed by  (join of family) x (t - m + 1).

    This function evaluates exactly that tuple and returns the result; it is
    the verification half of the engine's per-round reasoning.  ``top`` is
    unused in the evaluation itself and accepted for signature symmetry with
    the hypothesis being transferred.
    """
    if not 1 <= m <= predicate.arity:
        raise ArityMismatch(
            f"slot count {m} out of range for arity {predicate.arity}"
        )
    if not family:
        raise ValueError("transfer_check needs a nonempty family")
    ordered = sorted(family, key=lattice.canon)
    inf = lattice.meet_all(ordered)
    sup = lattice.join_all(ordered)
    args = (inf,) * (m - 1) + (sup,) * (predicate.arity - m + 1)
    return predicate(*args)


def forbidden_tuple_predicate(name: str, arity: int, forbidden: Sequence[tuple]) -> Predicate:
    """No forbidden tuple (x_1..x_t) has x_i in the i-th argument subset.

    Arguments are frozensets of ground items (subset-lattice elements).
    Monotone and multilinear by construction; used as the stock example
    family in law checks.
    """
    bad = [tuple(t) for t in forbidden]
    for t in bad:
        if len(t) != arity:
            raise ArityMismatch(f"forbidden tuple {t} does not have arity {arity}")

    def fn(*args: frozenset) -> bool:
        return not any(all(x in a for x, a in zip(t, args)) for t in bad)

    return Predicate(name=name, arity=arity, fn=fn)


def even_size_predicate(arity: int = 2) -> Predicate:
    """First argument has even cardinality: deliberately not monotone."""

    def fn(*args: frozenset) -> bool:
        return len(args[0]) % 2 == 0

    return Predicate(name="first-arg-even-size", arity=arity, fn=fn)


def small_first_predicate(arity: int = 2) -> Predicate:
    """First argument has at most one member: deliberately not multilinear."""

    def fn(*args: frozenset) -> bool:
        return len(args[0]) <= 1

    return Predicate(name="first-arg-small", arity=arity, fn=fn)
