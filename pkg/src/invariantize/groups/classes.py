"""Decidable group-class testers used as per-layer requirements.

Each shipped tester is a radical class on the corpus: closed under normal
subgroups and under products of two normal subgroups (checked empirically by
the oracle tests, not assumed).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .model import FiniteGroup, commutator_subgroup


def derived_series(g: FiniteGroup, members: frozenset[int]) -> list[frozenset[int]]:
    series = [members]
    while True:
        nxt = commutator_subgroup(g, series[-1], series[-1])
        if nxt == series[-1]:
            return series
        series.append(nxt)


def lower_central_series(g: FiniteGroup, members: frozenset[int]) -> list[frozenset[int]]:
    series = [members]
    while True:
        nxt = commutator_subgroup(g, series[-1], members)
        if nxt == series[-1]:
            return series
        series.append(nxt)


def prime_factors(n: int) -> frozenset[int]:
    factors = set()
    d = 2
    while d * d <= n:
        while n % d == 0:
            factors.add(d)
            n //= d
        d += 1
    if n > 1:
        factors.add(n)
    return frozenset(factors)


@dataclass(frozen=True)
class ClassTester:
    """Membership test for a subgroup of a given group, by tag."""

    tag: str
    primes: frozenset[int] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        if self.tag not in {"trivial", "solvable", "nilpotent", "pi-group"}:
            raise ValueError(f"unknown class tag {self.tag!r}")
        if self.tag == "pi-group" and not self.primes:
            raise ValueError("pi-group tester needs a nonempty prime set")

    @property
    def label(self) -> str:
        if self.tag == "pi-group":
            return "pi-group{" + ",".join(map(str, sorted(self.primes))) + "}"
        return self.tag

    def holds(self, g: FiniteGroup, members: Iterable[int]) -> bool:
        m = frozenset(members)
        if self.tag == "trivial":
            return len(m) == 1
        if self.tag == "solvable":
            return len(derived_series(g, m)[-1]) == 1
        if self.tag == "nilpotent":
            return len(lower_central_series(g, m)[-1]) == 1
        return prime_factors(len(m)) <= self.primes

    def holds_group(self, g: FiniteGroup) -> bool:
        return self.holds(g, g.elements)


def trivial_tester() -> ClassTester:
    return ClassTester("trivial")


def solvable_tester() -> ClassTester:
    return ClassTester("solvable")


def nilpotent_tester() -> ClassTester:
    return ClassTester("nilpotent")


def pi_tester(primes: Iterable[int]) -> ClassTester:
    return ClassTester("pi-group", primes=frozenset(primes))


def class_test(tag: str, g: FiniteGroup, members: Iterable[int], primes: Iterable[int] = ()) -> bool:
    tester = ClassTester(tag, primes=frozenset(primes)) if tag == "pi-group" else ClassTester(tag)
    return tester.holds(g, members)
