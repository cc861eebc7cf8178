"""Lattice instances.

A ``LatticeInstance`` bundles the operations the construction engine needs:
a partial order ``leq``, least upper bound ``join``, a lower bound ``meet``
(the exact greatest lower bound for the instances shipped here), a rational
``codim`` grading, and a finite list of monotone, join-preserving
``endo_generators`` acting on elements.

Elements themselves are opaque handles owned by their instance; the only
universal operations on them are through the instance, plus ``canon`` which
returns a hashable, totally ordered key.  Two elements are equal in the
lattice exactly when their keys are equal.

The codimension grading is expected to satisfy, for all elements a, b and
every generator g:

* a <= b implies codim(a) >= codim(b);
* codim(g(a)) <= codim(a);
* codim(meet(a, b)) <= codim(a) + codim(b);
* a < b strictly implies codim(b) <= codim(a) - 1 (integer gap).

Shipped instances satisfy these by construction; ``oracle.check_lattice``
re-verifies them by enumeration on small instances.
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from fractions import Fraction
from typing import Any, Callable, Iterable, Sequence

Element = Any
Endomorphism = Callable[[Element], Element]


class LatticeInstance(ABC):
    """Interface between a concrete problem domain and the engine."""

    @abstractmethod
    def leq(self, a: Element, b: Element) -> bool:
        """Whether a <= b in the lattice order."""

    @abstractmethod
    def join(self, a: Element, b: Element) -> Element:
        """Least upper bound of a and b."""

    @abstractmethod
    def meet(self, a: Element, b: Element) -> Element:
        """Greatest lower bound of a and b."""

    @abstractmethod
    def codim(self, a: Element) -> Fraction:
        """Nonnegative rational codimension of a."""

    @abstractmethod
    def canon(self, a: Element) -> Any:
        """Canonical key: hashable, totally ordered, equal iff elements equal."""

    @property
    @abstractmethod
    def endo_generators(self) -> Sequence[Endomorphism]:
        """Generators of the endomorphism semigroup acting on elements."""

    @property
    def top(self) -> Element | None:
        """Greatest element, when the instance has one."""
        return None

    def eq(self, a: Element, b: Element) -> bool:
        return self.canon(a) == self.canon(b)

    def describe(self, a: Element) -> str:
        return str(self.canon(a))

    def join_all(self, elements: Iterable[Element]) -> Element:
        it = iter(elements)
        try:
            acc = next(it)
        except StopIteration:
            raise ValueError("join_all needs at least one element") from None
        for x in it:
            acc = self.join(acc, x)
        return acc

    def meet_all(self, elements: Iterable[Element]) -> Element:
        it = iter(elements)
        try:
            acc = next(it)
        except StopIteration:
            raise ValueError("meet_all needs at least one element") from None
        for x in it:
            acc = self.meet(acc, x)
        return acc


def _as_item_function(item_map) -> Callable[[int], int]:
    if callable(item_map):
        return item_map
    return item_map.__getitem__


class SubsetLattice(LatticeInstance):
    """All subsets of a finite ground set, ordered by inclusion.

    Elements are frozensets of ground items.  Generators are induced by maps
    of the ground set (bijections in every shipped use) applied pointwise.
    codim(a) = |ground| - |a|, the number of missing items.
    """

    def __init__(self, ground: Iterable[int], item_maps: Sequence = ()):
        self.ground = frozenset(ground)
        self._maps = [_as_item_function(m) for m in item_maps]
        self._gens = [self._make_gen(f) for f in self._maps] or [lambda a: a]

    def _make_gen(self, f) -> Endomorphism:
        def gen(a: frozenset) -> frozenset:
            return frozenset(f(x) for x in a)

        return gen

    def leq(self, a, b):
        return a <= b

    def join(self, a, b):
        return a | b

    def meet(self, a, b):
        return a & b

    def codim(self, a):
        return Fraction(len(self.ground) - len(a))

    def canon(self, a):
        return tuple(sorted(a))

    @property
    def endo_generators(self):
        return self._gens

    @property
    def top(self):
        return self.ground


class CofiniteLattice(LatticeInstance):
    """Cofinite subsets of a finite ground set, represented by what is removed.

    An element is the frozenset of *removed* items; the represented subset is
    the ground set minus it.  Order, join and meet mirror inclusion of the
    represented subsets, so on removed sets:

        a <= b        iff  removed(a) >= removed(b)
        join(a, b)    =    removed intersection
        meet(a, b)    =    removed union
        codim(a)      =    |removed(a)|

    Generators come from bijections of the ground set, applied to removed
    sets by direct image.
    """

    def __init__(self, ground: Iterable[int], item_maps: Sequence = ()):
        self.ground = frozenset(ground)
        self._maps = [_as_item_function(m) for m in item_maps]
        self._gens = [self._make_gen(f) for f in self._maps] or [lambda a: a]

    def _make_gen(self, f) -> Endomorphism:
        def gen(removed: frozenset) -> frozenset:
            return frozenset(f(x) for x in removed)

        return gen

    def kept(self, removed: frozenset) -> frozenset:
        return self.ground - removed

    def leq(self, a, b):
        return a >= b

    def join(self, a, b):
        return a & b

    def meet(self, a, b):
        return a | b

    def codim(self, a):
        return Fraction(len(a))

    def canon(self, a):
        return tuple(sorted(a))

    @property
    def endo_generators(self):
        return self._gens

    @property
    def top(self):
        return frozenset()


class DualLattice(LatticeInstance):
    """The order-reversed view of another instance.

    The base instance's meet must be a true greatest lower bound, so that it
    serves as the dual's least upper bound.  The dual codimension grading is
    supplied by the caller, since reversing the order changes what "small"
    means.
    """

    def __init__(
        self,
        base: LatticeInstance,
        codim: Callable[[Element], Fraction],
        top: Element | None = None,
    ):
        self.base = base
        self._codim = codim
        self._top = top

    def leq(self, a, b):
        return self.base.leq(b, a)

    def join(self, a, b):
        return self.base.meet(a, b)

    def meet(self, a, b):
        return self.base.join(a, b)

    def codim(self, a):
        return Fraction(self._codim(a))

    def canon(self, a):
        return self.base.canon(a)

    def describe(self, a):
        return self.base.describe(a)

    @property
    def endo_generators(self):
        return self.base.endo_generators

    @property
    def top(self):
        return self._top


def dualize(
    base: LatticeInstance,
    codim: Callable[[Element], Fraction],
    top: Element | None = None,
) -> DualLattice:
    """Reverse the order of a lattice instance, with a caller-supplied grading."""
    return DualLattice(base, codim, top)
