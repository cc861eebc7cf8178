"""Group automorphism enumeration, checked against brute force."""

from itertools import permutations

import pytest

from invariantize.errors import CapExceeded
from invariantize.groups.automorphisms import automorphism_group
from invariantize.groups.library import (
    alternating,
    cyclic,
    dihedral,
    direct_product,
    quaternion,
    symmetric,
)
from invariantize.groups.model import FiniteGroup


def is_table_automorphism(g: FiniteGroup, perm) -> bool:
    return all(
        perm[g.mul(a, b)] == g.mul(perm[a], perm[b])
        for a in range(g.order)
        for b in range(g.order)
    )


def brute_automorphism_count(g: FiniteGroup) -> int:
    # feasible for tiny groups only; every automorphism fixes the identity
    count = 0
    others = [x for x in range(g.order) if x != g.identity]
    for images in permutations(others):
        perm = [None] * g.order
        perm[g.identity] = g.identity
        for x, y in zip(others, images):
            perm[x] = y
        if is_table_automorphism(g, perm):
            count += 1
    return count


KNOWN_ORDERS = [
    (cyclic(1), 1),
    (cyclic(5), 4),
    (cyclic(6), 2),
    (cyclic(12), 4),
    (symmetric(3), 6),
    (dihedral(4), 8),
    (quaternion(), 24),
    (direct_product(cyclic(2), cyclic(2)), 6),
    (alternating(4), 24),
]


@pytest.mark.parametrize("g,expected", KNOWN_ORDERS, ids=lambda v: getattr(v, "name", v))
def test_orders_match_known_values(g, expected):
    assert automorphism_group(g).order == expected


@pytest.mark.parametrize(
    "g",
    [cyclic(5), cyclic(6), symmetric(3), direct_product(cyclic(2), cyclic(2))],
    ids=lambda g: g.name,
)
def test_order_matches_brute_force(g):
    assert automorphism_group(g).order == brute_automorphism_count(g)


def test_generators_are_automorphisms():
    for g, _ in KNOWN_ORDERS:
        auts = automorphism_group(g)
        for perm in auts.generators:
            assert sorted(perm) == list(range(g.order))
            assert is_table_automorphism(g, perm)


def test_generators_close_to_the_stated_order():
    # independent closure: repeatedly compose until stable
    for g in (symmetric(3), quaternion(), dihedral(4)):
        auts = automorphism_group(g)
        closure = {tuple(range(g.order))}
        frontier = list(closure)
        while frontier:
            base = frontier.pop()
            for gen in auts.generators:
                nxt = tuple(gen[x] for x in base)
                if nxt not in closure:
                    closure.add(nxt)
                    frontier.append(nxt)
        assert len(closure) == auts.order


def test_as_mappings_shape():
    auts = automorphism_group(symmetric(3))
    maps = auts.as_mappings()
    assert len(maps) == len(auts.generators)
    assert all(m[0] == 0 for m in maps)  # identity element is fixed


def test_trivial_group_has_trivial_automorphisms():
    auts = automorphism_group(cyclic(1))
    assert auts.order == 1
    assert auts.generators == ()


def test_cap_exceeded():
    from invariantize.groups.automorphisms import DEFAULT_ORDER_CAP

    assert DEFAULT_ORDER_CAP == 128
    with pytest.raises(CapExceeded):
        automorphism_group(cyclic(10), cap=9)
    assert automorphism_group(cyclic(10), cap=10).order == 4
