"""Group-class testers and the closure laws the engine relies on."""

import pytest

from invariantize.groups.classes import (
    ClassTester,
    class_test,
    derived_series,
    lower_central_series,
    nilpotent_tester,
    pi_tester,
    prime_factors,
    solvable_tester,
    trivial_tester,
)
from invariantize.groups.library import (
    alternating,
    corpus,
    cyclic,
    dihedral,
    quaternion,
    symmetric,
)
from invariantize.groups.model import normal_subgroups, product_set

A3 = frozenset({0, 3, 4})


def test_prime_factors():
    assert prime_factors(1) == frozenset()
    assert prime_factors(8) == {2}
    assert prime_factors(12) == {2, 3}
    assert prime_factors(97) == {97}


def test_derived_series_of_s3():
    g = symmetric(3)
    assert derived_series(g, g.elements) == [g.elements, A3, g.trivial]


def test_lower_central_series_of_s3_stalls_above_trivial():
    g = symmetric(3)
    series = lower_central_series(g, g.elements)
    assert series[0] == g.elements
    assert series[-1] == A3  # [A3, S3] = A3, so the series never reaches 1


def test_series_of_abelian_group():
    g = cyclic(6)
    assert derived_series(g, g.elements) == [g.elements, g.trivial]
    assert lower_central_series(g, g.elements) == [g.elements, g.trivial]


class TestTesters:
    def test_trivial(self):
        g = symmetric(3)
        assert trivial_tester().holds(g, g.trivial)
        assert not trivial_tester().holds(g, A3)

    def test_solvable_vs_nilpotent(self):
        s3 = symmetric(3)
        assert solvable_tester().holds_group(s3)
        assert not nilpotent_tester().holds_group(s3)
        a4 = alternating(4)
        assert solvable_tester().holds_group(a4)
        assert not nilpotent_tester().holds_group(a4)
        for g in (dihedral(4), quaternion(), cyclic(12)):
            assert nilpotent_tester().holds_group(g)
            assert solvable_tester().holds_group(g)

    def test_tester_applies_to_subgroups_in_place(self):
        g = symmetric(3)
        assert nilpotent_tester().holds(g, A3)

    def test_pi_groups(self):
        d4 = dihedral(4)
        assert pi_tester({2}).holds_group(d4)
        s3 = symmetric(3)
        assert not pi_tester({2}).holds_group(s3)
        assert pi_tester({2, 3}).holds_group(s3)
        assert pi_tester({5}).holds(s3, s3.trivial)  # trivial is a pi-group

    def test_labels(self):
        assert solvable_tester().label == "solvable"
        assert pi_tester({3, 2}).label == "pi-group{2,3}"

    def test_invalid_testers_rejected(self):
        with pytest.raises(ValueError):
            ClassTester("simple")
        with pytest.raises(ValueError):
            ClassTester("pi-group")

    def test_class_test_dispatcher(self):
        g = symmetric(3)
        assert class_test("solvable", g, g.elements)
        assert not class_test("nilpotent", g, g.elements)
        assert class_test("pi-group", g, A3, primes={3})
        assert class_test("trivial", g, g.trivial)


ALL_TESTERS = [
    trivial_tester(),
    solvable_tester(),
    nilpotent_tester(),
    pi_tester({2}),
    pi_tester({2, 3}),
]


@pytest.mark.parametrize("tester", ALL_TESTERS, ids=lambda t: t.label)
def test_radical_axioms_on_corpus(tester):
    """The closure laws that make existential layering join-compatible.

    For normal subgroups of any corpus group: membership passes down to
    normal subgroups below, and up to products of two members.
    """
    for g in corpus().values():
        normals = normal_subgroups(g)
        held = [n for n in normals if tester.holds(g, n)]
        for a in held:
            for b in normals:
                if b <= a:
                    assert tester.holds(g, b), (g.name, tester.label)
        for a in held:
            for b in held:
                assert tester.holds(g, product_set(g, a, b)), (g.name, tester.label)
