"""Invariant removal constructions on the edge lattice."""

import json

import pytest

from invariantize.errors import InvariantViolation, ParseError, PreconditionViolated
from invariantize.graphs.automorphisms import automorphism_group
from invariantize.graphs.families import (
    complete_graph,
    cycle_graph,
    disjoint_union,
    path_graph,
    subdivided_k5_ring,
    triangle,
)
from invariantize.graphs.invariant import (
    ForbiddenFamily,
    family_predicate,
    forbid_invariant,
    invariant_under_group,
    local_embed_invariant,
    planarize_invariant,
)
from invariantize.graphs.model import graph_to_json
from invariantize.graphs.planarity import planarity_test
from invariantize.lattice import CofiniteLattice
from invariantize.numerics import iterate_bound
from invariantize.oracle import check_monotone, check_multilinear

TRIANGLE_FAMILY = ForbiddenFamily((triangle(),))


def test_family_validation():
    with pytest.raises(ValueError):
        ForbiddenFamily(())
    empty = complete_graph(1)
    with pytest.raises(ValueError):
        ForbiddenFamily((empty,))
    fam = ForbiddenFamily((triangle(), path_graph(3)))
    assert fam.arity == 3


def test_family_from_json_roundtrip():
    text = json.dumps([graph_to_json(triangle())])
    fam = ForbiddenFamily.from_json(text)
    assert fam.members == (triangle(),)
    with pytest.raises(ParseError):
        ForbiddenFamily.from_json("{}")


def test_family_predicate_obeys_engine_laws():
    host = complete_graph(3)
    fam = ForbiddenFamily((path_graph(3),))
    pred = family_predicate(host, fam)
    lattice = CofiniteLattice(host.edge_ids)
    elements = [
        frozenset(s)
        for s in [
            (), (0,), (1,), (2,), (0, 1), (0, 2), (1, 2), (0, 1, 2),
        ]
    ]
    assert check_monotone(lattice, pred, elements).ok
    assert check_multilinear(lattice, pred, elements).ok


def test_forbid_on_already_free_graph():
    h, report = forbid_invariant(cycle_graph(6), frozenset(), TRIANGLE_FAMILY)
    assert h == frozenset()
    assert report.ok
    assert report.arity == 3


def test_forbid_k4_matching_blows_up_to_everything():
    k4 = complete_graph(4)
    h, report = forbid_invariant(k4, {0, 5}, TRIANGLE_FAMILY)
    assert h == frozenset(range(6))
    assert report.ok
    assert len(h) <= iterate_bound(2, 2) == 42
    assert [s.orbit_size for s in report.trace.steps] == [3, 3, 1]


def test_forbid_precondition():
    with pytest.raises(PreconditionViolated):
        forbid_invariant(complete_graph(4), frozenset(), TRIANGLE_FAMILY)
    with pytest.raises(PreconditionViolated):
        forbid_invariant(cycle_graph(4), {99}, TRIANGLE_FAMILY)


def test_forbid_result_is_orbit_union():
    k4 = complete_graph(4)
    h, _ = forbid_invariant(k4, {0, 5}, TRIANGLE_FAMILY)
    assert invariant_under_group(k4, h, automorphism_group(k4))


def test_forbid_short_members_use_leading_slots():
    # one single-edge member: arity stays at the family max (2 via the path)
    fam = ForbiddenFamily((path_graph(2), path_graph(3)))
    host = path_graph(4)
    h, report = forbid_invariant(host, frozenset(host.edge_ids), fam)
    assert report.arity == 2
    # removing everything is the only way to avoid a single-edge pattern
    assert h == frozenset(host.edge_ids)


def test_planarize_noop_on_planar():
    assert planarize_invariant(cycle_graph(6), {0}) == frozenset()


def test_planarize_k5_single_seed():
    k5 = complete_graph(5)
    reports = []
    h = planarize_invariant(k5, {0}, reports=reports)
    assert h == frozenset(range(10))
    assert planarity_test(k5.delete_edges(h))
    assert len(reports) == 1 and reports[0].ok


def test_planarize_ring2_designated():
    g, designated = subdivided_k5_ring(2)
    h = planarize_invariant(g, designated)
    assert h
    assert len(h) >= 2
    assert planarity_test(g.delete_edges(h))
    assert invariant_under_group(g, h, automorphism_group(g))


def test_planarize_precondition():
    with pytest.raises(PreconditionViolated):
        planarize_invariant(complete_graph(5), frozenset())


def test_local_embed_identity():
    assert local_embed_invariant(cycle_graph(4), frozenset()) == frozenset()


def test_local_embed_two_triangles():
    g = disjoint_union(triangle(), triangle())
    h = local_embed_invariant(g, {0, 1, 2})
    assert h == frozenset(range(6))


def test_local_embed_c4_to_path():
    h = local_embed_invariant(cycle_graph(4), {0})
    assert h == frozenset(range(4))


def test_local_embed_size_cap():
    with pytest.raises(PreconditionViolated):
        local_embed_invariant(complete_graph(6), {0}, size_cap=10)


def test_local_embed_reports():
    reports = []
    h = local_embed_invariant(cycle_graph(4), {0}, reports=reports)
    assert len(reports) == 1
    assert reports[0].ok
    assert reports[0].removed_h == h
