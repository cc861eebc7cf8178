"""Removal and expulsion runs on the cofinite lattice, plus predicate laws."""

import pytest

from invariantize.errors import PreconditionViolated
from invariantize.lattice import CofiniteLattice
from invariantize.numerics import iterate_bound
from invariantize.oracle import check_monotone, check_multilinear
from invariantize.sets.invariant import (
    sphere_invariant_run,
    sphere_predicate,
    team_invariant_run,
    team_predicate,
)
from invariantize.sets.points import PointSet
from invariantize.sets.teams import Relation, efficient_team_check

OCTAHEDRON = PointSet.of(
    [(1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 0), (0, 0, 1), (0, 0, -1)]
)


def constant_relation(n: int, respected: set[int]) -> Relation:
    return Relation.of([[1 if j in respected else 0 for j in range(n)] for _ in range(n)])


class TestSphereRuns:
    def test_sphere_free_input_with_empty_seed(self):
        line = PointSet.of([(i, 0, 0) for i in range(6)])
        removed, report = sphere_invariant_run(line, set(), k=4)
        assert removed == frozenset()
        assert report.ok and report.kept_size == 6

    def test_violated_precondition_reports_witness(self):
        square = PointSet.of([(0, 0, 0), (1, 0, 0), (1, 1, 0), (0, 1, 0)])
        with pytest.raises(PreconditionViolated) as info:
            sphere_invariant_run(square, set(), k=4)
        assert info.value.witness == (0, 1, 2, 3)

    def test_rigid_planar_instance_keeps_its_seed(self):
        # one concyclic quadruple; removing a corner breaks it
        mixed = PointSet.of(
            [(0, 0, 0), (1, 0, 0), (1, 1, 0), (0, 1, 0), (2, 0, 0), (3, 0, 0)]
        )
        removed, report = sphere_invariant_run(mixed, {3}, k=4)
        assert removed == frozenset({3})
        assert report.group_order == 1
        assert report.clauses() == [
            ("invariant", True),
            ("property", True),
            ("orbit-union", True),
            ("bound", True),
        ]

    def test_octahedron_antipodal_seed(self):
        # every five octahedron vertices are co-spherical, so a 4-point
        # remainder is needed; symmetry then forces removing the whole orbit
        removed, report = sphere_invariant_run(OCTAHEDRON, {4, 5}, k=5)
        assert removed == OCTAHEDRON.ids
        assert report.group_order == 48
        assert report.ok
        assert len(removed) <= iterate_bound(2, 4)

    def test_seed_outside_ground_rejected(self):
        line = PointSet.of([(i, 0, 0) for i in range(3)])
        with pytest.raises(PreconditionViolated):
            sphere_invariant_run(line, {7}, k=4)

    def test_allow_planes_strengthens_the_precondition(self):
        line = PointSet.of([(i, 0, 0) for i in range(5)])
        with pytest.raises(PreconditionViolated):
            sphere_invariant_run(line, set(), k=4, allow_planes=True)


class TestTeamRuns:
    def test_planted_instance(self):
        rel = constant_relation(12, set(range(7)))
        expelled, report = team_invariant_run(rel, {7, 8})
        assert expelled == frozenset({7, 8, 9, 10, 11})
        assert report.kept_size == 7
        assert report.group_order == 604800  # S7 x S5 on the two classes
        assert report.ok
        assert efficient_team_check(rel, set(range(12)) - expelled)

    def test_team_nonempty_under_the_bound(self):
        rel = constant_relation(12, set(range(7)))
        expelled, report = team_invariant_run(rel, {7, 8})
        assert rel.n > iterate_bound(2, 4) or report.kept_size > 0
        assert report.kept_size > 0

    def test_rigid_relation_keeps_its_seed(self):
        # chain edges leave no symmetry, so the orbit of the seed is itself
        rows = [[0] * 7 for _ in range(7)]
        for i in range(5):
            rows[i][0] = 1
        rows[1][2] = rows[2][3] = rows[3][4] = 1
        rows[5][6] = 1
        rel = Relation.of(rows)
        expelled, report = team_invariant_run(rel, {5, 6})
        assert report.group_order == 1
        assert expelled == frozenset({5, 6})

    def test_inefficient_start_rejected(self):
        rel = constant_relation(6, set())
        with pytest.raises(PreconditionViolated) as info:
            team_invariant_run(rel, {0})
        assert info.value.witness == (1, 2, 3, 4, 5)

    def test_self_respect_flag_changes_the_verdict(self):
        # candidate 0 reaches a majority only when its own vote counts
        rows = [[0] * 6 for _ in range(6)]
        rows[0][0] = rows[1][0] = rows[2][0] = 1
        rows[0][5] = 1  # pin candidate 5 so its expulsion orbit stays put
        rel = Relation.of(rows)
        with pytest.raises(PreconditionViolated):
            team_invariant_run(rel, {5}, self_respect=False)
        expelled, report = team_invariant_run(rel, {5})
        assert report.ok


class TestPredicateLaws:
    def test_sphere_predicate_laws_small(self):
        ps = PointSet.of([(0, 0, 0), (1, 0, 0), (1, 1, 0), (0, 1, 0), (2, 0, 0)])
        pred = sphere_predicate(ps, k=4)
        lattice = CofiniteLattice(ps.ids)
        elements = [
            frozenset(),
            frozenset({0}),
            frozenset({1}),
            frozenset({3}),
            frozenset({0, 1}),
            frozenset({3, 4}),
        ]
        assert check_monotone(lattice, pred, elements, exhaustive=True).ok
        assert check_multilinear(lattice, pred, elements, exhaustive=True).ok

    def test_sphere_predicate_diagonal_matches_run_precondition(self):
        ps = PointSet.of([(0, 0, 0), (1, 0, 0), (1, 1, 0), (0, 1, 0), (2, 0, 0)])
        pred = sphere_predicate(ps, k=4)
        assert not pred.fn(*[frozenset()] * 4)  # the square is concyclic
        assert pred.fn(*[frozenset({3})] * 4)

    def test_team_predicate_laws_small(self):
        rel = constant_relation(7, {0, 1})
        pred = team_predicate(rel)
        lattice = CofiniteLattice(rel.candidates)
        elements = [
            frozenset(),
            frozenset({0}),
            frozenset({1}),
            frozenset({4}),
            frozenset({5}),
            frozenset({6}),
            frozenset({4, 5}),
            frozenset({5, 6}),
        ]
        assert check_monotone(lattice, pred, elements, exhaustive=True).ok
        assert check_multilinear(lattice, pred, elements, exhaustive=True).ok

    def test_team_predicate_slots_are_selective(self):
        # the only inefficient five is {2,3,4,5,6}; a slot stuck on {0,1}
        # can never complete it
        rel = constant_relation(7, {0, 1})
        pred = team_predicate(rel)
        all_but_01 = frozenset(range(2, 7))
        assert not pred.fn(*[frozenset()] * 5)
        assert pred.fn(frozenset(all_but_01), *[frozenset()] * 4)
