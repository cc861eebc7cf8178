"""Rational point sets: parsing, symmetries, exact sphere membership."""

import random
from fractions import Fraction
from itertools import combinations, permutations

import pytest

from geometry_oracle import brute_on_common_sphere
from invariantize.errors import CapExceeded, DuplicatePoints, ParseError, PreconditionViolated
from invariantize.sets.points import (
    PointSet,
    RationalPoint,
    distance_graph,
    isometry_group,
    load_points,
    matrix_rank,
    on_common_sphere,
    squared_distance,
)

P = RationalPoint.of

OCTAHEDRON = PointSet.of(
    [(1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 0), (0, 0, 1), (0, 0, -1)]
)
SQUARE = PointSet.of([(0, 0, 0), (1, 0, 0), (1, 1, 0), (0, 1, 0)])


class TestModel:
    def test_point_reduction(self):
        p = P("2/4", "-6/3", 0)
        assert p.coords == (Fraction(1, 2), Fraction(-2), Fraction(0))
        assert p.norm2 == Fraction(17, 4)

    def test_squared_distance(self):
        assert squared_distance(P(0, 0, 0), P(3, 4, 0)) == 25
        assert squared_distance(P("1/2", 0, 0), P(0, 0, 0)) == Fraction(1, 4)

    def test_duplicate_points_rejected(self):
        with pytest.raises(DuplicatePoints):
            PointSet.of([(0, 0, 0), (1, 0, 0), ("2/2", 0, 0)])

    def test_load_points(self):
        ps = load_points("0 0 0\n1/2 -3 2\n\n1 1 1\n")
        assert len(ps) == 3
        assert ps[1] == P("1/2", -3, 2)
        assert ps.ids == {0, 1, 2}

    @pytest.mark.parametrize("text", ["0 0\n", "a b c\n", "1 2 3 4\n", "1/0 0 0\n"])
    def test_malformed_points_rejected(self, text):
        with pytest.raises(ParseError):
            load_points(text)


class TestIsometries:
    def test_scalene_triangle_is_rigid(self):
        ps = PointSet.of([(0, 0, 0), (4, 0, 0), (0, 3, 0)])
        assert isometry_group(ps).order == 1

    def test_square_symmetries(self):
        assert isometry_group(SQUARE).order == 8

    def test_single_point(self):
        assert isometry_group(PointSet.of([(1, 2, 3)])).order == 1

    def test_octahedron(self):
        assert isometry_group(OCTAHEDRON).order == 48

    def test_generators_preserve_all_distances(self):
        for ps in (SQUARE, OCTAHEDRON):
            for mapping in isometry_group(ps).as_mappings():
                for i in range(len(ps)):
                    for j in range(i + 1, len(ps)):
                        assert squared_distance(ps[i], ps[j]) == squared_distance(
                            ps[mapping[i]], ps[mapping[j]]
                        )

    def test_matches_brute_force_on_small_sets(self):
        for ps in (
            SQUARE,
            PointSet.of([(0, 0, 0), (1, 0, 0), (2, 0, 0)]),
            PointSet.of([(0, 0, 0), (4, 0, 0), (0, 3, 0)]),
            PointSet.of([(0, 0, 0), (2, 0, 0), (1, 2, 0), (1, "2/3", 0)]),
        ):
            n = len(ps)
            brute = sum(
                1
                for perm in permutations(range(n))
                if all(
                    squared_distance(ps[i], ps[j])
                    == squared_distance(ps[perm[i]], ps[perm[j]])
                    for i in range(n)
                    for j in range(i + 1, n)
                )
            )
            assert isometry_group(ps).order == brute

    def test_distance_graph_colors_rank_distances(self):
        g = distance_graph(PointSet.of([(0, 0, 0), (1, 0, 0), (3, 0, 0)]))
        # squared distances 1, 4, 9 get ranks 0, 1, 2
        assert sorted(e.color for e in g.edges) == [0, 1, 2]

    def test_cap_exceeded(self):
        with pytest.raises(CapExceeded):
            isometry_group(OCTAHEDRON, cap=10)


class TestMatrixRank:
    def test_small_ranks(self):
        one = Fraction(1)
        assert matrix_rank([]) == 0
        assert matrix_rank([[one, one], [one, one]]) == 1
        assert matrix_rank([[one, 0], [0, one]]) == 2
        assert matrix_rank([[one, 2 * one, 3 * one]]) == 1

    def test_rank_with_fractions(self):
        rows = [
            [Fraction(1, 2), Fraction(1, 3)],
            [Fraction(3, 2), Fraction(2)],
        ]
        assert matrix_rank(rows) == 2
        rows[1] = [v * 3 for v in rows[0]]
        assert matrix_rank(rows) == 1


class TestOnCommonSphere:
    def test_one_or_two_points(self):
        assert on_common_sphere([P(0, 0, 0)])
        assert on_common_sphere([P(0, 0, 0), P(5, 1, 2)])

    def test_unit_sphere_five(self):
        pts = [P(1, 0, 0), P(-1, 0, 0), P(0, 1, 0), P(0, -1, 0), P(0, 0, 1)]
        assert on_common_sphere(pts)

    def test_point_off_the_determined_sphere(self):
        # the first four points force the unit sphere; (0,0,2) is outside
        pts = [P(1, 0, 0), P(-1, 0, 0), P(0, 1, 0), P(0, 0, 1), P(0, 0, 2)]
        assert not on_common_sphere(pts)

    def test_concyclic_quadruple_leaves_sphere_freedom(self):
        # four concyclic points plus an apex still fit a (larger) sphere
        pts = [P(1, 0, 0), P(-1, 0, 0), P(0, 1, 0), P(0, -1, 0), P(0, 0, 2)]
        assert on_common_sphere(pts)

    def test_collinear_points_never_on_a_sphere(self):
        pts = [P(i, 0, 0) for i in range(3)]
        assert not on_common_sphere(pts)
        assert on_common_sphere(pts, allow_planes=True)

    def test_any_noncollinear_triple_is_concyclic(self):
        assert on_common_sphere([P(0, 0, 0), P(1, 0, 0), P(0, 1, 0)])

    def test_coplanar_non_concyclic(self):
        pts = [P(0, 0, 0), P(1, 0, 0), P(2, 0, 0), P(0, 1, 0)]
        assert not on_common_sphere(pts)
        assert on_common_sphere(pts, allow_planes=True)

    def test_duplicates_rejected(self):
        with pytest.raises(DuplicatePoints):
            on_common_sphere([P(0, 0, 0), P(0, 0, 0)])

    def test_empty_rejected(self):
        with pytest.raises(PreconditionViolated):
            on_common_sphere([])

    def test_agrees_with_circumsphere_oracle_on_grid_samples(self):
        rng = random.Random(0)
        grid = [
            P(x, y, z)
            for x in range(-2, 3)
            for y in range(-2, 3)
            for z in range(-2, 3)
        ]
        shell = [p for p in grid if p.norm2 == 3]  # the (+-1,+-1,+-1) cube
        checked = true_seen = 0
        for _ in range(40):
            pool = shell if rng.random() < 0.5 else grid
            pts = rng.sample(pool, 5)
            for k in (4, 5):
                for subset in combinations(pts, k):
                    expected = brute_on_common_sphere(subset)
                    assert on_common_sphere(subset) == expected
                    assert on_common_sphere(
                        subset, allow_planes=True
                    ) == brute_on_common_sphere(subset, allow_planes=True)
                    checked += 1
                    true_seen += expected
        assert checked == 40 * 6
        assert 0 < true_seen < checked  # both branches exercised
