"""Exact rational 3D point sets: distances, symmetries, sphere membership.

All arithmetic is over ``fractions.Fraction``; no floating point anywhere.
Symmetries are computed combinatorially from the squared-distance matrix: a
distance-preserving bijection of a finite Euclidean subset always extends to
an ambient isometry, so the permutations found this way are exactly the
restrictions of isometries.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Sequence

from ..errors import DuplicatePoints, ParseError, PreconditionViolated
from ..graphs.automorphisms import (
    DEFAULT_NODE_CAP,
    AutomorphismGroup,
    automorphism_group,
)
from ..graphs.model import Graph


@dataclass(frozen=True)
class RationalPoint:
    """A point of Q^3; Fraction keeps every coordinate reduced."""

    x: Fraction
    y: Fraction
    z: Fraction

    @classmethod
    def of(cls, x, y, z) -> "RationalPoint":
        return cls(Fraction(x), Fraction(y), Fraction(z))

    @property
    def coords(self) -> tuple[Fraction, Fraction, Fraction]:
        return (self.x, self.y, self.z)

    @property
    def norm2(self) -> Fraction:
        return self.x * self.x + self.y * self.y + self.z * self.z


def squared_distance(p: RationalPoint, q: RationalPoint) -> Fraction:
    return (p.x - q.x) ** 2 + (p.y - q.y) ** 2 + (p.z - q.z) ** 2


@dataclass(frozen=True)
class PointSet:
    """A finite tuple of pairwise distinct rational points, id = position."""

    points: tuple[RationalPoint, ...]

    def __post_init__(self):
        seen: dict[RationalPoint, int] = {}
        for i, p in enumerate(self.points):
            if p in seen:
                raise DuplicatePoints(f"points {seen[p]} and {i} coincide")
            seen[p] = i

    @classmethod
    def of(cls, coords: Iterable[tuple]) -> "PointSet":
        return cls(tuple(RationalPoint.of(*c) for c in coords))

    def __len__(self) -> int:
        return len(self.points)

    def __getitem__(self, i: int) -> RationalPoint:
        return self.points[i]

    @property
    def ids(self) -> frozenset[int]:
        return frozenset(range(len(self.points)))


def load_points(source: str | Path) -> PointSet:
    """One point per line: three whitespace-separated rationals 'p/q' or ints."""
    text = Path(source).read_text() if isinstance(source, Path) else str(source)
    points = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        tokens = line.split()
        if len(tokens) != 3:
            raise ParseError(f"line {lineno}: expected three coordinates")
        try:
            points.append(RationalPoint(*(Fraction(tok) for tok in tokens)))
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"line {lineno}: bad rational: {exc}") from exc
    return PointSet(tuple(points))


def distance_graph(ps: PointSet) -> Graph:
    """A complete graph whose edge colors are squared-distance ranks."""
    n = len(ps)
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    values = sorted({squared_distance(ps[i], ps[j]) for i, j in pairs})
    rank = {d: r for r, d in enumerate(values)}
    edges = [
        (eid, i, j, rank[squared_distance(ps[i], ps[j])])
        for eid, (i, j) in enumerate(pairs)
    ]
    return Graph.build(range(n), edges)


def isometry_group(ps: PointSet, cap: int = DEFAULT_NODE_CAP) -> AutomorphismGroup:
    """Permutations of point ids preserving all pairwise squared distances."""
    return automorphism_group(distance_graph(ps), cap)


def matrix_rank(rows: Sequence[Sequence[Fraction]]) -> int:
    """Rank over the rationals by Gaussian elimination, exact."""
    m = [list(row) for row in rows]
    if not m:
        return 0
    cols = len(m[0])
    rank = 0
    for col in range(cols):
        pivot = next((r for r in range(rank, len(m)) if m[r][col] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        head = m[rank][col]
        m[rank] = [v / head for v in m[rank]]
        for r in range(len(m)):
            if r != rank and m[r][col] != 0:
                factor = m[r][col]
                m[r] = [a - factor * b for a, b in zip(m[r], m[rank])]
        rank += 1
        if rank == len(m):
            break
    return rank


def on_common_sphere(
    points: Sequence[RationalPoint], allow_planes: bool = False
) -> bool:
    """Whether all the points lie on one genuine sphere, decided exactly.

    A sphere is a solution (a,b,c,d,e), a != 0, of
    a(x^2+y^2+z^2) + bx + cy + dz + e = 0 through every point; the test is a
    rank comparison on the moment matrix with rows (|p|^2, x, y, z, 1).  With
    ``allow_planes`` a plane (a = 0) also counts, which reduces to the moment
    matrix having a nontrivial kernel at all.
    """
    pts = list(points)
    if not pts:
        raise PreconditionViolated("sphere test needs at least one point")
    if len(set(pts)) != len(pts):
        raise DuplicatePoints("sphere test needs distinct points")
    rows = [[p.norm2, p.x, p.y, p.z, Fraction(1)] for p in pts]
    full = matrix_rank(rows)
    if allow_planes:
        return full <= 4
    # a kernel vector with a != 0 exists iff dropping the quadratic column
    # does not lower the rank
    return matrix_rank([row[1:] for row in rows]) == full
