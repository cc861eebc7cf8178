"""Stock finite groups and the small-group corpus used across tests."""

from __future__ import annotations

from itertools import permutations

from .model import FiniteGroup


def cyclic(n: int) -> FiniteGroup:
    if n < 1:
        raise ValueError("cyclic group needs n >= 1")
    table = [[(a + b) % n for b in range(n)] for a in range(n)]
    return FiniteGroup(table, name=f"C{n}")


def dihedral(n: int) -> FiniteGroup:
    """Symmetries of the regular n-gon, order 2n; id = rotation + n*flip."""
    if n < 1:
        raise ValueError("dihedral group needs n >= 1")

    def mul(x: int, y: int) -> int:
        a1, b1 = x % n, x // n
        a2, b2 = y % n, y // n
        a = (a1 + (a2 if b1 == 0 else -a2)) % n
        return a + n * ((b1 + b2) % 2)

    table = [[mul(x, y) for y in range(2 * n)] for x in range(2 * n)]
    return FiniteGroup(table, name=f"D{n}")


def _perm_group(perms: list[tuple[int, ...]], name: str) -> FiniteGroup:
    pos = {p: i for i, p in enumerate(perms)}

    def compose(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
        return tuple(p[q[i]] for i in range(len(q)))

    table = [[pos[compose(p, q)] for q in perms] for p in perms]
    return FiniteGroup(table, name=name)


def symmetric(n: int) -> FiniteGroup:
    if not 1 <= n <= 5:
        raise ValueError("symmetric group supported for 1 <= n <= 5")
    return _perm_group(sorted(permutations(range(n))), name=f"S{n}")


def _parity(p: tuple[int, ...]) -> int:
    inversions = sum(
        1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j]
    )
    return inversions % 2


def alternating(n: int) -> FiniteGroup:
    if not 1 <= n <= 5:
        raise ValueError("alternating group supported for 1 <= n <= 5")
    evens = sorted(p for p in permutations(range(n)) if _parity(p) == 0)
    return _perm_group(evens, name=f"A{n}")


def quaternion() -> FiniteGroup:
    """The quaternion group of order 8; id = unit + 4*sign, units 1,i,j,k."""
    unit_mul = {
        (0, u): (0, u) for u in range(4)
    }
    unit_mul.update({(u, 0): (0, u) for u in range(4)})
    unit_mul.update(
        {
            (1, 1): (1, 0), (2, 2): (1, 0), (3, 3): (1, 0),
            (1, 2): (0, 3), (2, 1): (1, 3),
            (2, 3): (0, 1), (3, 2): (1, 1),
            (3, 1): (0, 2), (1, 3): (1, 2),
        }
    )

    def mul(x: int, y: int) -> int:
        ux, sx = x % 4, x // 4
        uy, sy = y % 4, y // 4
        s, u = unit_mul[(ux, uy)]
        return u + 4 * ((sx + sy + s) % 2)

    table = [[mul(x, y) for y in range(8)] for x in range(8)]
    return FiniteGroup(table, name="Q8")


def direct_product(g: FiniteGroup, h: FiniteGroup, name: str | None = None) -> FiniteGroup:
    """Componentwise product; id = a*|h| + b for (a, b)."""
    n = h.order
    table = [
        [g.mul(a1, a2) * n + h.mul(b1, b2) for a2 in range(g.order) for b2 in range(n)]
        for a1 in range(g.order)
        for b1 in range(n)
    ]
    return FiniteGroup(table, name=name or f"{g.name}x{h.name}")


def corpus() -> dict[str, FiniteGroup]:
    """The standing small-group test corpus."""
    groups: dict[str, FiniteGroup] = {}
    for n in range(2, 13):
        groups[f"C{n}"] = cyclic(n)
    groups["S3"] = symmetric(3)
    groups["D4"] = dihedral(4)
    groups["Q8"] = quaternion()
    groups["A4"] = alternating(4)
    groups["D6"] = dihedral(6)
    groups["S3xC2"] = direct_product(symmetric(3), cyclic(2))
    return groups
