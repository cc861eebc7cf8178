"""Independent sphere oracle: circumcenter geometry instead of matrix rank.

Case analysis: up to two points always fit a sphere; three or more collinear
points never do; coplanar points fit one exactly when they are concyclic
(checked against the circumcircle of a non-collinear triple); otherwise an
affinely independent quadruple determines a unique circumsphere and every
point must lie on it.
"""

from fractions import Fraction

from invariantize.sets.points import RationalPoint


def sub(p: RationalPoint, q: RationalPoint):
    return (p.x - q.x, p.y - q.y, p.z - q.z)


def dot(u, v) -> Fraction:
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]


def cross(u, v):
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def _frame(points):
    """Split off an affine frame: origin, two spanning directions, the rest.

    Returns (origin, u, v, triple_point) where u, v are independent direction
    vectors and triple_point makes the frame 3D; v or triple_point are None
    when the points are collinear or coplanar respectively.
    """
    origin = points[0]
    u = next((sub(p, origin) for p in points[1:] if sub(p, origin) != (0, 0, 0)), None)
    if u is None:
        return origin, None, None, None
    v = next(
        (sub(p, origin) for p in points[1:] if cross(u, sub(p, origin)) != (0, 0, 0)),
        None,
    )
    if v is None:
        return origin, u, None, None
    normal = cross(u, v)
    w = next(
        (sub(p, origin) for p in points[1:] if dot(normal, sub(p, origin)) != 0),
        None,
    )
    return origin, u, v, w


def circumcenter_in_plane(origin, u, v):
    """Center equidistant from origin, origin+u, origin+v, inside their plane."""
    uu, vv, uv = dot(u, u), dot(v, v), dot(u, v)
    det = 4 * (uu * vv - uv * uv)
    alpha = (2 * uu * vv - 2 * uv * vv) / det
    beta = (2 * uu * vv - 2 * uu * uv) / det
    return tuple(
        o + alpha * cu + beta * cv
        for o, cu, cv in zip(origin.coords, u, v)
    )


def circumsphere_center(origin, u, v, w):
    """Center equidistant from origin and its three frame translates."""
    rows = [u, v, w]
    rhs = [Fraction(dot(d, d), 2) for d in rows]
    det = dot(rows[0], cross(rows[1], rows[2]))
    coords = []
    for col in range(3):
        replaced = [
            tuple(rhs[r] if c == col else rows[r][c] for c in range(3))
            for r in range(3)
        ]
        coords.append(dot(replaced[0], cross(replaced[1], replaced[2])) / det)
    return tuple(o + c for o, c in zip(origin.coords, coords))


def brute_on_common_sphere(points, allow_planes: bool = False) -> bool:
    pts = list(points)
    if len(set(pts)) != len(pts):
        raise ValueError("oracle needs distinct points")
    if len(pts) <= 2:
        return True
    origin, u, v, w = _frame(pts)
    if v is None:
        return allow_planes  # collinear: on many planes, never on a sphere
    if w is None:
        if allow_planes:
            return True
        center = circumcenter_in_plane(origin, u, v)
    else:
        center = circumsphere_center(origin, u, v, w)
    offsets = [tuple(c - o for c, o in zip(p.coords, center)) for p in pts]
    radii = {dot(d, d) for d in offsets}
    return len(radii) == 1
