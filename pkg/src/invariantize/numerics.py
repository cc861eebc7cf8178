"""Exact arithmetic helpers.

Everything here is integer/rational arithmetic: the quadratic growth bound and
its iterates, exact comparisons against base-2 logarithms of integers, and
small dense linear algebra over the rationals. No floating point is used
anywhere in the package.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

_MAX_LOG_PRECISION = 1 << 16


def bound_step(x: Fraction | int) -> Fraction:
    """One application of the growth bound x -> x*(x+1)."""
    v = Fraction(x)
    return v * (v + 1)


def iterate_bound(x: Fraction | int, k: int) -> Fraction:
    """The k-fold iterate of x -> x*(x+1), computed exactly."""
    if k < 0:
        raise ValueError("iteration count must be nonnegative")
    v = Fraction(x)
    for _ in range(k):
        v = v * (v + 1)
    return v


def is_power_of_two(n: int) -> bool:
    return n >= 1 and (n & (n - 1)) == 0


def ceil_log2(n: int) -> int:
    """Smallest k with 2**k >= n, for integer n >= 1."""
    if n < 1:
        raise ValueError("ceil_log2 needs n >= 1")
    return (n - 1).bit_length()


def floor_log2_scaled(n: int, s: int) -> int:
    """floor(s * log2(n)) for integers n >= 1, s >= 1."""
    if n < 1 or s < 1:
        raise ValueError("floor_log2_scaled needs n, s >= 1")
    return (n**s).bit_length() - 1


def cmp_log2(n: int, r: Fraction) -> int:
    """Compare log2(n) with the rational r exactly: -1, 0 or +1.

    For n a power of two the comparison is immediate.  Otherwise log2(n) is
    irrational, so equality is impossible and a rational sandwich of shrinking
    width decides the strict comparison.
    """
    if n < 1:
        raise ValueError("cmp_log2 needs n >= 1")
    if is_power_of_two(n):
        exact = Fraction(n.bit_length() - 1)
        return (exact > r) - (exact < r)
    s = 4
    while s <= _MAX_LOG_PRECISION:
        m = floor_log2_scaled(n, s)
        # m/s < log2(n) < (m+1)/s, both strictly (log2(n) is irrational)
        if r <= Fraction(m, s):
            return 1
        if r >= Fraction(m + 1, s):
            return -1
        s *= 2
    raise ArithmeticError("log2 comparison undecided at maximum precision")


def log2_le_iterated_bound(a: int, b: int, k: int) -> bool:
    """Decide log2(a) <= F^k(log2(b)) exactly, where F(x) = x*(x+1).

    a and b are integers >= 1.  When b is a power of two the right-hand side
    is an exact rational.  Otherwise log2(b) is irrational and the decision
    is made by evaluating F^k on rational lower/upper bounds of log2(b),
    tightening until one side is certified.
    """
    if a < 1 or b < 1:
        raise ValueError("log2_le_iterated_bound needs a, b >= 1")
    if a == 1:
        return True
    if is_power_of_two(b):
        return cmp_log2(a, iterate_bound(b.bit_length() - 1, k)) <= 0
    if k == 0:
        return a <= b
    s = 8
    while s <= _MAX_LOG_PRECISION:
        m = floor_log2_scaled(b, s)
        if cmp_log2(a, iterate_bound(Fraction(m, s), k)) <= 0:
            return True
        if cmp_log2(a, iterate_bound(Fraction(m + 1, s), k)) > 0:
            return False
        s *= 2
    raise ArithmeticError("bound comparison undecided at maximum precision")


def rref(rows: Sequence[Sequence[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form and the list of pivot column indices."""
    mat = [[Fraction(x) for x in row] for row in rows]
    if not mat:
        return [], []
    ncols = len(mat[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = next((i for i in range(r, len(mat)) if mat[i][c] != 0), None)
        if pivot_row is None:
            continue
        mat[r], mat[pivot_row] = mat[pivot_row], mat[r]
        inv = 1 / mat[r][c]
        mat[r] = [x * inv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c] != 0:
                factor = mat[i][c]
                mat[i] = [x - factor * y for x, y in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return mat, pivots


def kernel_basis(rows: Sequence[Sequence[Fraction]]) -> list[list[Fraction]]:
    """Basis of the right kernel of the matrix, via exact Gauss-Jordan."""
    if not rows:
        return []
    ncols = len(rows[0])
    mat, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * ncols
        vec[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            vec[pc] = -mat[r][fc]
        basis.append(vec)
    return basis


def solve_square(a: Sequence[Sequence[Fraction]], b: Sequence[Fraction]) -> list[Fraction] | None:
    """Solve A x = b for square A; None when A is singular."""
    n = len(a)
    aug = [list(row) + [rhs] for row, rhs in zip(a, b)]
    mat, pivots = rref(aug)
    if len(pivots) < n or any(p >= n for p in pivots):
        return None
    return [mat[i][n] for i in range(n)]
