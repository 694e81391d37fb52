"""Exact linear algebra over the rationals.

Everything here works on lists of lists of Fraction and never touches
floating point.  Sizes in this package stay tiny (at most a few dozen
rows), so plain Gaussian elimination is the right tool.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

Vec = list[Fraction]
Mat = list[list[Fraction]]


def frac(x) -> Fraction:
    """Coerce ints, strings like '3/4', and Fractions to Fraction."""
    if isinstance(x, Fraction):
        return x
    return Fraction(x)


def vec(xs: Iterable) -> Vec:
    return [frac(x) for x in xs]


def mat(rows: Iterable[Iterable]) -> Mat:
    return [vec(r) for r in rows]


def identity(n: int) -> Mat:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def zeros(n: int, m: int) -> Mat:
    return [[Fraction(0)] * m for _ in range(n)]


def transpose(a: Sequence[Sequence[Fraction]]) -> Mat:
    return [list(col) for col in zip(*a)]


def matmul(a: Mat, b: Mat) -> Mat:
    n, k, m = len(a), len(b), len(b[0])
    out = zeros(n, m)
    for i in range(n):
        ai = a[i]
        oi = out[i]
        for t in range(k):
            c = ai[t]
            if c:
                bt = b[t]
                for j in range(m):
                    if bt[j]:
                        oi[j] += c * bt[j]
    return out


def matvec(a: Mat, v: Sequence[Fraction]) -> Vec:
    return [sum((row[j] * v[j] for j in range(len(v)) if v[j]), Fraction(0)) for row in a]


def dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    return sum((x * y for x, y in zip(u, v)), Fraction(0))


def scale(v: Sequence[Fraction], c: Fraction) -> Vec:
    return [c * x for x in v]


def add(u: Sequence[Fraction], v: Sequence[Fraction]) -> Vec:
    return [x + y for x, y in zip(u, v)]


def sub(u: Sequence[Fraction], v: Sequence[Fraction]) -> Vec:
    return [x - y for x, y in zip(u, v)]


def rank(rows: Iterable[Sequence[Fraction]]) -> int:
    """Rank of a rational matrix by fraction-free-ish Gaussian elimination."""
    work = [list(r) for r in rows]
    if not work:
        return 0
    ncols = len(work[0])
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(work)) if work[i][col]), None)
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        prow = work[r]
        inv = 1 / prow[col]
        for i in range(len(work)):
            if i != r and work[i][col]:
                f = work[i][col] * inv
                row = work[i]
                for j in range(col, ncols):
                    if prow[j]:
                        row[j] -= f * prow[j]
        r += 1
        if r == len(work):
            break
    return r


def solve(a: Mat, b: Sequence[Fraction]) -> Vec:
    """Solve a square nonsingular system exactly.  Raises on singular input."""
    n = len(a)
    work = [list(a[i]) + [b[i]] for i in range(n)]
    for col in range(n):
        piv = next((i for i in range(col, n) if work[i][col]), None)
        if piv is None:
            raise ValueError("singular system")
        work[col], work[piv] = work[piv], work[col]
        prow = work[col]
        inv = 1 / prow[col]
        for j in range(col, n + 1):
            prow[j] *= inv
        for i in range(n):
            if i != col and work[i][col]:
                f = work[i][col]
                row = work[i]
                for j in range(col, n + 1):
                    if prow[j]:
                        row[j] -= f * prow[j]
    return [work[i][n] for i in range(n)]


def nullity(rows: Iterable[Sequence[Fraction]], ncols: int) -> int:
    """Dimension of the kernel of the linear map given by the rows acting on Q^ncols.

    The rows are the images of the ncols standard generators, flattened; the
    kernel lives in generator space, so this is ncols minus the rank of the
    matrix whose i-th row is the image of generator i.
    """
    return ncols - rank(rows)


def det(a: Mat) -> Fraction:
    """Determinant by elimination, exact."""
    n = len(a)
    work = [list(r) for r in a]
    out = Fraction(1)
    for col in range(n):
        piv = next((i for i in range(col, n) if work[i][col]), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            work[col], work[piv] = work[piv], work[col]
            out = -out
        prow = work[col]
        out *= prow[col]
        inv = 1 / prow[col]
        for i in range(col + 1, n):
            if work[i][col]:
                f = work[i][col] * inv
                row = work[i]
                for j in range(col, n):
                    if prow[j]:
                        row[j] -= f * prow[j]
    return out


def primitive_integer(v: Sequence[Fraction]) -> list[int]:
    """Scale a nonzero rational vector to integers with gcd 1, preserving direction."""
    from math import gcd

    dens = [x.denominator for x in v]
    lcm = 1
    for d in dens:
        lcm = lcm * d // gcd(lcm, d)
    ints = [int(x * lcm) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    if g == 0:
        raise ValueError("zero vector has no primitive form")
    return [x // g for x in ints]
