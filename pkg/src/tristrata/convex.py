"""Exact convex geometry: minimum-norm points, hull membership, separating functionals.

All three operations run over the rationals with no tolerances.  The
minimum-norm routine is Wolfe's algorithm with exact arithmetic, which
terminates because the squared norm strictly decreases at every major
cycle and there are finitely many corrals.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Sequence

from .linalg import Vec, dot, frac, primitive_integer, solve, sub


@dataclass
class NearestPointCertificate:
    """Minimum-norm point of a convex hull together with its convex combination."""

    point: tuple[Fraction, ...]
    coefficients: dict[int, Fraction]

    def verify(self, points: Sequence[Sequence[Fraction]]) -> bool:
        """Check the convex combination and the supporting-hyperplane optimality test."""
        total = sum(self.coefficients.values(), Fraction(0))
        if total != 1 or any(c < 0 for c in self.coefficients.values()):
            return False
        dim = len(self.point)
        acc = [Fraction(0)] * dim
        for i, c in self.coefficients.items():
            p = points[i]
            for d in range(dim):
                acc[d] += c * frac(p[d])
        if tuple(acc) != tuple(self.point):
            return False
        q = dot(list(self.point), list(self.point))
        for p in points:
            if dot([frac(x) for x in p], list(self.point)) < q:
                return False
        return True


@dataclass
class PositiveFunctionalCertificate:
    """Integer functional taking value >= 1 on every input point after denominator clearing."""

    lam: list[int]
    scale: int
    margins: list[int] = field(default_factory=list)


def _affine_min_norm(pts: list[Vec]) -> tuple[Vec, list[Fraction]]:
    # Minimum-norm point of the affine hull of an affinely independent set:
    # KKT system 2 G a + mu 1 = 0, sum(a) = 1 in the combination weights a.
    m = len(pts)
    gram = [[dot(pts[i], pts[j]) for j in range(m)] for i in range(m)]
    rows = [[2 * gram[i][j] for j in range(m)] + [Fraction(1)] for i in range(m)]
    rows.append([Fraction(1)] * m + [Fraction(0)])
    rhs = [Fraction(0)] * m + [Fraction(1)]
    sol = solve(rows, rhs)
    alpha = sol[:m]
    dim = len(pts[0])
    y = [Fraction(0)] * dim
    for c, p in zip(alpha, pts):
        if c:
            for d in range(dim):
                y[d] += c * p[d]
    return y, alpha


def nearest_point(points: Sequence[Sequence[Fraction]]) -> NearestPointCertificate:
    """Minimum-norm point of the convex hull of the given rational points.

    Ties in the entering-point rule break toward the lowest point index, so
    the run is deterministic.
    """
    if not points:
        raise ValueError("need at least one point")
    pts = [[frac(x) for x in p] for p in points]
    dim = len(pts[0])
    if any(len(p) != dim for p in pts):
        raise ValueError("points must share a dimension")

    norms = [dot(p, p) for p in pts]
    start = min(range(len(pts)), key=lambda i: (norms[i], i))
    support = [start]
    weights = {start: Fraction(1)}
    x = list(pts[start])

    while True:
        xx = dot(x, x)
        if xx == 0:
            break
        best = None
        best_val = None
        for j, p in enumerate(pts):
            v = dot(x, p)
            if best_val is None or v < best_val:
                best_val, best = v, j
        if best_val >= xx:
            break
        # best is affinely independent of the corral: the current point is
        # orthogonal to the corral's affine hull shifted to it.
        support.append(best)
        weights[best] = Fraction(0)
        while True:
            pts_s = [pts[s] for s in support]
            y, alpha = _affine_min_norm(pts_s)
            if all(a > 0 for a in alpha):
                x = y
                weights = {s: a for s, a in zip(support, alpha)}
                break
            theta = None
            for s, a in zip(support, alpha):
                if a <= 0:
                    lam_s = weights[s]
                    bound = lam_s / (lam_s - a)
                    if theta is None or bound < theta:
                        theta = bound
            new_weights = {}
            for s, a in zip(support, alpha):
                w = (1 - theta) * weights[s] + theta * a
                new_weights[s] = w
            drop = [s for s in support if new_weights[s] <= 0]
            support = [s for s in support if s not in drop]
            weights = {s: new_weights[s] for s in support}
            x = [Fraction(0)] * dim
            for s in support:
                c = weights[s]
                for d in range(dim):
                    x[d] += c * pts[s][d]
    return NearestPointCertificate(point=tuple(x), coefficients=dict(weights))


def _simplex_phase1(a_rows: list[Vec], b: Vec) -> list[Fraction] | None:
    # Find x >= 0 with A x = b via artificial variables, Bland's rule throughout.
    m = len(a_rows)
    n = len(a_rows[0]) if m else 0
    rows = []
    rhs = []
    for i in range(m):
        if b[i] < 0:
            rows.append([-v for v in a_rows[i]])
            rhs.append(-b[i])
        else:
            rows.append(list(a_rows[i]))
            rhs.append(b[i])
    # tableau columns: n structural + m artificial
    tab = [rows[i] + [Fraction(int(i == j)) for j in range(m)] + [rhs[i]] for i in range(m)]
    basis = [n + i for i in range(m)]
    ncols = n + m

    def reduced_costs():
        # objective: sum of artificial variables
        cost = [Fraction(0)] * ncols
        for j in range(n, ncols):
            cost[j] = Fraction(1)
        z = [Fraction(0)] * (ncols + 1)
        for i, bv in enumerate(basis):
            cb = cost[bv]
            if cb:
                for j in range(ncols + 1):
                    z[j] += cb * tab[i][j]
        return [cost[j] - z[j] for j in range(ncols)], z[ncols]

    while True:
        red, obj = reduced_costs()
        enter = next((j for j in range(ncols) if red[j] < 0), None)
        if enter is None:
            break
        ratios = []
        for i in range(m):
            if tab[i][enter] > 0:
                ratios.append((tab[i][ncols] / tab[i][enter], basis[i], i))
        if not ratios:
            return None  # unbounded phase 1 cannot happen, defensive
        best = min(ratios, key=lambda t: (t[0], t[1]))
        leave = best[2]
        piv = tab[leave][enter]
        tab[leave] = [v / piv for v in tab[leave]]
        for i in range(m):
            if i != leave and tab[i][enter]:
                f = tab[i][enter]
                tab[i] = [tab[i][j] - f * tab[leave][j] for j in range(ncols + 1)]
        basis[leave] = enter
    _, obj = reduced_costs()
    if obj != 0:
        return None
    x = [Fraction(0)] * n
    for i, bv in enumerate(basis):
        if bv < n:
            x[bv] = tab[i][ncols]
        elif tab[i][ncols] != 0:
            return None  # artificial stuck at a nonzero level
    return x


def hull_contains(
    target: Sequence[Fraction], points: Sequence[Sequence[Fraction]]
) -> dict[int, Fraction] | None:
    """Convex-combination certificate for target in the hull, or None.

    Runs an exact phase-one simplex, so the answer is never approximate;
    the returned support is a basic solution and stays small.
    """
    if not points:
        return None
    tgt = [frac(x) for x in target]
    pts = [[frac(x) for x in p] for p in points]
    dim = len(tgt)
    if any(len(p) != dim for p in pts):
        raise ValueError("points must share a dimension")
    a_rows = [[pts[j][d] for j in range(len(pts))] for d in range(dim)]
    a_rows.append([Fraction(1)] * len(pts))
    b = tgt + [Fraction(1)]
    x = _simplex_phase1(a_rows, b)
    if x is None:
        return None
    return {j: c for j, c in enumerate(x) if c}


def positive_functional(
    points: Sequence[Sequence[Fraction]],
) -> PositiveFunctionalCertificate | None:
    """Primitive integer functional positive on every point, or None when 0 is in the hull.

    The functional is the minimum-norm point of the hull scaled to a
    primitive integer vector, so it lies in the span of the inputs; in
    particular sum-zero inputs give a sum-zero functional.
    """
    cert = nearest_point(points)
    if all(c == 0 for c in cert.point):
        return None
    lam = primitive_integer(list(cert.point))
    lam_f = [frac(v) for v in lam]
    vals = [dot([frac(x) for x in p], lam_f) for p in points]
    if any(v <= 0 for v in vals):
        raise AssertionError("minimum-norm direction failed to separate")
    scale = 1
    for v in vals:
        d = v.denominator
        scale = scale * d // gcd(scale, d)
    margins = [int(v * scale) for v in vals]
    return PositiveFunctionalCertificate(lam=lam, scale=scale, margins=margins)
