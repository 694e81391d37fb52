"""Destabilizing one-parameter subgroups certifying that strata miss their cone.

A certificate pins a subset of critical-cone coordinates to zero and names a
sum-zero integer cocharacter whose weight is strictly positive on every
remaining critical coordinate.  Checking one is pure arithmetic; proposing
one for a given zero set is the exact min-norm separation problem.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .convex import positive_functional
from .strata import decompose
from .torus import check_ops, ops_weight, weight_of


@dataclass
class CertificateReport:
    beta: tuple[Fraction, ...]
    zero_coords: tuple[int, ...]
    ops: tuple[int, ...]
    weights: dict[int, int]
    failures: list[str]

    @property
    def ok(self) -> bool:
        return not self.failures


def verify_certificate(
    beta: Sequence[Fraction],
    zero_coords: Sequence[int],
    ops: Sequence[int],
    expected_weights: dict[int, int] | None = None,
) -> CertificateReport:
    """Recompute every weight of the certificate and demand strict positivity."""
    failures: list[str] = []
    try:
        check_ops(ops)
    except ValueError as e:
        return CertificateReport(
            beta=tuple(beta),
            zero_coords=tuple(sorted(set(zero_coords))),
            ops=tuple(ops),
            weights={},
            failures=[str(e)],
        )
    dec = decompose(beta)
    z_set = set(dec.z_coords)
    zeros = sorted(set(zero_coords))
    outside = [c for c in zeros if c not in z_set]
    if outside:
        failures.append(
            "zero coordinates outside the critical set: "
            + " ".join(str(c) for c in outside)
        )
    remaining = [c for c in dec.z_coords if c not in set(zeros)]
    weights: dict[int, int] = {}
    for c in remaining:
        w = ops_weight(c, ops)
        if w != int(w):
            failures.append(f"coordinate {c}: non-integer weight {w}")
            continue
        w = int(w)
        weights[c] = w
        if w <= 0:
            failures.append(f"coordinate {c}: weight {w} is not positive")
    if expected_weights is not None:
        if set(expected_weights) != set(remaining):
            failures.append(
                "recorded weight keys do not cover exactly the surviving "
                "critical coordinates"
            )
        else:
            for c in remaining:
                if expected_weights[c] != weights.get(c):
                    failures.append(
                        f"coordinate {c}: recorded weight {expected_weights[c]} "
                        f"differs from recomputed {weights.get(c)}"
                    )
    return CertificateReport(
        beta=tuple(beta),
        zero_coords=tuple(zeros),
        ops=tuple(int(a) for a in ops),
        weights=weights,
        failures=failures,
    )


@dataclass
class Suggestion:
    ops: tuple[int, ...]
    margins: dict[int, int]


def suggest_1ps(
    beta: Sequence[Fraction], zero_coords: Sequence[int]
) -> Suggestion | None:
    """Propose a certificate cocharacter for the given zero set, if one exists.

    The surviving critical weights all sum to zero componentwise-free in the
    traceless hyperplane, so the separating functional from the min-norm
    point is itself a valid sum-zero cocharacter.  Returns None when zero
    lies in the hull, in which case no certificate of this shape exists.
    """
    dec = decompose(beta)
    zeros = set(zero_coords)
    remaining = [c for c in dec.z_coords if c not in zeros]
    if not remaining:
        raise ValueError("empty weight system: nothing to separate")
    points = [weight_of(c) for c in remaining]
    cert = positive_functional(points)
    if cert is None:
        return None
    ops = tuple(cert.lam)
    check_ops(ops)
    rep = verify_certificate(beta, sorted(zeros), ops)
    if not rep.ok:
        raise AssertionError(
            "internal error: suggested cocharacter fails its own check: "
            + "; ".join(rep.failures)
        )
    return Suggestion(ops=ops, margins=dict(rep.weights))
