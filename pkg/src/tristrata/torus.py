"""Torus weights of trivector coordinates and one-parameter subgroups.

The diagonal torus acts on the coordinate e_{ijk} with character t_i t_j t_k.
After twisting by the determinantal character that makes the action
sum-zero, the coordinate weight of e_{ijk} is its indicator vector minus
(3/8, ..., 3/8).  Pairings use the standard dot product.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Sequence

from .exterior import N_COORDS, N_VARS, triple_of
from .linalg import Vec, dot, frac, primitive_integer

Weight = tuple[Fraction, ...]

_SHIFT = Fraction(3, 8)


def weight_of(idx: int) -> Weight:
    """Sum-zero torus weight of coordinate idx."""
    i, j, k = triple_of(idx)
    return tuple(
        Fraction(1) - _SHIFT if n in (i, j, k) else -_SHIFT
        for n in range(1, N_VARS + 1)
    )


ALL_WEIGHTS: list[Weight] = [weight_of(i) for i in range(1, N_COORDS + 1)]


def pair(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    """Standard dot product."""
    if len(u) != len(v):
        raise ValueError("length mismatch")
    return dot(list(u), list(v))


def ops_weight(idx: int, lam: Sequence[int]) -> int:
    """Weight of coordinate idx under the one-parameter subgroup lam: sum of three entries."""
    i, j, k = triple_of(idx)
    return lam[i - 1] + lam[j - 1] + lam[k - 1]


def check_ops(lam: Sequence[int]) -> None:
    """A one-parameter subgroup here is an integer vector of length 8 with sum zero."""
    if len(lam) != N_VARS:
        raise ValueError("one-parameter subgroup must have length 8")
    if any(not isinstance(x, int) for x in lam):
        raise ValueError("one-parameter subgroup entries must be integers")
    if sum(lam) != 0:
        raise ValueError("one-parameter subgroup entries must sum to zero")


def is_dominant(beta: Sequence[Fraction]) -> bool:
    """Entries weakly increasing."""
    return all(beta[i] <= beta[i + 1] for i in range(len(beta) - 1))


def primitive_ops(v: Sequence[Fraction]) -> list[int]:
    """Primitive integer vector in the direction of a nonzero rational vector."""
    out = primitive_integer(list(v))
    if pair([frac(x) for x in out], [frac(x) for x in v]) < 0:
        out = [-x for x in out]
    return out


_VEC_RE = re.compile(r"^\s*\[(?P<body>[^\]]*)\]\s*$")


def parse_weight(text: str) -> tuple[Fraction, ...]:
    """Parse '[a1,a2,...,a8]' with integer or rational entries."""
    m = _VEC_RE.match(text)
    if m is None:
        raise ValueError(f"bad weight syntax: {text!r}")
    parts = [p.strip() for p in m.group("body").split(",")]
    if len(parts) != N_VARS:
        raise ValueError(f"expected 8 entries, got {len(parts)}")
    try:
        return tuple(Fraction(p) for p in parts)
    except (ValueError, ZeroDivisionError) as e:
        raise ValueError(f"bad weight entry in {text!r}: {e}") from None


def serialize_weight(w: Sequence[Fraction]) -> str:
    return "[" + ",".join(str(frac(x)) for x in w) + "]"


def parse_ops(text: str) -> list[int]:
    """Parse a one-parameter subgroup '[n1,...,n8]' and validate it."""
    w = parse_weight(text)
    if any(x.denominator != 1 for x in w):
        raise ValueError(f"one-parameter subgroup must be integral: {text!r}")
    lam = [int(x) for x in w]
    check_ops(lam)
    return lam


def serialize_ops(lam: Sequence[int]) -> str:
    return "[" + ",".join(str(int(x)) for x in lam) + "]"
