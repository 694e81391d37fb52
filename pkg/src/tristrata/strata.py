"""Decomposition data attached to a candidate direction vector.

For a dominant rational vector b with (b, b) = q, coordinates split by the
pairing of their weight against b: equal to q (the flat part Z), greater
than q (the unstable cone W), and the rest.  Runs of equal entries of b cut
1..8 into blocks; those blocks determine the Levi subgroup, the primitive
one-parameter subgroup, and the strictly-lower unipotent pattern.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .convex import hull_contains
from .exterior import N_COORDS, N_VARS
from .torus import ALL_WEIGHTS, is_dominant, pair, primitive_ops, weight_of
from .linalg import frac


@dataclass
class Decomposition:
    beta: tuple[Fraction, ...]
    norm_sq: Fraction
    z_coords: list[int]
    w_coords: list[int]
    blocks: list[tuple[int, int]]
    lam: list[int]
    chi: list[int]

    @property
    def y_coords(self) -> list[int]:
        return sorted(self.z_coords + self.w_coords)


@dataclass
class BetaCertificate:
    """Membership of b in the hull of its own equal-pairing weights."""

    dominant: bool
    combination: dict[int, Fraction] | None

    @property
    def ok(self) -> bool:
        return self.dominant and self.combination is not None


def blocks_of(beta: Sequence[Fraction]) -> list[tuple[int, int]]:
    """Runs of equal entries as inclusive 1-based (start, end) pairs."""
    b = [frac(x) for x in beta]
    out = []
    start = 1
    for i in range(1, N_VARS):
        if b[i] != b[i - 1]:
            out.append((start, i))
            start = i + 1
    out.append((start, N_VARS))
    return out


def decompose(beta: Sequence[Fraction]) -> Decomposition:
    """Split coordinates against b and extract block data."""
    b = tuple(frac(x) for x in beta)
    if len(b) != N_VARS:
        raise ValueError("direction vector must have length 8")
    q = pair(b, b)
    if q == 0:
        raise ValueError("zero direction vector")
    z, w = [], []
    for idx in range(1, N_COORDS + 1):
        s = pair(ALL_WEIGHTS[idx - 1], b)
        if s == q:
            z.append(idx)
        elif s > q:
            w.append(idx)
    blocks = blocks_of(b)
    lam = primitive_ops(b)
    chi = [lam[start - 1] for start, _ in blocks]
    return Decomposition(
        beta=b, norm_sq=q, z_coords=z, w_coords=w, blocks=blocks, lam=lam, chi=chi
    )


def verify_beta(beta: Sequence[Fraction]) -> BetaCertificate:
    """Certify that b is the minimum-norm point of the hull of a weight subset.

    For dominant b it suffices that b lies in the hull of the weights
    pairing to exactly (b, b): every point of that hull then pairs to the
    same value, so b is the closest point of the hull spanned by its own
    equality set.
    """
    b = tuple(frac(x) for x in beta)
    dominant = is_dominant(b)
    dec = decompose(b)
    pts = [weight_of(i) for i in dec.z_coords]
    comb_raw = hull_contains(b, pts) if pts else None
    comb = None
    if comb_raw is not None:
        comb = {dec.z_coords[j]: c for j, c in comb_raw.items()}
    return BetaCertificate(dominant=dominant, combination=comb)


def unipotent_pattern(beta: Sequence[Fraction]) -> list[tuple[int, int]]:
    """Strictly-lower positions (i, j) with block(i) after block(j), row-major."""
    blocks = blocks_of(beta)
    which = {}
    for n, (s, e) in enumerate(blocks):
        for i in range(s, e + 1):
            which[i] = n
    return [
        (i, j)
        for i in range(1, N_VARS + 1)
        for j in range(1, N_VARS + 1)
        if which[i] > which[j]
    ]
