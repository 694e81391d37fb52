"""Trivectors in eight variables with exact rational coefficients.

The 56 basis trivectors e_{ijk} (1 <= i < j < k <= 8) are numbered 1..56 in
lexicographic order of the index triples.  A group element acts on columns:
g sends the j-th basis vector to the j-th column of its matrix.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .linalg import Mat, Vec, frac

N_VARS = 8
N_COORDS = 56

TRIPLES: list[tuple[int, int, int]] = [
    (i, j, k)
    for i in range(1, N_VARS + 1)
    for j in range(i + 1, N_VARS + 1)
    for k in range(j + 1, N_VARS + 1)
]

_INDEX: dict[tuple[int, int, int], int] = {t: n + 1 for n, t in enumerate(TRIPLES)}


def index_of(triple: tuple[int, int, int]) -> int:
    """Coordinate number (1..56) of an ascending index triple."""
    try:
        return _INDEX[triple]
    except KeyError:
        raise ValueError(f"not an ascending triple in 1..8: {triple}") from None


def triple_of(idx: int) -> tuple[int, int, int]:
    """Index triple of a coordinate number."""
    if not 1 <= idx <= N_COORDS:
        raise ValueError(f"coordinate out of range: {idx}")
    return TRIPLES[idx - 1]


def sort_triple(a: int, b: int, c: int) -> tuple[int, tuple[int, int, int]] | None:
    """Sort three distinct indices, returning (sign, ascending triple).

    Returns None when two indices coincide.
    """
    if a == b or a == c or b == c:
        return None
    sign = 1
    if a > b:
        a, b = b, a
        sign = -sign
    if b > c:
        b, c = c, b
        sign = -sign
    if a > b:
        a, b = b, a
        sign = -sign
    return sign, (a, b, c)


class Multivector:
    """Sparse trivector: a map from coordinate numbers to nonzero rationals."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: dict[int, Fraction] | None = None):
        self.coeffs: dict[int, Fraction] = {}
        if coeffs:
            for idx, c in coeffs.items():
                c = frac(c)
                if c:
                    if not 1 <= idx <= N_COORDS:
                        raise ValueError(f"coordinate out of range: {idx}")
                    self.coeffs[idx] = c

    @classmethod
    def zero(cls) -> "Multivector":
        return cls()

    @classmethod
    def basis(cls, idx: int) -> "Multivector":
        return cls({idx: Fraction(1)})

    @classmethod
    def from_terms(cls, terms: Iterable[tuple[tuple[int, int, int], Fraction]]) -> "Multivector":
        out: dict[int, Fraction] = {}
        for triple, c in terms:
            idx = index_of(triple)
            out[idx] = out.get(idx, Fraction(0)) + frac(c)
        return cls(out)

    def __getitem__(self, idx: int) -> Fraction:
        return self.coeffs.get(idx, Fraction(0))

    def support(self) -> list[int]:
        return sorted(self.coeffs)

    def __iter__(self) -> Iterator[tuple[int, Fraction]]:
        return iter(sorted(self.coeffs.items()))

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        return isinstance(other, Multivector) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __add__(self, other: "Multivector") -> "Multivector":
        out = dict(self.coeffs)
        for idx, c in other.coeffs.items():
            out[idx] = out.get(idx, Fraction(0)) + c
        return Multivector(out)

    def __sub__(self, other: "Multivector") -> "Multivector":
        out = dict(self.coeffs)
        for idx, c in other.coeffs.items():
            out[idx] = out.get(idx, Fraction(0)) - c
        return Multivector(out)

    def __neg__(self) -> "Multivector":
        return Multivector({i: -c for i, c in self.coeffs.items()})

    def scaled(self, c) -> "Multivector":
        c = frac(c)
        return Multivector({i: c * v for i, v in self.coeffs.items()})

    def __repr__(self) -> str:
        return f"Multivector({serialize_multivector(self)!r})"


def wedge3(v1: Sequence, v2: Sequence, v3: Sequence) -> Multivector:
    """Wedge product of three vectors of length 8."""
    cols = []
    for v in (v1, v2, v3):
        if len(v) != N_VARS:
            raise ValueError("vectors must have length 8")
        cols.append({i + 1: frac(x) for i, x in enumerate(v) if frac(x)})
    out: dict[int, Fraction] = {}
    for a, ca in cols[0].items():
        for b, cb in cols[1].items():
            cab = ca * cb
            for c, cc in cols[2].items():
                st = sort_triple(a, b, c)
                if st is None:
                    continue
                sign, triple = st
                idx = _INDEX[triple]
                out[idx] = out.get(idx, Fraction(0)) + sign * cab * cc
    return Multivector(out)


def gl_apply(g: Mat, x: Multivector) -> Multivector:
    """Action of an 8x8 matrix on a trivector, basis vectors going to columns."""
    if len(g) != N_VARS or any(len(r) != N_VARS for r in g):
        raise ValueError("matrix must be 8x8")
    cols = [
        {i + 1: g[i][j] for i in range(N_VARS) if g[i][j]}
        for j in range(N_VARS)
    ]
    out: dict[int, Fraction] = {}
    for idx, coeff in x.coeffs.items():
        a, b, c = TRIPLES[idx - 1]
        for i, ci in cols[a - 1].items():
            for j, cj in cols[b - 1].items():
                cij = ci * cj
                for k, ck in cols[c - 1].items():
                    st = sort_triple(i, j, k)
                    if st is None:
                        continue
                    sign, triple = st
                    t = _INDEX[triple]
                    out[t] = out.get(t, Fraction(0)) + sign * coeff * cij * ck
    return Multivector(out)


def lie_apply(t: Fraction, a: Mat, x: Multivector) -> Multivector:
    """Infinitesimal action of (t, A) in gl1 + gl8: t x plus A acting as a derivation."""
    t = frac(t)
    if len(a) != N_VARS or any(len(r) != N_VARS for r in a):
        raise ValueError("matrix must be 8x8")
    cols = [
        {i + 1: a[i][j] for i in range(N_VARS) if a[i][j]}
        for j in range(N_VARS)
    ]
    out: dict[int, Fraction] = {}
    if t:
        for idx, c in x.coeffs.items():
            out[idx] = out.get(idx, Fraction(0)) + t * c
    for idx, coeff in x.coeffs.items():
        triple = TRIPLES[idx - 1]
        for slot in range(3):
            rest = [triple[s] for s in range(3) if s != slot]
            for i, ci in cols[triple[slot] - 1].items():
                st = sort_triple(i, rest[0], rest[1]) if slot == 0 else (
                    sort_triple(rest[0], i, rest[1]) if slot == 1 else sort_triple(rest[0], rest[1], i)
                )
                if st is None:
                    continue
                sign, tr = st
                n = _INDEX[tr]
                out[n] = out.get(n, Fraction(0)) + sign * coeff * ci
    return Multivector(out)


_TERM_RE = re.compile(r"([+-])\s*(\d+(?:/\d+)?)\s*e(\d)(\d)(\d)")
_NUM_RE = re.compile(r"\s*")


def parse_multivector(text: str) -> Multivector:
    """Parse '+1 e236 -1 e168' style text.  '0' denotes the zero trivector."""
    s = text.strip()
    if s == "0":
        return Multivector.zero()
    out: dict[int, Fraction] = {}
    pos = 0
    found = False
    while pos < len(s):
        m = _TERM_RE.match(s, pos)
        if m is None:
            if s[pos].isspace():
                pos += 1
                continue
            raise ValueError(f"bad multivector syntax at {s[pos:pos+16]!r}")
        found = True
        sign, num, i, j, k = m.groups()
        c = Fraction(num)
        if sign == "-":
            c = -c
        idx = index_of((int(i), int(j), int(k)))
        out[idx] = out.get(idx, Fraction(0)) + c
        pos = m.end()
    if not found:
        raise ValueError(f"empty multivector text: {text!r}")
    return Multivector(out)


def serialize_multivector(x: Multivector) -> str:
    """Canonical text form: signed terms in coordinate order, '0' when empty."""
    if not x:
        return "0"
    parts = []
    for idx, c in x:
        i, j, k = triple_of(idx)
        sign = "+" if c > 0 else "-"
        parts.append(f"{sign}{abs(c)} e{i}{j}{k}")
    return " ".join(parts)
