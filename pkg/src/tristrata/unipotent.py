"""Orbit expansions under the strictly lower block-unipotent group.

A polynomial ring over the pattern variables u_ij feeds a symbolic wedge of
the generic unipotent matrix columns against a fixed trivector.  The
difference n(u)R - R lands in the strict cone, and for an ordered slice of
variables it is triangular: each listed coordinate reads off one fresh
variable, up to sign, plus terms in earlier variables only.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .exterior import (
    Multivector,
    index_of,
    sort_triple,
    triple_of,
)
from .linalg import frac
from .strata import decompose, unipotent_pattern

Var = tuple[int, int]
Mono = tuple[Var, ...]  # sorted, with repetition


def var_name(v: Var) -> str:
    return f"u{v[0]}{v[1]}"


def parse_var(name: str) -> Var:
    m = re.fullmatch(r"u(\d)(\d)", name)
    if m is None:
        raise ValueError(f"bad variable name: {name!r}")
    i, j = int(m.group(1)), int(m.group(2))
    if not (1 <= j < i <= 8):
        raise ValueError(f"variable {name!r} is not strictly lower")
    return (i, j)


class UPoly:
    """Sparse polynomial in the u_ij, ordered graded-lex by (i, j)."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[Mono, Fraction] | None = None):
        self.terms = {m: c for m, c in (terms or {}).items() if c}

    @classmethod
    def zero(cls) -> "UPoly":
        return cls()

    @classmethod
    def const(cls, c) -> "UPoly":
        return cls({(): frac(c)})

    @classmethod
    def var(cls, v: Var) -> "UPoly":
        return cls({(v,): Fraction(1)})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, UPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "UPoly") -> "UPoly":
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, Fraction(0)) + c
        return UPoly(out)

    def __sub__(self, other: "UPoly") -> "UPoly":
        return self + other.scaled(-1)

    def __neg__(self) -> "UPoly":
        return self.scaled(-1)

    def scaled(self, c) -> "UPoly":
        c = frac(c)
        return UPoly({m: c * v for m, v in self.terms.items()})

    def __mul__(self, other: "UPoly") -> "UPoly":
        out: dict[Mono, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(sorted(m1 + m2))
                out[m] = out.get(m, Fraction(0)) + c1 * c2
        return UPoly(out)

    def coeff(self, mono: Mono) -> Fraction:
        return self.terms.get(tuple(sorted(mono)), Fraction(0))

    def variables(self) -> set[Var]:
        out: set[Var] = set()
        for m in self.terms:
            out.update(m)
        return out

    def evaluate(self, values: dict[Var, Fraction]) -> Fraction:
        total = Fraction(0)
        for m, c in self.terms.items():
            prod = c
            for v in m:
                prod *= frac(values.get(v, Fraction(0)))
            total += prod
        return total

    def sorted_terms(self) -> list[tuple[Mono, Fraction]]:
        return sorted(self.terms.items(), key=lambda t: (len(t[0]), t[0]))

    def __repr__(self):
        return f"UPoly({serialize_upoly(self)!r})"


def serialize_upoly(p: UPoly) -> str:
    if not p:
        return "0"
    parts = []
    for mono, c in p.sorted_terms():
        sign = "+" if c > 0 else "-"
        body = str(abs(c))
        for v in mono:
            body += "*" + var_name(v)
        parts.append(f"{sign}{body}")
    return " ".join(parts)


_TERM_RE = re.compile(r"([+-])\s*(\d+(?:/\d+)?)((?:\*u\d\d)*)")


def parse_upoly(text: str) -> UPoly:
    s = text.strip()
    if s == "0":
        return UPoly.zero()
    if not s:
        raise ValueError("empty polynomial text")
    if s[0] not in "+-":
        s = "+" + s
    pos = 0
    terms: dict[Mono, Fraction] = {}
    while pos < len(s):
        m = _TERM_RE.match(s, pos)
        if m is None or (stripped := s[pos:m.start()].strip()):
            raise ValueError(f"bad polynomial text at {s[pos:pos + 20]!r}")
        c = Fraction(m.group(2))
        if m.group(1) == "-":
            c = -c
        mono = tuple(sorted(parse_var(v) for v in m.group(3).split("*") if v))
        terms[mono] = terms.get(mono, Fraction(0)) + c
        pos = m.end()
        while pos < len(s) and s[pos] == " ":
            pos += 1
    return UPoly(terms)


PolyMultivector = dict[int, UPoly]


def generic_unipotent(beta: Sequence[Fraction]) -> list[list[UPoly]]:
    """Identity plus one variable at every strictly lower cross-block slot."""
    n = [[UPoly.zero() for _ in range(8)] for _ in range(8)]
    for k in range(8):
        n[k][k] = UPoly.const(1)
    for (i, j) in unipotent_pattern(beta):
        n[i - 1][j - 1] = UPoly.var((i, j))
    return n


def numeric_unipotent(
    beta: Sequence[Fraction], values: dict[Var, Fraction]
) -> list[list[Fraction]]:
    n = [[Fraction(0)] * 8 for _ in range(8)]
    for k in range(8):
        n[k][k] = Fraction(1)
    pattern = set(unipotent_pattern(beta))
    for v, c in values.items():
        if v not in pattern:
            raise ValueError(f"{var_name(v)} is not a pattern variable here")
        n[v[0] - 1][v[1] - 1] = frac(c)
    return n


def orbit_expansion(beta: Sequence[Fraction], r: Multivector) -> PolyMultivector:
    """n(u) . r - r as polynomials per coordinate; lands in the strict cone."""
    n = generic_unipotent(beta)
    cols: list[list[tuple[int, UPoly]]] = []
    for j in range(8):
        cols.append([(i, n[i][j]) for i in range(8) if n[i][j]])
    acc: PolyMultivector = {}
    for idx in r.support():
        a, b, c3 = triple_of(idx)
        coeff = r[idx]
        for i1, p1 in cols[a - 1]:
            for i2, p2 in cols[b - 1]:
                for i3, p3 in cols[c3 - 1]:
                    st = sort_triple(i1 + 1, i2 + 1, i3 + 1)
                    if st is None:
                        continue
                    sign, triple = st
                    term = (p1 * p2 * p3).scaled(sign * coeff)
                    tgt = index_of(triple)
                    acc[tgt] = acc.get(tgt, UPoly.zero()) + term
    for idx in r.support():
        acc[idx] = acc.get(idx, UPoly.zero()) - UPoly.const(r[idx])
    out = {idx: p for idx, p in acc.items() if p}
    dec = decompose(beta)
    w_set = set(dec.w_coords)
    stray = sorted(set(out) - w_set)
    if stray:
        raise ValueError(
            "expansion leaves the strict cone at coordinates "
            + " ".join(str(i) for i in stray)
        )
    return out


@dataclass
class TriangularLine:
    coord: int
    lead: Var
    sign: int  # +1 or -1, 0 when the form fails
    ok: bool
    message: str


@dataclass
class TriangularReport:
    lines: list[TriangularLine]
    ok: bool


def check_triangular(
    expansion: PolyMultivector,
    var_order: Sequence[Var],
    coord_order: Sequence[int],
) -> TriangularReport:
    """Leading-variable triangularity along the declared orders.

    The last len(coord_order) variables pair off with the coordinates in
    order; each coordinate's polynomial must be (+-1) times its paired
    variable plus terms using strictly earlier variables only.
    """
    k = len(coord_order)
    if k > len(var_order):
        raise ValueError("more coordinates than variables")
    if len(set(var_order)) != len(var_order):
        raise ValueError("repeated variable in order")
    if len(set(coord_order)) != k:
        raise ValueError("repeated coordinate in order")
    n_frozen = len(var_order) - k
    leads = list(var_order[n_frozen:])
    lines: list[TriangularLine] = []
    extra = sorted(set(expansion) - set(coord_order))
    all_ok = not extra
    for t, (coord, lead) in enumerate(zip(coord_order, leads)):
        poly = expansion.get(coord, UPoly.zero())
        sign_c = poly.coeff((lead,))
        if sign_c not in (Fraction(1), Fraction(-1)):
            lines.append(
                TriangularLine(
                    coord, lead, 0, False,
                    f"leading coefficient of {var_name(lead)} is {sign_c}",
                )
            )
            all_ok = False
            continue
        allowed = set(var_order[: n_frozen + t])
        rest = poly - UPoly.var(lead).scaled(sign_c)
        bad = sorted(rest.variables() - allowed)
        if bad:
            lines.append(
                TriangularLine(
                    coord, lead, int(sign_c), False,
                    "tail uses later variables: "
                    + " ".join(var_name(v) for v in bad),
                )
            )
            all_ok = False
        else:
            lines.append(TriangularLine(coord, lead, int(sign_c), True, "ok"))
    if extra:
        lines.append(
            TriangularLine(
                extra[0], (0, 0), 0, False,
                "expansion touches coordinates outside the declared order: "
                + " ".join(str(i) for i in extra),
            )
        )
    return TriangularReport(lines=lines, ok=all_ok)


def substitute(
    expansion: PolyMultivector, values: dict[Var, Fraction]
) -> Multivector:
    out = Multivector.zero()
    for idx, poly in expansion.items():
        v = poly.evaluate(values)
        if v:
            out = out + Multivector.basis(idx).scaled(v)
    return out


def serialize_expansion(
    expansion: PolyMultivector, coord_order: Iterable[int] | None = None
) -> str:
    order = list(coord_order) if coord_order is not None else sorted(expansion)
    missing = sorted(set(expansion) - set(order))
    order += missing
    lines = []
    for idx in order:
        a, b, c = triple_of(idx)
        lines.append(f"e{a}{b}{c} : {serialize_upoly(expansion.get(idx, UPoly.zero()))}")
    return "\n".join(lines)


def parse_expansion(text: str) -> PolyMultivector:
    out: PolyMultivector = {}
    for n, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        m = re.fullmatch(r"e(\d)(\d)(\d)\s*:\s*(.*)", line)
        if m is None:
            raise ValueError(f"line {n}: bad expansion line {line!r}")
        st = sort_triple(int(m.group(1)), int(m.group(2)), int(m.group(3)))
        if st is None or st[0] != 1:
            raise ValueError(f"line {n}: coordinate label must be strictly increasing")
        idx = index_of(st[1])
        if idx in out:
            raise ValueError(f"line {n}: repeated coordinate")
        poly = parse_upoly(m.group(4))
        if poly:
            out[idx] = poly
    return out
