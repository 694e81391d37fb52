"""Pfaffians, pencils, discriminants, and recipe-driven invariant evaluation.

The sign conventions are pinned once and reused everywhere: the Pfaffian
expands along the first row (so Pf of J-block diagonals is 1 and the 4x4
case reads af - be + cd), and the ternary quadratic discriminant is
normalized so that v1 v3 - v2^2 has discriminant 1.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .exterior import Multivector
from .linalg import Mat, Vec, det as rat_det, frac, identity

# ---------------------------------------------------------------------------
# alternating matrices


def require_alternating(m: Mat) -> None:
    n = len(m)
    for r in m:
        if len(r) != n:
            raise ValueError("matrix must be square")
    for i in range(n):
        if m[i][i] != 0:
            raise ValueError("alternating matrix needs zero diagonal")
        for j in range(i + 1, n):
            if m[i][j] != -m[j][i]:
                raise ValueError("matrix is not alternating")


def alt_from_upper(n: int, entries: dict[tuple[int, int], Fraction]) -> Mat:
    """Build an alternating matrix from upper-triangle entries (1-based)."""
    m = [[Fraction(0)] * n for _ in range(n)]
    for (i, j), c in entries.items():
        if not 1 <= i < j <= n:
            raise ValueError(f"bad upper position {(i, j)}")
        m[i - 1][j - 1] = frac(c)
        m[j - 1][i - 1] = -frac(c)
    return m


def pfaffian(m: Mat):
    """Pfaffian by first-row recursion; errors on odd size instead of returning 0."""
    require_alternating(m)
    if len(m) % 2:
        raise ValueError("odd alternating matrix has Pfaffian 0 by convention")
    return _pfaffian_any(m)


def _pfaffian_any(m):
    n = len(m)
    if n == 0:
        return Fraction(1)
    if n == 2:
        return m[0][1]
    total = None
    for j in range(1, n):
        c = m[0][j]
        if isinstance(c, Fraction) and not c:
            continue
        keep = [r for r in range(1, n) if r != j]
        minor = [[m[a][b] for b in keep] for a in keep]
        term = c * _pfaffian_any(minor)
        if j % 2 == 0:
            term = -term
        total = term if total is None else total + term
    if total is None:
        return m[0][0] * 0  # ring zero of the entry type
    return total


# ---------------------------------------------------------------------------
# small polynomial forms in pencil variables v1..vm


class FormPoly:
    """Homogeneous-ish polynomial in a fixed number of pencil variables."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: dict[tuple[int, ...], Fraction] | None = None):
        self.nvars = nvars
        self.terms: dict[tuple[int, ...], Fraction] = {}
        if terms:
            for e, c in terms.items():
                c = frac(c)
                if c:
                    self.terms[tuple(e)] = c

    @classmethod
    def const(cls, nvars: int, c) -> "FormPoly":
        return cls(nvars, {(0,) * nvars: frac(c)})

    @classmethod
    def var(cls, nvars: int, i: int) -> "FormPoly":
        e = [0] * nvars
        e[i] = 1
        return cls(nvars, {tuple(e): Fraction(1)})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return (
            isinstance(other, FormPoly)
            and self.nvars == other.nvars
            and self.terms == other.terms
        )

    def __add__(self, other):
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, Fraction(0)) + c
        return FormPoly(self.nvars, out)

    def __sub__(self, other):
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, Fraction(0)) - c
        return FormPoly(self.nvars, out)

    def __neg__(self):
        return FormPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return FormPoly(self.nvars, {e: c * other for e, c in self.terms.items()})
        out: dict[tuple[int, ...], Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, Fraction(0)) + c1 * c2
        return FormPoly(self.nvars, out)

    __rmul__ = __mul__

    def coeff(self, *exps: int) -> Fraction:
        return self.terms.get(tuple(exps), Fraction(0))

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def substitute_matrix(self, g: Mat) -> "FormPoly":
        """Right substitution v -> v g, for covariance checks."""
        m = self.nvars
        newvars = [
            sum(
                (FormPoly.var(m, i) * g[i][j] for i in range(m) if g[i][j]),
                FormPoly(m),
            )
            for j in range(m)
        ]
        out = FormPoly(m)
        for e, c in self.terms.items():
            term = FormPoly.const(m, c)
            for i, p in enumerate(e):
                for _ in range(p):
                    term = term * newvars[i]
            out = out + term
        return out

    def __repr__(self):
        return f"FormPoly({self.nvars}, {self.terms!r})"


@dataclass
class BinaryForm:
    """Coefficients of v1^(d-i) v2^i for i = 0..d."""

    degree: int
    coefficients: list[Fraction]

    def __post_init__(self):
        if len(self.coefficients) != self.degree + 1:
            raise ValueError("binary form needs degree+1 coefficients")
        self.coefficients = [frac(c) for c in self.coefficients]

    @classmethod
    def from_poly(cls, f: FormPoly, degree: int) -> "BinaryForm":
        if f.nvars != 2:
            raise ValueError("binary form needs two variables")
        if any(sum(e) not in (0, degree) for e in f.terms) or any(
            sum(e) != degree for e in f.terms
        ):
            raise ValueError(f"polynomial is not homogeneous of degree {degree}")
        return cls(degree, [f.coeff(degree - i, i) for i in range(degree + 1)])


def pencil_form(mats: Sequence[Mat], mode: str) -> FormPoly:
    """Pfaffian or determinant of v1 M1 + ... + vm Mm as an exact polynomial."""
    if not mats:
        raise ValueError("empty pencil")
    n = len(mats[0])
    for m in mats:
        if len(m) != n or any(len(r) != n for r in m):
            raise ValueError("pencil matrices must share a square size")
    nv = len(mats)
    entries = [
        [
            sum(
                (FormPoly.var(nv, t) * mats[t][i][j] for t in range(nv) if mats[t][i][j]),
                FormPoly(nv),
            )
            for j in range(n)
        ]
        for i in range(n)
    ]
    if mode == "pfaffian":
        for m in mats:
            require_alternating(m)
        if n % 2:
            raise ValueError("odd alternating matrix has Pfaffian 0 by convention")
        out = _pfaffian_any(entries)
    elif mode == "det":
        out = _det_ring(entries)
    else:
        raise ValueError(f"unknown pencil mode: {mode}")
    return out if out else FormPoly(nv)


def _det_ring(m):
    n = len(m)
    if n == 1:
        return m[0][0]
    total = None
    for j in range(n):
        minor = [[m[i][b] for b in range(n) if b != j] for i in range(1, n)]
        term = m[0][j] * _det_ring(minor)
        if j % 2:
            term = -term
        total = term if total is None else total + term
    return total


def disc_binary_quadratic(f: BinaryForm | FormPoly) -> Fraction:
    if isinstance(f, FormPoly):
        f = BinaryForm.from_poly(f, 2)
    if f.degree != 2:
        raise ValueError("need a binary quadratic")
    a, b, c = f.coefficients
    return b * b - 4 * a * c


def disc_binary_cubic(f: BinaryForm | FormPoly) -> Fraction:
    if isinstance(f, FormPoly):
        f = BinaryForm.from_poly(f, 3)
    if f.degree != 3:
        raise ValueError("need a binary cubic")
    a, b, c, d = f.coefficients
    return (
        18 * a * b * c * d
        - 4 * b**3 * d
        + b * b * c * c
        - 4 * a * c**3
        - 27 * a * a * d * d
    )


def disc_ternary(q: FormPoly) -> Fraction:
    """Discriminant of a ternary quadratic, normalized so v1 v3 - v2^2 gives 1."""
    if q.nvars != 3:
        raise ValueError("need three variables")
    if any(sum(e) != 2 for e in q.terms):
        raise ValueError("need a quadratic form")
    a = q.coeff(2, 0, 0)
    b = q.coeff(0, 2, 0)
    c = q.coeff(0, 0, 2)
    d = q.coeff(1, 1, 0)
    e = q.coeff(1, 0, 1)
    f = q.coeff(0, 1, 1)
    return 4 * a * b * c + d * e * f - a * f * f - b * e * e - c * d * d


# ---------------------------------------------------------------------------
# triple wedge in a 4-dimensional tensor space

_TW_SIGN = [Fraction((-1) ** (3 - b)) for b in range(4)]


def triple_wedge(x1: Mat, x2: Mat, x3: Mat) -> tuple[Mat, Fraction]:
    """Wedge three 2x2 matrices in the 4-space they span, reshaped to a 2x2 result.

    Calibrated so the block-identity configuration maps to I2.
    """
    vecs = []
    for x in (x1, x2, x3):
        if len(x) != 2 or any(len(r) != 2 for r in x):
            raise ValueError("triple_wedge expects 2x2 matrices")
        vecs.append([frac(x[0][0]), frac(x[0][1]), frac(x[1][0]), frac(x[1][1])])
    f = []
    for missing in range(4):
        rows = [r for r in range(4) if r != missing]
        minor = [[vecs[c][r] for c in range(3)] for r in rows]
        f.append(_TW_SIGN[missing] * rat_det(minor))
    f11, f12, f21, f22 = f
    phi = [[-f22, f21], [f12, -f11]]
    return phi, phi[0][0] * phi[1][1] - phi[0][1] * phi[1][0]


# ---------------------------------------------------------------------------
# congruence normal form of an alternating matrix


def skew_normal_form(m: Mat) -> tuple[Mat, Mat]:
    """Unimodular g with g m gT supported on trailing 2x2 J-blocks.

    Each finished block is the standard J except possibly the last one when
    the matrix has full rank, where the determinant-1 requirement pins the
    remaining scale.  The zero block, if any, leads.
    """
    require_alternating(m)
    n = len(m)
    work = [[frac(x) for x in row] for row in m]
    g = identity(n)
    detg = Fraction(1)

    def swap(a: int, b: int):
        nonlocal detg
        if a == b:
            return
        work[a], work[b] = work[b], work[a]
        for row in work:
            row[a], row[b] = row[b], row[a]
        g[a], g[b] = g[b], g[a]
        detg = -detg

    def scale_row(a: int, c: Fraction):
        nonlocal detg
        work[a] = [c * v for v in work[a]]
        for row in work:
            row[a] = c * row[a]
        g[a] = [c * v for v in g[a]]
        detg = c * detg

    def shear(dst: int, src: int, c: Fraction):
        work[dst] = [x + c * y for x, y in zip(work[dst], work[src])]
        for row in work:
            row[dst] = row[dst] + c * row[src]
        g[dst] = [x + c * y for x, y in zip(g[dst], g[src])]

    p = n
    while p >= 2:
        pivot = None
        for i in range(p):
            for j in range(i + 1, p):
                if work[i][j]:
                    pivot = (i, j)
                    break
            if pivot:
                break
        if pivot is None:
            break
        i, j = pivot
        swap(j, p - 1)
        if i == p - 1:
            i = j
        swap(i, p - 2)
        c = work[p - 2][p - 1]
        scale_row(p - 2, 1 / c)
        for r in range(p - 2):
            if work[r][p - 1]:
                shear(r, p - 2, -work[r][p - 1])
            if work[r][p - 2]:
                shear(r, p - 1, work[r][p - 2])
        p -= 2

    if detg != 1:
        fix = 1 / detg
        if p > 0:
            # a kernel direction exists; rescaling it leaves N untouched
            scale_row(0, fix)
        else:
            scale_row(n - 2, fix)
    return g, work


# ---------------------------------------------------------------------------
# slot maps and recipe evaluation


@dataclass
class SlotSpec:
    """Named extraction pattern: coordinates of x dropped into a matrix shape."""

    name: str
    kind: str  # matrix | alt | vector
    rows: int
    cols: int
    entries: list[tuple[int, int, int, int]]  # (coord, sign, row, col)

    def materialize(self, x: Multivector):
        if self.kind == "vector":
            out = [Fraction(0)] * self.rows
            for coord, sign, r, c in self.entries:
                if c != 1:
                    raise ValueError(f"vector slot {self.name} has col {c}")
                out[r - 1] += sign * x[coord]
            return out
        m = [[Fraction(0)] * self.cols for _ in range(self.rows)]
        for coord, sign, r, c in self.entries:
            v = sign * x[coord]
            if self.kind == "alt":
                if not r < c:
                    raise ValueError(f"alt slot {self.name} needs upper entries")
                m[r - 1][c - 1] += v
                m[c - 1][r - 1] -= v
            else:
                m[r - 1][c - 1] += v
        return m


class RecipeError(ValueError):
    pass


@dataclass
class InvariantRecipe:
    """Parsed composition tree plus its source text and slot table."""

    source: str
    tree: "Node"
    slots: dict[str, SlotSpec]


class Node:
    pass


@dataclass
class SlotsRef(Node):
    name: str


@dataclass
class IntLit(Node):
    value: int


@dataclass
class Call(Node):
    op: str
    args: list


_TOKEN_RE = re.compile(r"\s*([A-Za-z][\w:-]*|-?\d+|[(),])")


def parse_recipe(text: str, slots: dict[str, SlotSpec]) -> InvariantRecipe:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            if text[pos:].strip():
                raise RecipeError(f"bad recipe token at {text[pos:pos+16]!r}")
            break
        tokens.append(m.group(1))
        pos = m.end()
    it = iter(range(len(tokens)))
    idx = 0

    def peek():
        return tokens[idx] if idx < len(tokens) else None

    def advance():
        nonlocal idx
        if idx >= len(tokens):
            raise RecipeError("recipe text ends mid-expression")
        t = tokens[idx]
        idx += 1
        return t

    def parse_expr() -> Node:
        t = advance()
        if re.fullmatch(r"-?\d+", t):
            return IntLit(int(t))
        if t.startswith("slots:"):
            return SlotsRef(t[len("slots:"):])
        if peek() == "(":
            advance()
            args = []
            if peek() != ")":
                while True:
                    args.append(parse_expr())
                    if peek() == ",":
                        advance()
                        continue
                    break
            if advance() != ")":
                raise RecipeError("expected ')'")
            return Call(t, args)
        return SlotsRef(t)  # bare name refers to a slot group

    tree = parse_expr()
    if idx != len(tokens):
        raise RecipeError(f"trailing recipe tokens: {tokens[idx:]}")
    return InvariantRecipe(source=text.strip(), tree=tree, slots=slots)


_MODES = {"pfaffian", "det"}


def eval_invariant(recipe: InvariantRecipe, x: Multivector) -> Fraction:
    """Exact value of the composed invariant at x."""

    def ev(node: Node):
        if isinstance(node, IntLit):
            return node.value
        if isinstance(node, SlotsRef):
            spec = recipe.slots.get(node.name)
            if spec is None:
                raise RecipeError(f"unknown slot group {node.name!r}")
            return spec.materialize(x)
        assert isinstance(node, Call)
        op = node.op
        if op == "pencil":
            if not node.args or not isinstance(node.args[0], SlotsRef):
                raise RecipeError("pencil needs a mode then matrices")
            mode = node.args[0].name
            if mode not in _MODES:
                raise RecipeError(f"unknown pencil mode {mode!r}")
            mats = [ev(a) for a in node.args[1:]]
            return pencil_form(mats, mode)
        args = [ev(a) for a in node.args]
        if op == "pfaffian":
            (m,) = args
            return pfaffian(m)
        if op == "det":
            (m,) = args
            return rat_det(m)
        if op == "disc-quadratic":
            (f,) = args
            return disc_binary_quadratic(f)
        if op == "disc-cubic":
            (f,) = args
            return disc_binary_cubic(f)
        if op == "disc-ternary":
            (f,) = args
            return disc_ternary(f)
        if op == "triple-wedge":
            m1, m2, m3 = args
            phi, _ = triple_wedge(m1, m2, m3)
            return phi
        if op == "product":
            out = Fraction(1)
            for a in args:
                out *= _as_scalar(a)
            return out
        if op == "power":
            base, exp = args
            if not isinstance(exp, int):
                raise RecipeError("power needs an integer exponent")
            return _as_scalar(base) ** exp
        if op == "scalar-coordinate":
            (idx_,) = args
            if not isinstance(idx_, int):
                raise RecipeError("scalar-coordinate needs a coordinate number")
            return x[idx_]
        if op == "bilinear":
            v1, m, v2 = args
            return sum(
                (v1[i] * m[i][j] * v2[j] for i in range(len(v1)) for j in range(len(v2))),
                Fraction(0),
            )
        if op == "matmul":
            a, b = args
            return [
                [
                    sum((a[i][t] * b[t][j] for t in range(len(b))), Fraction(0))
                    for j in range(len(b[0]))
                ]
                for i in range(len(a))
            ]
        if op == "transpose":
            (a,) = args
            return [list(col) for col in zip(*a)]
        if op == "lincomb":
            coeffs = args[0]
            mats = args[1:]
            if len(coeffs) != len(mats):
                raise RecipeError("lincomb length mismatch")
            n = len(mats[0])
            out = [[Fraction(0)] * len(mats[0][0]) for _ in range(n)]
            for c, m in zip(coeffs, mats):
                for i in range(n):
                    for j in range(len(m[0])):
                        out[i][j] += c * m[i][j]
            return out
        if op == "wedge-top":
            dim = args[0]
            if not isinstance(dim, int):
                raise RecipeError("wedge-top needs the space dimension first")
            return _wedge_top(dim, args[1:])
        raise RecipeError(f"unknown recipe operation {op!r}")

    out = ev(recipe.tree)
    return _as_scalar(out)


def _as_scalar(v) -> Fraction:
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, Fraction):
        return v
    raise RecipeError(f"expected a scalar, got {type(v).__name__}")


def _wedge_top(dim: int, parts) -> Fraction:
    # parts are vectors (degree 1) or alternating matrices (degree 2, upper
    # entries read as coefficients of e_i wedge e_j); returns the top coefficient.
    acc: dict[tuple[int, ...], Fraction] = {(): Fraction(1)}
    for part in parts:
        if part and isinstance(part[0], list):
            require_alternating(part)
            terms = {
                (i, j): part[i][j]
                for i in range(len(part))
                for j in range(i + 1, len(part))
                if part[i][j]
            }
        else:
            terms = {(i,): frac(c) for i, c in enumerate(part) if frac(c)}
        nxt: dict[tuple[int, ...], Fraction] = {}
        for base, cb in acc.items():
            for extra, ce in terms.items():
                if set(base) & set(extra):
                    continue
                merged = base + extra
                sign, key = _sort_sign(merged)
                if sign == 0:
                    continue
                nxt[key] = nxt.get(key, Fraction(0)) + sign * cb * ce
        acc = {k: v for k, v in nxt.items() if v}
    top = tuple(range(dim))
    return acc.get(top, Fraction(0))


def _sort_sign(seq: tuple[int, ...]) -> tuple[int, tuple[int, ...]]:
    lst = list(seq)
    sign = 1
    for i in range(len(lst)):
        for j in range(len(lst) - 1 - i):
            if lst[j] > lst[j + 1]:
                lst[j], lst[j + 1] = lst[j + 1], lst[j]
                sign = -sign
            elif lst[j] == lst[j + 1]:
                return 0, ()
    return sign, tuple(lst)
