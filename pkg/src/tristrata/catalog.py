"""The stratum catalog: a text database of all 183 critical indices.

Each record carries the index vector, its status, cone coordinate sets,
named representatives, an invariant recipe or an external note, tangent
expectations, triangular orders, and destabilizing certificates.  Loading
is strict; serialization is canonical, so loading a serialized catalog is a
byte-level fixed point.  verify_all recomputes every checkable claim.
"""

from __future__ import annotations

import re
import time
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources

from .emptiness import verify_certificate
from .exterior import (
    Multivector,
    index_of,
    parse_multivector,
    serialize_multivector,
    triple_of,
)
from .invariants import InvariantRecipe, RecipeError, SlotSpec, eval_invariant, parse_recipe
from .strata import decompose, verify_beta
from .torus import (
    is_dominant,
    parse_ops,
    parse_weight,
    serialize_ops,
    serialize_weight,
)
from .unipotent import (
    Var,
    check_triangular,
    orbit_expansion,
    parse_var,
    var_name,
)

ORBIT_TYPES = ("SP", "Ex2", "Ex3", "Prg2", "IQF4", "G2", "Gunit2")
CERT_CASES = ("list-a", "list-b", "list-c", "list-d", "table-e", "aux")

EXPECTED_NONEMPTY_COUNT = 21
EXPECTED_ORBIT_HISTOGRAM = {
    "SP": 12,
    "Ex2": 3,
    "Ex3": 2,
    "Prg2": 1,
    "IQF4": 1,
    "G2": 1,
    "Gunit2": 1,
}
N_RECORDS = 183


class CatalogParseError(ValueError):
    def __init__(self, source: str, line: int, message: str):
        super().__init__(f"{source}:{line}: {message}")
        self.source = source
        self.line = line


class CatalogSchemaError(ValueError):
    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}")
        self.path = path


@dataclass
class StratumRecord:
    id: int
    beta: tuple[Fraction, ...]
    status: str
    orbit_type: str | None = None
    z_coords: tuple[int, ...] = ()
    w_coords: tuple[int, ...] = ()
    reps: dict[str, Multivector] = field(default_factory=dict)
    rep_origins: dict[str, str] = field(default_factory=dict)
    main_rep: str | None = None
    tangent_rep: str | None = None
    invariant_kind: str | None = None
    invariant_note: str | None = None
    slots: dict[str, SlotSpec] = field(default_factory=dict)
    invariant: str | None = None
    expected_invariant_abs: Fraction | None = None
    expected_tangent: tuple[str, int, str] | None = None
    var_order: tuple[Var, ...] | None = None
    coord_order: tuple[int, ...] | None = None
    order_origin: str | None = None
    cert_case: str | None = None
    cert_zero: tuple[int, ...] | None = None
    cert_ops: tuple[int, ...] | None = None
    cert_weights: dict[int, int] | None = None
    cert_origin: str | None = None
    erratum_note: str | None = None

    def recipe(self) -> InvariantRecipe | None:
        if self.invariant_kind != "recipe" or self.invariant is None:
            return None
        return parse_recipe(self.invariant, self.slots)


@dataclass
class Catalog:
    records: dict[int, StratumRecord]
    source: str = "<catalog>"

    def __getitem__(self, rec_id: int) -> StratumRecord:
        if rec_id not in self.records:
            raise KeyError(f"no record with id {rec_id}")
        return self.records[rec_id]

    def ids(self) -> list[int]:
        return sorted(self.records)


# ---------------------------------------------------------------------------
# slot text form: "<kind> <rows> <cols> ; coord sign row col ; ..."


def serialize_slot(spec: SlotSpec) -> str:
    parts = [f"{spec.kind} {spec.rows} {spec.cols}"]
    for coord, sign, r, c in spec.entries:
        parts.append(f"{coord} {sign} {r} {c}")
    return " ; ".join(parts)


def parse_slot(name: str, text: str) -> SlotSpec:
    chunks = [c.strip() for c in text.split(";")]
    head = chunks[0].split()
    if len(head) != 3:
        raise ValueError("slot head must be '<kind> <rows> <cols>'")
    kind = head[0]
    if kind not in ("matrix", "alt", "vector"):
        raise ValueError(f"unknown slot kind {kind!r}")
    rows, cols = int(head[1]), int(head[2])
    entries: list[tuple[int, int, int, int]] = []
    for chunk in chunks[1:]:
        if not chunk:
            continue
        quad = chunk.split()
        if len(quad) != 4:
            raise ValueError(f"slot entry needs four numbers, got {chunk!r}")
        coord, sign, r, c = (int(q) for q in quad)
        if not 1 <= coord <= 56:
            raise ValueError(f"slot entry coordinate {coord} out of range")
        if sign not in (1, -1):
            raise ValueError(f"slot entry sign must be +-1, got {sign}")
        if not (1 <= r <= rows and 1 <= c <= cols):
            raise ValueError(f"slot entry position ({r},{c}) out of shape")
        if kind == "alt" and not r < c:
            raise ValueError("alt slot entries must be strictly upper")
        if kind == "vector" and c != 1:
            raise ValueError("vector slot entries must use column 1")
        entries.append((coord, sign, r, c))
    if not entries:
        raise ValueError("slot has no entries")
    return SlotSpec(name=name, kind=kind, rows=rows, cols=cols, entries=entries)


# ---------------------------------------------------------------------------
# parsing

_KEY_RE = re.compile(r"[A-Za-z][\w.]*")
ORIGINS = ("tabulated", "derived")


def _record_from_block(
    fields: list[tuple[str, str, int]], source: str
) -> StratumRecord:
    seen: dict[str, str] = {}
    for key, value, line in fields:
        if key in seen:
            raise CatalogParseError(source, line, f"duplicate key {key!r}")
        seen[key] = value

    rid_label = seen.get("id", "?")

    def path(fieldname: str) -> str:
        return f"record {rid_label}: {fieldname}"

    def take(key: str) -> str | None:
        return seen.pop(key, None)

    def require(key: str) -> str:
        v = take(key)
        if v is None:
            raise CatalogSchemaError(path(key), "missing required field")
        return v

    def fail(key: str, msg: str):
        raise CatalogSchemaError(path(key), msg)

    raw_id = require("id")
    try:
        rec_id = int(raw_id)
    except ValueError:
        raise CatalogSchemaError(path("id"), f"not an integer: {raw_id!r}")
    if not 1 <= rec_id <= N_RECORDS:
        fail("id", f"id {rec_id} outside 1..{N_RECORDS}")

    raw_beta = require("beta")
    try:
        beta = tuple(parse_weight(raw_beta))
    except ValueError as e:
        fail("beta", str(e))
    if not is_dominant(beta):
        fail("beta", "index vector is not dominant")
    if sum(beta, Fraction(0)) != 0:
        fail("beta", "index vector entries must sum to zero")
    if all(b == 0 for b in beta):
        fail("beta", "index vector is zero")

    status = require("status")
    if status not in ("nonempty", "empty"):
        fail("status", f"unknown status {status!r}")

    rec = StratumRecord(id=rec_id, beta=beta, status=status)

    ot = take("orbit_type")
    if ot is not None:
        if ot not in ORBIT_TYPES:
            fail("orbit_type", f"unknown orbit type {ot!r}")
        rec.orbit_type = ot

    def int_list(key: str, v: str, lo=1, hi=56) -> tuple[int, ...]:
        out = []
        for tok in v.split():
            try:
                n = int(tok)
            except ValueError:
                fail(key, f"not an integer: {tok!r}")
            if not lo <= n <= hi:
                fail(key, f"value {n} outside {lo}..{hi}")
            out.append(n)
        if len(set(out)) != len(out):
            fail(key, "repeated value")
        return tuple(out)

    v = take("z_coords")
    rec.z_coords = int_list("z_coords", v) if v is not None else ()
    v = take("w_coords")
    rec.w_coords = int_list("w_coords", v) if v is not None else ()

    for key in [k for k in seen if k.startswith("rep.")]:
        name = key[len("rep."):]
        if not name.isidentifier():
            fail(key, f"bad representative name {name!r}")
        try:
            rec.reps[name] = parse_multivector(seen.pop(key))
        except ValueError as e:
            fail(key, str(e))
    for key in [k for k in seen if k.startswith("rep_origin.")]:
        name = key[len("rep_origin."):]
        if name not in rec.reps:
            fail(key, f"origin for unknown representative {name!r}")
        origin = seen.pop(key)
        if origin not in ORIGINS:
            fail(key, f"unknown origin {origin!r}")
        rec.rep_origins[name] = origin
    for name in rec.reps:
        rec.rep_origins.setdefault(name, "tabulated")

    mr = take("main_rep")
    if mr is not None:
        if mr not in rec.reps:
            fail("main_rep", f"names an absent representative {mr!r}")
        rec.main_rep = mr
    tr = take("tangent_rep")
    if tr is not None:
        if tr not in rec.reps:
            fail("tangent_rep", f"names an absent representative {tr!r}")
        rec.tangent_rep = tr

    kind = take("invariant_kind")
    if kind is not None:
        if kind not in ("recipe", "external"):
            fail("invariant_kind", f"unknown invariant kind {kind!r}")
        rec.invariant_kind = kind
    rec.invariant_note = take("invariant_note")

    for key in sorted(k for k in seen if k.startswith("slot.")):
        name = key[len("slot."):]
        if not name.isidentifier():
            fail(key, f"bad slot name {name!r}")
        try:
            rec.slots[name] = parse_slot(name, seen.pop(key))
        except ValueError as e:
            fail(key, str(e))

    inv = take("invariant")
    if inv is not None:
        if rec.invariant_kind != "recipe":
            fail("invariant", "recipe text without invariant_kind = recipe")
        try:
            parse_recipe(inv, rec.slots)
        except RecipeError as e:
            fail("invariant", str(e))
        rec.invariant = inv
    elif rec.invariant_kind == "recipe":
        fail("invariant", "invariant_kind = recipe needs recipe text")

    v = take("expected_invariant_abs")
    if v is not None:
        try:
            rec.expected_invariant_abs = Fraction(v)
        except ValueError:
            fail("expected_invariant_abs", f"not a rational: {v!r}")

    v = take("expected_tangent")
    if v is not None:
        parts = [p.strip() for p in v.split(";")]
        if len(parts) != 3:
            fail("expected_tangent", "need '<active-spec> ; <dim> ; <origin>'")
        spec_name, dim_s, origin = parts
        from .stabilizer import parse_active_spec

        try:
            parse_active_spec(spec_name)
            dim = int(dim_s)
        except ValueError as e:
            fail("expected_tangent", str(e))
        if origin not in ORIGINS:
            fail("expected_tangent", f"unknown origin {origin!r}")
        rec.expected_tangent = (spec_name, dim, origin)

    v = take("var_order")
    if v is not None:
        try:
            order = tuple(parse_var(t) for t in v.split())
        except ValueError as e:
            fail("var_order", str(e))
        if len(set(order)) != len(order):
            fail("var_order", "repeated variable")
        rec.var_order = order
    v = take("coord_order")
    if v is not None:
        out = []
        for tok in v.split():
            m = re.fullmatch(r"e(\d)(\d)(\d)", tok)
            if m is None:
                fail("coord_order", f"bad coordinate label {tok!r}")
            t = (int(m.group(1)), int(m.group(2)), int(m.group(3)))
            if not t[0] < t[1] < t[2]:
                fail("coord_order", f"label {tok!r} is not strictly increasing")
            out.append(index_of(t))
        if len(set(out)) != len(out):
            fail("coord_order", "repeated coordinate")
        rec.coord_order = tuple(out)
    v = take("order_origin")
    if v is not None:
        if v not in ORIGINS:
            fail("order_origin", f"unknown origin {v!r}")
        rec.order_origin = v

    v = take("cert_case")
    if v is not None:
        if v not in CERT_CASES:
            fail("cert_case", f"unknown certificate case {v!r}")
        rec.cert_case = v
    v = take("cert_zero")
    if v is not None:
        rec.cert_zero = int_list("cert_zero", v)
    v = take("cert_ops")
    if v is not None:
        try:
            rec.cert_ops = tuple(parse_ops(v))
        except ValueError as e:
            fail("cert_ops", str(e))
    v = take("cert_weights")
    if v is not None:
        weights: dict[int, int] = {}
        for tok in v.split():
            m = re.fullmatch(r"(\d+):(-?\d+)", tok)
            if m is None:
                fail("cert_weights", f"bad weight entry {tok!r}")
            c, w = int(m.group(1)), int(m.group(2))
            if not 1 <= c <= 56:
                fail("cert_weights", f"coordinate {c} out of range")
            if c in weights:
                fail("cert_weights", f"repeated coordinate {c}")
            weights[c] = w
        rec.cert_weights = weights
    v = take("cert_origin")
    if v is not None:
        if v not in ORIGINS:
            fail("cert_origin", f"unknown origin {v!r}")
        rec.cert_origin = v

    rec.erratum_note = take("erratum_note")

    if seen:
        stray = sorted(seen)[0]
        fail(stray, "unknown field")

    # cross-field schema rules
    if rec.status == "nonempty":
        if rec.orbit_type is None:
            fail("orbit_type", "nonempty record needs an orbit type")
        if rec.main_rep is None:
            fail("main_rep", "nonempty record needs a main representative")
    else:
        if rec.orbit_type is not None:
            fail("orbit_type", "empty record cannot carry an orbit type")
        if rec.cert_zero is None or rec.cert_ops is None or rec.cert_case is None:
            fail("cert_ops", "empty record needs a destabilizing certificate")
    has_any_cert = any(
        x is not None for x in (rec.cert_zero, rec.cert_ops, rec.cert_case)
    )
    if has_any_cert and (rec.cert_zero is None or rec.cert_ops is None or rec.cert_case is None):
        fail("cert_case", "partial certificate: need case, zero set, and cocharacter")
    if rec.status == "nonempty" and has_any_cert and rec.cert_case != "aux":
        fail("cert_case", "certificate on a nonempty record must be marked aux")
    if rec.z_coords:
        z_set = set(rec.z_coords)
        for name, mv in rec.reps.items():
            if any(c not in z_set for c in mv.support()):
                fail(f"rep.{name}", "representative leaves the critical coordinates")
    if rec.coord_order is not None and rec.var_order is None:
        fail("var_order", "coordinate order without variable order")
    if rec.coord_order is not None and len(rec.coord_order) > len(rec.var_order):
        fail("coord_order", "more coordinates than variables")
    return rec


def parse_catalog(text: str, source: str = "<catalog>") -> Catalog:
    blocks: list[list[tuple[str, str, int]]] = []
    current: list[tuple[str, str, int]] = []
    for n, raw in enumerate(text.splitlines(), start=1):
        line = raw.rstrip("\n")
        stripped = line.strip()
        if not stripped:
            if current:
                blocks.append(current)
                current = []
            continue
        if stripped.startswith("#"):
            continue
        if "=" not in stripped:
            raise CatalogParseError(source, n, f"expected 'key = value', got {stripped!r}")
        key, _, value = stripped.partition("=")
        key = key.strip()
        value = value.strip()
        if not _KEY_RE.fullmatch(key):
            raise CatalogParseError(source, n, f"bad key {key!r}")
        current.append((key, value, n))
    if current:
        blocks.append(current)
    records: dict[int, StratumRecord] = {}
    for block in blocks:
        rec = _record_from_block(block, source)
        if rec.id in records:
            raise CatalogSchemaError(f"record {rec.id}: id", "duplicate id")
        records[rec.id] = rec
    if not records:
        raise CatalogParseError(source, 1, "catalog holds no records")
    return Catalog(records=records, source=source)


# ---------------------------------------------------------------------------
# canonical serialization


def _serialize_record(rec: StratumRecord) -> str:
    lines: list[str] = []

    def put(key: str, value: str):
        lines.append(f"{key} = {value}")

    put("id", str(rec.id))
    put("beta", serialize_weight(rec.beta))
    put("status", rec.status)
    if rec.orbit_type is not None:
        put("orbit_type", rec.orbit_type)
    if rec.z_coords:
        put("z_coords", " ".join(str(c) for c in rec.z_coords))
    if rec.w_coords:
        put("w_coords", " ".join(str(c) for c in rec.w_coords))
    for name in sorted(rec.reps):
        put(f"rep.{name}", serialize_multivector(rec.reps[name]))
    for name in sorted(rec.rep_origins):
        if rec.rep_origins[name] != "tabulated":
            put(f"rep_origin.{name}", rec.rep_origins[name])
    if rec.main_rep is not None:
        put("main_rep", rec.main_rep)
    if rec.tangent_rep is not None:
        put("tangent_rep", rec.tangent_rep)
    if rec.invariant_kind is not None:
        put("invariant_kind", rec.invariant_kind)
    if rec.invariant_note is not None:
        put("invariant_note", rec.invariant_note)
    for name in sorted(rec.slots):
        put(f"slot.{name}", serialize_slot(rec.slots[name]))
    if rec.invariant is not None:
        put("invariant", rec.invariant)
    if rec.expected_invariant_abs is not None:
        put("expected_invariant_abs", str(rec.expected_invariant_abs))
    if rec.expected_tangent is not None:
        spec_name, dim, origin = rec.expected_tangent
        put("expected_tangent", f"{spec_name} ; {dim} ; {origin}")
    if rec.var_order is not None:
        put("var_order", " ".join(var_name(v) for v in rec.var_order))
    if rec.coord_order is not None:
        labels = []
        for idx in rec.coord_order:
            a, b, c = triple_of(idx)
            labels.append(f"e{a}{b}{c}")
        put("coord_order", " ".join(labels))
    if rec.order_origin is not None:
        put("order_origin", rec.order_origin)
    if rec.cert_case is not None:
        put("cert_case", rec.cert_case)
    if rec.cert_zero is not None:
        put("cert_zero", " ".join(str(c) for c in rec.cert_zero))
    if rec.cert_ops is not None:
        put("cert_ops", serialize_ops(rec.cert_ops))
    if rec.cert_weights is not None:
        put(
            "cert_weights",
            " ".join(f"{c}:{w}" for c, w in sorted(rec.cert_weights.items())),
        )
    if rec.cert_origin is not None:
        put("cert_origin", rec.cert_origin)
    if rec.erratum_note is not None:
        put("erratum_note", rec.erratum_note)
    return "\n".join(lines)


def serialize_catalog(catalog: Catalog) -> str:
    chunks = [_serialize_record(catalog.records[i]) for i in catalog.ids()]
    return "\n\n".join(chunks) + "\n"


def load_catalog(path: str) -> Catalog:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_catalog(fh.read(), source=path)


def default_catalog() -> Catalog:
    res = resources.files("tristrata").joinpath("data/catalog.txt")
    return parse_catalog(res.read_text(encoding="utf-8"), source="data/catalog.txt")


# ---------------------------------------------------------------------------
# full verification


@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: str


@dataclass
class RecordOutcome:
    id: int
    status: str
    orbit_type: str | None
    checks: list[CheckResult]
    warnings: list[str]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    @property
    def failed(self) -> list[CheckResult]:
        return [c for c in self.checks if not c.ok]


@dataclass
class CatalogReport:
    outcomes: list[RecordOutcome]
    n_records: int
    n_nonempty: int
    histogram: dict[str, int]
    aggregate_failures: list[str]
    elapsed: float

    @property
    def ok(self) -> bool:
        return not self.aggregate_failures and all(o.ok for o in self.outcomes)

    @property
    def warnings(self) -> list[str]:
        out = []
        for o in self.outcomes:
            out.extend(f"id {o.id}: {w}" for w in o.warnings)
        return out


def verify_record(rec: StratumRecord) -> RecordOutcome:
    checks: list[CheckResult] = []
    warnings: list[str] = []

    cert = verify_beta(rec.beta)
    checks.append(
        CheckResult(
            "beta-certificate",
            cert.ok,
            "dominant, and the index is the span-certified combination"
            if cert.ok
            else "index fails its convex certificate",
        )
    )

    dec = decompose(rec.beta)
    z_ok = tuple(sorted(rec.z_coords)) == tuple(dec.z_coords)
    w_ok = tuple(sorted(rec.w_coords)) == tuple(dec.w_coords)
    checks.append(
        CheckResult(
            "cone-coordinates",
            z_ok and w_ok,
            f"|Z| = {len(dec.z_coords)}, |W| = {len(dec.w_coords)}"
            if z_ok and w_ok
            else "stored cone coordinate sets differ from the recomputation",
        )
    )

    if rec.status == "nonempty":
        if rec.invariant_kind == "recipe":
            try:
                value = eval_invariant(rec.recipe(), rec.reps[rec.main_rep])
                expected = rec.expected_invariant_abs
                ok = expected is not None and abs(value) == expected
                detail = f"|value at representative| = {abs(value)}"
                if not ok:
                    detail += f", expected {expected}"
                checks.append(CheckResult("invariant-value", ok, detail))
            except (RecipeError, ValueError) as e:
                checks.append(CheckResult("invariant-value", False, str(e)))
        elif rec.invariant_kind == "external":
            checks.append(
                CheckResult(
                    "invariant-value",
                    True,
                    "external: " + (rec.invariant_note or "not evaluated here"),
                )
            )

    if rec.expected_tangent is not None:
        from .stabilizer import parse_active_spec, tangent_dim_ambient

        spec_name, expected_dim, origin = rec.expected_tangent
        rep_name = rec.tangent_rep or rec.main_rep
        if rep_name is None or rep_name not in rec.reps:
            checks.append(
                CheckResult("tangent-dimension", False, "no tangent base point")
            )
        else:
            dim = tangent_dim_ambient(
                rec.beta, parse_active_spec(spec_name), rec.reps[rep_name]
            )
            checks.append(
                CheckResult(
                    "tangent-dimension",
                    dim == expected_dim,
                    f"{spec_name}: computed {dim}, recorded {expected_dim} ({origin})",
                )
            )

    if rec.status == "nonempty":
        try:
            exp = orbit_expansion(rec.beta, rec.reps[rec.main_rep])
        except ValueError as e:
            exp = None
            checks.append(CheckResult("orbit-expansion", False, str(e)))
        if exp is None:
            pass
        elif rec.coord_order is not None:
            covers = set(rec.coord_order) == set(dec.w_coords)
            checks.append(
                CheckResult(
                    "expansion-covers-cone",
                    covers,
                    "coordinate order matches the strict cone"
                    if covers
                    else "coordinate order does not match the strict cone",
                )
            )
            tri = check_triangular(exp, rec.var_order, rec.coord_order)
            detail = "triangular with signs " + "".join(
                "+" if line.sign > 0 else "-" for line in tri.lines if line.ok
            ) if tri.ok else "; ".join(
                f"{triple_of(line.coord)}: {line.message}"
                for line in tri.lines
                if not line.ok
            )
            checks.append(CheckResult("expansion-triangular", tri.ok, detail))
        else:
            ok = not exp
            checks.append(
                CheckResult(
                    "expansion-trivial",
                    ok,
                    "unipotent group fixes the representative"
                    if ok
                    else "expansion is nonzero but no orders are recorded",
                )
            )

    if rec.cert_zero is not None:
        rep = verify_certificate(
            rec.beta, rec.cert_zero, rec.cert_ops, rec.cert_weights
        )
        name = "aux-certificate" if rec.cert_case == "aux" else "certificate"
        checks.append(
            CheckResult(
                name,
                rep.ok,
                f"{len(rep.weights)} surviving weights, all positive"
                if rep.ok
                else "; ".join(rep.failures),
            )
        )

    if rec.erratum_note:
        warnings.append(rec.erratum_note)

    return RecordOutcome(
        id=rec.id,
        status=rec.status,
        orbit_type=rec.orbit_type,
        checks=checks,
        warnings=warnings,
    )


def verify_all(catalog: Catalog) -> CatalogReport:
    start = time.monotonic()
    outcomes = [verify_record(catalog.records[i]) for i in catalog.ids()]
    nonempty = [o for o in outcomes if o.status == "nonempty"]
    histogram: dict[str, int] = {}
    for o in nonempty:
        histogram[o.orbit_type] = histogram.get(o.orbit_type, 0) + 1
    aggregate: list[str] = []
    if len(outcomes) != N_RECORDS:
        aggregate.append(f"catalog holds {len(outcomes)} records, expected {N_RECORDS}")
    if sorted(catalog.records) != list(range(1, N_RECORDS + 1)) and len(outcomes) == N_RECORDS:
        aggregate.append("record ids do not cover 1..183")
    if len(nonempty) != EXPECTED_NONEMPTY_COUNT:
        aggregate.append(
            f"{len(nonempty)} nonempty records, expected {EXPECTED_NONEMPTY_COUNT}"
        )
    if histogram != EXPECTED_ORBIT_HISTOGRAM:
        aggregate.append(
            f"orbit-type histogram {histogram} differs from {EXPECTED_ORBIT_HISTOGRAM}"
        )
    return CatalogReport(
        outcomes=outcomes,
        n_records=len(outcomes),
        n_nonempty=len(nonempty),
        histogram=histogram,
        aggregate_failures=aggregate,
        elapsed=time.monotonic() - start,
    )
