"""Command-line front end: verification, inspection, and report rendering."""

from __future__ import annotations

import sys

import click

from .catalog import Catalog, default_catalog, load_catalog, verify_all, verify_record
from .convex import nearest_point
from .exterior import serialize_multivector, triple_of
from .reporting import render_json, render_text, write_figures
from .stabilizer import G2Report, build_registry
from .strata import decompose
from .torus import parse_weight, serialize_ops, serialize_weight
from .unipotent import check_triangular, orbit_expansion, serialize_expansion
from .emptiness import verify_certificate


def _label(idx: int) -> str:
    a, b, c = triple_of(idx)
    return f"e{a}{b}{c}"


class _State:
    def __init__(self, catalog_path: str | None):
        self.catalog_path = catalog_path
        self._catalog: Catalog | None = None

    @property
    def catalog(self) -> Catalog:
        if self._catalog is None:
            if self.catalog_path is None:
                self._catalog = default_catalog()
            else:
                self._catalog = load_catalog(self.catalog_path)
        return self._catalog


@click.group()
@click.option(
    "--catalog",
    "catalog_path",
    type=click.Path(exists=True, dir_okay=False),
    default=None,
    help="Alternative catalog file (defaults to the packaged one).",
)
@click.pass_context
def main(ctx: click.Context, catalog_path: str | None):
    """Exact verification for the 183-stratum trivector catalog."""
    ctx.obj = _State(catalog_path)


@main.group()
def verify():
    """Recompute catalog claims."""


@verify.command("all")
@click.pass_obj
def verify_all_cmd(state: _State):
    """Check every record and the aggregate counts."""
    report = verify_all(state.catalog)
    n_checks = sum(len(o.checks) for o in report.outcomes)
    n_failed = sum(len(o.failed) for o in report.outcomes)
    for o in report.outcomes:
        for c in o.failed:
            click.echo(f"FAIL id {o.id} {c.name}: {c.detail}")
    for msg in report.aggregate_failures:
        click.echo(f"FAIL aggregate: {msg}")
    for w in report.warnings:
        click.echo(f"warning: {w}")
    click.echo(
        f"records {report.n_records}, nonempty {report.n_nonempty}, "
        f"checks {n_checks}, failed {n_failed}, "
        f"elapsed {report.elapsed:.2f}s"
    )
    hist = " ".join(f"{k}:{v}" for k, v in sorted(report.histogram.items()))
    click.echo(f"orbit types: {hist}")
    click.echo("catalog verifies" if report.ok else "catalog FAILS")
    sys.exit(0 if report.ok else 1)


@verify.command("beta")
@click.option("--id", "rec_id", type=int, required=True)
@click.pass_obj
def verify_beta_cmd(state: _State, rec_id: int):
    """Check one record in detail."""
    try:
        rec = state.catalog[rec_id]
    except KeyError as e:
        raise click.ClickException(str(e))
    outcome = verify_record(rec)
    for c in outcome.checks:
        click.echo(f"{'ok  ' if c.ok else 'FAIL'} {c.name}: {c.detail}")
    for w in outcome.warnings:
        click.echo(f"warning: {w}")
    sys.exit(0 if outcome.ok else 1)


@main.group()
def strata():
    """Inspect stratum data."""


@strata.command("show")
@click.option("--id", "rec_id", type=int, required=True)
@click.pass_obj
def strata_show(state: _State, rec_id: int):
    """Print the decomposition attached to one index."""
    try:
        rec = state.catalog[rec_id]
    except KeyError as e:
        raise click.ClickException(str(e))
    dec = decompose(rec.beta)
    click.echo(f"id {rec.id} ({rec.status}"
               + (f", {rec.orbit_type}" if rec.orbit_type else "") + ")")
    click.echo(f"beta = {serialize_weight(rec.beta)}")
    click.echo(f"norm^2 = {dec.norm_sq}")
    blocks = " ".join(f"[{s},{e}]" for s, e in dec.blocks)
    click.echo(f"blocks = {blocks}")
    click.echo(f"cocharacter = {serialize_ops(dec.lam)}")
    click.echo(f"character blocks = {' '.join(str(c) for c in dec.chi)}")
    click.echo(f"Z ({len(dec.z_coords)}) = "
               + " ".join(_label(i) for i in dec.z_coords))
    click.echo(f"W ({len(dec.w_coords)}) = "
               + (" ".join(_label(i) for i in dec.w_coords) or "(empty)"))
    for name in sorted(rec.reps):
        click.echo(f"rep {name} = {serialize_multivector(rec.reps[name])}")


@main.command("expand")
@click.option("--id", "rec_id", type=int, required=True)
@click.pass_obj
def expand_cmd(state: _State, rec_id: int):
    """Print the unipotent orbit expansion of the main representative."""
    try:
        rec = state.catalog[rec_id]
    except KeyError as e:
        raise click.ClickException(str(e))
    if rec.main_rep is None:
        raise click.ClickException(f"record {rec_id} has no representative to expand")
    exp = orbit_expansion(rec.beta, rec.reps[rec.main_rep])
    if not exp:
        click.echo("(expansion is zero: the unipotent group fixes the representative)")
        sys.exit(0)
    click.echo(serialize_expansion(exp, rec.coord_order))
    if rec.coord_order is not None and rec.var_order is not None:
        tri = check_triangular(exp, rec.var_order, rec.coord_order)
        for line in tri.lines:
            mark = "ok  " if line.ok else "FAIL"
            sign = "+" if line.sign > 0 else "-"
            lead = f"{sign}u{line.lead[0]}{line.lead[1]}" if line.sign else "?"
            click.echo(f"{mark} {_label(line.coord)} leads with {lead}: {line.message}")
        sys.exit(0 if tri.ok else 1)
    sys.exit(0)


@main.command("empty-check")
@click.option("--id", "rec_id", type=int, required=True)
@click.pass_obj
def empty_check_cmd(state: _State, rec_id: int):
    """Validate the destabilizing certificate stored for one record."""
    try:
        rec = state.catalog[rec_id]
    except KeyError as e:
        raise click.ClickException(str(e))
    if rec.cert_zero is None or rec.cert_ops is None:
        raise click.ClickException(f"record {rec_id} carries no certificate")
    rep = verify_certificate(rec.beta, rec.cert_zero, rec.cert_ops, rec.cert_weights)
    click.echo(f"case = {rec.cert_case}")
    click.echo(f"zero coordinates = {' '.join(_label(c) for c in rep.zero_coords)}")
    click.echo(f"cocharacter = {serialize_ops(rep.ops)}")
    for c, w in sorted(rep.weights.items()):
        click.echo(f"  {_label(c)} : weight {w}")
    for f in rep.failures:
        click.echo(f"FAIL {f}")
    click.echo("certificate verifies" if rep.ok else "certificate FAILS")
    sys.exit(0 if rep.ok else 1)


@main.command("tangent")
@click.option("--case", "case_name", required=True)
@click.pass_obj
def tangent_cmd(state: _State, case_name: str):
    """Run one named stabilizer tangent computation."""
    try:
        registry = build_registry(state.catalog)
    except Exception:
        registry = build_registry(None)
    if case_name not in registry:
        known = " ".join(sorted(registry))
        raise click.ClickException(f"unknown case {case_name!r}; known: {known}")
    case = registry[case_name]
    result = case.compute()
    if isinstance(result, G2Report):
        for b in result.brackets:
            val = (
                f"H({b.computed[0]},{b.computed[1]})" if b.computed else "outside the torus"
            )
            mark = "ok  " if b.in_cartan and (b.matches_printed or b.erratum) else "FAIL"
            note = "" if b.matches_printed else " (recorded value corrected)"
            click.echo(f"{mark} [X_{b.left}, X_{b.right}] = {val}{note}")
        click.echo(
            ("ok   " if result.roots_match else "FAIL ")
            + "adjoint weight multiset matches the twelve expected roots"
        )
        click.echo(
            ("ok   " if result.dim_l1 == 14 else "FAIL ")
            + f"span of generators and torus has dimension {result.dim_l1}"
        )
        for w in result.warnings:
            click.echo(f"warning: {w}")
        sys.exit(0 if result.ok else 1)
    ok = case.expected is None or result == case.expected
    click.echo(
        f"{case.name}: computed {result}, recorded {case.expected} ({case.origin})"
    )
    if case.note:
        click.echo(case.note)
    sys.exit(0 if ok else 1)


@main.command("nearest-point")
@click.option(
    "--points",
    "points_file",
    type=click.Path(exists=True, dir_okay=False),
    required=True,
)
def nearest_point_cmd(points_file: str):
    """Exact closest point of the convex hull of listed weight vectors."""
    points = []
    with open(points_file, "r", encoding="utf-8") as fh:
        for n, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            try:
                points.append(tuple(parse_weight(line)))
            except ValueError as e:
                raise click.ClickException(f"{points_file}:{n}: {e}")
    if not points:
        raise click.ClickException("no points given")
    cert = nearest_point(points)
    if not cert.verify(points):
        raise click.ClickException("internal error: certificate fails to verify")
    click.echo(f"nearest point = {serialize_weight(cert.point)}")
    norm = sum(c * c for c in cert.point)
    click.echo(f"norm^2 = {norm}")
    for idx, coeff in sorted(cert.coefficients.items()):
        click.echo(f"  point {idx + 1} (line order): coefficient {coeff}")
    sys.exit(0)


@main.command("report")
@click.option("--out", "out_path", type=click.Path(dir_okay=False), required=True)
@click.option(
    "--format",
    "fmt",
    type=click.Choice(["text", "json"]),
    default="text",
    show_default=True,
)
@click.pass_obj
def report_cmd(state: _State, out_path: str, fmt: str):
    """Verify everything, write the report, and render charts beside it."""
    catalog = state.catalog
    report = verify_all(catalog)
    body = render_text(report) if fmt == "text" else render_json(report)
    with open(out_path, "w", encoding="utf-8") as fh:
        fh.write(body)
    figure_paths = write_figures(report, catalog, out_path)
    click.echo(f"report written to {out_path}")
    for p in figure_paths:
        click.echo(f"figure written to {p}")
    click.echo("catalog verifies" if report.ok else "catalog FAILS")
    sys.exit(0 if report.ok else 1)


if __name__ == "__main__":
    main()
