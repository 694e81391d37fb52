"""Rendering of verification reports: delimited text, JSON, and chart files."""

from __future__ import annotations

import json
import os

from .catalog import Catalog, CatalogReport


def render_text(report: CatalogReport) -> str:
    """Tab-delimited outcome table with a comment-line summary block."""
    lines = ["id\tstatus\torbit_type\tok\tfailed_checks\twarnings"]
    for o in report.outcomes:
        failed = ",".join(c.name for c in o.failed) or "-"
        warn = str(len(o.warnings))
        lines.append(
            f"{o.id}\t{o.status}\t{o.orbit_type or '-'}\t"
            f"{'yes' if o.ok else 'NO'}\t{failed}\t{warn}"
        )
    lines.append(f"# records = {report.n_records}")
    lines.append(f"# nonempty = {report.n_nonempty}")
    hist = " ".join(f"{k}:{v}" for k, v in sorted(report.histogram.items()))
    lines.append(f"# histogram = {hist}")
    for msg in report.aggregate_failures:
        lines.append(f"# AGGREGATE FAILURE: {msg}")
    for w in report.warnings:
        lines.append(f"# warning: {w}")
    lines.append(f"# ok = {'yes' if report.ok else 'NO'}")
    lines.append(f"# elapsed_seconds = {report.elapsed:.2f}")
    return "\n".join(lines) + "\n"


def render_json(report: CatalogReport) -> str:
    payload = {
        "ok": report.ok,
        "records": report.n_records,
        "nonempty": report.n_nonempty,
        "histogram": dict(sorted(report.histogram.items())),
        "aggregate_failures": report.aggregate_failures,
        "warnings": report.warnings,
        "elapsed_seconds": round(report.elapsed, 3),
        "outcomes": [
            {
                "id": o.id,
                "status": o.status,
                "orbit_type": o.orbit_type,
                "ok": o.ok,
                "checks": [
                    {"name": c.name, "ok": c.ok, "detail": c.detail}
                    for c in o.checks
                ],
                "warnings": o.warnings,
            }
            for o in report.outcomes
        ],
    }
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def write_figures(report: CatalogReport, catalog: Catalog, out_path: str) -> list[str]:
    """Charts next to the report file: norm profile, orbit types, cone sizes."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    from .torus import pair

    stem, _ = os.path.splitext(out_path)
    paths: list[str] = []

    fig, ax = plt.subplots(figsize=(8, 4))
    ids = catalog.ids()
    norm_by_id = {i: float(pair(catalog[i].beta, catalog[i].beta)) for i in ids}
    ax.plot(ids, [norm_by_id[i] for i in ids], color="#888888", linewidth=0.8,
            zorder=1)
    ne = [i for i in ids if catalog[i].status == "nonempty"]
    ax.scatter(ne, [norm_by_id[i] for i in ne], color="#a85348", s=18, zorder=2,
               label="nonempty")
    ax.set_xlabel("stratum id")
    ax.set_ylabel("squared norm of the index vector")
    ax.set_title("norm profile across the catalog")
    ax.legend()
    fig.tight_layout()
    p = f"{stem}-norm-profile.png"
    fig.savefig(p, dpi=120)
    plt.close(fig)
    paths.append(p)

    fig, ax = plt.subplots(figsize=(6, 4))
    items = sorted(report.histogram.items(), key=lambda kv: (-kv[1], kv[0]))
    ax.bar([k for k, _ in items], [v for _, v in items], color="#4878a8")
    ax.set_ylabel("nonempty strata")
    ax.set_title("orbit types over the nonempty strata")
    ax.set_ylim(0, max((v for _, v in items), default=1) + 1)
    for n, (_, v) in enumerate(items):
        ax.text(n, v + 0.1, str(v), ha="center")
    fig.tight_layout()
    p = f"{stem}-orbit-types.png"
    fig.savefig(p, dpi=120)
    plt.close(fig)
    paths.append(p)

    fig, ax = plt.subplots(figsize=(8, 4))
    ids, sizes = [], []
    for o in report.outcomes:
        if o.status != "nonempty":
            continue
        rec = catalog.records[o.id]
        ids.append(str(o.id))
        sizes.append(len(rec.w_coords))
    ax.bar(ids, sizes, color="#a85348")
    ax.set_xlabel("stratum id")
    ax.set_ylabel("strict-cone dimension")
    ax.set_title("unipotent directions past the critical set")
    fig.tight_layout()
    p = f"{stem}-strict-cone.png"
    fig.savefig(p, dpi=120)
    plt.close(fig)
    paths.append(p)

    return paths
