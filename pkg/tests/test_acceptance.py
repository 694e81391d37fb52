"""Acceptance gate: one test per criterion, runnable end to end via pytest -v.

Every test recomputes its claim from scratch against the packaged catalog.
One test is expected to fail and is kept failing on purpose; its assertion
message explains the discrepancy it pins down.
"""

import importlib.util
import pathlib
import random
import shutil
import subprocess
import time
from fractions import Fraction
from itertools import combinations

from tristrata import (
    default_catalog,
    gl_apply,
    index_of,
    nearest_point,
    verify_all,
    verify_beta,
    verify_record,
    weight_of,
)
from tristrata.emptiness import suggest_1ps, verify_certificate
from tristrata.invariants import eval_invariant
from tristrata.stabilizer import (
    build_registry,
    g2_structure_report,
    parse_active_spec,
    tangent_dim_ambient,
)
from tristrata.strata import blocks_of, decompose
from tristrata.unipotent import (
    check_triangular,
    numeric_unipotent,
    orbit_expansion,
    parse_expansion,
    substitute,
)

CAT = default_catalog()

NONEMPTY_IDS = (
    1, 4, 7, 9, 13, 32, 33, 37, 63, 74, 81, 98, 108,
    152, 154, 172, 173, 179, 180, 182, 183,
)

W_SIZES = (10, 13, 6, 0, 13, 4, 11, 12, 0, 12, 7, 0, 4, 10, 4, 3, 7, 1, 15, 0, 0)

RECIPE_IDS = (4, 7, 13, 33, 37, 63, 74, 81, 152, 154, 172, 173, 179, 180, 182, 183)

FIRST_EXPANSION = """\
e456 : -1*u41
e468 : +1*u62
e678 : -1*u83
e457 : -1*u51 +2*u42
e458 : +1*u52 +1*u43
e467 : -1*u61 -1*u43
e568 : -1*u63 -1*u81
e478 : +1*u72 +1*u81
e578 : -1*u73 +2*u82
e567 : -1*u53 -2*u62 -1*u71
"""

# narrative coordinate subspaces quoted alongside the list-b rows; the
# stored zero set of each row must sit inside their union
LIST_B_SUBSPACES = {
    18: [{18, 20, 21}, {26, 30}],
    42: [{32, 34}],
    44: [{26, 30}],
    45: [{26, 30}],
    65: [{47, 48, 50}],
    68: [{39, 42, 48}],
    75: [{6, 11, 26}, {47, 48}],
    92: [{42, 48}],
    93: [{20, 21}],
    94: [{34, 44}],
    102: [{47, 48}],
    107: [{39, 42}],
    109: [{18, 20}],
    123: [{48, 50, 53}],
    144: [{40, 43}],
    150: [{40, 43}],
    151: [{34, 44}],
    153: [{47, 48}],
    168: [{35, 36}],
}

# coordinates eliminated in the list-c narratives; each row's stored zero
# set must equal its pair exactly
LIST_C_ELIMINATED = {
    34: {20, 47},
    35: {15, 29},
    82: {33, 42},
    83: {36, 48},
    84: {40, 44},
    87: {34, 39},
    104: {40, 42},
    106: {19, 48},
    129: {33, 48},
    132: {19, 34},
    133: {35, 50},
    134: {35, 49},
    149: {25, 41},
    161: {50, 53},
    162: {35, 47},
}


def test_ac01_coordinate_table():
    start = time.monotonic()
    for n, t in enumerate(combinations(range(1, 9), 3), start=1):
        assert index_of(t) == n
    assert weight_of(1) == tuple(
        Fraction(v, 8) for v in (5, 5, 5, -3, -3, -3, -3, -3)
    )
    assert time.monotonic() - start < 1.0


def test_ac02_all_betas_certified():
    start = time.monotonic()
    for rec in CAT.records.values():
        cert = verify_beta(rec.beta)
        assert cert.ok, f"id {rec.id}: direction vector fails its certificate"
    single = nearest_point([weight_of(56)])
    assert single.point == CAT[183].beta
    assert time.monotonic() - start < 60.0


def test_ac03_cone_decompositions():
    sizes = []
    for rid in NONEMPTY_IDS:
        rec = CAT[rid]
        dec = decompose(rec.beta)
        assert tuple(dec.z_coords) == rec.z_coords, f"id {rid}: flat part differs"
        assert tuple(dec.w_coords) == rec.w_coords, f"id {rid}: strict cone differs"
        assert dec.blocks == blocks_of(rec.beta)
        sizes.append(len(dec.w_coords))
    assert tuple(sizes) == W_SIZES


def test_ac04_relative_invariant_units():
    for rid in RECIPE_IDS:
        rec = CAT[rid]
        recipe = rec.recipe()
        assert recipe is not None, f"id {rid}: no evaluable recipe"
        assert rec.expected_invariant_abs == 1
        val = eval_invariant(recipe, rec.reps[rec.main_rep])
        assert abs(val) == 1, f"id {rid}: invariant value {val} at the base point"


def test_ac05_tangent_registry():
    start = time.monotonic()
    reg = build_registry(CAT)
    assert len([c for c in reg.values() if c.kind == "ambient"]) == 8
    for case in reg.values():
        if case.kind == "structure":
            assert case.compute().ok, f"{case.name}: structure report fails"
            continue
        got = case.compute()
        assert got == case.expected, (
            f"{case.name}: computed {got}, recorded {case.expected} ({case.origin})"
        )
    assert time.monotonic() - start < 30.0


def test_ac05_declared_beta1_dimension_red():
    """Deliberately failing: pins the one declared value the recomputation rejects.

    The tabulated count 35 + 1 - 30 for the first stratum adds a global
    scalar on top of the two block actions, but the scalar already lies in
    the span of the block identities, so the generator space stays
    35-dimensional and the rank-30 linearization leaves a 5-dimensional
    kernel.  The declared 6 double-counts that scalar direction.
    """
    rec = CAT[1]
    x = rec.reps[rec.tangent_rep or rec.main_rep]
    got = tangent_dim_ambient(rec.beta, parse_active_spec("scalar+all"), x)
    assert got == 6, (
        "declared stabilizer dimension 6 for the first stratum is not "
        f"reproducible: 35 generators act with rank 30, kernel {got}; the "
        "35 + 1 - 30 count re-adds the global scalar that the block "
        "identities already span"
    )


def test_ac06_unipotent_expansions():
    rec1 = CAT[1]
    exp1 = orbit_expansion(rec1.beta, rec1.reps[rec1.main_rep])
    assert exp1 == parse_expansion(FIRST_EXPANSION)

    rec4 = CAT[4]
    exp4 = orbit_expansion(rec4.beta, rec4.reps[rec4.main_rep])
    assert exp4[index_of((4, 6, 7))].coeff(((6, 2),)) == -1
    # corrected sign: the tabulated expansion shows +u41 here, but the
    # tabulated base point forces the opposite
    assert exp4[index_of((4, 6, 8))].coeff(((4, 1),)) == -1

    ordered = [CAT[rid] for rid in NONEMPTY_IDS if CAT[rid].var_order is not None]
    assert len(ordered) == 16
    rng = random.Random(20260822)
    for rec in ordered:
        r = rec.reps[rec.main_rep]
        exp = orbit_expansion(rec.beta, r)
        tri = check_triangular(exp, rec.var_order, rec.coord_order)
        assert tri.ok, f"id {rec.id}: stored orders are not triangular"
        free = sorted({v for p in exp.values() for v in p.variables()})
        for _ in range(200):
            vals = {
                v: Fraction(rng.randint(-3, 3), rng.randint(1, 2)) for v in free
            }
            moved = gl_apply(numeric_unipotent(rec.beta, vals), r)
            assert substitute(exp, vals) == moved - r, f"id {rec.id}: substitution drifts"

    for rid in (4, 154):
        out = verify_record(CAT[rid])
        assert out.ok, f"id {rid}: checks must stay green"
        assert out.warnings, f"id {rid}: the correction must surface as a warning"


def test_ac07_emptiness_certificates():
    start = time.monotonic()
    empties = [r for r in CAT.records.values() if r.status == "empty"]
    assert len(empties) == 162

    table_e = [r for r in empties if r.cert_case == "table-e"]
    assert len(table_e) == 28
    for rec in table_e:
        rep = verify_certificate(rec.beta, rec.cert_zero, rec.cert_ops, rec.cert_weights)
        assert rep.ok, f"id {rec.id}: certificate fails"
        assert all(w >= 1 for w in rep.weights.values())

    assert set(verify_certificate(CAT[2].beta, CAT[2].cert_zero, CAT[2].cert_ops).weights.values()) == {4}
    w50 = verify_certificate(CAT[50].beta, CAT[50].cert_zero, CAT[50].cert_ops).weights
    assert w50[18] == 36 and w50[11] == 1
    assert verify_certificate(CAT[46].beta, CAT[46].cert_zero, CAT[46].cert_ops).weights == {56: 1}

    for rec in empties:
        if rec.cert_case not in ("list-b", "list-c"):
            continue
        sug = suggest_1ps(rec.beta, rec.cert_zero)
        rerun = verify_certificate(rec.beta, rec.cert_zero, sug.ops)
        assert rerun.ok, f"id {rec.id}: suggested cocharacter fails to verify"

    b_ids = {r.id for r in empties if r.cert_case == "list-b"}
    assert b_ids == set(LIST_B_SUBSPACES)
    for rid, spaces in LIST_B_SUBSPACES.items():
        union = set().union(*spaces)
        assert set(CAT[rid].cert_zero) <= union, f"id {rid}: zero set leaves the subspaces"

    c_ids = {r.id for r in empties if r.cert_case == "list-c"}
    assert c_ids == set(LIST_C_ELIMINATED)
    for rid, gone in LIST_C_ELIMINATED.items():
        assert set(CAT[rid].cert_zero) == gone, f"id {rid}: eliminated set differs"
    assert time.monotonic() - start < 30.0


def test_ac08_exceptional_structure():
    rep = g2_structure_report()
    assert rep.ok
    assert rep.dim_l1 == 14
    assert rep.roots_match and len(rep.roots) == 12
    printed_exact = sum(1 for b in rep.brackets if b.matches_printed)
    corrected = sum(1 for b in rep.brackets if b.erratum and not b.matches_printed)
    assert printed_exact == 5 and corrected == 1


def test_ac09_cli_end_to_end():
    start = time.monotonic()
    exe = shutil.which("tristrata")
    assert exe is not None, "console entry point is not installed"
    proc = subprocess.run(
        [exe, "verify", "all"], capture_output=True, text=True, timeout=170
    )
    assert proc.returncode == 0, proc.stdout + proc.stderr
    assert "nonempty 21" in proc.stdout
    assert "orbit types:" in proc.stdout
    assert "catalog verifies" in proc.stdout
    assert time.monotonic() - start < 180.0


def test_ac10_property_suites_are_wide():
    path = pathlib.Path(__file__).with_name("test_properties.py")
    spec = importlib.util.spec_from_file_location("property_suites", path)
    mod = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(mod)
    suites = [
        "test_wedge_antisymmetry",
        "test_action_composition",
        "test_linearization_matches_derivation",
        "test_pfaffian_squares_to_determinant",
        "test_pfaffian_congruence_covariance",
        "test_quadratic_discriminant_invariance",
        "test_cubic_discriminant_invariance",
        "test_nearest_point_certificate_always_verifies",
        "test_hull_membership_and_separation_are_exclusive",
    ]
    for name in suites:
        fn = getattr(mod, name, None)
        assert fn is not None, f"missing property suite {name}"
        st = getattr(fn, "_hypothesis_internal_use_settings", None)
        assert st is not None, f"{name} is not a randomized suite"
        assert st.max_examples >= 100, f"{name} runs only {st.max_examples} examples"
