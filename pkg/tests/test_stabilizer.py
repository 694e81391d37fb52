from fractions import Fraction

import pytest

from tristrata import Multivector, default_catalog
from tristrata.stabilizer import (
    ActiveSpec,
    RepSpec,
    Summand,
    build_registry,
    g2_structure_report,
    parse_active_spec,
    serialize_active_spec,
    tangent_dim_ambient,
    tangent_dim_repspec,
    trace_constraint,
)


def test_active_spec_grammar():
    for text in ("all", "scalar+all", "blocks=2,3", "scalar+blocks=1"):
        spec = parse_active_spec(text)
        assert serialize_active_spec(spec) == text
    assert parse_active_spec("all") == ActiveSpec(False, ())
    assert parse_active_spec("scalar+blocks=2,3") == ActiveSpec(True, (2, 3))
    with pytest.raises(ValueError):
        parse_active_spec("blocks=")
    with pytest.raises(ValueError):
        parse_active_spec("everything")


def test_resolve_checks_range():
    with pytest.raises(ValueError):
        ActiveSpec(False, (5,)).resolve(2)
    assert ActiveSpec(False, ()).resolve(3) == [1, 2, 3]


def test_ambient_generator_count_on_zero_point():
    # at the zero point every generator acts trivially, so the kernel
    # dimension counts the active generators exactly
    beta = tuple(Fraction(k) for k in (0, 0, 0, 1, 1, 1, 1, 1))
    z = Multivector.zero()
    assert tangent_dim_ambient(beta, parse_active_spec("blocks=1"), z) == 9
    assert tangent_dim_ambient(beta, parse_active_spec("scalar+all"), z) == 35
    assert tangent_dim_ambient(beta, parse_active_spec("all"), z) == 34


def test_ambient_rejects_point_off_cone():
    cat = default_catalog()
    rec = cat[1]
    stray = Multivector.basis(1)
    if 1 not in set(rec.z_coords) | set(rec.w_coords):
        with pytest.raises(ValueError):
            tangent_dim_ambient(rec.beta, parse_active_spec("all"), stray)


def test_repspec_validation():
    with pytest.raises(ValueError):
        RepSpec(
            gl1_count=1,
            factors=(2,),
            summands=(Summand(gl1_weights=(), det_exponents=(0,), wedge_powers=(1,)),),
        )
    with pytest.raises(ValueError):
        RepSpec(
            gl1_count=0,
            factors=(2,),
            summands=(Summand(gl1_weights=(), det_exponents=(0,), wedge_powers=(3,)),),
        )


def test_repspec_single_factor_line():
    # one GL2 on its standard rep at a single basis vector: the kernel holds
    # the three generators missing that column's off-diagonal plus scaling
    spec = RepSpec(
        gl1_count=0,
        factors=(2,),
        summands=(Summand(gl1_weights=(), det_exponents=(0,), wedge_powers=(1,)),),
    )
    basis = spec.basis()
    w = {basis[0]: Fraction(1)}
    assert tangent_dim_repspec(spec, w) == 2


def test_trace_constraint_rows():
    spec = RepSpec(
        gl1_count=1,
        factors=(2,),
        summands=(Summand(gl1_weights=(1,), det_exponents=(0,), wedge_powers=(1,)),),
    )
    con = trace_constraint(spec, [2], [3])
    assert con.coeffs["t1"] == 2
    assert con.coeffs["f1:1,1"] == 3
    assert con.coeffs["f1:2,2"] == 3


def test_g2_report():
    rep = g2_structure_report()
    assert rep.ok
    assert rep.dim_l1 == 14
    assert len(rep.brackets) == 6
    assert sum(1 for b in rep.brackets if b.erratum) == 1
    bad = next(b for b in rep.brackets if b.erratum)
    assert bad.computed == (Fraction(-1), Fraction(-1))
    assert bad.printed == (-1, 2)
    assert not bad.matches_printed
    assert rep.roots_match
    assert len(rep.roots) == 12
    assert rep.warnings


def test_registry_names_and_kinds():
    cat = default_catalog()
    reg = build_registry(cat)
    named = {
        "case1-m3x2": 4,
        "case1-wedge62": 10,
        "case3-wedge7": 15,
        "case3-chi0": 14,
        "case4-wedge6": 17,
        "case5-pair": 5,
    }
    for name, want in named.items():
        case = reg[name]
        assert case.kind == "repspec"
        assert case.expected == want
    assert reg["case3-g2"].kind == "structure"
    assert reg["case3-g2"].expected is None
    ambient = [n for n, c in reg.items() if c.kind == "ambient"]
    assert sorted(ambient) == sorted(
        f"beta{i}-tangent" for i in (1, 2, 4, 11, 49, 57, 98, 108)
    )
