import random
from fractions import Fraction

import pytest

from tristrata import default_catalog, gl_apply
from tristrata.unipotent import (
    UPoly,
    check_triangular,
    generic_unipotent,
    numeric_unipotent,
    orbit_expansion,
    parse_expansion,
    parse_upoly,
    parse_var,
    serialize_expansion,
    serialize_upoly,
    substitute,
    var_name,
)


def test_var_round_trip():
    assert parse_var("u41") == (4, 1)
    assert var_name((7, 2)) == "u72"
    with pytest.raises(ValueError):
        parse_var("u4")
    with pytest.raises(ValueError):
        parse_var("v41")


def test_upoly_arithmetic():
    x = UPoly.var((4, 1))
    y = UPoly.var((5, 2))
    p = x * y + UPoly.const(3) - x.scaled(2)
    assert p.coeff(((4, 1), (5, 2))) == 1
    assert p.coeff(()) == 3
    assert p.coeff(((4, 1),)) == -2
    assert p.variables() == {(4, 1), (5, 2)}
    vals = {(4, 1): Fraction(2), (5, 2): Fraction(-1)}
    assert p.evaluate(vals) == -2 + 3 - 4
    assert not (p - p)
    assert UPoly.zero() == UPoly.const(0)


def test_upoly_text_round_trip():
    p = parse_upoly("+1*u41*u52 -2/3*u61 +5")
    assert p.coeff(((4, 1), (5, 2))) == 1
    assert p.coeff(((6, 1),)) == Fraction(-2, 3)
    assert p.coeff(()) == 5
    assert parse_upoly(serialize_upoly(p)) == p
    with pytest.raises(ValueError):
        parse_upoly("u41")  # missing sign


def test_generic_unipotent_layout():
    beta = tuple(Fraction(k) for k in (0, 0, 0, 1, 1, 1, 1, 1))
    n = generic_unipotent(beta)
    assert n[0][0] == UPoly.const(1)
    assert n[3][0] == UPoly.var((4, 1))
    assert n[0][3] == UPoly.zero()
    assert n[4][2] == UPoly.var((5, 3))


def test_numeric_unipotent_rejects_off_pattern():
    beta = tuple(Fraction(k) for k in (0, 0, 0, 1, 1, 1, 1, 1))
    m = numeric_unipotent(beta, {(4, 1): Fraction(7)})
    assert m[3][0] == 7 and m[0][0] == 1
    with pytest.raises(ValueError):
        numeric_unipotent(beta, {(1, 4): Fraction(1)})


def test_expansion_exact_lines():
    cat = default_catalog()
    rec = cat[32]
    exp = orbit_expansion(rec.beta, rec.reps[rec.main_rep])
    want = parse_expansion(
        "e567 : +1*u53 -1*u61\n"
        "e568 : +1*u54 -1*u62\n"
        "e578 : -1*u72 +1*u81\n"
        "e678 : -1*u74 +1*u83\n"
    )
    assert exp == want


def test_expansion_empty_when_unipotent_fixes_rep():
    cat = default_catalog()
    for rid in (9, 63, 98, 182, 183):
        rec = cat[rid]
        assert orbit_expansion(rec.beta, rec.reps[rec.main_rep]) == {}


def test_substitute_matches_group_action():
    cat = default_catalog()
    rng = random.Random(11)
    for rid in (7, 13, 180):
        rec = cat[rid]
        r = rec.reps[rec.main_rep]
        exp = orbit_expansion(rec.beta, r)
        free = sorted({v for p in exp.values() for v in p.variables()})
        for _ in range(5):
            vals = {v: Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for v in free}
            moved = gl_apply(numeric_unipotent(rec.beta, vals), r)
            assert substitute(exp, vals) == moved - r


def test_check_triangular_on_stored_orders():
    cat = default_catalog()
    rec = cat[13]
    exp = orbit_expansion(rec.beta, rec.reps[rec.main_rep])
    rep = check_triangular(exp, rec.var_order, rec.coord_order)
    assert rep.ok
    assert len(rep.lines) == len(rec.coord_order)
    k = len(rec.coord_order)
    paired = rec.var_order[-k:]
    for line, coord, var in zip(rep.lines, rec.coord_order, paired):
        assert line.coord == coord
        assert line.lead == var
        assert line.sign in (1, -1)


def test_check_triangular_failure_modes():
    cat = default_catalog()
    rec = cat[13]
    exp = orbit_expansion(rec.beta, rec.reps[rec.main_rep])
    with pytest.raises(ValueError):
        check_triangular(exp, (rec.var_order[0],) * 2, rec.coord_order[:2])
    # reversed coordinate order breaks the pairing
    rep = check_triangular(exp, rec.var_order, tuple(reversed(rec.coord_order)))
    assert not rep.ok
    # a coordinate outside the declared order reports a zero lead
    rep2 = check_triangular(exp, rec.var_order[:1], rec.coord_order[:1])
    assert not rep2.ok
    assert any(line.lead == (0, 0) for line in rep2.lines if not line.ok)


def test_expansion_text_round_trip():
    cat = default_catalog()
    rec = cat[7]
    exp = orbit_expansion(rec.beta, rec.reps[rec.main_rep])
    text = serialize_expansion(exp, coord_order=rec.coord_order)
    assert parse_expansion(text) == exp
    first = text.splitlines()[0]
    assert first.startswith("e")
    assert " : " in first
