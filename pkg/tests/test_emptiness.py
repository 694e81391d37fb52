from fractions import Fraction

import pytest

from tristrata import default_catalog
from tristrata.emptiness import suggest_1ps, verify_certificate
from tristrata.strata import decompose


def test_stored_certificate_verifies():
    cat = default_catalog()
    rec = cat[46]
    rep = verify_certificate(rec.beta, rec.cert_zero, rec.cert_ops, rec.cert_weights)
    assert rep.ok
    assert not rep.failures
    assert rep.weights == {56: 1}


def test_uniform_weight_row():
    cat = default_catalog()
    rec = cat[2]
    rep = verify_certificate(rec.beta, rec.cert_zero, rec.cert_ops, rec.cert_weights)
    assert rep.ok
    assert set(rep.weights.values()) == {4}


def test_negated_ops_fails_positivity():
    cat = default_catalog()
    rec = cat[46]
    bad = tuple(-v for v in rec.cert_ops)
    rep = verify_certificate(rec.beta, rec.cert_zero, bad)
    assert not rep.ok
    assert any("is not positive" in f for f in rep.failures)


def test_unbalanced_ops_reported():
    cat = default_catalog()
    rec = cat[46]
    bad = rec.cert_ops[:-1] + (rec.cert_ops[-1] + 1,)
    rep = verify_certificate(rec.beta, rec.cert_zero, bad)
    assert not rep.ok
    assert len(rep.failures) == 1  # the shape check short-circuits


def test_zero_outside_critical_set():
    cat = default_catalog()
    rec = cat[46]
    dec = decompose(rec.beta)
    outside = next(c for c in range(1, 57) if c not in dec.z_coords)
    rep = verify_certificate(rec.beta, rec.cert_zero + (outside,), rec.cert_ops)
    assert not rep.ok
    assert any("outside the critical set" in f for f in rep.failures)


def test_expected_weight_mismatches():
    cat = default_catalog()
    rec = cat[50]
    assert rec.cert_weights[18] == 36
    assert rec.cert_weights[11] == 1
    tampered = dict(rec.cert_weights)
    tampered[18] = 35
    rep = verify_certificate(rec.beta, rec.cert_zero, rec.cert_ops, tampered)
    assert not rep.ok
    assert any("differs from recomputed" in f for f in rep.failures)
    short = dict(rec.cert_weights)
    del short[11]
    rep2 = verify_certificate(rec.beta, rec.cert_zero, rec.cert_ops, short)
    assert not rep2.ok
    assert any("do not cover exactly" in f for f in rep2.failures)


def test_suggestion_round_trips():
    cat = default_catalog()
    rec = cat[18]
    sug = suggest_1ps(rec.beta, rec.cert_zero)
    assert sug is not None
    rep = verify_certificate(rec.beta, rec.cert_zero, sug.ops)
    assert rep.ok
    assert set(sug.margins) == set(rep.weights)
    for c, m in sug.margins.items():
        assert m >= 1


def test_suggest_needs_something_to_separate():
    cat = default_catalog()
    rec = cat[2]
    dec = decompose(rec.beta)
    with pytest.raises(ValueError):
        suggest_1ps(rec.beta, tuple(dec.z_coords))
