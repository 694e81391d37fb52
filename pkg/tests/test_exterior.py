from fractions import Fraction

import pytest

from tristrata.exterior import (
    N_COORDS,
    Multivector,
    gl_apply,
    index_of,
    lie_apply,
    parse_multivector,
    serialize_multivector,
    sort_triple,
    triple_of,
    wedge3,
)


def basis_vec(i):
    return [Fraction(1) if n == i else Fraction(0) for n in range(1, 9)]


def test_index_corners():
    assert index_of((1, 2, 3)) == 1
    assert index_of((1, 2, 4)) == 2
    assert index_of((1, 7, 8)) == 21
    assert index_of((2, 3, 8)) == 26
    assert index_of((3, 4, 6)) == 38
    assert index_of((4, 5, 8)) == 49
    assert index_of((6, 7, 8)) == 56


def test_index_triple_round_trip():
    seen = set()
    for idx in range(1, N_COORDS + 1):
        t = triple_of(idx)
        assert t[0] < t[1] < t[2]
        assert index_of(t) == idx
        seen.add(t)
    assert len(seen) == 56


def test_index_rejects_unsorted():
    with pytest.raises(ValueError):
        index_of((2, 1, 3))
    with pytest.raises(ValueError):
        index_of((1, 1, 2))


def test_sort_triple_signs():
    assert sort_triple(1, 2, 3) == (1, (1, 2, 3))
    assert sort_triple(2, 1, 3) == (-1, (1, 2, 3))
    assert sort_triple(3, 1, 2) == (1, (1, 2, 3))
    assert sort_triple(1, 1, 2) is None


def test_multivector_algebra():
    x = Multivector({1: Fraction(2), 3: Fraction(-1)})
    y = Multivector.basis(3)
    assert (x + y)[3] == 0
    assert 3 not in (x + y).coeffs
    assert (x - x) == Multivector.zero()
    assert (-x)[1] == -2
    assert x.scaled(Fraction(1, 2))[1] == 1
    assert x.support() == [1, 3]


def test_parse_serialize_round_trip():
    text = "+1 e123 -2 e168 +1/2 e678"
    x = parse_multivector(text)
    assert x[1] == 1 and x[20] == -2 and x[56] == Fraction(1, 2)
    assert parse_multivector(serialize_multivector(x)) == x
    assert serialize_multivector(Multivector.zero()) == "0"
    assert parse_multivector("0") == Multivector.zero()


def test_parse_accumulates_and_rejects_garbage():
    assert parse_multivector("+1 e123 +2 e123")[1] == 3
    with pytest.raises(ValueError):
        parse_multivector("+1 e123 junk")
    with pytest.raises(ValueError):
        parse_multivector("e123")


def test_wedge_of_basis_vectors():
    assert wedge3(basis_vec(1), basis_vec(2), basis_vec(3)) == Multivector.basis(1)
    # one transposition flips the sign
    assert wedge3(basis_vec(4), basis_vec(6), basis_vec(5)) == Multivector.basis(
        index_of((4, 5, 6))
    ).scaled(-1)
    assert wedge3(basis_vec(2), basis_vec(2), basis_vec(5)) == Multivector.zero()


def test_wedge_multilinear():
    u = [Fraction(k) for k in (1, 0, 2, 0, 0, 0, 0, 0)]
    v = basis_vec(2)
    w = basis_vec(8)
    x = wedge3(u, v, w)
    assert x[index_of((1, 2, 8))] == 1
    assert x[index_of((2, 3, 8))] == -2


def test_gl_identity_and_diagonal():
    x = parse_multivector("+1 e147 -3 e258")
    ident = [[Fraction(int(i == j)) for j in range(8)] for i in range(8)]
    assert gl_apply(ident, x) == x
    d = [Fraction(k + 2) for k in range(8)]
    diag = [[d[i] if i == j else Fraction(0) for j in range(8)] for i in range(8)]
    y = gl_apply(diag, x)
    assert y[index_of((1, 4, 7))] == d[0] * d[3] * d[6]
    assert y[index_of((2, 5, 8))] == -3 * d[1] * d[4] * d[7]


def test_gl_permutation_sign():
    # swap p1 and p2: e123 -> p2 ^ p1 ^ p3 = -e123
    g = [[Fraction(0)] * 8 for _ in range(8)]
    g[0][1] = g[1][0] = Fraction(1)
    for k in range(2, 8):
        g[k][k] = Fraction(1)
    assert gl_apply(g, Multivector.basis(1)) == Multivector.basis(1).scaled(-1)


def test_lie_apply_scalar_and_derivation():
    x = parse_multivector("+1 e134")
    assert lie_apply(Fraction(5), [[Fraction(0)] * 8 for _ in range(8)], x) == x.scaled(5)
    a = [[Fraction(0)] * 8 for _ in range(8)]
    a[1][0] = Fraction(1)  # p1 -> p2
    y = lie_apply(Fraction(0), a, x)
    assert y == Multivector.basis(index_of((2, 3, 4)))


def test_gl_rejects_wrong_shape():
    with pytest.raises(ValueError):
        gl_apply([[Fraction(0)] * 7 for _ in range(7)], Multivector.basis(1))
