import json

import pytest
from hypothesis import given, settings, strategies as st

from ipgp.poly import (
    IntPoly, PolyError, PolyMatrix, X, crt_signed, mat_mul, mat_pow, mat_pow_trace,
    poly_add, poly_mul, trace_power_bound,
)
from ipgp.transfer import build_transfer_matrix, gp_polynomial

ints = st.integers(-10**30, 10**30)
polys = st.lists(ints, max_size=6).map(lambda c: IntPoly(tuple(c)))
small_polys = st.lists(st.integers(-3, 3), max_size=3).map(lambda c: IntPoly(tuple(c)))


def poly_matrices(dim, entries=small_polys):
    return st.lists(st.lists(entries, min_size=dim, max_size=dim), min_size=dim, max_size=dim) \
        .map(lambda rows: PolyMatrix(tuple(tuple(r) for r in rows)))


def P(*c):
    return IntPoly(c)


# --- IntPoly -------------------------------------------------------------

def test_canonical_trimming():
    assert P(1, 2, 0, 0).coeffs == (1, 2)
    assert P(0, 0).coeffs == ()
    assert P().degree == -1
    assert P(3, 0, 1).degree == 2


def test_add_examples():
    assert poly_add(P(1, 1), P(1, -1)) == P(2)
    assert poly_add(P(), P(4, 5)) == P(4, 5)
    assert poly_add(P(1, 2), P(0, 3, 1)) == P(1, 5, 1)


def test_mul_examples():
    assert poly_mul(P(1, 1), P(1, 1)) == P(1, 2, 1)
    assert poly_mul(P(1, 2, 3), P()) == P()
    assert poly_mul(P(1, 6, 6), P(1)) == P(1, 6, 6)


@given(polys, polys, polys)
def test_ring_laws(a, b, c):
    assert a + b == b + a
    assert (a + b) + c == a + (b + c)
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(polys, polys)
def test_degree_of_product(a, b):
    if a and b:
        assert (a * b).degree == a.degree + b.degree


@given(polys, st.integers(-50, 50))
def test_evaluation_is_a_homomorphism(a, x):
    assert (a * a)(x) == a(x) ** 2


@given(polys)
def test_json_round_trip(p):
    obj = json.loads(json.dumps(p.to_json()))
    assert all(isinstance(s, str) for s in obj["coeffs"])
    assert IntPoly.from_json(obj) == p


def test_large_coefficients_round_trip():
    p = gp_polynomial(30, 4)
    assert max(p.coeffs) > 2**31
    assert IntPoly.loads(p.dumps()) == p


def test_big_ints_beyond_64_bits_round_trip():
    p = P(2**200 + 1, -(3**150))
    assert IntPoly.loads(p.dumps()) == p


# --- matrices ------------------------------------------------------------

def test_identity_and_zero_products():
    m = PolyMatrix.from_rows([[P(1, 2), P(0, 1)], [P(3), P()]])
    assert mat_mul(PolyMatrix.identity(2), m) == m
    assert mat_mul(m, PolyMatrix.zeros(2)) == PolyMatrix.zeros(2)


def test_two_by_two_square():
    m = PolyMatrix.from_rows([[X, 1], [0, X]])
    assert mat_mul(m, m) == PolyMatrix.from_rows([[P(0, 0, 1), P(0, 2)], [0, P(0, 0, 1)]])


def test_dimension_mismatch():
    with pytest.raises(PolyError):
        mat_mul(PolyMatrix.identity(2), PolyMatrix.identity(3))


def test_non_square_rejected():
    with pytest.raises(PolyError):
        PolyMatrix(((P(1), P(2)),))


@pytest.mark.parametrize("method", ["modular", "exact"])
def test_trace_of_identity_power(method):
    for d in (1, 3, 8):
        assert mat_pow_trace(PolyMatrix.identity(d), 7, method=method) == P(d)


@pytest.mark.parametrize("method", ["modular", "exact"])
def test_trace_of_diagonal_cube(method):
    m = PolyMatrix.from_rows([[X, 0], [0, P(0, 0, 1)]])
    assert mat_pow_trace(m, 3, method=method) == P(0, 0, 0, 1, 0, 0, 1)


def test_trace_of_t1_cubed_matches_prism():
    m = build_transfer_matrix(1).matrix
    assert mat_pow_trace(m, 3) == P(1, 6, 6)


@pytest.mark.parametrize("method", ["modular", "exact"])
def test_exponent_must_be_positive(method):
    with pytest.raises(PolyError):
        mat_pow_trace(PolyMatrix.identity(2), 0, method=method)


def iterated_trace(m, n):
    acc = m
    for _ in range(n - 1):
        acc = mat_mul(acc, m)
    return acc.trace()


@settings(max_examples=25, deadline=None)
@given(poly_matrices(4), st.integers(1, 12))
def test_binary_exponentiation_equals_iteration(m, n):
    expected = iterated_trace(m, n)
    assert mat_pow(m, n).trace() == expected
    assert mat_pow_trace(m, n) == expected


@settings(max_examples=25, deadline=None)
@given(poly_matrices(3), st.integers(1, 6), st.integers(1, 6))
def test_trace_cyclicity(m, a, b):
    ma, mb = mat_pow(m, a), mat_pow(m, b)
    assert mat_mul(ma, mb).trace() == mat_mul(mb, ma).trace() == mat_pow_trace(m, a + b)


@settings(max_examples=10, deadline=None)
@given(poly_matrices(3, st.lists(st.integers(-10**12, 10**12), max_size=3)
                     .map(lambda c: IntPoly(tuple(c)))), st.integers(1, 9))
def test_modular_route_handles_huge_signed_coefficients(m, n):
    assert mat_pow_trace(m, n) == mat_pow(m, n).trace()


def test_trace_bound_dominates():
    m = build_transfer_matrix(2).matrix
    t = mat_pow_trace(m, 11)
    assert max(abs(a) for a in t.coeffs) <= trace_power_bound(m, 11)


def test_crt_signed_small():
    moduli = [7, 11, 13]
    values = [-500, 0, 499, -1]
    residues = [[v % q for v in values] for q in moduli]
    assert crt_signed(residues, moduli) == values
