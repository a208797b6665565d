from fractions import Fraction as Fr
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from riordan_circulant import (
    DomainError,
    IdentityViolation,
    Poly,
    Series,
    az_sequences,
    build,
    catalan,
    csum_expansion,
    parse_poly,
    theorem6_check,
    verify_catalan_forms,
    verify_rogers,
)
from riordan_circulant.azseq import c_coefficient_table, catalan_table, theorem6_rhs

nonzero = st.builds(Fr, st.integers(-6, 6), st.integers(1, 4)).filter(bool)
polys = (
    st.lists(st.integers(-3, 3), min_size=1, max_size=4)
    .filter(lambda c: c[0] != 0 and c[-1] != 0)
    .map(Poly)
)


def test_catalan_numbers():
    assert catalan_table(9) == [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862]
    with pytest.raises(DomainError):
        catalan(-1)


def test_linear_sequences():
    az = az_sequences(parse_poly("1,1"), 6)
    assert az.A.coeffs == (1, 1, -1, 2, -5, 14)
    assert az.Z.coeffs == (0, 1, -1, 2, -5, 14)
    assert az.Z == az.hbar


def test_constant_polynomial():
    az = az_sequences(parse_poly("7"), 5)
    assert az.Z.coeffs == (1, 0, 0, 0, 0)
    assert az.A.coeffs == (7, 0, 0, 0, 0)


@given(polys)
def test_rogers_rules_rebuild_the_array(p):
    assert verify_rogers(p, 8).passed


def test_rogers_rules_by_hand():
    # oracle: apply the A- and Z-rules directly to build(p) and compare
    p = parse_poly("-1/3,2/3,2/3")
    arr = build(p, 9, 9)
    az = az_sequences(p, 9)
    for n in range(8):
        assert arr[n + 1, 0] == sum(az.Z[j] * arr[n, j] for j in range(9))
        for k in range(8):
            assert arr[n + 1, k + 1] == sum(az.A[j] * arr[n, k + j] for j in range(9 - k))


@given(nonzero, nonzero)
def test_catalan_forms(a, b):
    assert verify_catalan_forms(a, b, 8).passed


def test_catalan_forms_reject_zero():
    with pytest.raises(DomainError):
        verify_catalan_forms(0, 1, 5)


@given(polys)
def test_hbar_is_the_compositional_inverse(p):
    az = az_sequences(p, 9)
    h = p.times_t(9)
    assert h.compose(az.hbar) == Series.t(9)
    assert (az.A * az.hbar.div_t().truncate(8)).truncate(8) == Series.one(8)


def test_theorem6_values_and_rhs():
    rep = theorem6_check(1, 1, 7)
    assert rep.details["values"] == [1, -3, 10, -35, 126, -462, 1716, -6435]
    assert theorem6_rhs(2, 3, 2) == Fr(9, 2**6) * comb(5, 3)
    rep = theorem6_check(Fr(2, 3), Fr(-5, 7), 6)
    assert rep.passed and rep.checks == 7
    with pytest.raises(DomainError):
        theorem6_check(0, 1, 3)


def test_c_expansion_table():
    table = c_coefficient_table(csum_expansion(8, K=4))
    assert table[4] == [-5, 10, -2, 0]
    assert table[6] == [-42, 126, -84, 7]
    assert table[7] == [132, -462, 420, -84]


def test_c_squared_coefficients():
    A = csum_expansion(10, K=3)
    assert [A[n][2] for n in range(10)] == [0, 0, 0, 0, -2, 15, -84, 420, -1980, 9009]


def test_identity_violation(monkeypatch):
    import riordan_circulant.azseq as azs

    monkeypatch.setattr(azs, "_unsimplified_z", lambda d, h: Series.one(h.order))
    with pytest.raises(IdentityViolation):
        azs.az_sequences(parse_poly("1,1"), 5)


def test_order_must_be_positive():
    with pytest.raises(DomainError):
        az_sequences(parse_poly("1,1"), 1)
