from fractions import Fraction as F

import pytest
import sympy as sp
from hypothesis import given, settings, strategies as st

from starpoly.errors import RecurrenceMismatchError, SymmetryViolationError
from starpoly.polynomials import (SymmetricPolynomial, tabulated_component_coefficients, check_structure_relation,
                                  component_recurrence, component_sequence, cubic_components,
                                  derivative_sequence, generate, hypergeometric_closed_form)
from starpoly.recurrence import FamilyParams, derivative_family, gamma

from conftest import ALL_POINTS, SCALED, ids

X = sp.Symbol("x")


def hessenberg_charpoly(p, n):
    """Independent oracle: det(x I - H_n) with sympy."""
    if n == 0:
        return sp.Poly(1, X)
    H = sp.zeros(n, n)
    for i in range(n - 1):
        H[i, i + 1] = 1
    for k in range(1, n - 1):
        g = gamma(p, k)
        H[k + 1, k - 1] = sp.Rational(g.numerator, g.denominator)
    return (X * sp.eye(n) - H).det(method="berkowitz").as_poly(X)


def as_sympy(P):
    return sp.Poly(sum(sp.Rational(c.numerator, c.denominator) * X ** k for k, c in P.coeff_map().items()), X,
                   domain="QQ")


def test_small_degrees():
    P = generate(FamilyParams("A"), 4)
    assert P[3].coeff_map() == {0: -2, 3: 1}
    assert P[4].coeff_map() == {1: -8, 4: 1}
    assert P[4].to_json() == {"degree": 4, "coeffs": [["1", "-8/1"], ["4", "1/1"]]}


@pytest.mark.parametrize("p", [FamilyParams("A"), FamilyParams("B1", mu=1), FamilyParams("C", mu=1, rho=F(3, 2))],
                         ids=["A", "B1", "C"])
def test_generate_matches_hessenberg_charpoly(p):
    P = generate(p, 12)
    for n in range(13):
        assert as_sympy(P[n]) == hessenberg_charpoly(p, n).set_domain("QQ")


@pytest.mark.parametrize("p", ALL_POINTS + SCALED, ids=ids(ALL_POINTS + SCALED))
def test_symmetry_monic(p):
    for n, P in enumerate(generate(p, 40)):
        assert P.is_monic() and P.residue == n % 3 and P.degree == n
        assert all(k % 3 == n % 3 for k in P.coeff_map())


@pytest.mark.parametrize("p", ALL_POINTS + SCALED, ids=ids(ALL_POINTS + SCALED))
def test_derivatives_and_structure_relation(p):
    P = generate(p, 44)
    Q = derivative_sequence(P, p)
    assert all(check_structure_relation(P, Q, p, n) for n in range(41))
    R = generate(derivative_family(p), 40)
    assert all(Q[n] == R[n] for n in range(41))


def test_derivative_sequence_detects_wrong_family():
    P = generate(FamilyParams("B1", mu=1), 12)
    with pytest.raises(RecurrenceMismatchError):
        derivative_sequence(P, FamilyParams("B1", mu=2))


@pytest.mark.parametrize("p", ALL_POINTS + SCALED, ids=ids(ALL_POINTS + SCALED))
def test_hypergeometric_closed_form(p):
    P = generate(p, 60)
    assert all(hypergeometric_closed_form(p, n) == P[n] for n in range(61))


@pytest.mark.parametrize("p", ALL_POINTS, ids=ids(ALL_POINTS))
def test_cubic_components_recompose_and_recur(p):
    P = generate(p, 45)
    for n, Pn in enumerate(P):
        comp = cubic_components(Pn)
        assert comp.j == n % 3 and comp.n == n // 3
        assert comp.recompose() == Pn
    for j in range(3):
        seq = component_sequence(p, j, 14)
        assert [c.recompose() for c in seq] == [P[3 * m + j] for m in range(15)]


@pytest.mark.parametrize("p", [q for q in ALL_POINTS if q.case.value != "B2"],
                         ids=ids([q for q in ALL_POINTS if q.case.value != "B2"]))
def test_tabulated_coefficients_equal_gamma_products(p):
    for j in range(3):
        for n in range(1, 31):
            assert tabulated_component_coefficients(p, j, n) == component_recurrence(p, j, n), (j, n)


def test_printed_case_c_table_duplicates_disagree():
    # the odd-index gamma entries of the case C table repeat the even-index ones
    p = FamilyParams("C", mu=2, rho=3)
    mismatched = [(j, n) for j in range(3) for n in range(1, 31)
                  if tabulated_component_coefficients(p, j, n, printed=True) != component_recurrence(p, j, n)]
    assert mismatched


def test_tabulated_faber_boundary_limit():
    p = FamilyParams("C", mu=F(-1, 2), rho=0)
    for j in range(3):
        for n in range(1, 20):
            assert tabulated_component_coefficients(p, j, n) == component_recurrence(p, j, n)


def test_from_dense_rejects_mixed_residues():
    with pytest.raises(SymmetryViolationError):
        SymmetricPolynomial.from_dense([1, 1])


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 30), st.integers(0, 30), st.fractions(max_denominator=50))
def test_arithmetic_properties(n, m, c):
    p = FamilyParams("B1", mu=F(1, 3))
    P = generate(p, 31)
    a = P[n]
    if (n - m) % 3 == 0:
        b = P[m]
        assert (a + b) - b == a
        assert ((a + b) - b).degree == max(n, m)
        assert as_sympy(a + c * b) == as_sympy(a) + sp.Rational(c.numerator, c.denominator) * as_sympy(b)
    assert as_sympy(a.derivative()) == as_sympy(a).diff(X).set_domain("QQ")
    assert as_sympy(a.shift(m)) == as_sympy(a) * X ** m
    x0 = F(2, 3)
    assert a(x0) == as_sympy(a).eval(sp.Rational(2, 3))


def test_json_roundtrip():
    P = generate(FamilyParams("C", mu=2, rho=3), 17)[17]
    assert SymmetricPolynomial.from_json(P.to_json()) == P
