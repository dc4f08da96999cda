from fractions import Fraction as F

import pytest

from starpoly.errors import DegenerateParameterError
from starpoly.ode import (ode_coefficients, ode_residual, printed_case_ode, proportional, q_ode_residual)
from starpoly.polynomials import SymmetricPolynomial, generate
from starpoly.recurrence import FamilyParams

from conftest import ALL_POINTS, SCALED, ids


@pytest.mark.parametrize("p", ALL_POINTS + SCALED, ids=ids(ALL_POINTS + SCALED))
def test_residuals_vanish(p):
    P = generate(p, 40)
    for n in range(1, 41):
        assert ode_residual(p, n, P[n]).is_zero(), n
        assert q_ode_residual(p, n, P[n]).is_zero(), n


CANONICAL = [q for q in ALL_POINTS if q.case.value != "B2" and q.scale == 1]


@pytest.mark.parametrize("p", CANONICAL, ids=ids(CANONICAL))
def test_case_equations_proportional(p):
    for n in range(1, 41):
        assert proportional(ode_coefficients(p, n).as_tuple(), printed_case_ode(p, n)), n


def test_case_a_equation():
    co = ode_coefficients(FamilyParams("A"), 7)
    assert co.as_tuple() == (0, 1, 0, 1, 7)


def test_residual_detects_wrong_polynomial():
    p = FamilyParams("B1", mu=1)
    wrong = generate(FamilyParams("B1", mu=2), 9)[9]
    assert not ode_residual(p, 9, wrong).is_zero()
    perturbed = generate(p, 9)[9] + SymmetricPolynomial.monomial(0, F(1, 1000))
    assert not ode_residual(p, 9, perturbed).is_zero()


def test_b2_has_no_case_equation():
    with pytest.raises(DegenerateParameterError):
        printed_case_ode(FamilyParams("B2", rho=1), 3)


def test_bad_index():
    with pytest.raises(ValueError):
        ode_coefficients(FamilyParams("A"), 0)
