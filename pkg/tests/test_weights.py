import math
from fractions import Fraction as F

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from starpoly import special as sf
from starpoly.errors import DomainError
from starpoly.moments import moment_table
from starpoly.quadrature import integrate_half_line
from starpoly.recurrence import FamilyParams
from starpoly.weights import (OMEGA, WeightSpec, b1_mu2_u1_printed, b1_particular, chebyshev_type, faber,
                              mellin_kummer, quadrature_moment, sample, star_moment, star_weight, weight,
                              weight_pair)

from conftest import ALL_POINTS, SCALED, ids

FABER = FamilyParams("C", mu=F(-1, 2), rho=0)
MOMENT_POINTS = ALL_POINTS + SCALED + [FABER]


def exact(p, k, n):
    return float(moment_table(p, n).moment(k, 3 * n + k))


@pytest.mark.parametrize("p", MOMENT_POINTS, ids=ids(MOMENT_POINTS))
@pytest.mark.parametrize("k", [0, 1])
def test_quadrature_moments_match_exact(p, k):
    spec = WeightSpec(p, k)
    for n in range(6):
        q, e = quadrature_moment(spec, n), exact(p, k, n)
        assert abs(q - e) <= 1e-8 * abs(e), (n, q, e)


def test_quadrature_examples():
    assert quadrature_moment(WeightSpec(FamilyParams("A"), 0), 1) == pytest.approx(2.0, abs=1e-8)
    assert quadrature_moment(WeightSpec(FamilyParams("C", mu=1, rho=F(3, 2)), 0), 0) == pytest.approx(1.0, abs=1e-8)
    assert quadrature_moment(WeightSpec(FamilyParams("B1", mu=1), 1), 1) == pytest.approx(4 / 9, abs=1e-8)


def test_airy_integral():
    val = integrate_half_line(np.vectorize(sf.airy_ai), tol=1e-13)
    assert abs(val - 1 / 3) < 1e-10


@pytest.mark.parametrize("a,c,b", [(1 / 3, 2 / 3, 4 / 3), (1 / 2, 5 / 3, 2.0), (1.0, 2 / 3, 1 / 2)])
def test_mellin_kummer(a, c, b):
    quad, closed = mellin_kummer(a, c, b)
    assert abs(quad - closed) <= 1e-8 * abs(closed)


@pytest.mark.parametrize("mu", [-0.5, 0.0, 1.0, 2.0])
@pytest.mark.parametrize("k", [0, 1])
@pytest.mark.parametrize("x", [0.25, 1.0, 2.0])
def test_b1_particular_cases(mu, k, x):
    generic = weight(WeightSpec(FamilyParams("B1", mu=F(mu)), k), x)
    assert abs(b1_particular(mu, k, x) - generic) <= 1e-10 * abs(generic)


def test_b1_mu2_u1_printed_form_disagrees():
    # the compact printed expression is not the generic weight; keep this visible
    spec = WeightSpec(FamilyParams("B1", mu=2), 1)
    ratios = [b1_mu2_u1_printed(x) / weight(spec, x) for x in (0.25, 1.0, 2.0)]
    assert all(abs(r - 1) > 0.01 for r in ratios)


def test_b1_zero_exponential():
    spec = WeightSpec(FamilyParams("B1", mu=0), 0)
    for x in (0.0, 0.3, 1.7):
        assert weight(spec, x) == pytest.approx(3 / math.gamma(1 / 3) * math.exp(-x ** 3), rel=1e-12)


@pytest.mark.parametrize("x", [0.1, 0.5, 0.9])
@pytest.mark.parametrize("k", [0, 1])
def test_chebyshev_type(x, k):
    generic = weight(WeightSpec(FamilyParams("C", mu=1, rho=F(3, 2)), k), x)
    assert abs(chebyshev_type(k, x) - generic) <= 1e-10 * abs(generic)


@pytest.mark.parametrize("x", [0.1, 0.5, 0.9])
@pytest.mark.parametrize("k", [0, 1])
def test_faber(x, k):
    generic = weight(WeightSpec(FABER, k), x)
    assert abs(faber(k, x) - generic) <= 1e-10 * abs(generic)


@pytest.mark.parametrize("rho", [F(3, 2), F(2), F(7, 2)])
@pytest.mark.parametrize("x", [0.2, 0.9, 1.6, 2.5])
def test_b2_b1_identities(rho, x):
    u0, u1 = weight_pair(FamilyParams("B2", rho=rho), x)
    assert u0 == pytest.approx(weight(WeightSpec(FamilyParams("B1", mu=rho + 1), 0), x), rel=1e-12)
    assert u1 == pytest.approx(weight(WeightSpec(FamilyParams("B1", mu=rho - 2), 1), x), rel=1e-12)


@pytest.mark.parametrize("p", ALL_POINTS + [FABER], ids=ids(ALL_POINTS + [FABER]))
def test_positivity(p):
    xs = np.linspace(0, 3.0, 41)[:-1] if p.case.value != "C" else np.linspace(0, 1, 41)[:-1]
    for x, u0, u1 in sample(p, xs):
        assert u0 > 0 and u1 > 0, x


@given(st.fractions(F(-9, 10), 4, max_denominator=10), st.floats(0.0, 3.0))
@settings(max_examples=40, deadline=None)
def test_b1_positivity_property(mu, x):
    u0, u1 = weight_pair(FamilyParams("B1", mu=mu), x)
    assert u0 > 0 and u1 > 0


@pytest.mark.parametrize("p", SCALED + [FamilyParams("A", gamma1=F(5, 2))], ids=ids(SCALED) + ["A-scaled"])
def test_dilation(p):
    base = FamilyParams(p.case.value, mu=p.mu, rho=p.rho)
    s = float(p.scale) ** (1 / 3)
    for x in (0.1, 0.4, 0.8):
        x = x * min(s, 1)
        assert weight(WeightSpec(p, 0), x) == pytest.approx(weight(WeightSpec(base, 0), x / s) / s, rel=1e-13)
        assert weight(WeightSpec(p, 1), x) == pytest.approx(weight(WeightSpec(base, 1), x / s) / s ** 2, rel=1e-13)


def test_support():
    assert WeightSpec(FamilyParams("C", mu=1, rho=F(3, 2)), 0).b == 1.0
    # canonical gamma1 of C(2, 3) is 1/12, so gamma1 = 1/2 dilates by 6^{1/3}
    assert WeightSpec(FamilyParams("C", mu=2, rho=3, gamma1=F(1, 2)), 0).b == pytest.approx(6 ** (1 / 3))
    assert math.isinf(WeightSpec(FamilyParams("B1", mu=1), 1).b)


def test_domain_errors():
    with pytest.raises(DomainError):
        WeightSpec(FamilyParams("B1", mu=-1), 0)
    with pytest.raises(DomainError):
        WeightSpec(FamilyParams("B2", rho=0), 0)
    with pytest.raises(ValueError):
        WeightSpec(FamilyParams("A"), 2)
    spec = WeightSpec(FamilyParams("C", mu=1, rho=F(3, 2)), 0)
    with pytest.raises(DomainError):
        weight(spec, 1.0)
    with pytest.raises(DomainError):
        weight(spec, -0.1)
    with pytest.raises(DomainError):
        star_weight(spec, 0.5j)


@pytest.mark.parametrize("p", [FamilyParams("A"), FamilyParams("B1", mu=1), FamilyParams("C", mu=2, rho=3)],
                         ids=["A", "B1", "C"])
@pytest.mark.parametrize("k", [0, 1])
def test_star_weight_rotation(p, k):
    spec = WeightSpec(p, k)
    for x in (0.2, 0.7):
        z = complex(x)
        assert star_weight(spec, z) == pytest.approx(weight(spec, x) / 3, rel=1e-14)
        for j in range(3):
            zj = OMEGA ** j * z
            assert abs(OMEGA ** (j * (k + 1)) * star_weight(spec, zj) - star_weight(spec, z)) < 1e-12


@pytest.mark.parametrize("p", [FamilyParams("A"), FamilyParams("B2", rho=1), FamilyParams("C", mu=1, rho=F(3, 2))],
                         ids=["A", "B2", "C"])
def test_star_moment_collapse(p):
    for k in (0, 1):
        spec = WeightSpec(p, k)
        for n in range(3):
            m = 3 * n + k
            total = star_moment(spec, m)
            single = quadrature_moment(spec, n)
            assert abs(total - single) <= 1e-8 * abs(single)
        # off-class moments vanish on the star
        assert abs(star_moment(spec, k + 1)) < 1e-10
