import random
from fractions import Fraction
from math import gcd

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from amitsur.arith import euler_phi
from amitsur.cyclotomic import (
    GaloisAutomorphism,
    apply_galois,
    cyclotomic_poly,
    field,
    fixed_subspace,
    format_poly,
    min_poly_over_Q,
    quadratic_gauss_sum,
)
from amitsur.errors import ConductorMismatch, ZeroInput

t = sympy.Symbol("t")


@pytest.mark.parametrize("k", range(1, 61))
def test_cyclotomic_poly_matches_sympy(k):
    ref = sympy.Poly(sympy.cyclotomic_poly(k, t), t).all_coeffs()[::-1]
    assert list(cyclotomic_poly(k)) == [int(c) for c in ref]


def test_zeta_has_order_k():
    for k in (3, 4, 9, 21, 39, 60):
        F = field(k)
        z = F.zeta()
        assert z**k == F.one()
        assert all(z**d != F.one() for d in range(1, k) if k % d == 0)
        assert sum((F.zeta(e) for e in range(k)), F.zero()) == (F.one() if k == 1 else F.zero())


def numbers(k, height=6):
    phi = euler_phi(k)
    coeff = st.fractions(min_value=-height, max_value=height, max_denominator=4)
    return st.lists(coeff, min_size=phi, max_size=phi).map(field(k).from_coeffs)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([5, 9, 12, 21, 39]).flatmap(lambda k: st.tuples(numbers(k), numbers(k), numbers(k))))
def test_field_axioms(xyz):
    x, y, z = xyz
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x * y == y * x
    if not x.is_zero():
        assert x * x.inverse() == x.field.one()
        assert (y / x) * x == y


def test_inverse_of_zero():
    with pytest.raises(ZeroInput):
        field(21).zero().inverse()


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([(21, 16), (39, 22), (13, 3), (60, 7), (4, 3)]).flatmap(
    lambda ks: st.tuples(st.just(ks), numbers(ks[0]), numbers(ks[0]))))
def test_galois_is_a_ring_automorphism(data):
    (k, s), x, y = data
    sigma = GaloisAutomorphism(k, s)
    assert sigma(x * y) == sigma(x) * sigma(y)
    assert sigma(x + y) == sigma(x) + sigma(y)
    assert sigma.power(sigma.order)(x) == x


def test_galois_examples():
    s = GaloisAutomorphism(21, 16)
    assert s.order == 3
    assert s(field(21).zeta(7)) == field(21).zeta(7)
    assert s(field(21).zeta(3)) == field(21).zeta(6)
    with pytest.raises(ConductorMismatch):
        apply_galois(s, field(39).zeta())
    with pytest.raises(ValueError):
        GaloisAutomorphism(21, 7)


def test_fixed_dimension_times_order_is_phi():
    rng = random.Random(5)
    pairs = set()
    while len(pairs) < 50:
        k = rng.randint(3, 90)
        s = rng.randint(1, k - 1)
        if gcd(s, k) == 1:
            pairs.add((k, s))
    for k, s in sorted(pairs):
        sigma = GaloisAutomorphism(k, s)
        assert len(fixed_subspace(sigma)) * sigma.order == euler_phi(k), (k, s)


def test_min_polys():
    F = field(21)
    assert format_poly(min_poly_over_Q(F.zeta())) == format_poly(cyclotomic_poly(21))
    assert format_poly(min_poly_over_Q(quadratic_gauss_sum(21, 7))) == "t^2 + 7"
    assert format_poly(min_poly_over_Q(quadratic_gauss_sum(21, 3))) == "t^2 + 3"
    assert format_poly(min_poly_over_Q(quadratic_gauss_sum(39, 13))) == "t^2 - 13"
    assert min_poly_over_Q(F.from_rational(Fraction(2, 3))) == (Fraction(-2, 3), 1)


@pytest.mark.parametrize("k", range(3, 61))
def test_zeta_min_poly_degree_is_phi(k):
    assert len(min_poly_over_Q(field(k).zeta())) - 1 == euler_phi(k)
