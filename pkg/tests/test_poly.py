from fractions import Fraction

import pytest
from hypothesis import given, settings

from syzplane import poly
from syzplane.poly import (
    HomogeneousPolynomial,
    NotHomogeneousError,
    ParseError,
    ZeroPolynomialError,
    basis_dimension,
    monomial_basis,
    monomial_key,
    parse,
)

from _oracles import homogeneous_polynomials, nonzero_fractions


class TestParse:
    def test_conic(self):
        f = parse("x^2 + y^2 - z^2")
        assert f.degree == 2
        assert f.terms == {
            (2, 0, 0): Fraction(1),
            (0, 2, 0): Fraction(1),
            (0, 0, 2): Fraction(-1),
        }

    def test_product_expansion(self):
        f = parse("(x + y)*(x - y)")
        assert f.terms == {(2, 0, 0): Fraction(1), (0, 2, 0): Fraction(-1)}

    def test_power(self):
        f = parse("(x + z)^3")
        assert f.degree == 3
        assert f.coefficient((2, 0, 1)) == 3

    def test_rational_coefficient(self):
        f = parse("1/2*x*y - 3*z^2")
        assert f.coefficient((1, 1, 0)) == Fraction(1, 2)
        assert f.coefficient((0, 0, 2)) == -3

    def test_implicit_multiplication(self):
        assert parse("2x y z").terms == parse("2*x*y*z").terms

    def test_mixed_degrees_rejected(self):
        with pytest.raises(NotHomogeneousError):
            parse("x + y^2")

    def test_cancellation_rejected(self):
        with pytest.raises(ZeroPolynomialError):
            parse("x*y - y*x")

    def test_malformed(self):
        for bad in ("", "x +", "x^", "(x + y", "x ** 2", "q^2", "1/0*x"):
            with pytest.raises(ParseError):
                parse(bad)

    def test_nested_powers(self):
        f = parse("((x + y)^2)^2")
        assert f.degree == 4
        assert f.coefficient((2, 2, 0)) == 6


class TestBasis:
    def test_dimension_formula(self):
        for d in range(8):
            assert len(monomial_basis(d)) == basis_dimension(d) == (d + 1) * (d + 2) // 2

    def test_degree_two_order(self):
        # graded order with x > y > z, largest first key
        basis = monomial_basis(2)
        assert set(basis) == {
            (2, 0, 0), (1, 1, 0), (1, 0, 1), (0, 2, 0), (0, 1, 1), (0, 0, 2)
        }
        assert sorted(basis, key=monomial_key, reverse=True) == [
            (2, 0, 0), (1, 1, 0), (1, 0, 1), (0, 2, 0), (0, 1, 1), (0, 0, 2)
        ]

    def test_index_consistent(self):
        idx = poly.monomial_index(3)
        for i, m in enumerate(monomial_basis(3)):
            assert idx[m] == i


class TestConstructor:
    def test_wrong_degree_term(self):
        with pytest.raises(NotHomogeneousError):
            HomogeneousPolynomial(2, {(1, 0, 0): Fraction(1)})

    def test_non_fraction_coefficient(self):
        with pytest.raises(ValueError):
            HomogeneousPolynomial(1, {(1, 0, 0): 1})

    def test_zero_coefficient(self):
        with pytest.raises(ValueError):
            HomogeneousPolynomial(1, {(1, 0, 0): Fraction(0)})

    def test_zero_polynomial_keeps_degree(self):
        z = poly.zero_polynomial(5)
        assert z.is_zero and z.degree == 5


class TestArithmetic:
    @given(homogeneous_polynomials(), homogeneous_polynomials())
    @settings(max_examples=60, deadline=None)
    def test_multiplication_degree_and_commutativity(self, f, g):
        fg = poly.multiply(f, g)
        assert fg.degree == f.degree + g.degree
        assert fg.terms == poly.multiply(g, f).terms

    @given(homogeneous_polynomials(min_degree=2))
    @settings(max_examples=60, deadline=None)
    def test_euler_identity(self, f):
        assert poly.euler_identity_holds(f)

    @given(homogeneous_polynomials())
    @settings(max_examples=60, deadline=None)
    def test_str_parse_round_trip(self, f):
        assert parse(str(f)).terms == f.terms

    @given(homogeneous_polynomials(), nonzero_fractions)
    @settings(max_examples=60, deadline=None)
    def test_scale_distributes_over_partial(self, f, c):
        if f.degree < 1:
            return
        left = f.scale(c).partial("x")
        right = f.partial("x").scale(c)
        assert left.terms == right.terms

    def test_partial_of_constant_degree_rejected(self):
        with pytest.raises(ValueError):
            HomogeneousPolynomial(0, {(0, 0, 0): Fraction(2)}).partial("x")

    def test_add_degree_mismatch(self):
        with pytest.raises(NotHomogeneousError):
            parse("x") + parse("x^2")


class TestPrimitive:
    @given(homogeneous_polynomials())
    @settings(max_examples=60, deadline=None)
    def test_primitive_is_integral_content_one_positive(self, f):
        p = f.primitive()
        ints = p.integer_coefficients()
        from math import gcd

        g = 0
        for v in ints.values():
            g = gcd(g, v)
        assert g == 1
        lead = max(p.terms, key=monomial_key)
        assert p.terms[lead] > 0
        # same projective form: cross ratios of coefficients agree
        m0 = max(f.terms, key=monomial_key)
        scale = p.terms[m0] / f.terms[m0]
        assert all(p.coefficient(m) == c * scale for m, c in f.terms.items())

    def test_example(self):
        f = parse("-2/3*x^2 - 4*y^2")
        p = f.primitive()
        assert p.terms == {(2, 0, 0): Fraction(1), (0, 2, 0): Fraction(6)}
