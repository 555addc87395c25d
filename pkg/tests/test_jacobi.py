from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from mbasis.errors import SingularCoefficientError
from mbasis.jacobi import (
    RationalUniPoly,
    factorial,
    gen_binomial,
    jacobi_poly,
    jacobi_poly_hypergeometric,
    pochhammer,
)

half = Fraction(1, 2)
non_negative = st.builds(Fraction, st.integers(0, 6), st.integers(1, 4))
degrees = st.integers(0, 5)


class TestCombinatorics:
    def test_factorial(self):
        assert factorial(0) == 1
        assert factorial(5) == 120
        assert factorial(70) == factorial(69) * 70
        with pytest.raises(ValueError):
            factorial(-1)

    @pytest.mark.parametrize('z, n, expected', [
        (3, 0, 1),
        (half, 3, Fraction(15, 8)),
        (-2, 3, 0),
        (1, 4, 24),
    ])
    def test_pochhammer(self, z, n, expected):
        assert pochhammer(z, n) == expected

    @pytest.mark.parametrize('a, j, expected', [
        (5, 2, 10),
        (half, 2, Fraction(-1, 8)),
        (3, -1, 0),
        (2, 3, 0),
    ])
    def test_gen_binomial(self, a, j, expected):
        assert gen_binomial(a, j) == expected


class TestRationalUniPoly:
    def test_arithmetic(self):
        t = RationalUniPoly.t()
        p = (t + 1) * (t - 1)
        assert p.coefficient_list() == [-1, 0, 1]
        assert p(3) == 8
        assert (t ** 3).compose_negate() == -(t ** 3)
        assert RationalUniPoly() == 0
        assert RationalUniPoly().degree == -1


class TestJacobi:
    def test_degree_zero(self):
        assert jacobi_poly(0, Fraction(7, 3), 2) == 1

    def test_first_degree(self):
        assert jacobi_poly(1, half, half).coefficient_list(1) == [0, Fraction(3, 2)]

    def test_legendre(self):
        assert jacobi_poly(2, 0, 0).coefficient_list() == [-half, 0, Fraction(3, 2)]

    @given(degrees, non_negative, non_negative)
    def test_value_at_one(self, n, alpha, beta):
        assert jacobi_poly(n, alpha, beta)(1) == gen_binomial(n + alpha, n)

    @given(degrees, non_negative, non_negative)
    def test_reflection(self, n, alpha, beta):
        assert jacobi_poly(n, alpha, beta).compose_negate() == jacobi_poly(n, beta, alpha) * (-1) ** n

    @given(degrees, non_negative, non_negative)
    def test_hypergeometric_route_agrees(self, n, alpha, beta):
        assert jacobi_poly_hypergeometric(n, alpha, beta) == jacobi_poly(n, alpha, beta)

    def test_hypergeometric_route_singular(self):
        with pytest.raises(SingularCoefficientError):
            jacobi_poly_hypergeometric(2, Fraction(-3, 2), Fraction(-3, 2))

    def test_negative_degree(self):
        with pytest.raises(ValueError):
            jacobi_poly(-1, 0, 0)
