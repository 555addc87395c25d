from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from mbasis.branching import base_mon_basis
from mbasis.clifford_core import GaussianRational, Multivector
from mbasis.errors import DimensionMismatchError, NotMonogenicError
from mbasis.poly_engine import (
    CliffordPolynomial,
    dirac,
    fischer_gram,
    fischer_inner,
    fischer_norm2,
    laplace,
    multiply_variable,
    partial_derivative,
    rsq_mul,
    sphere_factor,
    sphere_inner_monogenic,
    vector_mul,
)
from tests.strategies import dim_and_polynomial, monogenics, polynomials

i = GaussianRational(0, 1)


def _odd_double_factorial(k):
    out = 1
    for j in range(k - 1, 0, -2):
        out *= j
    return out


def _monomial_average(gamma):
    """Mean of x^gamma over the unit sphere."""
    if any(g % 2 for g in gamma):
        return Fraction(0)
    m, top = len(gamma), sum(gamma) // 2
    num = 1
    for g in gamma:
        num *= _odd_double_factorial(g)
    den = 1
    for j in range(top):
        den *= m + 2 * j
    return Fraction(num, den)


def _sphere_average(p, q):
    """Mean of the scalar part of conj(p) q over the unit sphere."""
    total = GaussianRational(0)
    for alpha, mask, c in p.iter_flat():
        for beta, other, d in q.iter_flat():
            if mask == other:
                gamma = tuple(a + b for a, b in zip(alpha, beta))
                total = total + c.conjugate() * d * _monomial_average(gamma)
    return total


class TestFischerInner:
    def test_monomials(self):
        p = CliffordPolynomial.monomial(3, (2, 1, 0))
        assert fischer_norm2(p) == 2
        assert fischer_inner(p, CliffordPolynomial.monomial(3, (1, 2, 0))) == 0

    def test_blades_are_orthonormal(self):
        a = CliffordPolynomial.constant(2, Multivector.blade(2, [1, 2]))
        b = CliffordPolynomial.constant(2, Multivector.blade(2, [1]))
        assert fischer_norm2(a) == 1
        assert fischer_inner(a, b) == 0

    def test_conjugate_linear_in_first_argument(self):
        p = CliffordPolynomial.variable(2, 1)
        assert fischer_inner(p.scale(i), p) == -i
        assert fischer_inner(p, p.scale(i)) == i

    @given(polynomials(3, max_degree=2), polynomials(3, max_degree=2))
    def test_hermitian(self, p, q):
        assert fischer_inner(p, q) == fischer_inner(q, p).conjugate()
        assert fischer_norm2(p) >= 0

    @given(polynomials(3, max_degree=2), polynomials(3, max_degree=2))
    def test_variable_is_adjoint_to_derivative(self, p, q):
        for j in (1, 2, 3):
            assert fischer_inner(multiply_variable(p, j), q) == fischer_inner(p, partial_derivative(q, j))

    @given(data=st.data())
    def test_generators_are_skew(self, data):
        m, p = data.draw(dim_and_polynomial(max_degree=2))
        q = data.draw(polynomials(m, max_degree=2))
        for j in range(1, m + 1):
            e_j = Multivector.blade(m, [j])
            assert fischer_inner(p.left_mul(e_j), q) == -fischer_inner(p, q.left_mul(e_j))

    @given(data=st.data())
    def test_vector_variable_is_adjoint_to_minus_dirac(self, data):
        m, p = data.draw(dim_and_polynomial(max_degree=2))
        q = data.draw(polynomials(m, max_degree=3))
        assert fischer_inner(vector_mul(p), q) == -fischer_inner(p, dirac(q))

    @given(data=st.data())
    def test_rsq_is_adjoint_to_laplacian(self, data):
        m, p = data.draw(dim_and_polynomial(max_degree=2))
        q = data.draw(polynomials(m, max_degree=4))
        assert fischer_inner(rsq_mul(p), q) == fischer_inner(p, laplace(q))

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            fischer_inner(CliffordPolynomial.constant(2), CliffordPolynomial.constant(3))


class TestSphere:
    @pytest.mark.parametrize('n, m, expected', [(0, 5, 1), (1, 3, 3), (2, 3, 15), (2, 2, 8)])
    def test_sphere_factor(self, n, m, expected):
        assert sphere_factor(n, m) == expected

    def test_plane_monogenic(self):
        p = base_mon_basis(2, 1)[0]
        assert fischer_norm2(p) == 1
        assert sphere_inner_monogenic(p, p, 1, 2) == Fraction(1, 2)

    @pytest.mark.parametrize('m, n', [(2, 1), (2, 2), (3, 1), (3, 2), (3, 3), (4, 1), (4, 2)])
    @given(data=st.data())
    def test_fischer_over_sphere_factor_is_sphere_average(self, m, n, data):
        p = data.draw(monogenics(m, n))
        q = data.draw(monogenics(m, n))
        expected = _sphere_average(p, q)
        assert sphere_inner_monogenic(p, q, n, m) == expected
        assert fischer_inner(p, q) == expected * sphere_factor(n, m)

    def test_rejects_non_monogenic(self):
        p = CliffordPolynomial.variable(2, 1)
        with pytest.raises(NotMonogenicError):
            sphere_inner_monogenic(p, p, 1, 2)


class TestGram:
    def test_plane_basis_is_diagonal(self):
        gram = fischer_gram(base_mon_basis(2, 3))
        assert gram.size == 4
        assert gram.is_diagonal()
        assert gram.diagonal() == [Fraction(24)] * 4

    def test_off_diagonal_entries(self):
        x1 = CliffordPolynomial.variable(2, 1)
        gram = fischer_gram([x1, x1 + CliffordPolynomial.variable(2, 2)])
        assert gram.is_hermitian()
        assert not gram.is_diagonal()
        assert gram.off_diagonal() == {(0, 1): 1, (1, 0): 1}
        assert list(gram.nonzero()) == [(0, 0, 1), (0, 1, 1), (1, 0, 1), (1, 1, 2)]

    def test_empty(self):
        gram = fischer_gram([])
        assert gram.size == 0
        assert gram.is_diagonal()
