from fractions import Fraction
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from mbasis.branching import base_mon_basis, monomials
from mbasis.branching.scasimir import plane_scasimir, scasimir_u, scasimir_v
from mbasis.clifford_core import GaussianRational, Involution, Multivector
from mbasis.errors import BasisFormatError, DimensionMismatchError, InvalidIndexError
from mbasis.poly_engine import (
    DIRAC,
    EULER,
    GAMMA,
    LAPLACE,
    RSQ,
    VECTOR,
    CliffordPolynomial,
    IndexRange,
    PolyOperator,
    angular_L,
    anticommutator,
    casimir_L,
    casimir_h,
    commutator,
    dirac,
    euler,
    gamma,
    laplace,
    moment_M,
    partial_derivative,
    poly_mul,
    rsq_mul,
    vector_mul,
)
from mbasis.projections import SpaceSplit, monogenic_part
from tests.strategies import dim_and_polynomial, polynomials

half = Fraction(1, 2)
i = GaussianRational(0, 1)


def x(dim, j):
    return CliffordPolynomial.variable(dim, j)


def e(dim, *indices):
    return Multivector.blade(dim, indices)


class TestPolynomial:
    def test_products(self):
        p = x(2, 1).left_mul(e(2, 1))
        q = x(2, 2).left_mul(e(2, 2))
        assert poly_mul(p, q) == CliffordPolynomial.monomial(2, (1, 1), e(2, 1, 2))
        assert poly_mul(p, p) == -(x(2, 1) ** 2)

    def test_vector_squares_to_minus_rsq(self):
        for m in (1, 2, 3, 4):
            one = CliffordPolynomial.constant(m, 1)
            vec = vector_mul(one)
            assert poly_mul(vec, vec) == -rsq_mul(one)

    def test_zero_coefficients_are_pruned(self):
        p = x(3, 1) - x(3, 1)
        assert not p
        assert p.degree == -1
        assert p == CliffordPolynomial.zero(3)

    def test_homogeneity(self):
        p = x(3, 1) * x(3, 2) + x(3, 3) ** 2
        assert p.is_homogeneous(2)
        assert not (p + x(3, 1)).is_homogeneous()
        assert CliffordPolynomial.zero(3).is_homogeneous(5)

    def test_embed(self):
        p = x(2, 1).left_mul(e(2, 2))
        assert p.embed(1, 4) == x(4, 2).left_mul(e(4, 3))
        with pytest.raises(InvalidIndexError):
            p.embed(3, 4)

    def test_involution_of_coefficients(self):
        p = x(2, 1).left_mul(e(2, 1) + e(2, 1, 2))
        assert p.involution(Involution.MAIN) == x(2, 1).left_mul(e(2, 1, 2) - e(2, 1))

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            x(2, 1) + x(3, 1)

    def test_variable_index_is_checked(self):
        with pytest.raises(InvalidIndexError):
            partial_derivative(x(2, 1), 3)
        with pytest.raises(InvalidIndexError):
            angular_L(x(3, 1), 2, 1)

    def test_json(self):
        p = x(2, 1).left_mul(e(2, 1).scale(GaussianRational(half, -1))) + CliffordPolynomial.constant(2, 3)
        assert CliffordPolynomial.from_json(p.to_json(), 2) == p
        with pytest.raises(BasisFormatError):
            CliffordPolynomial.from_json([{'exponents': [1], 'coeff': []}], 2)

    @given(dim_and_polynomial())
    def test_homogeneous_components_add_up(self, case):
        _, p = case
        total = sum(p.homogeneous_components().values(), CliffordPolynomial.zero(p.dim))
        assert total == p


class TestOperators:
    def test_dirac_of_vector(self):
        for m in (1, 2, 3):
            vec = vector_mul(CliffordPolynomial.constant(m, 1))
            assert dirac(vec) == CliffordPolynomial.constant(m, -m)

    def test_euler_scales_by_degree(self):
        p = x(3, 1) ** 2 + x(3, 2)
        assert euler(p) == (x(3, 1) ** 2).scale(2) + x(3, 2)

    def test_restricted_ranges(self):
        p = x(3, 1) ** 2 * x(3, 3) ** 2
        assert laplace(p, IndexRange(1, 2)) == (x(3, 3) ** 2).scale(2)
        assert euler(p, IndexRange(3, 3)) == p.scale(2)

    def test_angular_momentum(self):
        assert angular_L(x(2, 1), 1, 2) == -x(2, 2)
        assert angular_L(x(2, 2), 1, 2) == x(2, 1)

    def test_operator_algebra(self):
        p = x(2, 1) ** 3
        assert (DIRAC() @ VECTOR())(p) == dirac(vector_mul(p))
        assert (EULER() * 2 + 1)(p) == p.scale(7)
        assert EULER().power(2)(p) == p.scale(9)
        assert (3 - EULER())(p) == CliffordPolynomial.zero(2)
        assert isinstance(LAPLACE() - RSQ(), PolyOperator)

    @given(dim_and_polynomial())
    def test_dirac_squares_to_minus_laplacian(self, case):
        _, p = case
        assert dirac(dirac(p)) == -laplace(p)


@pytest.mark.parametrize('m', [2, 3, 4])
class TestCommutationRelations:
    @given(data=st.data())
    def test_laplacian_and_rsq(self, m, data):
        p = data.draw(polynomials(m))
        assert commutator(LAPLACE(), RSQ())(p) == (EULER() * 4 + 2 * m)(p)

    @given(data=st.data())
    def test_vector_and_dirac(self, m, data):
        p = data.draw(polynomials(m))
        assert anticommutator(VECTOR(), DIRAC())(p) == (EULER() * -2 - m)(p)

    @given(data=st.data())
    def test_euler_shifts(self, m, data):
        p = data.draw(polynomials(m))
        shifted = EULER() + Fraction(m, 2)
        assert commutator(shifted, RSQ())(p) == (RSQ() * 2)(p)
        assert commutator(shifted, VECTOR())(p) == VECTOR()(p)
        assert commutator(shifted, LAPLACE())(p) == (LAPLACE() * -2)(p)
        assert commutator(shifted, DIRAC())(p) == (-DIRAC())(p)

    @given(data=st.data(), power=st.integers(1, 2))
    def test_dirac_and_rsq_powers(self, m, data, power):
        p = data.draw(polynomials(m, max_degree=2))
        lhs = commutator(DIRAC(), RSQ().power(power))(p)
        assert lhs == (RSQ().power(power - 1) @ VECTOR())(p).scale(2 * power)

    @given(data=st.data(), power=st.integers(0, 2))
    def test_dirac_and_vector_times_rsq_powers(self, m, data, power):
        p = data.draw(polynomials(m, max_degree=2))
        lhs = anticommutator(DIRAC(), VECTOR() @ RSQ().power(power))(p)
        rhs = ((EULER() * -2 + (2 * power - m)) @ RSQ().power(power))(p)
        assert lhs == rhs

    @given(data=st.data(), power=st.integers(1, 2))
    def test_laplacian_and_rsq_powers(self, m, data, power):
        p = data.draw(polynomials(m, max_degree=2))
        lhs = commutator(LAPLACE(), RSQ().power(power))(p)
        rhs = ((EULER() * (4 * power) + 4 * power * (Fraction(m, 2) - power + 1)) @ RSQ().power(power - 1))(p)
        assert lhs == rhs

    @given(data=st.data())
    def test_gamma_from_dirac_and_vector(self, m, data):
        p = data.draw(polynomials(m))
        assert gamma(p) == ((commutator(DIRAC(), VECTOR()) + m) * half)(p)

    @given(data=st.data())
    def test_casimirs(self, m, data):
        p = data.draw(polynomials(m, max_degree=2))
        g = GAMMA()
        assert casimir_h(p) == (g @ (m - 2 - g))(p)
        assert casimir_L(p) == (g @ (m - 1 - g))(p) - p.scale(Fraction(comb(m, 2), 4))


def _scalar_monomials(m, max_degree):
    return [CliffordPolynomial.monomial(m, alpha) for d in range(max_degree + 1) for alpha in monomials(m, d)]


def _relations(m):
    shifted = EULER() + Fraction(m, 2)
    yield 'laplace-rsq', commutator(LAPLACE(), RSQ()), EULER() * 4 + 2 * m
    yield 'vector-dirac', anticommutator(VECTOR(), DIRAC()), EULER() * -2 - m
    yield 'euler-rsq', commutator(shifted, RSQ()), RSQ() * 2
    yield 'euler-vector', commutator(shifted, VECTOR()), VECTOR()
    yield 'euler-laplace', commutator(shifted, LAPLACE()), LAPLACE() * -2
    yield 'euler-dirac', commutator(shifted, DIRAC()), -DIRAC()
    for power in (1, 2):
        yield (f'dirac-rsq^{power}', commutator(DIRAC(), RSQ().power(power)),
               (RSQ().power(power - 1) @ VECTOR()) * (2 * power))
        yield (f'laplace-rsq^{power}', commutator(LAPLACE(), RSQ().power(power)),
               (EULER() * (4 * power) + 4 * power * (Fraction(m, 2) - power + 1)) @ RSQ().power(power - 1))
    for power in (0, 1, 2):
        yield (f'dirac-vector-rsq^{power}', anticommutator(DIRAC(), VECTOR() @ RSQ().power(power)),
               (EULER() * -2 + (2 * power - m)) @ RSQ().power(power))


@pytest.mark.parametrize('m', [2, 3, 4])
def test_commutation_relations_on_every_monomial(m):
    # every operator acts on coefficients from the left, so it commutes with
    # right multiplication by a constant and scalar monomials suffice
    relations = list(_relations(m))
    for P in _scalar_monomials(m, 5):
        for name, lhs, rhs in relations:
            assert lhs(P) == rhs(P), (name, P)


class TestScasimirs:
    @pytest.mark.parametrize('m, p', [(3, 1), (3, 2), (4, 1), (4, 2)])
    @given(data=st.data())
    def test_parity_with_vector_and_dirac(self, m, p, data):
        split = SpaceSplit(m, p)
        P = data.draw(polynomials(m, max_degree=2))
        s_u = PolyOperator(lambda Q: scasimir_u(Q, split))
        s_v = PolyOperator(lambda Q: scasimir_v(Q, split))
        sign_u, sign_v = (-1) ** p, (-1) ** (p - 1)
        assert (s_u @ VECTOR())(P) == (VECTOR() @ s_u)(P).scale(sign_u)
        assert (s_u @ DIRAC())(P) == (DIRAC() @ s_u)(P).scale(sign_u)
        assert (s_v @ VECTOR())(P) == (VECTOR() @ s_v)(P).scale(sign_v)
        assert (s_v @ DIRAC())(P) == (DIRAC() @ s_v)(P).scale(sign_v)

    @pytest.mark.parametrize('m, p', [(3, 1), (3, 2), (4, 2)])
    @given(data=st.data())
    def test_scasimirs_commute(self, m, p, data):
        split = SpaceSplit(m, p)
        P = data.draw(polynomials(m, max_degree=2))
        assert scasimir_u(scasimir_v(P, split), split) == scasimir_v(scasimir_u(P, split), split)

    @pytest.mark.parametrize('p', [1, 2])
    @given(data=st.data())
    def test_scasimir_commutes_with_monogenic_projection(self, p, data):
        split = SpaceSplit(3, p)
        P = data.draw(polynomials(3, max_degree=2))
        assert scasimir_u(monogenic_part(P), split) == monogenic_part(scasimir_u(P, split))
        assert scasimir_v(monogenic_part(P), split) == monogenic_part(scasimir_v(P, split))

    @given(dim_and_polynomial(dims=(3, 4), max_degree=2))
    def test_plane_scasimir_is_head_scasimir(self, case):
        m, P = case
        split = SpaceSplit(m, 2)
        assert plane_scasimir(P, split) == scasimir_u(P, split)

    @pytest.mark.parametrize('m', [2, 3, 4])
    @pytest.mark.parametrize('k', [0, 1, 2, 3, 4])
    def test_plane_weights(self, m, k):
        signs = (1, 1, -1, -1)
        for P, sign in zip(base_mon_basis(2, k), signs):
            P = P.embed(0, m)
            assert moment_M(P, 1, 2).scale(i) == P.scale(-sign * (k + half))


@pytest.mark.parametrize('m, p', [(3, 1), (3, 2), (4, 1), (4, 2), (4, 3)])
@given(data=st.data())
def test_split_identities(m, p, data):
    split = SpaceSplit(m, p)
    P = data.draw(polynomials(m, max_degree=3))
    cross = CliffordPolynomial.zero(m)
    for a in split.u_range.indices:
        for b in split.v_range.indices:
            cross = cross + angular_L(P, a, b).left_mul(Multivector.blade(m, [a, b]))
    assert gamma(P) == gamma(P, split.u_range) + gamma(P, split.v_range) - cross
    assert dirac(P) == dirac(P, split.u_range) + dirac(P, split.v_range)
