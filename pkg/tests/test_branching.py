from fractions import Fraction

import pytest

from mbasis.branching import (
    BranchLabel,
    closed_form_dim,
    Mode,
    SpaceSplit,
    base_har_basis,
    base_mon_basis,
    branch_basis,
    chain_splits,
    default_chain,
    eigen_signature,
    expected_signature,
    kernel_dim_oracle,
    parse_chain,
    verify_basis,
    weight_base,
)
from mbasis.branching.scasimir import eigenvalue, scasimir_u, scasimir_v
from mbasis.clifford_core import witt_fixtures
from mbasis.errors import ChainError, NotEigenvectorError
from mbasis.jacobi import factorial
from mbasis.poly_engine import CliffordPolynomial, dirac, fischer_gram, fischer_norm2, laplace, poly_mul

half = Fraction(1, 2)


class TestBaseCases:
    def test_line_harmonics(self):
        assert base_har_basis(1, 0) == [CliffordPolynomial.constant(1, 1)]
        assert base_har_basis(1, 1) == [CliffordPolynomial.variable(1, 1)]
        assert base_har_basis(1, 2) == []

    @pytest.mark.parametrize('k', [1, 2, 3, 4])
    def test_plane_harmonics(self, k):
        basis = base_har_basis(2, k)
        assert len(basis) == 2
        assert all(not laplace(P) and P.is_homogeneous(k) for P in basis)
        assert fischer_gram(basis).is_diagonal()

    def test_line_monogenics(self):
        assert len(base_mon_basis(1, 0)) == 2
        assert base_mon_basis(1, 1) == []

    @pytest.mark.parametrize('k', [0, 1, 2, 3])
    def test_plane_monogenics(self, k):
        basis = base_mon_basis(2, k)
        assert len(basis) == 4
        assert all(not dirac(P) for P in basis)
        assert fischer_gram(basis).is_diagonal()

    def test_plane_constants_are_witt_elements(self):
        w = witt_fixtures(2)
        assert base_mon_basis(2, 0) == [CliffordPolynomial.constant(2, v) for v in (w.i_plus, w.t_plus, w.i_minus, w.t_minus)]

    def test_other_dimensions_rejected(self):
        with pytest.raises(ChainError):
            base_har_basis(3, 1)
        with pytest.raises(ChainError):
            weight_base('mon', 4, 0)


class TestWeightBase:
    @pytest.mark.parametrize('k', [0, 1, 2, 3])
    def test_plane_norms_and_signs(self, k):
        elements = weight_base(Mode.MONOGENIC, 2, k)
        assert [w.family for w in elements] == ['I+', 'T+', 'I-', 'T-']
        assert [w.sign for w in elements] == [1, 1, -1, -1]
        for w in elements:
            assert w.norm2 == Fraction(2 ** k * factorial(k), 2)
            assert fischer_norm2(w.poly) == w.norm2

    def test_line_projectors(self):
        elements = weight_base('mon', 1, 0)
        assert [(w.family, w.sign, w.norm2) for w in elements] == [('P+', 1, half), ('P-', -1, half)]
        assert weight_base('mon', 1, 1) == []

    def test_harmonic_tags(self):
        assert [w.family for w in weight_base('har', 2, 2)] == ['z', 'zbar']
        assert [w.family for w in weight_base('har', 2, 0)] == ['1']
        assert [w.family for w in weight_base('har', 1, 1)] == ['x']


class TestChains:
    @pytest.mark.parametrize('m, chain', [(1, (1,)), (2, (2,)), (4, (2, 2)), (5, (2, 2, 1))])
    def test_default(self, m, chain):
        assert default_chain(m) == chain
        assert parse_chain(m) == chain

    def test_remainder_is_appended(self):
        assert parse_chain(5, [2, 2]) == (2, 2, 1)
        assert parse_chain(4, [1, 1]) == (1, 1, 2)
        assert parse_chain(4, [1, 1, 1, 1]) == (1, 1, 1, 1)

    @pytest.mark.parametrize('chain', [[3, 1], [], [2], [2, 2, 2], ['a']])
    def test_invalid(self, chain):
        with pytest.raises(ChainError):
            parse_chain(5 if chain == [2] else 4, chain)

    def test_splits(self):
        assert chain_splits(5, (2, 2, 1)) == [SpaceSplit(5, 2, 0), SpaceSplit(3, 2, 2)]
        assert chain_splits(2, (2,)) == []

    def test_label_json(self):
        label = BranchLabel.from_json([[1, 0, 'I+'], [0, 'P-']])
        assert label.to_json() == [[1, 0, 'I+'], [0, 'P-']]
        assert label.tail_degree == 0


class TestSignatures:
    @pytest.mark.parametrize('k', [0, 1, 2])
    def test_head_constant_times_tail(self, k):
        # P_k(u) I+ Q_0(v) with the tail constant on R^2
        split = SpaceSplit(4, 2)
        head = base_mon_basis(2, k)[0].embed(0, 4)
        for tail in base_mon_basis(2, 0):
            P = poly_mul(head, tail.embed(2, 4))
            assert eigenvalue(P, scasimir_u(P, split)) == -(k + half)

    @pytest.mark.parametrize('i', [0, 1, 2])
    def test_tail_values(self, i):
        m = 4
        split = SpaceSplit(m, 2)
        head = base_mon_basis(2, 0)[0].embed(0, m)
        for tail in base_mon_basis(2, i):
            P = poly_mul(head, tail.embed(2, m))
            assert eigenvalue(P, scasimir_v(P, split)) == -(i + Fraction(m - 3, 2))

    def test_table_examples(self):
        split = SpaceSplit(4, 2)
        assert expected_signature('mon', split, 0, 1, 2) == (Fraction(-3, 2), Fraction(-5, 2), Fraction(-9, 2))
        assert expected_signature('mon', split, 2, 0, 0, sign=-1) == (half, half, Fraction(-7, 2))
        assert expected_signature('har', SpaceSplit(3, 2), 1, 1, 0) == (Fraction(-1), 0, Fraction(-12))

    def test_not_an_eigenvector(self):
        P = CliffordPolynomial.variable(3, 1) + CliffordPolynomial.variable(3, 3)
        with pytest.raises(NotEigenvectorError):
            eigen_signature(P, SpaceSplit(3, 2), 'har')

    def test_basis_elements_carry_their_values(self):
        split = SpaceSplit(3, 2)
        for el in branch_basis('mon', 3, 2):
            assert eigen_signature(el.poly, split) == el.signature[0]
        for el in branch_basis('har', 3, 3):
            assert eigen_signature(el.poly, split, 'har') == el.signature[0]


class TestBranchBasis:
    @pytest.mark.parametrize('n', [0, 1, 2, 3])
    def test_plane(self, n):
        elements = branch_basis('mon', 2, n)
        assert len(elements) == 4
        assert [el.norm2 for el in elements] == [Fraction(2 ** n * factorial(n), 2)] * 4
        assert [el.label.tail_family for el in elements] == ['I+', 'T+', 'I-', 'T-']

    def test_negative_degree(self):
        assert branch_basis('har', 3, -1) == []

    def test_line_tail_degree_two_is_empty(self):
        assert branch_basis('har', 1, 2) == []

    def test_labels_are_sorted_and_unique(self):
        elements = branch_basis('mon', 4, 2)
        keys = [el.label.sort_key() for el in elements]
        assert keys == sorted(keys)
        assert len({tuple(map(tuple, el.label.to_json())) for el in elements}) == len(elements)

    def test_degrees_add_up(self):
        for el in branch_basis('har', 4, 3):
            (level,) = el.label.levels
            assert 2 * level.s + level.k + el.label.tail_degree == 3
        for el in branch_basis('mon', 4, 3):
            (level,) = el.label.levels
            assert level.s + level.k + el.label.tail_degree == 3

    def test_workers_give_the_same_basis(self):
        assert branch_basis('mon', 3, 2, jobs=2) == branch_basis('mon', 3, 2)


def _check_complete(mode, m, n, chain=None):
    elements = branch_basis(mode, m, n, chain)
    assert len(elements) == kernel_dim_oracle(mode, m, n) == closed_form_dim(mode, m, n)
    report = verify_basis(elements, mode, m, chain, oracle=True, n=n)
    assert report.passed, report.to_json()


@pytest.mark.parametrize('m, n', [
    (m, n) for m in (2, 3, 4) for n in range(5) if (m, n) != (4, 4)
])
def test_monogenic_bases(m, n):
    _check_complete('mon', m, n)


@pytest.mark.parametrize('m, n', [(m, n) for m in (1, 2, 3, 4) for n in range(5)] + [(5, n) for n in range(4)])
def test_harmonic_bases(m, n):
    _check_complete('har', m, n)


@pytest.mark.parametrize('mode, m, n, chain', [
    ('har', 3, 3, [1, 1, 1]),
    ('har', 3, 2, [1, 2]),
    ('har', 4, 2, [1, 2, 1]),
    ('mon', 3, 2, [1, 1, 1]),
    ('mon', 3, 2, [1, 2]),
    ('mon', 4, 1, [1, 1, 2]),
])
def test_other_chains(mode, m, n, chain):
    _check_complete(mode, m, n, chain)


@pytest.mark.slow
@pytest.mark.parametrize('m, n', [(4, 4), (5, 0), (5, 1), (5, 2), (5, 3), (5, 4), (6, 1)])
def test_monogenic_bases_large(m, n):
    _check_complete('mon', m, n)


@pytest.mark.slow
@pytest.mark.parametrize('m, n', [(5, 4), (6, 0), (6, 1), (6, 2), (6, 3), (6, 4)])
def test_harmonic_bases_large(m, n):
    _check_complete('har', m, n)


def test_quoted_counts():
    assert len(branch_basis('har', 3, 2)) == 5
    assert len(branch_basis('mon', 3, 1)) == 16
