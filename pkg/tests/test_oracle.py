import pytest

from mbasis.branching import closed_form_dim, kernel_dim_oracle, monomials


class TestMonomials:
    def test_counts(self):
        assert len(monomials(3, 2)) == 6
        assert monomials(2, 0) == [(0, 0)]
        assert monomials(3, -1) == []


class TestOracle:
    @pytest.mark.parametrize('mode, m, n, expected', [
        ('har', 3, 2, 5),
        ('har', 1, 0, 1),
        ('har', 1, 1, 1),
        ('har', 1, 2, 0),
        ('har', 2, 4, 2),
        ('har', 4, 3, 16),
        ('mon', 1, 0, 2),
        ('mon', 1, 1, 0),
        ('mon', 2, 0, 4),
        ('mon', 2, 3, 4),
        ('mon', 3, 1, 16),
        ('mon', 4, 2, 96),
    ])
    def test_known_dimensions(self, mode, m, n, expected):
        assert kernel_dim_oracle(mode, m, n) == expected

    def test_negative_degree(self):
        assert kernel_dim_oracle('mon', 3, -1) == 0
        assert closed_form_dim('har', 3, -1) == 0

    @pytest.mark.parametrize('m, n', [(m, n) for m in range(1, 6) for n in range(5)])
    def test_harmonic_closed_form(self, m, n):
        assert kernel_dim_oracle('har', m, n) == closed_form_dim('har', m, n)

    @pytest.mark.parametrize('m, n', [(m, n) for m in range(1, 5) for n in range(4)])
    def test_monogenic_closed_form(self, m, n):
        assert kernel_dim_oracle('mon', m, n) == closed_form_dim('mon', m, n)
