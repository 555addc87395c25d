"""Exact Pochhammer symbols, generalised binomials and Jacobi polynomials."""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Union

from .errors import SingularCoefficientError

Rational = Union[int, Fraction]

_FACTORIAL_CACHE_LIMIT = 64
_FACTORIALS: List[int] = [1]


def factorial(n: int) -> int:
    if n < 0:
        raise ValueError(f'factorial of negative integer {n}')
    if n > _FACTORIAL_CACHE_LIMIT:
        return math.factorial(n)
    while len(_FACTORIALS) <= n:
        _FACTORIALS.append(_FACTORIALS[-1] * len(_FACTORIALS))
    return _FACTORIALS[n]


def pochhammer(z: Rational, n: int) -> Fraction:
    """Rising factorial ``(z)_n = z (z+1) ... (z+n-1)``; ``(z)_0 = 1``."""
    if n < 0:
        raise ValueError(f'pochhammer length must be non-negative, got {n}')
    z = Fraction(z)
    out = Fraction(1)
    for j in range(n):
        out *= z + j
    return out


def gen_binomial(a: Rational, j: int) -> Fraction:
    """``a (a-1) ... (a-j+1) / j!`` for rational ``a``."""
    if j < 0:
        return Fraction(0)
    a = Fraction(a)
    out = Fraction(1)
    for r in range(j):
        out *= a - r
    return out / factorial(j)


class RationalUniPoly:
    """Univariate polynomial in ``t`` with exact rational coefficients."""

    __slots__ = ('coeffs',)

    def __init__(self, coeffs: Mapping[int, Rational] = None):
        self.coeffs: Dict[int, Fraction] = {}
        for power, value in (coeffs or {}).items():
            if power < 0:
                raise ValueError('negative power in polynomial')
            value = Fraction(value)
            if value:
                self.coeffs[power] = value

    @classmethod
    def constant(cls, value: Rational) -> 'RationalUniPoly':
        return cls({0: value})

    @classmethod
    def t(cls) -> 'RationalUniPoly':
        return cls({1: 1})

    @classmethod
    def from_list(cls, values: Iterable[Rational]) -> 'RationalUniPoly':
        return cls(dict(enumerate(values)))

    @property
    def degree(self) -> int:
        return max(self.coeffs) if self.coeffs else -1

    def coefficient(self, power: int) -> Fraction:
        return self.coeffs.get(power, Fraction(0))

    def coefficient_list(self, n: int = None) -> List[Fraction]:
        top = self.degree if n is None else n
        return [self.coefficient(j) for j in range(top + 1)]

    def _coerce(self, other) -> 'RationalUniPoly':
        if isinstance(other, RationalUniPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return RationalUniPoly.constant(other)
        raise TypeError(f'cannot combine RationalUniPoly with {type(other).__name__}')

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.coeffs)
        for power, value in other.coeffs.items():
            out[power] = out.get(power, 0) + value
        return RationalUniPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return RationalUniPoly({k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        out: Dict[int, Fraction] = {}
        for pa, va in self.coeffs.items():
            for pb, vb in other.coeffs.items():
                out[pa + pb] = out.get(pa + pb, 0) + va * vb
        return RationalUniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            return NotImplemented
        result = RationalUniPoly.constant(1)
        for _ in range(exponent):
            result = result * self
        return result

    def __call__(self, t: Rational) -> Fraction:
        t = Fraction(t)
        out = Fraction(0)
        for power in range(self.degree, -1, -1):
            out = out * t + self.coefficient(power)
        return out

    def compose_negate(self) -> 'RationalUniPoly':
        """The polynomial ``t -> self(-t)``."""
        return RationalUniPoly({k: (-v if k % 2 else v) for k, v in self.coeffs.items()})

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = RationalUniPoly.constant(other)
        if not isinstance(other, RationalUniPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self.coeffs.items()))

    def __repr__(self) -> str:
        if not self.coeffs:
            return 'RationalUniPoly(0)'
        body = ' + '.join(f'({v})t^{k}' for k, v in sorted(self.coeffs.items()))
        return f'RationalUniPoly({body})'


def jacobi_poly(n: int, alpha: Rational, beta: Rational) -> RationalUniPoly:
    """``P_n^{alpha,beta}`` from the finite sum

    ``2^-n sum_j C(alpha+n, j) C(beta+n, n-j) (t+1)^j (t-1)^(n-j)``.
    """
    if n < 0:
        raise ValueError(f'Jacobi degree must be non-negative, got {n}')
    alpha, beta = Fraction(alpha), Fraction(beta)
    t = RationalUniPoly.t()
    t_plus, t_minus = t + 1, t - 1
    total = RationalUniPoly()
    for j in range(n + 1):
        weight = gen_binomial(alpha + n, j) * gen_binomial(beta + n, n - j)
        if weight:
            total = total + (t_plus ** j) * (t_minus ** (n - j)) * weight
    return total * Fraction(1, 2 ** n)


def jacobi_poly_hypergeometric(n: int, alpha: Rational, beta: Rational) -> RationalUniPoly:
    """``P_n^{alpha,beta}`` through the terminating Gauss series

    ``C(2n+alpha+beta, n) ((t-1)/2)^n 2F1(-n, -n-alpha; -2n-alpha-beta; 2/(1-t))``.

    The lower parameter must not hit a non-positive integer before the series
    terminates.
    """
    if n < 0:
        raise ValueError(f'Jacobi degree must be non-negative, got {n}')
    alpha, beta = Fraction(alpha), Fraction(beta)
    half_shift = (RationalUniPoly.t() - 1) * Fraction(1, 2)
    total = RationalUniPoly()
    for k in range(n + 1):
        lower = pochhammer(-2 * n - alpha - beta, k)
        if not lower:
            raise SingularCoefficientError(
                f'hypergeometric route singular for n={n}, alpha={alpha}, beta={beta}')
        weight = pochhammer(-n, k) * pochhammer(-n - alpha, k) / (lower * factorial(k))
        if k % 2:
            weight = -weight
        # ((t-1)/2)^n (2/(1-t))^k = (-1)^k ((t-1)/2)^(n-k)
        total = total + (half_shift ** (n - k)) * weight
    return total * gen_binomial(2 * n + alpha + beta, n)
