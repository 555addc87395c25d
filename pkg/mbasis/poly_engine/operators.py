"""Differential and multiplication operators on Clifford polynomials.

Every operator exists twice: as a plain function ``op(P, ...)`` and as a
:class:`PolyOperator` value that composes with ``@`` and combines linearly, so
operator identities can be checked directly.  Range arguments default to the
full coordinate range of the operand.  Clifford factors (``e_j``, ``e_ij``)
always multiply from the left.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Callable, Dict, Optional, Union

from ..clifford_core import GaussianRational, Multivector, _blade_mul
from ..errors import DimensionMismatchError, InvalidIndexError
from .polynomial import CliffordPolynomial, IndexRange, MultiIndex, Nested, _add_into, resolve_range

Scalar = Union[int, Fraction, GaussianRational]

_HALF = Fraction(1, 2)


def _check_index(P: CliffordPolynomial, i: int) -> None:
    if not isinstance(i, int) or i < 1 or i > P.dim:
        raise InvalidIndexError(f'coordinate index {i!r} outside 1..{P.dim}')


def _check_pair(P: CliffordPolynomial, i: int, j: int) -> None:
    _check_index(P, i)
    _check_index(P, j)
    if i >= j:
        raise InvalidIndexError(f'expected i < j, got ({i}, {j})')


def _bump(alpha: MultiIndex, k: int, delta: int) -> MultiIndex:
    return alpha[:k] + (alpha[k] + delta,) + alpha[k + 1:]


def _accumulate(out: Nested, alpha: MultiIndex, mv: Multivector, factor) -> None:
    table = out.setdefault(alpha, {})
    for mask, c in mv.terms.items():
        _add_into(table, mask, c * factor)


def _accumulate_left(out: Nested, alpha: MultiIndex, blade: int, mv: Multivector, factor) -> None:
    table = out.setdefault(alpha, {})
    for mask, c in mv.terms.items():
        sign, new = _blade_mul(blade, mask)
        _add_into(table, new, c * (-factor if sign < 0 else factor))


# ---------------------------------------------------------------------------
# Primitive operators
# ---------------------------------------------------------------------------


def partial_derivative(P: CliffordPolynomial, i: int) -> CliffordPolynomial:
    _check_index(P, i)
    k = i - 1
    out = {}
    for alpha, mv in P.terms.items():
        a = alpha[k]
        if a:
            out[_bump(alpha, k, -1)] = mv.scale(a)
    return CliffordPolynomial._wrap(P.dim, out)


def multiply_variable(P: CliffordPolynomial, i: int) -> CliffordPolynomial:
    _check_index(P, i)
    k = i - 1
    return CliffordPolynomial._wrap(P.dim, {_bump(alpha, k, 1): mv for alpha, mv in P.terms.items()})


def dirac(P: CliffordPolynomial, r: Optional[IndexRange] = None) -> CliffordPolynomial:
    """``sum_{j in r} e_j d_j P``."""
    r = resolve_range(r, P.dim)
    out: Nested = {}
    for alpha, mv in P.terms.items():
        for j in r.indices:
            a = alpha[j - 1]
            if a:
                _accumulate_left(out, _bump(alpha, j - 1, -1), 1 << (j - 1), mv, a)
    return CliffordPolynomial._from_nested(P.dim, out)


def laplace(P: CliffordPolynomial, r: Optional[IndexRange] = None) -> CliffordPolynomial:
    r = resolve_range(r, P.dim)
    out: Nested = {}
    for alpha, mv in P.terms.items():
        for j in r.indices:
            a = alpha[j - 1]
            if a >= 2:
                _accumulate(out, _bump(alpha, j - 1, -2), mv, a * (a - 1))
    return CliffordPolynomial._from_nested(P.dim, out)


def euler(P: CliffordPolynomial, r: Optional[IndexRange] = None) -> CliffordPolynomial:
    r = resolve_range(r, P.dim)
    lo, hi = r.start - 1, r.end
    out = {}
    for alpha, mv in P.terms.items():
        weight = sum(alpha[lo:hi])
        if weight:
            out[alpha] = mv.scale(weight)
    return CliffordPolynomial._wrap(P.dim, out)


def rsq_mul(P: CliffordPolynomial, r: Optional[IndexRange] = None) -> CliffordPolynomial:
    """Multiplication by ``sum_{j in r} x_j^2``."""
    r = resolve_range(r, P.dim)
    out: Nested = {}
    for alpha, mv in P.terms.items():
        for j in r.indices:
            _accumulate(out, _bump(alpha, j - 1, 2), mv, 1)
    return CliffordPolynomial._from_nested(P.dim, out)


def vector_mul(P: CliffordPolynomial, r: Optional[IndexRange] = None) -> CliffordPolynomial:
    """Left multiplication by ``sum_{j in r} x_j e_j``."""
    r = resolve_range(r, P.dim)
    out: Nested = {}
    for alpha, mv in P.terms.items():
        for j in r.indices:
            _accumulate_left(out, _bump(alpha, j - 1, 1), 1 << (j - 1), mv, 1)
    return CliffordPolynomial._from_nested(P.dim, out)


def _angular_into(out: Nested, P: CliffordPolynomial, i: int, j: int, blade: int, factor) -> None:
    # accumulate factor * e_blade * L_ij P (blade 0 means no Clifford factor)
    ki, kj = i - 1, j - 1
    for alpha, mv in P.terms.items():
        if alpha[kj]:
            beta = _bump(_bump(alpha, kj, -1), ki, 1)
            _accumulate_left(out, beta, blade, mv, factor * alpha[kj])
        if alpha[ki]:
            beta = _bump(_bump(alpha, ki, -1), kj, 1)
            _accumulate_left(out, beta, blade, mv, -factor * alpha[ki])


def angular_L(P: CliffordPolynomial, i: int, j: int) -> CliffordPolynomial:
    """``L_ij = x_i d_j - x_j d_i``."""
    _check_pair(P, i, j)
    out: Nested = {}
    _angular_into(out, P, i, j, 0, 1)
    return CliffordPolynomial._from_nested(P.dim, out)


def moment_M(P: CliffordPolynomial, i: int, j: int) -> CliffordPolynomial:
    """``M_ij = L_ij - e_ij / 2``."""
    _check_pair(P, i, j)
    out: Nested = {}
    _angular_into(out, P, i, j, 0, 1)
    blade = (1 << (i - 1)) | (1 << (j - 1))
    for alpha, mv in P.terms.items():
        _accumulate_left(out, alpha, blade, mv, -_HALF)
    return CliffordPolynomial._from_nested(P.dim, out)


def gamma(P: CliffordPolynomial, r: Optional[IndexRange] = None) -> CliffordPolynomial:
    """Spherical Dirac operator ``-sum_{i<j in r} e_ij L_ij``."""
    r = resolve_range(r, P.dim)
    out: Nested = {}
    for i, j in combinations(r.indices, 2):
        _angular_into(out, P, i, j, (1 << (i - 1)) | (1 << (j - 1)), -1)
    return CliffordPolynomial._from_nested(P.dim, out)


def casimir_h(P: CliffordPolynomial, r: Optional[IndexRange] = None) -> CliffordPolynomial:
    """``sum_{i<j in r} L_ij^2`` (Laplace-Beltrami operator of the range)."""
    r = resolve_range(r, P.dim)
    total = CliffordPolynomial.zero(P.dim)
    for i, j in combinations(r.indices, 2):
        total = total + angular_L(angular_L(P, i, j), i, j)
    return total


def casimir_L(P: CliffordPolynomial, r: Optional[IndexRange] = None) -> CliffordPolynomial:
    """``sum_{i<j in r} M_ij^2``."""
    r = resolve_range(r, P.dim)
    total = CliffordPolynomial.zero(P.dim)
    for i, j in combinations(r.indices, 2):
        total = total + moment_M(moment_M(P, i, j), i, j)
    return total


def left_multiply(P: CliffordPolynomial, a: Multivector) -> CliffordPolynomial:
    return P.left_mul(a)


def euler_apply(P: CliffordPolynomial, fn: Callable[[int], Scalar]) -> CliffordPolynomial:
    """Apply a function of ``E``: each degree-d component is scaled by ``fn(d)``."""
    total = CliffordPolynomial.zero(P.dim)
    for d, part in P.homogeneous_components().items():
        factor = fn(d)
        if factor:
            total = total + part.scale(factor)
    return total


# ---------------------------------------------------------------------------
# Operator algebra
# ---------------------------------------------------------------------------


class PolyOperator:
    """A linear endomorphism of polynomial space.

    ``A @ B`` is composition (``B`` first), ``A + B``/``A - B`` are pointwise,
    a scalar added to an operator means that multiple of the identity.
    """

    __slots__ = ('fn', 'name')

    def __init__(self, fn: Callable[[CliffordPolynomial], CliffordPolynomial], name: str = 'op'):
        self.fn = fn
        self.name = name

    def __call__(self, P: CliffordPolynomial) -> CliffordPolynomial:
        return self.fn(P)

    @staticmethod
    def _coerce(other) -> 'PolyOperator':
        if isinstance(other, PolyOperator):
            return other
        if isinstance(other, (int, Fraction, GaussianRational)):
            return IDENTITY * other
        raise TypeError(f'cannot use {other!r} as a polynomial operator')

    def __matmul__(self, other: 'PolyOperator') -> 'PolyOperator':
        other = self._coerce(other)
        outer, inner = self.fn, other.fn
        return PolyOperator(lambda P: outer(inner(P)), f'{self.name}@{other.name}')

    def __add__(self, other) -> 'PolyOperator':
        other = self._coerce(other)
        a, b = self.fn, other.fn
        return PolyOperator(lambda P: a(P) + b(P), f'({self.name}+{other.name})')

    __radd__ = __add__

    def __neg__(self) -> 'PolyOperator':
        a = self.fn
        return PolyOperator(lambda P: -a(P), f'-{self.name}')

    def __sub__(self, other) -> 'PolyOperator':
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> 'PolyOperator':
        return self._coerce(other) + (-self)

    def __mul__(self, factor) -> 'PolyOperator':
        if not isinstance(factor, (int, Fraction, GaussianRational)):
            return NotImplemented
        a = self.fn
        return PolyOperator(lambda P: a(P).scale(factor), f'{factor}*{self.name}')

    __rmul__ = __mul__

    def power(self, n: int) -> 'PolyOperator':
        if n < 0:
            raise ValueError('operator powers must be non-negative')
        result = IDENTITY
        for _ in range(n):
            result = self @ result
        return result

    def __repr__(self) -> str:
        return f'PolyOperator({self.name})'


def commutator(A: PolyOperator, B: PolyOperator) -> PolyOperator:
    return A @ B - B @ A


def anticommutator(A: PolyOperator, B: PolyOperator) -> PolyOperator:
    return A @ B + B @ A


IDENTITY = PolyOperator(lambda P: P, 'I')


def D(i: int) -> PolyOperator:
    return PolyOperator(lambda P: partial_derivative(P, i), f'd{i}')


def X(i: int) -> PolyOperator:
    return PolyOperator(lambda P: multiply_variable(P, i), f'x{i}')


def EULER(r: Optional[IndexRange] = None) -> PolyOperator:
    return PolyOperator(lambda P: euler(P, r), 'E')


def LAPLACE(r: Optional[IndexRange] = None) -> PolyOperator:
    return PolyOperator(lambda P: laplace(P, r), 'Lap')


def RSQ(r: Optional[IndexRange] = None) -> PolyOperator:
    return PolyOperator(lambda P: rsq_mul(P, r), '|x|^2')


def DIRAC(r: Optional[IndexRange] = None) -> PolyOperator:
    return PolyOperator(lambda P: dirac(P, r), 'Dx')


def VECTOR(r: Optional[IndexRange] = None) -> PolyOperator:
    return PolyOperator(lambda P: vector_mul(P, r), 'x')


def GAMMA(r: Optional[IndexRange] = None) -> PolyOperator:
    return PolyOperator(lambda P: gamma(P, r), 'Gamma')


def L(i: int, j: int) -> PolyOperator:
    return PolyOperator(lambda P: angular_L(P, i, j), f'L{i}{j}')


def M(i: int, j: int) -> PolyOperator:
    return PolyOperator(lambda P: moment_M(P, i, j), f'M{i}{j}')


def LEFT(a: Multivector) -> PolyOperator:
    def apply(P: CliffordPolynomial) -> CliffordPolynomial:
        if P.dim != a.dim:
            raise DimensionMismatchError(f'C_{a.dim} acting on polynomials in dimension {P.dim}')
        return P.left_mul(a)
    return PolyOperator(apply, 'a')


def euler_function(fn: Callable[[int], Scalar], name: str = 'f(E)') -> PolyOperator:
    return PolyOperator(lambda P: euler_apply(P, fn), name)
