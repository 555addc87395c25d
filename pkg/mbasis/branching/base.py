"""Base cases of the recursion on R^1 and R^2.

In the plane the building blocks are powers of ``z = x_1 + i x_2`` and its
conjugate, multiplied by the Witt idempotents and null vectors.  On the line
the only spherical monogenics are the constants.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple

from ..clifford_core import I, GaussianRational, Multivector, pseudoscalar_projectors, witt_fixtures
from ..errors import ChainError
from ..jacobi import factorial
from ..poly_engine import CliffordPolynomial
from ..projections import Mode

#: sort rank of the family tags; the plane families follow I+, T+, I-, T-
FAMILY_ORDER = {'1': 0, 'x': 1, 'z': 2, 'zbar': 3, 'I+': 4, 'T+': 5, 'I-': 6, 'T-': 7, 'P+': 8, 'P-': 9}


@dataclass(frozen=True)
class WeightBaseElement:
    """A base-case polynomial with its family tag, squared norm and pseudoscalar sign."""

    family: str
    poly: CliffordPolynomial
    norm2: Fraction
    sign: int = 1


def _check_p(p: int) -> None:
    if p not in (1, 2):
        raise ChainError(f'base cases exist only for p in {{1, 2}}, got {p}')


def _z_power(k: int, conjugate: bool = False) -> CliffordPolynomial:
    # (x1 +- i x2)^k expanded binomially
    unit = -I if conjugate else I
    terms = {}
    for j in range(k + 1):
        coeff = GaussianRational(factorial(k) // (factorial(j) * factorial(k - j))) * unit ** j
        terms[(k - j, j)] = coeff
    return CliffordPolynomial(2, terms)


def base_har_basis(p: int, k: int) -> List[CliffordPolynomial]:
    """Scalar harmonics of degree ``k`` on R^p."""
    _check_p(p)
    if k < 0:
        return []
    if p == 1:
        if k == 0:
            return [CliffordPolynomial.constant(1, 1)]
        if k == 1:
            return [CliffordPolynomial.variable(1, 1)]
        return []
    if k == 0:
        return [CliffordPolynomial.constant(2, 1)]
    return [_z_power(k), _z_power(k, conjugate=True)]


def base_mon_basis(p: int, k: int) -> List[CliffordPolynomial]:
    """Spherical monogenics of degree ``k`` on R^p with values in C_p."""
    _check_p(p)
    if k < 0:
        return []
    if p == 1:
        if k == 0:
            return [CliffordPolynomial.constant(1, 1), CliffordPolynomial.constant(1, Multivector.blade(1, [1]))]
        return []
    witt = witt_fixtures(2)
    z, zbar = _z_power(k), _z_power(k, conjugate=True)
    return [z.right_mul(witt.i_plus), z.right_mul(witt.t_plus), zbar.right_mul(witt.i_minus), zbar.right_mul(witt.t_minus)]


def _plane_norm2(k: int) -> Fraction:
    # ||z^k||^2 = 2^k k!
    return Fraction(2 ** k * factorial(k))


def weight_base(mode, p: int, k: int) -> List[WeightBaseElement]:
    """Base elements that are eigenvectors of the head unit ``c e_P`` (monogenic mode)."""
    mode = Mode.parse(mode)
    _check_p(p)
    if mode is Mode.HARMONIC:
        polys = base_har_basis(p, k)
        if p == 1:
            tags = ['1'] if k == 0 else ['x']
            return [WeightBaseElement(tag, P, Fraction(1)) for tag, P in zip(tags, polys)]
        if k == 0:
            return [WeightBaseElement('1', polys[0], Fraction(1))]
        return [WeightBaseElement(tag, P, _plane_norm2(k)) for tag, P in zip(('z', 'zbar'), polys)]

    if p == 1:
        if k != 0:
            return []
        proj = pseudoscalar_projectors(1, 1)
        return [
            WeightBaseElement('P+', CliffordPolynomial.constant(1, proj.plus), Fraction(1, 2), 1),
            WeightBaseElement('P-', CliffordPolynomial.constant(1, proj.minus), Fraction(1, 2), -1),
        ]
    if k < 0:
        return []
    norm2 = _plane_norm2(k) / 2
    tags: Tuple[Tuple[str, int], ...] = (('I+', 1), ('T+', 1), ('I-', -1), ('T-', -1))
    return [WeightBaseElement(tag, P, norm2, sign) for (tag, sign), P in zip(tags, base_mon_basis(2, k))]
