"""Scasimir operators of a split and the eigenvalue tables they produce."""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Tuple

from ..clifford_core import I, ONE, GaussianRational, Multivector, pseudoscalar_projectors
from ..errors import NotEigenvectorError
from ..poly_engine import CliffordPolynomial, casimir_h, gamma, moment_M
from ..projections import Mode, SpaceSplit

Signature = Tuple[Fraction, Fraction, Fraction]


def head_unit(split: SpaceSplit, dim: int) -> Multivector:
    """``c e_P`` for the head generators of ``split`` inside C_dim."""
    c = pseudoscalar_projectors(split.p, split.p).c
    return Multivector._wrap(dim, {split.u_range.mask: ONE}).scale(c)


def scasimir_u(P: CliffordPolynomial, split: SpaceSplit) -> CliffordPolynomial:
    """``S_u = c e_P (Gamma_u - (p-1)/2)``."""
    shifted = gamma(P, split.u_range) - P.scale(Fraction(split.p - 1, 2))
    return shifted.left_mul(head_unit(split, P.dim))


def scasimir_v(P: CliffordPolynomial, split: SpaceSplit) -> CliffordPolynomial:
    """``S_v = c e_P (Gamma_v - (q-1)/2)``."""
    shifted = gamma(P, split.v_range) - P.scale(Fraction(split.q - 1, 2))
    return shifted.left_mul(head_unit(split, P.dim))


def shifted_gamma(P: CliffordPolynomial, split: SpaceSplit) -> CliffordPolynomial:
    """``Gamma_x - (m-1)/2`` on the coordinates of ``split``."""
    return gamma(P, split.full_range) - P.scale(Fraction(split.m - 1, 2))


def plane_scasimir(P: CliffordPolynomial, split: SpaceSplit) -> CliffordPolynomial:
    """``i M_ab`` on the head plane of a ``p = 2`` split (``S_u`` of that plane)."""
    a = split.u_range.start
    return moment_M(P, a, a + 1).scale(I)


def eigenvalue(P: CliffordPolynomial, image: CliffordPolynomial) -> GaussianRational:
    """The exact ``lam`` with ``image = lam P``; raises if there is none."""
    if not P:
        raise NotEigenvectorError('the zero polynomial has no eigenvalue')
    alpha, mv = next(iter(P.terms.items()))
    mask, c = next(iter(mv.terms.items()))
    target = image.terms.get(alpha)
    value = target.terms.get(mask) if target is not None else None
    lam = value / c if value is not None else GaussianRational(0)
    if image != P.scale(lam):
        raise NotEigenvectorError('polynomial is not an eigenvector of the operator')
    return lam


def _real(value: GaussianRational, what: str) -> Fraction:
    if not value.is_real():
        raise NotEigenvectorError(f'{what} eigenvalue {value} is not real')
    return value.re


def eigen_signature(P: CliffordPolynomial, split: SpaceSplit, mode=Mode.MONOGENIC) -> Signature:
    """Eigenvalue triple of ``P`` for the commuting operators of ``split``.

    Monogenic mode: ``(S_u, S_v, Gamma_x - (m-1)/2)``; harmonic mode: the
    Laplace-Beltrami operators of the u, v and full ranges.
    """
    mode = Mode.parse(mode)
    if mode is Mode.HARMONIC:
        ops: Tuple[Callable[[CliffordPolynomial], CliffordPolynomial], ...] = (
            lambda Q: casimir_h(Q, split.u_range),
            lambda Q: casimir_h(Q, split.v_range),
            lambda Q: casimir_h(Q, split.full_range),
        )
    else:
        ops = (
            lambda Q: scasimir_u(Q, split),
            lambda Q: scasimir_v(Q, split),
            lambda Q: shifted_gamma(Q, split),
        )
    names = ('u', 'v', 'total')
    return tuple(_real(eigenvalue(P, op(P)), name) for op, name in zip(ops, names))


def expected_signature(mode, split: SpaceSplit, s: int, k: int, i: int, sign: int = 1) -> Signature:
    """Table value for the summand labelled ``(s, k, i)`` at ``split``.

    Harmonic labels use ``|u|^2s`` (degree ``2s+k+i``); monogenic labels use
    the total u-power ``s`` (degree ``s+k+i``) and the head family ``sign``.
    """
    mode = Mode.parse(mode)
    p, q, m = split.p, split.q, split.m
    if mode is Mode.HARMONIC:
        n = 2 * s + k + i
        return (Fraction(-k * (k + p - 2)), Fraction(-i * (i + q - 2)), Fraction(-n * (n + m - 2)))
    n = s + k + i
    a = k + Fraction(p - 1, 2)
    b = i + Fraction(q - 1, 2)
    g = -(n + Fraction(m - 1, 2))
    if s % 2 == 0:
        return (-sign * a, -sign * b, g)
    flip = -1 if p % 2 else 1
    return (-sign * flip * a, sign * flip * b, g)
