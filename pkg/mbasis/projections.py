"""Harmonic and monogenic projectors and their closed forms on split products.

Rational functions of the Euler operator are applied last and evaluated at the
degree of the homogeneous component they act on.  Series in ``|x|^2j Lap^j``
are truncated at ``j = d // 2``; beyond that ``Lap^j`` already vanishes.
"""

from __future__ import annotations

import enum
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Tuple, Union

from .clifford_core import Involution
from .errors import (
    InvalidIndexError,
    NotHarmonicError,
    NotMonogenicError,
    PreconditionError,
    SingularCoefficientError,
)
from .jacobi import factorial, gen_binomial, jacobi_poly, pochhammer
from .poly_engine import (
    CliffordPolynomial,
    IndexRange,
    dirac,
    laplace,
    poly_mul,
    rsq_mul,
    vector_mul,
)

log = logging.getLogger(__name__)


class Mode(enum.Enum):
    HARMONIC = 'harmonic'
    MONOGENIC = 'monogenic'

    @classmethod
    def parse(cls, value: Union[str, 'Mode']) -> 'Mode':
        if isinstance(value, Mode):
            return value
        aliases = {'har': cls.HARMONIC, 'harmonic': cls.HARMONIC, 'mon': cls.MONOGENIC, 'monogenic': cls.MONOGENIC}
        try:
            return aliases[str(value).strip().lower()]
        except KeyError:
            raise ValueError(f'unknown mode {value!r}; expected har/harmonic or mon/monogenic') from None


class Parity(enum.Enum):
    EVEN = 'even'
    ODD = 'odd'


@dataclass(frozen=True)
class SpaceSplit:
    """Coordinates ``offset+1 .. offset+m`` split into head ``u`` (p) and tail ``v`` (q)."""

    m: int
    p: int
    offset: int = 0

    def __post_init__(self):
        if not 1 <= self.p < self.m:
            raise InvalidIndexError(f'head dimension {self.p} must satisfy 1 <= p < m = {self.m}')
        if self.offset < 0:
            raise InvalidIndexError(f'negative split offset {self.offset}')

    @property
    def q(self) -> int:
        return self.m - self.p

    @property
    def u_range(self) -> IndexRange:
        return IndexRange.head(self.p, self.offset)

    @property
    def v_range(self) -> IndexRange:
        return IndexRange.tail(self.p, self.m, self.offset)

    @property
    def full_range(self) -> IndexRange:
        return IndexRange(self.offset + 1, self.offset + self.m)


# ---------------------------------------------------------------------------
# Series projectors
# ---------------------------------------------------------------------------


def _harmonic_series(P_d: CliffordPolynomial, d: int, m: int) -> CliffordPolynomial:
    # sum_j |x|^2j Lap^j P_d / (4^j j! (-d - m/2 + 2)_j)
    shift = Fraction(-d + 2) - Fraction(m, 2)
    total = P_d
    lap = P_d
    for j in range(1, d // 2 + 1):
        lap = laplace(lap)
        if not lap:
            break
        den = 4 ** j * factorial(j) * pochhammer(shift, j)
        if not den:
            raise SingularCoefficientError(f'harmonic projector coefficient singular at d={d}, j={j}, m={m}')
        term = lap
        for _ in range(j):
            term = rsq_mul(term)
        total = total + term.scale(Fraction(1) / den)
    return total


def harmonic_part(P: CliffordPolynomial) -> CliffordPolynomial:
    """Component of ``P`` in ``Har`` of the Fischer decomposition."""
    total = CliffordPolynomial.zero(P.dim)
    for d, part in P.homogeneous_components().items():
        total = total + _harmonic_series(part, d, P.dim)
    return total


def _shift_coefficient(d: int, s: int, m: int) -> Fraction:
    # A_s(E - 2s) at E = d: 1 / (4^s s! (d - 2s + m/2)_s)
    den = 4 ** s * factorial(s) * pochhammer(Fraction(d - 2 * s) + Fraction(m, 2), s)
    if not den:
        raise SingularCoefficientError(f'component coefficient singular at d={d}, s={s}, m={m}')
    return Fraction(1) / den


def _lap_power(P: CliffordPolynomial, s: int) -> CliffordPolynomial:
    for _ in range(s):
        if not P:
            break
        P = laplace(P)
    return P


def _rsq_power(P: CliffordPolynomial, s: int) -> CliffordPolynomial:
    for _ in range(s):
        P = rsq_mul(P)
    return P


def harmonic_component(P: CliffordPolynomial, s: int) -> CliffordPolynomial:
    """Component of ``P`` in ``|x|^2s Har``."""
    if s < 0:
        raise ValueError(f'component index must be non-negative, got {s}')
    m = P.dim
    total = CliffordPolynomial.zero(m)
    for d, part in P.homogeneous_components().items():
        if 2 * s > d:
            continue
        inner = _lap_power(part, s)
        if not inner:
            continue
        inner = _rsq_power(_harmonic_series(inner, d - 2 * s, m), s)
        total = total + inner.scale(_shift_coefficient(d, s, m))
    return total


def _monogenic_from_harmonic(H: CliffordPolynomial, d: int, m: int) -> CliffordPolynomial:
    den = 2 * d + m - 2
    if den == 0:
        # m = 2, d = 0: constants are already monogenic
        return H
    return H + vector_mul(dirac(H)).scale(Fraction(1, den))


def monogenic_part(P: CliffordPolynomial) -> CliffordPolynomial:
    """Component of ``P`` in ``Mon`` of the Fischer decomposition."""
    m = P.dim
    total = CliffordPolynomial.zero(m)
    for d, part in P.homogeneous_components().items():
        total = total + _monogenic_from_harmonic(_harmonic_series(part, d, m), d, m)
    return total


def _monogenic_degree(P_d: CliffordPolynomial, d: int, m: int) -> CliffordPolynomial:
    return _monogenic_from_harmonic(_harmonic_series(P_d, d, m), d, m)


def monogenic_component(P: CliffordPolynomial, s: int, parity: Union[Parity, str]) -> CliffordPolynomial:
    """Component of ``P`` in ``|x|^2s Mon`` (even) or ``|x|^2s x Mon`` (odd)."""
    if s < 0:
        raise ValueError(f'component index must be non-negative, got {s}')
    parity = Parity(parity)
    m = P.dim
    total = CliffordPolynomial.zero(m)
    for d, part in P.homogeneous_components().items():
        if parity is Parity.EVEN:
            if 2 * s > d:
                continue
            inner = _lap_power(part, s)
            if not inner:
                continue
            inner = _rsq_power(_monogenic_degree(inner, d - 2 * s, m), s)
            total = total + inner.scale(_shift_coefficient(d, s, m))
        else:
            if 2 * s + 1 > d:
                continue
            inner = _lap_power(dirac(part), s)
            if not inner:
                continue
            inner = _rsq_power(vector_mul(_monogenic_degree(inner, d - 2 * s - 1, m)), s)
            extra = 2 * (Fraction(d - s - 1) + Fraction(m, 2))
            factor = -_shift_coefficient(d - 1, s, m) / extra
            total = total + inner.scale(factor)
    return total


def fischer_components(P: CliffordPolynomial, mode: Union[Mode, str]) -> Dict[int, CliffordPolynomial]:
    """All non-trivial components: ``{s: P_H,2s P}`` or ``{j: P_M,j P}``."""
    mode = Mode.parse(mode)
    top = max(P.degree, 0)
    out: Dict[int, CliffordPolynomial] = {}
    if mode is Mode.HARMONIC:
        for s in range(top // 2 + 1):
            out[s] = harmonic_component(P, s)
    else:
        for j in range(top + 1):
            out[j] = monogenic_component(P, j // 2, Parity.ODD if j % 2 else Parity.EVEN)
    return out


# ---------------------------------------------------------------------------
# Closed forms on split products
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ProjectionConstants:
    lam: Fraction
    c: Fraction
    k_p: Fraction
    i_q: Fraction


def constants(s: int, k: int, i: int, split: SpaceSplit) -> ProjectionConstants:
    p, q, m = split.p, split.q, split.m
    den = pochhammer(Fraction(s + k + i) + Fraction(m - 2, 2), s)
    if not den:
        raise SingularCoefficientError(f'projection constants singular at s={s}, k={k}, i={i}, m={m}')
    lam = Fraction((-1) ** s * factorial(s)) / den
    c = 4 ** s * factorial(s) * pochhammer(Fraction(k) + Fraction(p, 2), s) * pochhammer(Fraction(i) + Fraction(q, 2), s) / den
    return ProjectionConstants(lam=lam, c=c, k_p=Fraction(k) + Fraction(p - 2, 2), i_q=Fraction(i) + Fraction(q - 2, 2))


@dataclass(frozen=True)
class SplitProductInput:
    """``|u|^2s P_k(u) Q_i(v)`` for the given split."""

    s: int
    P_k: CliffordPolynomial
    Q_i: CliffordPolynomial
    split: SpaceSplit

    @property
    def k(self) -> int:
        return max(self.P_k.degree, 0)

    @property
    def i(self) -> int:
        return max(self.Q_i.degree, 0)


def _check_factors(inp: SplitProductInput) -> None:
    split = inp.split
    if inp.s < 0:
        raise PreconditionError(f'negative power s={inp.s}')
    if split.offset or inp.P_k.dim != split.m or inp.Q_i.dim != split.m:
        raise PreconditionError('closed forms need factors in the full ambient space of an unshifted split')
    if not inp.P_k.is_homogeneous() or not inp.Q_i.is_homogeneous():
        raise PreconditionError('split factors must be homogeneous')
    if not inp.P_k.depends_only_on(split.u_range):
        raise PreconditionError('head factor depends on tail variables')
    if not inp.Q_i.depends_only_on(split.v_range):
        raise PreconditionError('tail factor depends on head variables')


def _range_square(dim: int, r: IndexRange) -> CliffordPolynomial:
    return rsq_mul(CliffordPolynomial.constant(dim, 1), r)


def _range_vector(dim: int, r: IndexRange) -> CliffordPolynomial:
    return vector_mul(CliffordPolynomial.constant(dim, 1), r)


def _powers(base: CliffordPolynomial, top: int):
    out = [CliffordPolynomial.constant(base.dim, 1)]
    for _ in range(top):
        out.append(poly_mul(out[-1], base))
    return out


def harmonic_product_fast(inp: SplitProductInput) -> CliffordPolynomial:
    """``P_H(|u|^2s P_k Q_i)`` through the expanded Jacobi closed form."""
    _check_factors(inp)
    split = inp.split
    if laplace(inp.P_k, split.u_range):
        raise NotHarmonicError('head factor is not harmonic in u')
    if laplace(inp.Q_i, split.v_range):
        raise NotHarmonicError('tail factor is not harmonic in v')
    dim = inp.P_k.dim
    product = poly_mul(inp.P_k, inp.Q_i)
    if not product:
        return product
    s = inp.s
    const = constants(s, inp.k, inp.i, split)
    if s == 0:
        return product
    u_pows = _powers(_range_square(dim, split.u_range), s)
    v_pows = _powers(_range_square(dim, split.v_range), s)
    weight = CliffordPolynomial.zero(dim)
    for j in range(s + 1):
        coeff = gen_binomial(const.k_p + s, j) * gen_binomial(const.i_q + s, s - j)
        if not coeff:
            continue
        if (s - j) % 2:
            coeff = -coeff
        weight = weight + poly_mul(v_pows[j], u_pows[s - j]).scale(coeff)
    return poly_mul(weight, product).scale(const.lam)


def jacobi_form(inp: SplitProductInput) -> CliffordPolynomial:
    """``lam |x|^2s P_s^{k_p,i_q}((|v|^2-|u|^2)/|x|^2) P_k Q_i``, homogenised."""
    _check_factors(inp)
    split = inp.split
    dim = inp.P_k.dim
    s = inp.s
    const = constants(s, inp.k, inp.i, split)
    jac = jacobi_poly(s, const.k_p, const.i_q)
    r_u = _range_square(dim, split.u_range)
    r_v = _range_square(dim, split.v_range)
    diff_pows = _powers(r_v - r_u, s)
    sum_pows = _powers(r_v + r_u, s)
    weight = CliffordPolynomial.zero(dim)
    for j in range(s + 1):
        coeff = jac.coefficient(j)
        if coeff:
            weight = weight + poly_mul(diff_pows[j], sum_pows[s - j]).scale(coeff)
    return poly_mul(weight, poly_mul(inp.P_k, inp.Q_i)).scale(const.lam)


def monogenic_product(inp: SplitProductInput, with_u: bool = False) -> Tuple[CliffordPolynomial, Fraction]:
    """``P_M(|u|^2s P_k Q_i)`` or ``P_M(u |u|^2s P_k Q_i)`` with its norm factor.

    The norm factor multiplies ``||P_k||^2 ||Q_i||^2``.
    """
    _check_factors(inp)
    split = inp.split
    if dirac(inp.P_k, split.u_range):
        raise NotMonogenicError('head factor is not monogenic in u')
    if dirac(inp.Q_i, split.v_range):
        raise NotMonogenicError('tail factor is not monogenic in v')
    if not inp.P_k.coefficients_within(split.u_range) or not inp.Q_i.coefficients_within(split.v_range):
        raise PreconditionError('factor coefficients must lie in the subalgebras of their own variables')
    dim = inp.P_k.dim
    s, k, i = inp.s, inp.k, inp.i
    p, m = split.p, split.m
    u = _range_vector(dim, split.u_range)
    v = _range_vector(dim, split.v_range)
    P_k, Q_i = inp.P_k, inp.Q_i
    P_prime = P_k.involution(Involution.MAIN)

    def fast(s_, F, G):
        return harmonic_product_fast(SplitProductInput(s_, F, G, split))

    if not with_u:
        if s == 0:
            return poly_mul(P_k, Q_i), Fraction(1)
        top = 2 * (s + k + i) + m - 2
        den = 2 * (2 * s + k + i) + m - 2
        poly = fast(s, P_k, Q_i).scale(top) - fast(s - 1, poly_mul(u, P_prime), poly_mul(v, Q_i)).scale(2 * s)
        factor = Fraction(top, den) * constants(s, k, i, split).c
        return poly.scale(Fraction(1, den)), factor

    den = 2 * (2 * s + 1 + k + i) + m - 2
    first = fast(s, poly_mul(u, P_k), Q_i).scale(2 * s + m - p + 2 * i)
    second = fast(s, P_prime, poly_mul(v, Q_i)).scale(p + 2 * s + 2 * k)
    factor = constants(s + 1, k, i, split).c / (2 * (s + 1))
    return (first - second).scale(Fraction(1, den)), factor


@dataclass(frozen=True)
class USideFactor:
    """The u-side factor ``|u|^2s head`` or ``u |u|^2s head``."""

    s: int
    head: CliffordPolynomial
    with_u: bool = False

    def polynomial(self, split: SpaceSplit) -> CliffordPolynomial:
        dim = self.head.dim
        out = poly_mul(_powers(_range_square(dim, split.u_range), self.s)[-1], self.head)
        if self.with_u:
            out = poly_mul(_range_vector(dim, split.u_range), out)
        return out


def tau_H(K: Union[USideFactor, CliffordPolynomial], G: CliffordPolynomial, split: SpaceSplit) -> CliffordPolynomial:
    """``P_H(K G)`` for ``G`` harmonic in ``v``."""
    if laplace(G, split.v_range):
        raise NotHarmonicError('tail factor is not harmonic in v')
    if isinstance(K, USideFactor) and not K.with_u:
        return harmonic_product_fast(SplitProductInput(K.s, K.head, G, split))
    if isinstance(K, USideFactor):
        K = K.polynomial(split)
    return harmonic_part(poly_mul(K, G))


def tau_M(K: Union[USideFactor, CliffordPolynomial], G: CliffordPolynomial, split: SpaceSplit) -> CliffordPolynomial:
    """``P_M(K G)`` for ``G`` monogenic in ``v``."""
    if dirac(G, split.v_range):
        raise NotMonogenicError('tail factor is not monogenic in v')
    if isinstance(K, USideFactor):
        return monogenic_product(SplitProductInput(K.s, K.head, G, split), K.with_u)[0]
    return monogenic_part(poly_mul(K, G))
