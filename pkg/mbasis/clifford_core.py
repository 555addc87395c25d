"""Exact arithmetic in the complex Clifford algebra C_m.

The algebra is generated by ``e_1 .. e_m`` with ``e_i e_j + e_j e_i = -2 delta_ij``
over the Gaussian rationals Q(i).  A basis blade ``e_A`` is encoded by an int
mask whose bit ``i-1`` is set when ``e_i`` occurs in ``A``; the empty mask is the
scalar blade.  Multivectors are sparse maps ``mask -> GaussianRational`` with
zero coefficients always pruned, so structural comparison is equality.

All values are treated as immutable; every operation returns a new object.
"""

from __future__ import annotations

import enum
import logging
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, List, Mapping, NamedTuple, Tuple, Union

from .errors import DimensionMismatchError, InvalidBladeError, BasisFormatError

log = logging.getLogger(__name__)

#: widest supported ambient dimension (blade masks are m-bit integers)
MAX_DIM = 16

Number = Union[int, Fraction]


def _to_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f'cannot use {value!r} as an exact rational')


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or ``"p"`` (decimal integers) into a Fraction."""
    try:
        raw = text.strip()
        if '/' in raw:
            num, den = raw.split('/', 1)
            return Fraction(int(num), int(den))
        return Fraction(int(raw))
    except (ValueError, ZeroDivisionError, AttributeError) as exc:
        raise BasisFormatError(f'invalid rational {text!r}') from exc


def rational_str(value: Fraction) -> str:
    """Serialise a rational as ``"p/q"`` with a positive denominator."""
    value = _to_fraction(value)
    return f'{value.numerator}/{value.denominator}'


class GaussianRational:
    """An element ``re + im*i`` of Q(i) with exact rational parts.

    Fractions keep numerators and denominators reduced with a positive
    denominator, so the pair ``(re, im)`` is canonical.
    """

    __slots__ = ('re', 'im')

    def __init__(self, re: Number = 0, im: Number = 0):
        self.re = _to_fraction(re)
        self.im = _to_fraction(im)

    @classmethod
    def _raw(cls, re: Fraction, im: Fraction) -> 'GaussianRational':
        obj = object.__new__(cls)
        obj.re = re
        obj.im = im
        return obj

    @classmethod
    def coerce(cls, value) -> 'GaussianRational':
        if isinstance(value, GaussianRational):
            return value
        return cls(value, 0)

    @classmethod
    def parse(cls, re: str, im: str = '0') -> 'GaussianRational':
        return cls._raw(parse_rational(re), parse_rational(im))

    # -- arithmetic -----------------------------------------------------

    def __add__(self, other):
        if isinstance(other, GaussianRational):
            return GaussianRational._raw(self.re + other.re, self.im + other.im)
        if isinstance(other, (int, Fraction)):
            return GaussianRational._raw(self.re + other, self.im)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, GaussianRational):
            return GaussianRational._raw(self.re - other.re, self.im - other.im)
        if isinstance(other, (int, Fraction)):
            return GaussianRational._raw(self.re - other, self.im)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, (int, Fraction)):
            return GaussianRational._raw(other - self.re, -self.im)
        return NotImplemented

    def __neg__(self):
        return GaussianRational._raw(-self.re, -self.im)

    def __mul__(self, other):
        if isinstance(other, GaussianRational):
            a, b, c, d = self.re, self.im, other.re, other.im
            if not b and not d:
                return GaussianRational._raw(a * c, b)
            return GaussianRational._raw(a * c - b * d, a * d + b * c)
        if isinstance(other, (int, Fraction)):
            return GaussianRational._raw(self.re * other, self.im * other)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError('division by zero in Q(i)')
            return GaussianRational._raw(self.re / other, self.im / other)
        if not isinstance(other, GaussianRational):
            return NotImplemented
        c, d = other.re, other.im
        den = c * c + d * d
        if den == 0:
            raise ZeroDivisionError('division by zero in Q(i)')
        a, b = self.re, self.im
        return GaussianRational._raw((a * c + b * d) / den, (b * c - a * d) / den)

    def __rtruediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return GaussianRational(other) / self
        return NotImplemented

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            return NotImplemented
        result = ONE
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def conjugate(self) -> 'GaussianRational':
        return GaussianRational._raw(self.re, -self.im)

    def norm2(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    # -- comparison -----------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def __eq__(self, other) -> bool:
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self) -> int:
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def is_real(self) -> bool:
        return self.im == 0

    # -- formatting -----------------------------------------------------

    def format(self) -> str:
        """Compact exact text such as ``3/2``, ``-i``, ``1/2-3/4i``."""
        if not self.im:
            return str(self.re)
        mag = abs(self.im)
        imag = 'i' if mag == 1 else f'{mag}i'
        if not self.re:
            return imag if self.im > 0 else '-' + imag
        sign = '+' if self.im > 0 else '-'
        return f'{self.re}{sign}{imag}'

    __str__ = format

    def __repr__(self) -> str:
        return f'GaussianRational({self})'


ZERO = GaussianRational._raw(Fraction(0), Fraction(0))
ONE = GaussianRational._raw(Fraction(1), Fraction(0))
I = GaussianRational._raw(Fraction(0), Fraction(1))
HALF = GaussianRational._raw(Fraction(1, 2), Fraction(0))


# ---------------------------------------------------------------------------
# Blades
# ---------------------------------------------------------------------------


def _check_dim(m: int) -> None:
    if not isinstance(m, int) or m < 0 or m > MAX_DIM:
        raise InvalidBladeError(f'ambient dimension {m!r} outside 0..{MAX_DIM}')


class Blade(NamedTuple):
    """A basis blade ``e_A``; ``mask`` bit ``i-1`` marks generator ``e_i``."""

    mask: int

    @classmethod
    def from_indices(cls, indices: Iterable[int]) -> 'Blade':
        mask = 0
        previous = 0
        for idx in indices:
            if idx <= previous:
                raise InvalidBladeError(f'blade indices must be strictly increasing and positive: {list(indices)!r}')
            mask |= 1 << (idx - 1)
            previous = idx
        return cls(mask)

    @property
    def indices(self) -> Tuple[int, ...]:
        return mask_indices(self.mask)

    @property
    def grade(self) -> int:
        return bin(self.mask).count('1')


def mask_indices(mask: int) -> Tuple[int, ...]:
    out = []
    idx = 1
    while mask:
        if mask & 1:
            out.append(idx)
        mask >>= 1
        idx += 1
    return tuple(out)


def _popcount(mask: int) -> int:
    return bin(mask).count('1')


@lru_cache(maxsize=None)
def _blade_mul(a: int, b: int) -> Tuple[int, int]:
    # inversions: pairs (i in a, j in b) with i > j
    swaps = 0
    shifted = a >> 1
    while shifted:
        swaps += _popcount(shifted & b)
        shifted >>= 1
    # each shared generator contracts with e_i^2 = -1
    swaps += _popcount(a & b)
    return (-1 if swaps & 1 else 1), a ^ b


def blade_product(a: Blade, b: Blade, m: int) -> Tuple[int, Blade]:
    """Return ``(sign, blade)`` with ``e_a e_b = sign * e_blade`` in C_m."""
    _check_dim(m)
    full = (1 << m) - 1
    a_mask = a.mask if isinstance(a, Blade) else int(a)
    b_mask = b.mask if isinstance(b, Blade) else int(b)
    if a_mask & ~full or b_mask & ~full or a_mask < 0 or b_mask < 0:
        raise InvalidBladeError(f'blade outside 1..{m}: {mask_indices(a_mask)} * {mask_indices(b_mask)}')
    sign, mask = _blade_mul(a_mask, b_mask)
    return sign, Blade(mask)


class Involution(enum.Enum):
    MAIN = 'main'
    REVERSION = 'reversion'
    CONJUGATION = 'conjugation'


def involution_sign(kind: Involution, grade: int) -> int:
    if kind is Involution.MAIN:
        exponent = grade
    elif kind is Involution.REVERSION:
        exponent = grade * (grade - 1) // 2
    else:
        exponent = grade * (grade + 1) // 2
    return -1 if exponent & 1 else 1


# ---------------------------------------------------------------------------
# Multivectors
# ---------------------------------------------------------------------------


class Multivector:
    """Element of C_m: a sparse map from blade masks to Gaussian rationals."""

    __slots__ = ('dim', 'terms')

    def __init__(self, dim: int, terms: Mapping[int, object] = None):
        _check_dim(dim)
        full = (1 << dim) - 1
        clean: Dict[int, GaussianRational] = {}
        for mask, coeff in (terms or {}).items():
            mask = mask.mask if isinstance(mask, Blade) else int(mask)
            if mask < 0 or mask & ~full:
                raise InvalidBladeError(f'blade {mask_indices(mask)} outside 1..{dim}')
            value = GaussianRational.coerce(coeff)
            if value:
                clean[mask] = clean[mask] + value if mask in clean else value
                if not clean[mask]:
                    del clean[mask]
        self.dim = dim
        self.terms = clean

    @classmethod
    def _wrap(cls, dim: int, terms: Dict[int, GaussianRational]) -> 'Multivector':
        obj = object.__new__(cls)
        obj.dim = dim
        obj.terms = terms
        return obj

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, dim: int) -> 'Multivector':
        _check_dim(dim)
        return cls._wrap(dim, {})

    @classmethod
    def scalar(cls, dim: int, value=1) -> 'Multivector':
        return cls(dim, {0: value})

    @classmethod
    def blade(cls, dim: int, indices: Iterable[int], coeff=1) -> 'Multivector':
        return cls(dim, {Blade.from_indices(indices).mask: coeff})

    @classmethod
    def vector(cls, dim: int, coeffs: Mapping[int, object]) -> 'Multivector':
        """``sum_j coeffs[j] e_j`` with 1-based generator indices."""
        terms: Dict[int, object] = {}
        for idx, coeff in coeffs.items():
            if idx < 1 or idx > dim:
                raise InvalidBladeError(f'generator e_{idx} outside 1..{dim}')
            terms[1 << (idx - 1)] = coeff
        return cls(dim, terms)

    # -- arithmetic -----------------------------------------------------

    def _check_same(self, other: 'Multivector') -> None:
        if self.dim != other.dim:
            raise DimensionMismatchError(f'C_{self.dim} vs C_{other.dim}')

    def __add__(self, other):
        if not isinstance(other, Multivector):
            if isinstance(other, (int, Fraction, GaussianRational)):
                other = Multivector.scalar(self.dim, other)
            else:
                return NotImplemented
        self._check_same(other)
        terms = dict(self.terms)
        for mask, coeff in other.terms.items():
            if mask in terms:
                value = terms[mask] + coeff
                if value:
                    terms[mask] = value
                else:
                    del terms[mask]
            else:
                terms[mask] = coeff
        return Multivector._wrap(self.dim, terms)

    __radd__ = __add__

    def __neg__(self):
        return Multivector._wrap(self.dim, {mask: -c for mask, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            other = Multivector.scalar(self.dim, other)
        if not isinstance(other, Multivector):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, factor) -> 'Multivector':
        factor = GaussianRational.coerce(factor)
        if not factor:
            return Multivector._wrap(self.dim, {})
        return Multivector._wrap(self.dim, {mask: c * factor for mask, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, Multivector):
            return mv_mul(self, other)
        if isinstance(other, (int, Fraction, GaussianRational)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            return self.scale(ONE / GaussianRational.coerce(other))
        return NotImplemented

    # -- queries --------------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        if isinstance(other, Multivector):
            return self.dim == other.dim and self.terms == other.terms
        if isinstance(other, (int, Fraction, GaussianRational)):
            return self == Multivector.scalar(self.dim, other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.dim, frozenset(self.terms.items())))

    def scalar_part(self) -> GaussianRational:
        return self.terms.get(0, ZERO)

    def max_index(self) -> int:
        top = 0
        for mask in self.terms:
            top = max(top, mask.bit_length())
        return top

    def grade_part(self, k: int) -> 'Multivector':
        return grade_part(self, k)

    def involution(self, kind: Involution) -> 'Multivector':
        return involution(self, kind)

    def conjugate(self) -> 'Multivector':
        """Clifford conjugation combined with complex conjugation."""
        return involution(self, Involution.CONJUGATION)

    def embed(self, offset: int, m_target: int) -> 'Multivector':
        return embed(self, offset, m_target)

    def is_even(self) -> bool:
        return all(_popcount(mask) % 2 == 0 for mask in self.terms)

    # -- JSON -----------------------------------------------------------

    def sorted_terms(self) -> List[Tuple[int, GaussianRational]]:
        return sorted(self.terms.items(), key=lambda item: (_popcount(item[0]), mask_indices(item[0])))

    def to_json(self) -> list:
        return [
            {'blade': list(mask_indices(mask)), 're': rational_str(c.re), 'im': rational_str(c.im)}
            for mask, c in self.sorted_terms()
        ]

    @classmethod
    def from_json(cls, data, dim: int) -> 'Multivector':
        if not isinstance(data, list):
            raise BasisFormatError('multivector must be a JSON array')
        terms: Dict[int, GaussianRational] = {}
        for entry in data:
            try:
                mask = Blade.from_indices(int(i) for i in entry['blade']).mask
                coeff = GaussianRational.parse(str(entry.get('re', '0')), str(entry.get('im', '0')))
            except (KeyError, TypeError, ValueError, InvalidBladeError) as exc:
                raise BasisFormatError(f'malformed multivector term {entry!r}') from exc
            if mask in terms:
                raise BasisFormatError(f'duplicate blade {mask_indices(mask)}')
            terms[mask] = coeff
        try:
            return cls(dim, terms)
        except InvalidBladeError as exc:
            raise BasisFormatError(str(exc)) from exc

    def __repr__(self) -> str:
        if not self.terms:
            return f'Multivector[{self.dim}](0)'
        parts = []
        for mask, c in self.sorted_terms():
            name = 'e' + ''.join(str(i) for i in mask_indices(mask)) if mask else '1'
            parts.append(f'({c}){name}')
        return f'Multivector[{self.dim}](' + ' + '.join(parts) + ')'


def mv_mul(a: Multivector, b: Multivector) -> Multivector:
    """Clifford product: bilinear extension of :func:`blade_product`."""
    if a.dim != b.dim:
        raise DimensionMismatchError(f'C_{a.dim} vs C_{b.dim}')
    out: Dict[int, GaussianRational] = {}
    for ma, ca in a.terms.items():
        for mb, cb in b.terms.items():
            sign, mask = _blade_mul(ma, mb)
            value = ca * cb
            if sign < 0:
                value = -value
            if mask in out:
                out[mask] = out[mask] + value
            else:
                out[mask] = value
    return Multivector._wrap(a.dim, {mask: c for mask, c in out.items() if c})


def grade_part(a: Multivector, k: int) -> Multivector:
    """``[a]_k``; out-of-range grades give zero."""
    return Multivector._wrap(a.dim, {mask: c for mask, c in a.terms.items() if _popcount(mask) == k})


def involution(a: Multivector, kind: Involution) -> Multivector:
    terms: Dict[int, GaussianRational] = {}
    for mask, c in a.terms.items():
        sign = involution_sign(kind, _popcount(mask))
        if kind is Involution.CONJUGATION:
            c = c.conjugate()
        terms[mask] = -c if sign < 0 else c
    return Multivector._wrap(a.dim, terms)


def embed(a: Multivector, offset: int, m_target: int) -> Multivector:
    """Relabel ``e_i -> e_{i+offset}`` inside C_{m_target}."""
    _check_dim(m_target)
    if offset < 0 or a.max_index() + offset > m_target:
        raise InvalidBladeError(f'cannot embed C_{a.dim} at offset {offset} into C_{m_target}')
    return Multivector._wrap(m_target, {mask << offset: c for mask, c in a.terms.items()})


def commutator(a: Multivector, b: Multivector) -> Multivector:
    return mv_mul(a, b) - mv_mul(b, a)


# ---------------------------------------------------------------------------
# Distinguished elements
# ---------------------------------------------------------------------------


class PseudoscalarProjectors(NamedTuple):
    c: GaussianRational
    pseudoscalar: Multivector
    plus: Multivector
    minus: Multivector


_MINUS_I_POWERS = (ONE, -I, -ONE, I)


def pseudoscalar_projectors(p: int, m: int) -> PseudoscalarProjectors:
    """``c = (-i)^{p(p+1)/2}`` and ``P_pm = (1 pm c e_P)/2`` for ``e_P = e_1..e_p``."""
    _check_dim(m)
    if p < 1 or p > m:
        raise InvalidBladeError(f'head dimension {p} outside 1..{m}')
    c = _MINUS_I_POWERS[(p * (p + 1) // 2) % 4]
    e_p = Multivector._wrap(m, {(1 << p) - 1: ONE})
    one = Multivector.scalar(m, 1)
    unit = e_p.scale(c)
    return PseudoscalarProjectors(c, e_p, (one + unit).scale(HALF), (one - unit).scale(HALF))


class WittFixtures(NamedTuple):
    t_plus: Multivector
    t_minus: Multivector
    i_plus: Multivector
    i_minus: Multivector


def witt_fixtures(m: int) -> WittFixtures:
    """Witt null vectors ``T_pm = (e_1 pm i e_2)/2`` and idempotents ``I_pm = -T_pm T_mp``."""
    if m < 2:
        raise InvalidBladeError(f'Witt basis needs m >= 2, got {m}')
    _check_dim(m)
    t_plus = Multivector(m, {0b01: HALF, 0b10: I * HALF})
    t_minus = Multivector(m, {0b01: HALF, 0b10: -I * HALF})
    i_plus = -(t_plus * t_minus)
    i_minus = -(t_minus * t_plus)
    return WittFixtures(t_plus, t_minus, i_plus, i_minus)
