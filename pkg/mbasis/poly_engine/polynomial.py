"""Sparse polynomials in ``x_1 .. x_m`` with Clifford-algebra coefficients."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, Iterable, Iterator, Mapping, Optional, Tuple, Union

from ..clifford_core import (
    MAX_DIM,
    GaussianRational,
    Involution,
    Multivector,
    _blade_mul,
    involution_sign,
)
from ..errors import BasisFormatError, DimensionMismatchError, InvalidIndexError

MultiIndex = Tuple[int, ...]
Scalar = Union[int, Fraction, GaussianRational]

# coefficient tables used by the hot loops: alpha -> mask -> coefficient
Nested = Dict[MultiIndex, Dict[int, GaussianRational]]


@dataclass(frozen=True)
class IndexRange:
    """Generator indices ``start .. end`` (1-based, inclusive)."""

    start: int
    end: int

    def __post_init__(self):
        if self.start < 1 or self.end < self.start - 1:
            raise InvalidIndexError(f'invalid index range {self.start}..{self.end}')

    @classmethod
    def full(cls, m: int) -> 'IndexRange':
        return cls(1, m)

    @classmethod
    def head(cls, p: int, offset: int = 0) -> 'IndexRange':
        return cls(offset + 1, offset + p)

    @classmethod
    def tail(cls, p: int, m: int, offset: int = 0) -> 'IndexRange':
        return cls(offset + p + 1, offset + m)

    def shifted(self, offset: int) -> 'IndexRange':
        return IndexRange(self.start + offset, self.end + offset)

    @property
    def indices(self) -> range:
        return range(self.start, self.end + 1)

    @property
    def mask(self) -> int:
        return ((1 << (self.end - self.start + 1)) - 1) << (self.start - 1) if len(self) else 0

    def __len__(self) -> int:
        return max(0, self.end - self.start + 1)

    def __contains__(self, idx: int) -> bool:
        return self.start <= idx <= self.end

    def check(self, m: int) -> 'IndexRange':
        if self.end > m:
            raise InvalidIndexError(f'index range {self.start}..{self.end} exceeds dimension {m}')
        return self


def resolve_range(r: Optional[IndexRange], m: int) -> IndexRange:
    return IndexRange.full(m) if r is None else r.check(m)


def _add_into(table: Dict[int, GaussianRational], mask: int, value: GaussianRational) -> None:
    if mask in table:
        table[mask] = table[mask] + value
    else:
        table[mask] = value


class CliffordPolynomial:
    """Finite sum ``sum_alpha x^alpha a_alpha`` with ``a_alpha`` in C_m.

    ``terms`` maps exponent tuples of length ``dim`` to non-zero multivectors.
    """

    __slots__ = ('dim', 'terms')

    def __init__(self, dim: int, terms: Mapping[MultiIndex, object] = None):
        if not isinstance(dim, int) or dim < 1 or dim > MAX_DIM:
            raise InvalidIndexError(f'polynomial dimension {dim!r} outside 1..{MAX_DIM}')
        clean: Dict[MultiIndex, Multivector] = {}
        for alpha, coeff in (terms or {}).items():
            alpha = tuple(int(a) for a in alpha)
            if len(alpha) != dim or any(a < 0 for a in alpha):
                raise InvalidIndexError(f'exponent {alpha} invalid for dimension {dim}')
            if not isinstance(coeff, Multivector):
                coeff = Multivector.scalar(dim, coeff)
            elif coeff.dim != dim:
                raise DimensionMismatchError(f'coefficient in C_{coeff.dim} for polynomial in dimension {dim}')
            if alpha in clean:
                coeff = clean[alpha] + coeff
            if coeff:
                clean[alpha] = coeff
            else:
                clean.pop(alpha, None)
        self.dim = dim
        self.terms = clean

    @classmethod
    def _wrap(cls, dim: int, terms: Dict[MultiIndex, Multivector]) -> 'CliffordPolynomial':
        obj = object.__new__(cls)
        obj.dim = dim
        obj.terms = terms
        return obj

    @classmethod
    def _from_nested(cls, dim: int, nested: Nested) -> 'CliffordPolynomial':
        terms: Dict[MultiIndex, Multivector] = {}
        for alpha, table in nested.items():
            table = {mask: c for mask, c in table.items() if c}
            if table:
                terms[alpha] = Multivector._wrap(dim, table)
        return cls._wrap(dim, terms)

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, dim: int) -> 'CliffordPolynomial':
        return cls(dim)

    @classmethod
    def constant(cls, dim: int, value=1) -> 'CliffordPolynomial':
        return cls(dim, {(0,) * dim: value})

    @classmethod
    def variable(cls, dim: int, i: int) -> 'CliffordPolynomial':
        if i < 1 or i > dim:
            raise InvalidIndexError(f'variable x_{i} outside 1..{dim}')
        alpha = [0] * dim
        alpha[i - 1] = 1
        return cls(dim, {tuple(alpha): 1})

    @classmethod
    def monomial(cls, dim: int, alpha: Iterable[int], coeff=1) -> 'CliffordPolynomial':
        return cls(dim, {tuple(alpha): coeff})

    @classmethod
    def from_terms(cls, dim: int, items: Iterable[Tuple[MultiIndex, object]]) -> 'CliffordPolynomial':
        out = cls.zero(dim)
        for alpha, coeff in items:
            out = out + cls.monomial(dim, alpha, coeff)
        return out

    # -- structure ------------------------------------------------------

    def nested(self) -> Nested:
        return {alpha: dict(mv.terms) for alpha, mv in self.terms.items()}

    def iter_flat(self) -> Iterator[Tuple[MultiIndex, int, GaussianRational]]:
        for alpha, mv in self.terms.items():
            for mask, c in mv.terms.items():
                yield alpha, mask, c

    @property
    def degree(self) -> int:
        """Total degree; ``-1`` for the zero polynomial."""
        return max((sum(alpha) for alpha in self.terms), default=-1)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_homogeneous(self, d: Optional[int] = None) -> bool:
        degrees = {sum(alpha) for alpha in self.terms}
        if not degrees:
            return True
        if len(degrees) > 1:
            return False
        return d is None or degrees == {d}

    def homogeneous_components(self) -> Dict[int, 'CliffordPolynomial']:
        parts: Dict[int, Dict[MultiIndex, Multivector]] = {}
        for alpha, mv in self.terms.items():
            parts.setdefault(sum(alpha), {})[alpha] = mv
        return {d: CliffordPolynomial._wrap(self.dim, terms) for d, terms in sorted(parts.items())}

    def depends_only_on(self, r: IndexRange) -> bool:
        """True when only the variables ``x_j, j in r`` occur."""
        for alpha in self.terms:
            for j, a in enumerate(alpha, start=1):
                if a and j not in r:
                    return False
        return True

    def coefficients_within(self, r: IndexRange) -> bool:
        """True when every coefficient lies in the subalgebra generated by ``e_j, j in r``."""
        allowed = r.mask
        return all(not (mask & ~allowed) for _, mask, _ in self.iter_flat())

    def max_blade_index(self) -> int:
        return max((mv.max_index() for mv in self.terms.values()), default=0)

    def max_variable_index(self) -> int:
        top = 0
        for alpha in self.terms:
            for j, a in enumerate(alpha, start=1):
                if a:
                    top = max(top, j)
        return top

    # -- arithmetic -----------------------------------------------------

    def _check_same(self, other: 'CliffordPolynomial') -> None:
        if self.dim != other.dim:
            raise DimensionMismatchError(f'polynomials in dimensions {self.dim} and {other.dim}')

    def __add__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational, Multivector)):
            other = CliffordPolynomial.constant(self.dim, other)
        if not isinstance(other, CliffordPolynomial):
            return NotImplemented
        self._check_same(other)
        terms = dict(self.terms)
        for alpha, mv in other.terms.items():
            if alpha in terms:
                value = terms[alpha] + mv
                if value:
                    terms[alpha] = value
                else:
                    del terms[alpha]
            else:
                terms[alpha] = mv
        return CliffordPolynomial._wrap(self.dim, terms)

    __radd__ = __add__

    def __neg__(self):
        return CliffordPolynomial._wrap(self.dim, {alpha: -mv for alpha, mv in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational, Multivector)):
            other = CliffordPolynomial.constant(self.dim, other)
        if not isinstance(other, CliffordPolynomial):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, factor: Scalar) -> 'CliffordPolynomial':
        factor = GaussianRational.coerce(factor)
        if not factor:
            return CliffordPolynomial._wrap(self.dim, {})
        return CliffordPolynomial._wrap(self.dim, {alpha: mv.scale(factor) for alpha, mv in self.terms.items()})

    def left_mul(self, a: Multivector) -> 'CliffordPolynomial':
        """``a * P`` for a constant multivector ``a``."""
        if a.dim != self.dim:
            raise DimensionMismatchError(f'C_{a.dim} acting on polynomials in dimension {self.dim}')
        out = {}
        for alpha, mv in self.terms.items():
            prod = a * mv
            if prod:
                out[alpha] = prod
        return CliffordPolynomial._wrap(self.dim, out)

    def right_mul(self, a: Multivector) -> 'CliffordPolynomial':
        """``P * a`` for a constant multivector ``a``."""
        if a.dim != self.dim:
            raise DimensionMismatchError(f'C_{a.dim} acting on polynomials in dimension {self.dim}')
        out = {}
        for alpha, mv in self.terms.items():
            prod = mv * a
            if prod:
                out[alpha] = prod
        return CliffordPolynomial._wrap(self.dim, out)

    def __mul__(self, other):
        if isinstance(other, CliffordPolynomial):
            return poly_mul(self, other)
        if isinstance(other, Multivector):
            return self.right_mul(other)
        if isinstance(other, (int, Fraction, GaussianRational)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, Multivector):
            return self.left_mul(other)
        if isinstance(other, (int, Fraction, GaussianRational)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            return NotImplemented
        result = CliffordPolynomial.constant(self.dim, 1)
        for _ in range(exponent):
            result = poly_mul(result, self)
        return result

    def map_coefficients(self, fn: Callable[[Multivector], Multivector]) -> 'CliffordPolynomial':
        out = {}
        for alpha, mv in self.terms.items():
            value = fn(mv)
            if value:
                out[alpha] = value
        return CliffordPolynomial._wrap(self.dim, out)

    def involution(self, kind: Involution) -> 'CliffordPolynomial':
        """Apply a Clifford involution to every coefficient (``P'`` for ``MAIN``)."""
        out = {}
        for alpha, mv in self.terms.items():
            table = {}
            for mask, c in mv.terms.items():
                sign = involution_sign(kind, bin(mask).count('1'))
                if kind is Involution.CONJUGATION:
                    c = c.conjugate()
                table[mask] = -c if sign < 0 else c
            out[alpha] = Multivector._wrap(self.dim, table)
        return CliffordPolynomial._wrap(self.dim, out)

    def embed(self, offset: int, m_target: int) -> 'CliffordPolynomial':
        """Shift variables and generators by ``offset`` into dimension ``m_target``."""
        if offset < 0 or self.dim + offset > m_target or m_target > MAX_DIM:
            raise InvalidIndexError(f'cannot embed dimension {self.dim} at offset {offset} into {m_target}')
        pad_left = (0,) * offset
        pad_right = (0,) * (m_target - self.dim - offset)
        out = {}
        for alpha, mv in self.terms.items():
            out[pad_left + alpha + pad_right] = Multivector._wrap(
                m_target, {mask << offset: c for mask, c in mv.terms.items()})
        return CliffordPolynomial._wrap(m_target, out)

    # -- comparison and JSON ---------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, CliffordPolynomial):
            return self.dim == other.dim and self.terms == other.terms
        if isinstance(other, (int, Fraction, GaussianRational, Multivector)):
            return self == CliffordPolynomial.constant(self.dim, other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.dim, frozenset(self.terms.items())))

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda item: (sum(item[0]), item[0]))

    def to_json(self) -> list:
        return [{'exponents': list(alpha), 'coeff': mv.to_json()} for alpha, mv in self.sorted_terms()]

    @classmethod
    def from_json(cls, data, dim: int) -> 'CliffordPolynomial':
        if not isinstance(data, list):
            raise BasisFormatError('polynomial must be a JSON array')
        terms: Dict[MultiIndex, Multivector] = {}
        for entry in data:
            try:
                alpha = tuple(int(a) for a in entry['exponents'])
                raw = entry['coeff']
            except (KeyError, TypeError, ValueError) as exc:
                raise BasisFormatError(f'malformed polynomial term {entry!r}') from exc
            if len(alpha) != dim or any(a < 0 for a in alpha):
                raise BasisFormatError(f'exponent {list(alpha)} invalid for dimension {dim}')
            if alpha in terms:
                raise BasisFormatError(f'duplicate exponent {list(alpha)}')
            terms[alpha] = Multivector.from_json(raw, dim)
        return cls(dim, terms)

    def __repr__(self) -> str:
        if not self.terms:
            return f'CliffordPolynomial[{self.dim}](0)'
        parts = []
        for alpha, mv in self.sorted_terms():
            mono = '*'.join(f'x{j}^{a}' if a > 1 else f'x{j}' for j, a in enumerate(alpha, start=1) if a) or '1'
            parts.append(f'{mono}{mv!r}')
        return f'CliffordPolynomial[{self.dim}](' + ' + '.join(parts) + ')'


def _add_alpha(a: MultiIndex, b: MultiIndex) -> MultiIndex:
    return tuple(x + y for x, y in zip(a, b))


def poly_mul(P: CliffordPolynomial, Q: CliffordPolynomial) -> CliffordPolynomial:
    """Product ``P Q``: exponents add, coefficients multiply in C_m (left to right)."""
    if P.dim != Q.dim:
        raise DimensionMismatchError(f'polynomials in dimensions {P.dim} and {Q.dim}')
    out: Nested = {}
    for alpha, pa in P.terms.items():
        for beta, qb in Q.terms.items():
            key = _add_alpha(alpha, beta)
            table = out.setdefault(key, {})
            for ma, ca in pa.terms.items():
                for mb, cb in qb.terms.items():
                    sign, mask = _blade_mul(ma, mb)
                    value = ca * cb
                    _add_into(table, mask, -value if sign < 0 else value)
    return CliffordPolynomial._from_nested(P.dim, out)
