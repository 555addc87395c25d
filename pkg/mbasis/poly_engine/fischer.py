"""Fischer inner product and Gram matrices.

On monomials ``<x^a A, x^b B> = delta_ab a! [conj(A) B]_0``; with Clifford
conjugation combined with complex conjugation ``[conj(e_A) e_B]_0 = delta_AB``,
so the product reduces to ``sum a! conj(P_{a,A}) Q_{a,A}`` over the shared
support.
"""

from __future__ import annotations

import logging
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterator, List, Sequence, Tuple

from ..clifford_core import ZERO, GaussianRational
from ..errors import DimensionMismatchError, NotMonogenicError
from ..jacobi import factorial, pochhammer
from .operators import dirac
from .polynomial import CliffordPolynomial, MultiIndex

log = logging.getLogger(__name__)


@lru_cache(maxsize=4096)
def multi_factorial(alpha: MultiIndex) -> int:
    out = 1
    for a in alpha:
        out *= factorial(a)
    return out


def fischer_inner(P: CliffordPolynomial, Q: CliffordPolynomial) -> GaussianRational:
    """``<P, Q>``: conjugate-linear in ``P``, linear in ``Q``."""
    if P.dim != Q.dim:
        raise DimensionMismatchError(f'polynomials in dimensions {P.dim} and {Q.dim}')
    if len(P.terms) > len(Q.terms):
        return fischer_inner(Q, P).conjugate()
    total = ZERO
    for alpha, pa in P.terms.items():
        qb = Q.terms.get(alpha)
        if qb is None:
            continue
        acc = ZERO
        for mask, c in pa.terms.items():
            d = qb.terms.get(mask)
            if d is not None:
                acc = acc + c.conjugate() * d
        if acc:
            total = total + acc * multi_factorial(alpha)
    return total


def fischer_norm2(P: CliffordPolynomial):
    """``<P, P>`` as an exact rational."""
    return fischer_inner(P, P).re


def sphere_factor(n: int, m: int):
    """``2^n (m/2)_n``, the ratio between Fischer and sphere products on Mon_n."""
    return 2 ** n * pochhammer(Fraction(m, 2), n)


def _check_monogenic(P: CliffordPolynomial, n: int, m: int) -> None:
    if P.dim != m:
        raise DimensionMismatchError(f'polynomial in dimension {P.dim}, expected {m}')
    if not P.is_homogeneous(n) or dirac(P):
        raise NotMonogenicError(f'argument is not a spherical monogenic of degree {n}')


def sphere_inner_monogenic(P: CliffordPolynomial, Q: CliffordPolynomial, n: int, m: int) -> GaussianRational:
    """Inner product on the unit sphere for spherical monogenics of degree ``n``."""
    _check_monogenic(P, n, m)
    _check_monogenic(Q, n, m)
    return fischer_inner(P, Q) / sphere_factor(n, m)


class GramMatrix:
    """Sparse Hermitian Gram matrix; absent entries are zero."""

    def __init__(self, size: int, entries: Dict[Tuple[int, int], GaussianRational]):
        self.size = size
        self.entries = {key: value for key, value in entries.items() if value}

    def __getitem__(self, key: Tuple[int, int]) -> GaussianRational:
        i, j = key
        if not (0 <= i < self.size and 0 <= j < self.size):
            raise IndexError(f'Gram index {key} outside {self.size}x{self.size}')
        return self.entries.get((i, j), ZERO)

    def __len__(self) -> int:
        return self.size

    def diagonal(self) -> List[GaussianRational]:
        return [self.entries.get((i, i), ZERO) for i in range(self.size)]

    def off_diagonal(self) -> Dict[Tuple[int, int], GaussianRational]:
        return {(i, j): v for (i, j), v in self.entries.items() if i != j}

    def is_diagonal(self) -> bool:
        return not self.off_diagonal()

    def is_hermitian(self) -> bool:
        return all(self[j, i] == v.conjugate() for (i, j), v in self.entries.items())

    def nonzero(self) -> Iterator[Tuple[int, int, GaussianRational]]:
        for (i, j) in sorted(self.entries):
            yield i, j, self.entries[(i, j)]

    def rows(self) -> List[List[GaussianRational]]:
        return [[self[i, j] for j in range(self.size)] for i in range(self.size)]


def fischer_gram(basis: Sequence[CliffordPolynomial]) -> GramMatrix:
    """Gram matrix ``G[i][j] = <b_i, b_j>``.

    Accumulates over shared (monomial, blade) keys, so polynomials with
    disjoint supports never meet.
    """
    if not basis:
        return GramMatrix(0, {})
    dim = basis[0].dim
    index: Dict[Tuple[MultiIndex, int], List[Tuple[int, GaussianRational]]] = {}
    for pos, P in enumerate(basis):
        if P.dim != dim:
            raise DimensionMismatchError(f'basis mixes dimensions {dim} and {P.dim}')
        for alpha, mask, c in P.iter_flat():
            index.setdefault((alpha, mask), []).append((pos, c))
    entries: Dict[Tuple[int, int], GaussianRational] = {}
    for (alpha, _mask), holders in index.items():
        weight = multi_factorial(alpha)
        for a, (i, ci) in enumerate(holders):
            conj_i = ci.conjugate() * weight
            for j, cj in holders[a:]:
                value = conj_i * cj
                key = (i, j)
                entries[key] = entries[key] + value if key in entries else value
    full: Dict[Tuple[int, int], GaussianRational] = {}
    for (i, j), value in entries.items():
        if not value:
            continue
        full[(i, j)] = value
        if i != j:
            full[(j, i)] = value.conjugate()
    log.debug('gram of %d polynomials over %d support keys: %d nonzero entries', len(basis), len(index), len(full))
    return GramMatrix(len(basis), full)
