"""Independent dimension checks: exact ranks of operator matrices."""

from __future__ import annotations

import logging
from fractions import Fraction
from itertools import combinations_with_replacement
from math import comb
from typing import Dict, List, Sequence, Tuple

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from ..clifford_core import _blade_mul
from ..errors import DimensionMismatchError
from ..poly_engine import CliffordPolynomial
from ..projections import Mode

log = logging.getLogger(__name__)

Exponent = Tuple[int, ...]


def monomials(m: int, n: int) -> List[Exponent]:
    """All exponent tuples of total degree ``n`` in ``m`` variables."""
    if n < 0:
        return []
    out = []
    for combo in combinations_with_replacement(range(m), n):
        alpha = [0] * m
        for j in combo:
            alpha[j] += 1
        out.append(tuple(alpha))
    return out


def _rank(rows: Dict[int, Dict[int, Fraction]], n_rows: int, n_cols: int) -> int:
    if not n_rows or not n_cols or not rows:
        return 0
    data = {r: {c: QQ(v.numerator, v.denominator) for c, v in cols.items() if v} for r, cols in rows.items()}
    data = {r: cols for r, cols in data.items() if cols}
    if not data:
        return 0
    return DomainMatrix(data, (n_rows, n_cols), QQ).rank()


def _kernel_dim(sources: Sequence, image_of, block_of) -> int:
    """``len(sources) - rank`` of the operator, block by block."""
    blocks: Dict[object, List] = {}
    for src in sources:
        blocks.setdefault(block_of(src), []).append(src)
    kernel = 0
    for cols in blocks.values():
        row_index: Dict[object, int] = {}
        data: Dict[int, Dict[int, Fraction]] = {}
        for c, src in enumerate(cols):
            for target, value in image_of(src).items():
                r = row_index.setdefault(target, len(row_index))
                data.setdefault(r, {})[c] = Fraction(value)
        rank = _rank(data, len(row_index), len(cols))
        kernel += len(cols) - rank
    return kernel


def _laplace_image(alpha: Exponent) -> Dict[Exponent, int]:
    out: Dict[Exponent, int] = {}
    for j, a in enumerate(alpha):
        if a >= 2:
            beta = alpha[:j] + (a - 2,) + alpha[j + 1:]
            out[beta] = out.get(beta, 0) + a * (a - 1)
    return out


def _dirac_image(src: Tuple[Exponent, int]) -> Dict[Tuple[Exponent, int], int]:
    alpha, mask = src
    out: Dict[Tuple[Exponent, int], int] = {}
    for j, a in enumerate(alpha):
        if a:
            beta = alpha[:j] + (a - 1,) + alpha[j + 1:]
            sign, new = _blade_mul(1 << j, mask)
            key = (beta, new)
            out[key] = out.get(key, 0) + sign * a
    return out


def _parity(alpha: Exponent) -> Tuple[int, ...]:
    return tuple(a % 2 for a in alpha)


def _blade_parity(src: Tuple[Exponent, int]) -> Tuple[int, ...]:
    alpha, mask = src
    return tuple((a + ((mask >> j) & 1)) % 2 for j, a in enumerate(alpha))


def kernel_dim_oracle(mode, m: int, n: int) -> int:
    """Dimension of ``ker Lap`` (scalar) or ``ker D_x`` (C_m-valued) in degree ``n``.

    The operator matrix in the monomial (times blade) basis is block diagonal
    by exponent parities, so each block is ranked separately.
    """
    mode = Mode.parse(mode)
    if n < 0:
        return 0
    if mode is Mode.HARMONIC:
        dim = _kernel_dim(monomials(m, n), _laplace_image, _parity)
    else:
        sources = [(alpha, mask) for alpha in monomials(m, n) for mask in range(1 << m)]
        dim = _kernel_dim(sources, _dirac_image, _blade_parity)
    log.debug('oracle %s m=%d n=%d -> %d', mode.value, m, n, dim)
    return dim


def closed_form_dim(mode, m: int, n: int) -> int:
    """Textbook dimension formulas, used as a second oracle."""
    mode = Mode.parse(mode)
    if n < 0:
        return 0

    def binom(a: int, b: int) -> int:
        return comb(a, b) if a >= b >= 0 else 0

    if mode is Mode.HARMONIC:
        return binom(n + m - 1, m - 1) - binom(n + m - 3, m - 1)
    return 2 ** m * (binom(n + m - 1, m - 1) - binom(n + m - 2, m - 1))


def linear_rank(polys: Sequence[CliffordPolynomial]) -> int:
    """Rank over Q(i) of a list of polynomials.

    Each polynomial ``v`` contributes the real rows of ``v`` and ``i v``; the
    rational rank of that real matrix is twice the complex rank.
    """
    if not polys:
        return 0
    dim = polys[0].dim
    columns: Dict[Tuple[Exponent, int, int], int] = {}
    data: Dict[int, Dict[int, Fraction]] = {}
    row = 0
    for P in polys:
        if P.dim != dim:
            raise DimensionMismatchError(f'polynomials in dimensions {dim} and {P.dim}')
        re_row: Dict[int, Fraction] = {}
        im_row: Dict[int, Fraction] = {}
        for alpha, mask, c in P.iter_flat():
            re_col = columns.setdefault((alpha, mask, 0), len(columns))
            im_col = columns.setdefault((alpha, mask, 1), len(columns))
            # v = a + ib -> (a, b); i v -> (-b, a)
            re_row[re_col], re_row[im_col] = c.re, c.im
            im_row[re_col], im_row[im_col] = -c.im, c.re
        data[row], data[row + 1] = re_row, im_row
        row += 2
    return _rank(data, row, len(columns)) // 2
