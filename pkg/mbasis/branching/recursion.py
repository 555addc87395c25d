"""Recursive construction of orthogonal bases along a chain of splits.

A chain such as ``(2, 2, 1)`` lists the head dimension of every level followed
by the dimension of the final tail; its entries are 1 or 2 and add up to m.
Each level splits the current space as ``R^p + R^q``, takes weight base
elements on the head and sub-basis elements of the tail and glues them with the
closed-form projections.
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, List, Optional, Sequence, Tuple

from ..errors import ChainError
from ..poly_engine import CliffordPolynomial
from ..projections import (
    Mode,
    SpaceSplit,
    SplitProductInput,
    constants,
    harmonic_product_fast,
    monogenic_product,
)
from .base import FAMILY_ORDER, weight_base
from .scasimir import Signature, expected_signature

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class LevelLabel:
    """One recursion level: u-power ``s``, head degree ``k`` and head family."""

    s: int
    k: int
    family: str


@dataclass(frozen=True)
class BranchLabel:
    levels: Tuple[LevelLabel, ...]
    tail_degree: int
    tail_family: str

    def sort_key(self) -> tuple:
        key = tuple((lv.s, lv.k, FAMILY_ORDER.get(lv.family, 99)) for lv in self.levels)
        return key + ((self.tail_degree, FAMILY_ORDER.get(self.tail_family, 99)),)

    def to_json(self) -> list:
        return [[lv.s, lv.k, lv.family] for lv in self.levels] + [[self.tail_degree, self.tail_family]]

    @classmethod
    def from_json(cls, data) -> 'BranchLabel':
        *levels, tail = data
        return cls(tuple(LevelLabel(int(s), int(k), str(f)) for s, k, f in levels), int(tail[0]), str(tail[1]))


@dataclass(frozen=True)
class BasisElement:
    poly: CliffordPolynomial
    label: BranchLabel
    norm2: Fraction
    signature: Tuple[Signature, ...]


def default_chain(m: int) -> Tuple[int, ...]:
    if m < 1:
        raise ChainError(f'dimension must be positive, got {m}')
    return (2,) * (m // 2) + ((1,) if m % 2 else ())


def parse_chain(m: int, chain: Optional[Iterable[int]] = None) -> Tuple[int, ...]:
    """Validate a chain for dimension ``m``; ``None`` gives the default.

    A chain that stops short of ``m`` by 1 or 2 gets that remainder as its tail.
    """
    if chain is None:
        return default_chain(m)
    try:
        entries = tuple(int(c) for c in chain)
    except (TypeError, ValueError) as exc:
        raise ChainError(f'chain must be a list of integers: {chain!r}') from exc
    if not entries:
        raise ChainError('chain must not be empty')
    if any(c not in (1, 2) for c in entries):
        raise ChainError(f'chain entries must be 1 or 2: {list(entries)}')
    total = sum(entries)
    if total < m and m - total in (1, 2):
        entries += (m - total,)
    elif total != m:
        raise ChainError(f'chain {list(entries)} does not add up to m = {m}')
    return entries


def chain_splits(m: int, chain: Sequence[int]) -> List[SpaceSplit]:
    """The split of every level, positioned in the ambient coordinates."""
    splits = []
    offset = 0
    for p in chain[:-1]:
        splits.append(SpaceSplit(m - offset, p, offset))
        offset += p
    return splits


def _sorted(elements: Iterable[BasisElement]) -> List[BasisElement]:
    return sorted(elements, key=lambda el: el.label.sort_key())


def _base_elements(mode: Mode, p: int, n: int) -> Tuple[BasisElement, ...]:
    return tuple(
        BasisElement(w.poly, BranchLabel((), n, w.family), w.norm2, ())
        for w in weight_base(mode, p, n)
    )


def _level_labels(mode: Mode, n: int) -> List[Tuple[int, int, int]]:
    # (s, k, i): harmonic 2s + k + i = n, monogenic s + k + i = n
    out = []
    step = 2 if mode is Mode.HARMONIC else 1
    for s in range(n // step + 1):
        for k in range(n - step * s + 1):
            out.append((s, k, n - step * s - k))
    return out


def _glue(mode: Mode, m: int, chain: Tuple[int, ...], s: int, k: int, i: int) -> List[BasisElement]:
    """All elements of one level label ``(s, k, i)``."""
    p = chain[0]
    split = SpaceSplit(m, p)
    heads = weight_base(mode, p, k)
    if not heads:
        return []
    tails = _sub_basis(mode, m - p, i, chain[1:])
    out = []
    for head in heads:
        P_k = head.poly.embed(0, m)
        for tail in tails:
            Q_i = tail.poly.embed(p, m)
            if mode is Mode.HARMONIC:
                poly = harmonic_product_fast(SplitProductInput(s, P_k, Q_i, split))
                factor = constants(s, k, i, split).c
            else:
                poly, factor = monogenic_product(SplitProductInput(s // 2, P_k, Q_i, split), with_u=bool(s % 2))
            label = BranchLabel((LevelLabel(s, k, head.family),) + tail.label.levels,
                                tail.label.tail_degree, tail.label.tail_family)
            signature = (expected_signature(mode, split, s, k, i, head.sign),) + tail.signature
            out.append(BasisElement(poly, label, factor * head.norm2 * tail.norm2, signature))
    return out


@lru_cache(maxsize=256)
def _sub_basis(mode: Mode, m: int, n: int, chain: Tuple[int, ...]) -> Tuple[BasisElement, ...]:
    if len(chain) == 1:
        return _base_elements(mode, m, n)
    out: List[BasisElement] = []
    for s, k, i in _level_labels(mode, n):
        out.extend(_glue(mode, m, chain, s, k, i))
    log.debug('%s basis m=%d n=%d chain=%s: %d elements', mode.value, m, n, list(chain), len(out))
    return tuple(_sorted(out))


def _glue_task(args) -> List[BasisElement]:
    mode_value, m, chain, s, k, i = args
    return _glue(Mode(mode_value), m, chain, s, k, i)


def branch_basis(mode, m: int, n: int, chain: Optional[Iterable[int]] = None, jobs: int = 1) -> List[BasisElement]:
    """Orthogonal basis of ``Har_n(R^m)`` or ``Mon_n(R^m, C_m)`` along ``chain``.

    ``jobs > 1`` fans the top-level labels out to worker processes; the result
    is the same list in the same order.
    """
    mode = Mode.parse(mode)
    chain = parse_chain(m, chain)
    if n < 0:
        return []
    if len(chain) == 1:
        return list(_base_elements(mode, m, n))
    labels = _level_labels(mode, n)
    log.info('building %s basis m=%d n=%d chain=%s over %d labels (jobs=%d)',
             mode.value, m, n, list(chain), len(labels), jobs)
    if jobs > 1 and len(labels) > 1:
        tasks = [(mode.value, m, chain, s, k, i) for s, k, i in labels]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(_glue_task, tasks))
    else:
        chunks = [_glue(mode, m, chain, s, k, i) for s, k, i in labels]
    elements = _sorted(el for chunk in chunks for el in chunk)
    log.info('built %d elements', len(elements))
    return elements
