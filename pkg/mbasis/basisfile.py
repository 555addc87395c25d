"""
Reading and writing of basis files.

A basis file is a self-describing JSON document::

    {
        "mode": "monogenic",
        "m": 3,
        "n": 1,
        "chain": [2, 1],
        "elements": [
            {"label": [[0, 1, "I+"], [0, "P+"]],
             "signature": [["-3/2", "0/1", "-2/1"]],
             "norm2": "1/2",
             "poly": [{"exponents": [1, 0, 0], "coeff": [...]}]}
        ],
        "report": {...}
    }

``report`` is only present when the basis was checked while generating and
``normalization`` only when unit-norm scale factors were requested.
Files are written canonically (sorted keys, compact separators, a trailing
newline) so that regenerating a basis reproduces the same bytes.
"""

from __future__ import annotations

import json
import logging
import os
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from .branching import BasisElement, BranchLabel, Mode, parse_chain
from .clifford_core import MAX_DIM, parse_rational, rational_str
from .errors import BasisFormatError, ChainError
from .poly_engine import CliffordPolynomial

log = logging.getLogger(__name__)


@dataclass
class BasisFile:
    mode: Mode
    m: int
    n: int
    chain: Tuple[int, ...]
    elements: List[BasisElement] = field(default_factory=list)
    report: Optional[dict] = None


def canonical_json(data) -> str:
    return json.dumps(data, sort_keys=True, separators=(',', ':'), ensure_ascii=False) + '\n'


def element_to_json(el: BasisElement) -> dict:
    return {
        'label': el.label.to_json(),
        'signature': [[rational_str(v) for v in triple] for triple in el.signature],
        'norm2': rational_str(el.norm2),
        'poly': el.poly.to_json(),
    }


def dumps_basis(mode, m: int, n: int, chain, elements, report: Optional[dict] = None,
                normalization: Optional[list] = None) -> str:
    mode = Mode.parse(mode)
    data = {
        'mode': mode.value,
        'm': m,
        'n': n,
        'chain': list(parse_chain(m, chain)),
        'elements': [element_to_json(el) for el in elements],
    }
    if report is not None:
        data['report'] = report
    if normalization is not None:
        data['normalization'] = normalization
    return canonical_json(data)


def save_basis(path: str, mode, m: int, n: int, chain, elements, report: Optional[dict] = None,
               normalization: Optional[list] = None) -> str:
    """Write a basis file and return the text written."""
    text = dumps_basis(mode, m, n, chain, elements, report, normalization)
    directory = os.path.dirname(os.path.abspath(path))
    os.makedirs(directory, exist_ok=True)
    with open(path, 'w', encoding='utf-8') as f:
        f.write(text)
    log.info('wrote %d elements to %s', len(elements), path)
    return text


def _int_field(data: dict, name: str) -> int:
    value = data.get(name)
    # bool is an int subclass; reject it explicitly
    if not isinstance(value, int) or isinstance(value, bool):
        raise BasisFormatError(f'"{name}" must be an integer, got {value!r}')
    return value


def _element_from_json(entry, m: int, idx: int) -> BasisElement:
    if not isinstance(entry, dict):
        raise BasisFormatError(f'element {idx} must be an object')
    try:
        label = BranchLabel.from_json(entry['label'])
        signature = tuple(
            tuple(parse_rational(str(v)) for v in triple)
            for triple in entry.get('signature', [])
        )
        norm2 = parse_rational(str(entry['norm2']))
        poly = CliffordPolynomial.from_json(entry['poly'], m)
    except BasisFormatError as exc:
        raise BasisFormatError(f'element {idx}: {exc}') from exc
    except (KeyError, TypeError, ValueError) as exc:
        raise BasisFormatError(f'element {idx}: malformed entry ({exc})') from exc
    if any(len(triple) != 3 for triple in signature):
        raise BasisFormatError(f'element {idx}: signature levels must be triples')
    return BasisElement(poly, label, norm2, signature)


def loads_basis(text: str) -> BasisFile:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise BasisFormatError(f'not valid JSON: {exc}') from exc
    if not isinstance(data, dict):
        raise BasisFormatError('basis file must hold a JSON object')
    try:
        mode = Mode.parse(data.get('mode'))
    except ValueError as exc:
        raise BasisFormatError(str(exc)) from exc
    m = _int_field(data, 'm')
    n = _int_field(data, 'n')
    if not 1 <= m <= MAX_DIM:
        raise BasisFormatError(f'dimension m = {m} outside 1..{MAX_DIM}')
    try:
        chain = parse_chain(m, data.get('chain'))
    except ChainError as exc:
        raise BasisFormatError(str(exc)) from exc
    raw_elements = data.get('elements', [])
    if not isinstance(raw_elements, list):
        raise BasisFormatError('"elements" must be an array')
    elements = [_element_from_json(entry, m, idx) for idx, entry in enumerate(raw_elements)]
    report = data.get('report')
    return BasisFile(mode, m, n, chain, elements, report if isinstance(report, dict) else None)


def load_basis(path: str) -> BasisFile:
    try:
        with open(path, 'r', encoding='utf-8') as f:
            text = f.read()
    except OSError as exc:
        raise BasisFormatError(f'cannot read {path}: {exc.strerror}') from exc
    basis = loads_basis(text)
    log.info('loaded %d elements from %s', len(basis.elements), path)
    return basis
