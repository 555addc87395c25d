"""Basis cache stored in the ``basis_cache`` table.

Needs an application context (``with app.app_context():``) like every other
use of ``db``.
"""

from __future__ import annotations

import hashlib
import logging
from typing import Optional

from .branching import Mode, parse_chain
from .extensions import db
from .models import CachedBasis

log = logging.getLogger(__name__)


def chain_key(chain) -> str:
    return ','.join(str(c) for c in chain)


def _digest(payload: str) -> str:
    return hashlib.sha256(payload.encode('utf-8')).hexdigest()


class BasisCache:
    """Canonical basis-file text keyed by (mode, m, n, chain)."""

    def __init__(self) -> None:
        self._ready = False

    def _ensure_schema(self) -> None:
        if not self._ready:
            db.create_all()
            self._ready = True

    def _lookup(self, mode, m: int, n: int, chain):
        self._ensure_schema()
        key = (Mode.parse(mode).value, m, n, chain_key(parse_chain(m, chain)))
        row = CachedBasis.query.filter_by(mode=key[0], m=m, n=n, chain=key[3]).first()
        return key, row

    def get(self, mode, m: int, n: int, chain=None) -> Optional[str]:
        key, row = self._lookup(mode, m, n, chain)
        if row is None:
            log.debug('cache miss %s', key)
            return None
        if _digest(row.payload) != row.sha256:
            log.warning('discarding corrupted cache entry %s', key)
            db.session.delete(row)
            db.session.commit()
            return None
        log.info('cache hit %s', key)
        return row.payload

    def put(self, mode, m: int, n: int, chain, payload: str, element_count: int) -> None:
        key, row = self._lookup(mode, m, n, chain)
        if row is None:
            row = CachedBasis(mode=key[0], m=m, n=n, chain=key[3])
            db.session.add(row)
        row.payload = payload
        row.sha256 = _digest(payload)
        row.element_count = element_count
        db.session.commit()
        log.info('cached %d elements for %s', element_count, key)

    def clear(self) -> int:
        self._ensure_schema()
        count = CachedBasis.query.delete()
        db.session.commit()
        return count
