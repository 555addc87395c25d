from datetime import datetime, timezone

from .extensions import db


def _utcnow() -> datetime:
    return datetime.now(timezone.utc)


class TimestampMixin(db.Model):
    __abstract__ = True
    created_at = db.Column(db.DateTime, default=_utcnow)
    updated_at = db.Column(db.DateTime, default=_utcnow, onupdate=_utcnow)


class CachedBasis(TimestampMixin):
    __tablename__ = 'basis_cache'
    __table_args__ = (db.UniqueConstraint('mode', 'm', 'n', 'chain', name='uq_basis_key'),)

    id = db.Column(db.Integer, primary_key=True)
    mode = db.Column(db.String(16), nullable=False, index=True)
    m = db.Column(db.Integer, nullable=False)
    n = db.Column(db.Integer, nullable=False)
    # comma separated head dimensions, e.g. "2,2,1"
    chain = db.Column(db.String(64), nullable=False)
    element_count = db.Column(db.Integer, default=0)
    # canonical JSON text of the basis file
    payload = db.Column(db.Text, nullable=False)
    sha256 = db.Column(db.String(64), nullable=False)

    @property
    def key(self) -> tuple:
        return (self.mode, self.m, self.n, self.chain)
