import os
from dotenv import load_dotenv

# Pick up variables from a local .env file when one exists
load_dotenv()


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None or not raw.strip():
        return default
    try:
        return int(raw.strip())
    except ValueError:
        return default


class Config:
    # ------------------------------------------------------------------
    # Degree guard
    #
    # Every command refuses degrees above MAX_DEGREE.  The cost of the
    # construction grows quickly with the degree (the number of monomials
    # times 2^m blades), so the guard keeps accidental requests at desk
    # scale.  Override with MBASIS_MAX_DEGREE.
    MAX_DEGREE = _env_int('MBASIS_MAX_DEGREE', 8)

    # Bounds for the exact nullspace oracle (dims, gen --oracle).
    ORACLE_MAX_DIM_MONOGENIC = _env_int('MBASIS_ORACLE_MAX_DIM_MONOGENIC', 5)
    ORACLE_MAX_DIM_HARMONIC = _env_int('MBASIS_ORACLE_MAX_DIM_HARMONIC', 6)

    # Default worker count for the label fan-out of the recursion.
    JOBS = max(1, _env_int('MBASIS_JOBS', 1))

    # ------------------------------------------------------------------
    # Basis cache
    #
    # Generated bases can be stored in a small SQLite database, keyed by
    # (mode, m, n, chain).  A relative SQLite path is resolved by
    # Flask-SQLAlchemy inside the ``instance`` folder, so the default lands in
    # ``instance/mbasis.db``.  The cache is only touched when ``gen --cache``
    # is used.  Point MBASIS_CACHE_URL at any SQLAlchemy URL to use a
    # different database.
    CACHE_URL = os.environ.get('MBASIS_CACHE_URL') or 'sqlite:///mbasis.db'
    SQLALCHEMY_TRACK_MODIFICATIONS = False

    LOG_LEVEL = os.environ.get('MBASIS_LOG_LEVEL', 'WARNING').upper()
