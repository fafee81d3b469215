"""Optional SQLAlchemy cache of finished census runs."""

from store.base import Base, cache_session, get_engine, init_db
from store.models import CensusCount, CensusRun, RunKind

__all__ = [
    "Base",
    "cache_session",
    "get_engine",
    "init_db",
    "CensusCount",
    "CensusRun",
    "RunKind",
]
