"""SQLAlchemy engine and session factory for the census cache.

The engine is created on first use, so importing the package never touches
the database file.
"""

import logging
from contextlib import contextmanager
from functools import lru_cache
from typing import Iterator

from sqlalchemy import Engine, create_engine
from sqlalchemy.orm import DeclarativeBase, Session, sessionmaker

from config.settings import get_settings

logger = logging.getLogger(__name__)


class Base(DeclarativeBase):
    pass


@lru_cache(maxsize=None)
def get_engine(url: str) -> Engine:
    settings = get_settings()
    connect_args = {"check_same_thread": False} if url.startswith("sqlite") else {}
    logger.debug(f"[store] opening {url}")
    return create_engine(url, connect_args=connect_args, echo=settings.debug)


def init_db(engine: Engine | None = None) -> Engine:
    """Create the cache tables if they do not exist yet."""
    import store.models  # noqa: F401  registers the mapped classes

    engine = engine or get_engine(get_settings().database_url)
    Base.metadata.create_all(bind=engine)
    return engine


@contextmanager
def cache_session(url: str | None = None) -> Iterator[Session]:
    """A session on an initialized cache database, closed on exit."""
    engine = init_db(get_engine(url or get_settings().database_url))
    session = sessionmaker(autoflush=False, bind=engine)()
    try:
        yield session
    finally:
        session.close()
