"""Shared test fixtures."""

import sys
from pathlib import Path

# Add project root to path
sys.path.insert(0, str(Path(__file__).resolve().parent.parent))

import pytest
from sqlalchemy import create_engine
from sqlalchemy.orm import sessionmaker

import store.models  # noqa: F401
from census.census import census_sylow
from census.squarefree import squarefree_sieve
from census.table import CensusConfig
from store.base import Base


@pytest.fixture
def db_session():
    """Create an in-memory SQLite database for testing."""
    engine = create_engine("sqlite:///:memory:", echo=False)
    Base.metadata.create_all(engine)
    Session = sessionmaker(bind=engine)
    session = Session()
    try:
        yield session
    finally:
        session.close()
        Base.metadata.drop_all(engine)


@pytest.fixture(scope="session")
def sqfree_table():
    """Squarefree bitmap large enough for the fast constant checks."""
    return squarefree_sieve(200_000)


@pytest.fixture
def census_q3_x10():
    return census_sylow(CensusConfig(x=10, q=3, segment_size=4))


@pytest.fixture(scope="session")
def census_q3_x5000():
    return census_sylow(CensusConfig(x=5000, q=3, segment_size=777))


@pytest.fixture
def out_dir(tmp_path):
    path = tmp_path / "out"
    path.mkdir()
    return path


@pytest.fixture
def small_cutoffs(monkeypatch):
    """Keep Euler-product cutoffs small so main terms evaluate quickly."""
    from config.settings import get_settings

    settings = get_settings()
    monkeypatch.setattr(settings, "euler_cutoff", 10**4)
    monkeypatch.setattr(settings, "xi_cutoff", 10**5)
    monkeypatch.setattr(settings, "a_cutoff", 10**5)
    return settings
