"""Tests for the SQLAlchemy census cache."""

from census.census import census_sylow
from census.table import CensusConfig
from store.base import cache_session
from store.cache import load_mnc, load_table, save_mnc, save_table
from store.models import CensusCount, CensusRun, RunKind


class TestCensusCache:
    def test_table_round_trip(self, db_session):
        table = census_sylow(CensusConfig(x=3000, q=5))
        save_table(db_session, table)

        loaded = load_table(db_session, 5, 3000)
        assert loaded is not None
        assert loaded.counts == table.counts
        assert loaded.q == 5 and loaded.x == 3000

    def test_missing_entries(self, db_session):
        assert load_table(db_session, 3, 10) is None
        assert load_mnc(db_session, 10) is None

    def test_save_replaces_previous_run(self, db_session, census_q3_x10):
        save_table(db_session, census_q3_x10)
        save_table(db_session, census_q3_x10)

        assert db_session.query(CensusRun).count() == 1
        assert db_session.query(CensusCount).count() == len(census_q3_x10.counts)

    def test_run_metadata(self, db_session, census_q3_x10):
        save_table(db_session, census_q3_x10)
        run = db_session.query(CensusRun).one()
        assert run.kind == RunKind.SYLOW
        assert run.total == 10
        assert run.created_at is not None
        assert {row.signature for row in run.counts} == {"[]", "[1]"}

    def test_mnc_round_trip(self, db_session):
        save_mnc(db_session, 16, 11)
        save_mnc(db_session, 10, 8)
        assert load_mnc(db_session, 16) == 11
        assert load_mnc(db_session, 10) == 8
        assert load_table(db_session, 0, 16) is None

    def test_delete_cascade(self, db_session, census_q3_x10):
        save_table(db_session, census_q3_x10)
        db_session.delete(db_session.query(CensusRun).one())
        db_session.commit()
        assert db_session.query(CensusCount).count() == 0


def test_cache_session_persists_between_sessions(tmp_path, census_q3_x10):
    url = f"sqlite:///{tmp_path / 'cache.db'}"
    with cache_session(url) as session:
        save_table(session, census_q3_x10)
        save_mnc(session, 16, 11)
    with cache_session(url) as session:
        assert load_table(session, 3, 10).counts == census_q3_x10.counts
        assert load_mnc(session, 16) == 11
