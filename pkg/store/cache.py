"""Save and load census results so repeated verification runs skip the sieve."""

import logging
from typing import Optional

from sqlalchemy.orm import Session

from census.table import CensusTable
from groups.partitions import Partition
from store.models import CensusCount, CensusRun, RunKind

logger = logging.getLogger(__name__)


def _find_run(session: Session, kind: RunKind, q: int, x: int) -> Optional[CensusRun]:
    return (
        session.query(CensusRun)
        .filter(CensusRun.kind == kind, CensusRun.q == q, CensusRun.x == x)
        .first()
    )


def _replace_run(session: Session, kind: RunKind, q: int, x: int, total: int) -> CensusRun:
    existing = _find_run(session, kind, q, x)
    if existing is not None:
        session.delete(existing)
        session.flush()
    run = CensusRun(kind=kind, q=q, x=x, total=total)
    session.add(run)
    return run


def save_table(session: Session, table: CensusTable) -> None:
    run = _replace_run(session, RunKind.SYLOW, table.q, table.x, table.total)
    run.counts = [
        CensusCount(k=k, signature=str(signature), count=count)
        for k, signature, count in table.rows()
    ]
    session.commit()
    logger.debug(f"[store] cached census q={table.q} x={table.x} ({len(run.counts)} keys)")


def load_table(session: Session, q: int, x: int) -> Optional[CensusTable]:
    run = _find_run(session, RunKind.SYLOW, q, x)
    if run is None:
        return None
    counts = {(row.k, Partition.parse(row.signature)): row.count for row in run.counts}
    logger.debug(f"[store] cache hit for census q={q} x={x}")
    return CensusTable(q=q, x=x, counts=counts)


def save_mnc(session: Session, x: int, count: int) -> None:
    _replace_run(session, RunKind.MNC, 0, x, count)
    session.commit()


def load_mnc(session: Session, x: int) -> Optional[int]:
    run = _find_run(session, RunKind.MNC, 0, x)
    return None if run is None else run.total
