"""Cached census aggregates: one run row per (kind, q, x), one count row per key."""

import enum
import uuid
from datetime import datetime

from sqlalchemy import BigInteger, Column, DateTime, ForeignKey, Integer, String, UniqueConstraint
from sqlalchemy import Enum as SQLEnum
from sqlalchemy.orm import relationship

from store.base import Base


class RunKind(str, enum.Enum):
    SYLOW = "sylow"
    MNC = "mnc"


class CensusRun(Base):
    __tablename__ = "census_runs"
    __table_args__ = (UniqueConstraint("kind", "q", "x", name="uq_census_run"),)

    id = Column(String(36), primary_key=True, default=lambda: str(uuid.uuid4()))
    kind = Column(SQLEnum(RunKind), nullable=False)
    # 0 for runs that do not depend on q
    q = Column(Integer, nullable=False, default=0)
    x = Column(BigInteger, nullable=False)
    total = Column(BigInteger, nullable=False)
    created_at = Column(DateTime, default=datetime.utcnow)

    counts = relationship("CensusCount", back_populates="run", cascade="all, delete-orphan")


class CensusCount(Base):
    __tablename__ = "census_counts"

    id = Column(Integer, primary_key=True, autoincrement=True)
    run_id = Column(String(36), ForeignKey("census_runs.id"), nullable=False, index=True)
    k = Column(Integer, nullable=False)
    signature = Column(String(255), nullable=False)
    count = Column(BigInteger, nullable=False)

    run = relationship("CensusRun", back_populates="counts")
