"""
SQLAlchemy models for the run-history database.
"""
from sqlalchemy import Column, Float, ForeignKey, Integer, String, Text, TIMESTAMP, Boolean, Index
from sqlalchemy.orm import declarative_base, relationship
from sqlalchemy.sql import func

Base = declarative_base()


class RunRecord(Base):
    """
    One CLI run: what was asked, what came out, what it cost.
    """
    __tablename__ = "run_records"

    id = Column(Integer, primary_key=True, autoincrement=True)

    command = Column(Text, nullable=False)  # full argv echo
    subcommand = Column(String(64), nullable=False, index=True)  # e.g. "solve qsat"
    answer = Column(String(64), nullable=False)  # "yes", "no", "kernel", ...
    seed = Column(Integer, nullable=True)
    backend = Column(String(16), nullable=False, default="builtin")

    wall_time_seconds = Column(Float, nullable=False)
    memory_mb = Column(Float, nullable=True)  # resident set size at end of run

    created_at = Column(TIMESTAMP, nullable=False, server_default=func.now())

    queries = relationship("OracleQueryRecord", back_populates="run", cascade="all, delete-orphan")

    def __repr__(self):
        return f"<RunRecord(id={self.id}, subcommand={self.subcommand}, answer={self.answer})>"


class OracleQueryRecord(Base):
    """
    One ledger entry of a recorded run.
    """
    __tablename__ = "oracle_queries"

    id = Column(Integer, primary_key=True, autoincrement=True)
    run_id = Column(Integer, ForeignKey("run_records.id"), nullable=False, index=True)

    position = Column(Integer, nullable=False)  # order within the run
    phase = Column(String(64), nullable=False)
    variable_count = Column(Integer, nullable=False)
    clause_count = Column(Integer, nullable=False)
    satisfiable = Column(Boolean, nullable=False)

    run = relationship("RunRecord", back_populates="queries")

    __table_args__ = (
        Index("idx_oracle_queries_phase", "phase"),
    )

    def __repr__(self):
        return f"<OracleQueryRecord(run={self.run_id}, phase={self.phase}, sat={self.satisfiable})>"
