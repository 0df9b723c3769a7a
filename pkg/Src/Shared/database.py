"""
Run-history database connection and session management using SQLAlchemy.
"""
import logging
import os
from contextlib import contextmanager
from typing import Generator, Optional

from sqlalchemy import create_engine, text
from sqlalchemy.orm import Session, sessionmaker

from .utils import get_project_root

logger = logging.getLogger("workbench.shared.database")

_DEFAULT_URL = f"sqlite:///{get_project_root() / 'workbench_history.db'}"

_engine = None
_SessionLocal = None
_engine_url: Optional[str] = None


def get_database_url() -> str:
    """Return the configured history database URL."""
    return os.getenv("WORKBENCH_DATABASE_URL", _DEFAULT_URL)


def get_engine():
    """Get or create the database engine (recreated if the URL changed)."""
    global _engine, _SessionLocal, _engine_url
    url = get_database_url()
    if _engine is None or url != _engine_url:
        if _engine is not None:
            _engine.dispose()
        _engine = create_engine(url, pool_pre_ping=True, echo=False)
        _SessionLocal = None
        _engine_url = url
        logger.info(f"History database engine created for {url.split('@')[-1]}")
    return _engine


def get_session_factory():
    """Get or create the session factory."""
    global _SessionLocal
    engine = get_engine()
    if _SessionLocal is None:
        _SessionLocal = sessionmaker(
            autocommit=False,
            autoflush=False,
            bind=engine,
        )
    return _SessionLocal


@contextmanager
def get_db_session() -> Generator[Session, None, None]:
    """
    Context manager for database sessions.

    Usage:
        with get_db_session() as session:
            # Use session
            session.commit()
    """
    session_factory = get_session_factory()
    session = session_factory()
    try:
        yield session
        session.commit()
    except Exception:
        session.rollback()
        raise
    finally:
        session.close()


def init_database():
    """
    Initialize database tables.

    Creates tables if they don't exist.
    """
    from .models import Base

    engine = get_engine()
    Base.metadata.create_all(bind=engine)
    logger.info("History database tables initialized")


def check_database_connection() -> bool:
    """
    Check if database connection is working.

    Returns:
        True if connection successful, False otherwise
    """
    try:
        engine = get_engine()
        with engine.connect() as conn:
            conn.execute(text("SELECT 1"))
        return True
    except Exception as e:
        logger.error(f"Database connection check failed: {e}")
        return False
