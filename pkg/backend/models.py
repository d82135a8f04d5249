from sqlalchemy import create_engine, Column, Integer, String, Boolean, DateTime, Float, Text, UniqueConstraint, inspect, text
from sqlalchemy.ext.declarative import declarative_base
from sqlalchemy.orm import sessionmaker
from sqlalchemy.pool import StaticPool
from datetime import datetime
import os
import sys
import json

sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from hilbquant.config import DATABASE_URL
from hilbquant.logger import get_logger

logger = get_logger(__name__)

# Database setup
if DATABASE_URL in ('sqlite://', 'sqlite:///:memory:'):
    # one shared connection, otherwise every session sees an empty database
    engine = create_engine(DATABASE_URL, echo=False, connect_args={'check_same_thread': False}, poolclass=StaticPool)
else:
    engine = create_engine(DATABASE_URL, echo=False)
SessionLocal = sessionmaker(autocommit=False, autoflush=False, bind=engine)
Base = declarative_base()


# Models
class OperatorRecord(Base):
    """Serialized divisor operator, keyed by grade, surface, divisor and label basis."""

    __tablename__ = 'operator_records'
    __table_args__ = (UniqueConstraint('m', 'n', 'divisor', 'labels', 'output_format', name='uq_operator_key'),)

    id = Column(Integer, primary_key=True, autoincrement=True)
    m = Column(Integer, nullable=False)
    n = Column(Integer, nullable=False)
    divisor = Column(String(32), nullable=False)
    labels = Column(String(16), nullable=False, default='e')
    output_format = Column(String(16), nullable=False, default='json')
    payload = Column(Text, nullable=False)
    created_at = Column(DateTime, default=datetime.utcnow)

    def to_dict(self):
        return {
            'id': self.id,
            'm': self.m,
            'n': self.n,
            'divisor': self.divisor,
            'labels': self.labels,
            'format': self.output_format,
            'payload': self.payload,
            'created_at': self.created_at.isoformat() if self.created_at else None,
        }


class VerificationRun(Base):
    __tablename__ = 'verification_runs'

    id = Column(Integer, primary_key=True, autoincrement=True)
    suite = Column(String(64), nullable=False, index=True)
    parameters_json = Column(Text)
    passed = Column(Boolean, default=False)
    # JSON-encoded first failing case, if any
    counterexample_json = Column(Text)
    counts_json = Column(Text)
    seconds = Column(Float)
    created_at = Column(DateTime, default=datetime.utcnow)

    def to_dict(self):
        def load(raw):
            try:
                return json.loads(raw) if raw else None
            except ValueError:
                return None

        return {
            'id': self.id,
            'suite': self.suite,
            'parameters': load(self.parameters_json) or {},
            'passed': self.passed,
            'counterexample': load(self.counterexample_json),
            'counts': load(self.counts_json),
            'seconds': self.seconds,
            'created_at': self.created_at.isoformat() if self.created_at else None,
        }


# Create all tables
def init_db():
    """Initialize database tables"""
    Base.metadata.create_all(bind=engine)

    # Lightweight migration for columns added after the first release
    inspector = inspect(engine)
    run_columns = {col['name'] for col in inspector.get_columns('verification_runs')}
    with engine.begin() as conn:
        if 'counts_json' not in run_columns:
            conn.execute(text('ALTER TABLE verification_runs ADD COLUMN counts_json TEXT'))
        if 'seconds' not in run_columns:
            conn.execute(text('ALTER TABLE verification_runs ADD COLUMN seconds FLOAT'))

    logger.info('database initialized at %s', engine.url)


# Database session dependency
def get_db():
    """Get database session"""
    db = SessionLocal()
    try:
        yield db
    finally:
        db.close()


if __name__ == '__main__':
    init_db()
