"""
数据库 ORM 模型

Hall 基缓存, 使用 SQLAlchemy 定义
"""
from datetime import datetime
from pathlib import Path
from typing import Optional
import uuid
import shortuuid

from sqlalchemy import Engine, create_engine, String, Integer, Boolean, Text, DateTime
from sqlalchemy.orm import DeclarativeBase, Mapped, mapped_column, Session, sessionmaker

from core.config import get_config


# ============ Base ============

def generate_uuid():
    """生成短 UUID"""
    return str(shortuuid.encode(uuid.uuid4()))


class Base(DeclarativeBase):
    """ORM 基类，统一提供创建/更新时间戳"""
    created_at: Mapped[datetime] = mapped_column(DateTime, default=datetime.now, index=True)
    updated_at: Mapped[Optional[datetime]] = mapped_column(DateTime, onupdate=datetime.now)


# ============ Hall 基缓存模型 ============

class HallBasisModel(Base):
    """Hall 基缓存表, 以参数的内容哈希为键"""
    __tablename__ = "hall_bases"

    entry_id: Mapped[str] = mapped_column(String(36), primary_key=True, default=generate_uuid)
    params_hash: Mapped[str] = mapped_column(String(64), unique=True, nullable=False, index=True)
    rank: Mapped[int] = mapped_column(Integer, nullable=False)
    max_weight: Mapped[int] = mapped_column(Integer, nullable=False)
    nonrepeating: Mapped[bool] = mapped_column(Boolean, default=False)
    payload: Mapped[str] = mapped_column(Text, nullable=False)  # JSON: [{"bracket", "weight"}, ...]

    def to_dict(self) -> dict:
        return {
            "entry_id": self.entry_id,
            "params_hash": self.params_hash,
            "rank": self.rank,
            "max_weight": self.max_weight,
            "nonrepeating": self.nonrepeating,
            "created_at": self.created_at.isoformat() if self.created_at else None,
        }


# ============ 数据库引擎管理 ============

_engines: dict[Path, Engine] = {}
_sessionmakers: dict[Path, sessionmaker] = {}


def _resolve(db_path: Optional[Path]) -> Path:
    return Path(db_path) if db_path is not None else get_config().cache_db_path


def get_cache_engine(db_path: Optional[Path] = None) -> Engine:
    """获取缓存数据库引擎, 默认路径取自当前配置; 每个路径只创建一次"""
    path = _resolve(db_path)
    engine = _engines.get(path)
    if engine is None:
        path.parent.mkdir(parents=True, exist_ok=True)
        engine = create_engine(f"sqlite:///{path}", echo=False)
        _engines[path] = engine
    return engine


def init_cache_db(db_path: Optional[Path] = None) -> Engine:
    """初始化缓存数据库 (建表只在首次打开该路径时执行)"""
    path = _resolve(db_path)
    engine = get_cache_engine(path)
    if path not in _sessionmakers:
        HallBasisModel.__table__.create(engine, checkfirst=True)
        _sessionmakers[path] = sessionmaker(bind=engine)
    return engine


def get_cache_session(db_path: Optional[Path] = None) -> Session:
    """获取缓存数据库会话"""
    path = _resolve(db_path)
    init_cache_db(path)
    return _sessionmakers[path]()
