"""Hall Cache Service - Hall 基磁盘缓存"""
import hashlib
import json
from typing import Optional

from sqlalchemy.exc import IntegrityError, SQLAlchemyError
from sqlalchemy.orm import Session

from algebra.hall import (
    HALL_ORDERING,
    HallBasis,
    generate,
    has_repeated_index,
    parse_commutator,
    use_basis_provider,
    witt,
)
from core.config import HALL_CACHE_MAX_RANK, HALL_CACHE_MAX_WEIGHT, get_config
from core.database import HallBasisModel, get_cache_session
from core.errors import CommutatorSyntaxError
from utils.logger import get_logger

logger = get_logger("hall_cache_service")

# 已解码的基, 键为 (数据库路径, rank, wmax, nonrepeating)
_decoded: dict[tuple, HallBasis] = {}


class HallCacheService:
    """Hall 基缓存服务"""

    @staticmethod
    def params_hash(n: int, wmax: int, nonrepeating: bool) -> str:
        """生成参数的内容哈希 (缓存键)"""
        params = {
            "rank": n,
            "max_weight": wmax,
            "nonrepeating": bool(nonrepeating),
            "ordering": HALL_ORDERING,
        }
        return hashlib.sha256(json.dumps(params, sort_keys=True).encode()).hexdigest()

    @staticmethod
    def is_cacheable(n: int, wmax: int) -> bool:
        return n <= HALL_CACHE_MAX_RANK and wmax <= HALL_CACHE_MAX_WEIGHT

    @staticmethod
    def decode(entry: HallBasisModel) -> Optional[HallBasis]:
        """
        从缓存记录恢复 Hall 基

        重新解析括号并核对权重与个数, 不一致时返回 None
        """
        try:
            items = json.loads(entry.payload)
            elements = []
            for item in items:
                c = parse_commutator(item["bracket"])
                if c.weight != item["weight"]:
                    return None
                elements.append(c)
        except (json.JSONDecodeError, KeyError, TypeError, CommutatorSyntaxError) as e:
            logger.warning(f"缓存记录 {entry.entry_id} 无法解析: {e}")
            return None

        counts: dict[int, int] = {}
        for c in elements:
            counts[c.weight] = counts.get(c.weight, 0) + 1
        if not entry.nonrepeating:
            for w in range(1, entry.max_weight + 1):
                if counts.get(w, 0) != witt(entry.rank, w):
                    return None
        elif any(has_repeated_index(c) for c in elements):
            return None

        return HallBasis(
            rank=entry.rank,
            max_weight=entry.max_weight,
            nonrepeating=entry.nonrepeating,
            elements=tuple(elements),
        )

    @staticmethod
    def lookup(session: Session, n: int, wmax: int, nonrepeating: bool) -> Optional[HallBasis]:
        """查询缓存; 校验失败的记录会被删除"""
        key = HallCacheService.params_hash(n, wmax, nonrepeating)
        entry = session.query(HallBasisModel).filter_by(params_hash=key).first()
        if entry is None:
            return None
        basis = HallCacheService.decode(entry)
        if basis is None:
            logger.warning(f"缓存记录 {entry.entry_id} 校验失败, 已删除 (rank={n}, wmax={wmax})")
            session.delete(entry)
            session.commit()
        return basis

    @staticmethod
    def store(session: Session, basis: HallBasis) -> Optional[HallBasisModel]:
        """
        写入缓存

        并发写入同一参数时唯一约束冲突, 回滚后返回 None (调用方直接使用新生成的基)
        """
        entry = HallBasisModel(
            params_hash=HallCacheService.params_hash(basis.rank, basis.max_weight, basis.nonrepeating),
            rank=basis.rank,
            max_weight=basis.max_weight,
            nonrepeating=basis.nonrepeating,
            payload=json.dumps(basis.to_json()),
        )
        try:
            session.add(entry)
            session.commit()
        except IntegrityError:
            session.rollback()
            logger.info(f"缓存记录已由其他进程写入 (rank={basis.rank}, wmax={basis.max_weight})")
            return None
        logger.debug(f"缓存已写入: {entry.entry_id} (rank={basis.rank}, wmax={basis.max_weight})")
        return entry

    @staticmethod
    def get_or_generate(n: int, wmax: int, nonrepeating: bool = False) -> HallBasis:
        """读取缓存, 未命中时生成并写入"""
        config = get_config()
        if not config.use_cache or not HallCacheService.is_cacheable(n, wmax):
            return generate(n, wmax, nonrepeating)

        memo_key = (config.cache_db_path, n, wmax, bool(nonrepeating))
        basis = _decoded.get(memo_key)
        if basis is not None:
            return basis

        session = None
        try:
            session = get_cache_session(config.cache_db_path)
            basis = HallCacheService.lookup(session, n, wmax, nonrepeating)
            if basis is not None:
                logger.debug(f"缓存命中 (rank={n}, wmax={wmax}, nonrepeating={nonrepeating})")
            else:
                logger.debug(f"缓存未命中 (rank={n}, wmax={wmax}, nonrepeating={nonrepeating})")
                basis = generate(n, wmax, nonrepeating)
                HallCacheService.store(session, basis)
            _decoded[memo_key] = basis
            return basis
        except (SQLAlchemyError, OSError) as e:
            logger.warning(f"缓存不可用, 直接生成: {e}")
            return generate(n, wmax, nonrepeating)
        finally:
            if session is not None:
                session.close()

    @staticmethod
    def clear() -> int:
        """清空缓存, 返回删除的记录数"""
        _decoded.clear()
        session = get_cache_session(get_config().cache_db_path)
        try:
            count = session.query(HallBasisModel).delete()
            session.commit()
            return count
        finally:
            session.close()

    @staticmethod
    def install():
        """让 algebra.hall.get_basis 经过缓存"""
        use_basis_provider(HallCacheService.get_or_generate)

    @staticmethod
    def uninstall():
        use_basis_provider(None)
