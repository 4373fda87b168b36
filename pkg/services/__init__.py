"""Services layer - 缓存、批处理与输入解析"""

from .hall_cache_service import HallCacheService
from .link_loader import LinkLoader
from .batch_service import BatchService, BatchRecord

__all__ = [
    'HallCacheService',
    'LinkLoader',
    'BatchService',
    'BatchRecord',
]
