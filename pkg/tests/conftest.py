"""测试配置: 数据目录指向临时目录, 每个测试后恢复默认配置"""
import os
import sys
import tempfile

# 必须在导入 core.config 之前设置
os.environ["NHCALC_HOME"] = tempfile.mkdtemp(prefix="nhcalc-test-")
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

import pytest

from core.config import Config, configure


@pytest.fixture(autouse=True)
def default_config():
    configure(Config())
    yield
    from services.hall_cache_service import HallCacheService
    HallCacheService.uninstall()
    configure(Config())
