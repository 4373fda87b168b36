"""配置常量与运行时配置"""
import os
import tomllib
from dataclasses import dataclass, field, replace
from logging import DEBUG, WARNING
from pathlib import Path
from typing import Optional

from core.errors import ConfigError

# ============ 日志配置 ============
LOG_LEVEL_CONSOLE = WARNING
LOG_LEVEL_FILE = DEBUG

# ============ 本地路径 ============
DATA_DIR = Path(os.environ.get("NHCALC_HOME", Path.home() / ".nhcalc"))
CACHE_DB_NAME = "hall_cache.db"
CACHE_DB_PATH = DATA_DIR / CACHE_DB_NAME

# ============ 计算规模限制 ============
RANK_CAP = 12                # 约化 Magnus 展开的默认秩上限
RANK_HARD_LIMIT = 12         # 超过此值需显式 --allow-large-rank
HALL_CACHE_MAX_RANK = 6
HALL_CACHE_MAX_WEIGHT = 6
Z_ORACLE_MAX_LEN = 14        # 暴力删除枚举的最大词长

# ============ RZ 搜索 ============
SEARCH_BUDGET = 2000
SEARCH_MAX_LEN = 20
SEARCH_SEED = 0

# ============ 批处理 ============
BATCH_WORKERS = 4


@dataclass(frozen=True)
class Config:
    """运行时配置 (CLI 参数覆盖配置文件, 配置文件覆盖默认值)"""
    rank_cap: int = RANK_CAP
    search_budget: int = SEARCH_BUDGET
    search_max_len: int = SEARCH_MAX_LEN
    cache_dir: Path = field(default_factory=lambda: DATA_DIR)
    output_mode: str = "text"
    seed: int = SEARCH_SEED
    use_cache: bool = True
    allow_large_rank: bool = False

    def __post_init__(self):
        if self.output_mode not in ("text", "json"):
            raise ConfigError(f"output_mode must be 'text' or 'json', got {self.output_mode!r}")
        if self.rank_cap < 1:
            raise ConfigError(f"rank_cap must be positive, got {self.rank_cap}")
        if self.rank_cap > RANK_HARD_LIMIT and not self.allow_large_rank:
            raise ConfigError(
                f"rank_cap {self.rank_cap} exceeds the hard limit {RANK_HARD_LIMIT}; "
                "pass --allow-large-rank to override"
            )
        if self.search_budget < 0:
            raise ConfigError(f"search_budget must be non-negative, got {self.search_budget}")
        if not 0 <= self.search_max_len <= SEARCH_MAX_LEN:
            raise ConfigError(f"search_max_len must lie in [0, {SEARCH_MAX_LEN}]")

    @property
    def cache_db_path(self) -> Path:
        return Path(self.cache_dir) / CACHE_DB_NAME

    def with_overrides(self, **overrides) -> "Config":
        """返回覆盖了非 None 字段的新配置"""
        changes = {k: v for k, v in overrides.items() if v is not None}
        return replace(self, **changes)


def load_config(path: Optional[str] = None) -> Config:
    """
    读取 TOML 配置文件

    Args:
        path: 配置文件路径, None 时返回默认配置

    Returns:
        Config
    """
    if path is None:
        return Config()

    try:
        with open(path, "rb") as f:
            data = tomllib.load(f)
    except FileNotFoundError:
        raise ConfigError(f"config file not found: {path}")
    except tomllib.TOMLDecodeError as e:
        raise ConfigError(f"failed to parse config {path}: {e}")

    limits = data.get("limits", {})
    search = data.get("search", {})
    cache = data.get("cache", {})
    output = data.get("output", {})

    cache_dir = cache.get("dir")
    return Config(
        rank_cap=limits.get("rank_cap", RANK_CAP),
        allow_large_rank=limits.get("allow_large_rank", False),
        search_budget=search.get("budget", SEARCH_BUDGET),
        search_max_len=search.get("max_len", SEARCH_MAX_LEN),
        seed=search.get("seed", SEARCH_SEED),
        cache_dir=Path(cache_dir).expanduser() if cache_dir else DATA_DIR,
        use_cache=cache.get("enabled", True),
        output_mode=output.get("mode", "text"),
    )


# ============ 进程级配置 ============
_current = Config()


def configure(config: Config) -> Config:
    """安装进程级配置"""
    global _current
    _current = config
    return _current


def get_config() -> Config:
    """获取进程级配置"""
    return _current
