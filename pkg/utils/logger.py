"""日志配置"""
import logging
import sys

from core.config import LOG_LEVEL_CONSOLE, LOG_LEVEL_FILE, DATA_DIR

_console_handlers: list[logging.Handler] = []
_console_level = LOG_LEVEL_CONSOLE


def get_logger(name: str) -> logging.Logger:
    """获取配置好的 logger"""
    logger = logging.getLogger(f"nhcalc.{name}")

    if not logger.handlers:
        # 输出到标准错误, 标准输出留给计算结果
        console_handler = logging.StreamHandler(sys.stderr)
        console_handler.setLevel(_console_level)

        formatter = logging.Formatter(
            "[%(asctime)s] [%(name)s] %(levelname)s: %(message)s",
            datefmt="%Y-%m-%d %H:%M:%S"
        )
        console_handler.setFormatter(formatter)
        logger.addHandler(console_handler)
        _console_handlers.append(console_handler)

        # 日志文件放在数据目录下; 目录不可写时只保留控制台输出
        try:
            log_dir = DATA_DIR / "logs"
            log_dir.mkdir(parents=True, exist_ok=True)
            file_handler = logging.FileHandler(log_dir / f"{name}.log", encoding="utf-8")
            file_handler.setLevel(LOG_LEVEL_FILE)
            file_handler.setFormatter(formatter)
            logger.addHandler(file_handler)
        except OSError:
            pass

        logger.setLevel(logging.DEBUG)  # 设置为最低级别，具体输出由处理器控制
        logger.propagate = False

    return logger


def set_console_level(level: int):
    """调整所有控制台处理器的级别 (--verbose)"""
    global _console_level
    _console_level = level
    for handler in _console_handlers:
        handler.setLevel(level)
