"""Batch Service - 批量计算 n_h"""
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from algebra.invariants import nh
from core.config import BATCH_WORKERS
from core.errors import InternalInvariantError, NhcalcError
from utils.logger import get_logger
from .link_loader import LinkLoader

logger = get_logger("batch_service")


@dataclass(frozen=True)
class BatchRecord:
    """一行输入对应的结果或错误"""
    line: int
    source: str
    result: Optional[dict] = None
    error: Optional[str] = None
    internal: bool = False

    @property
    def ok(self) -> bool:
        return self.error is None

    def to_json(self) -> dict:
        out = {"line": self.line, "input": self.source}
        if self.ok:
            out["result"] = self.result
        else:
            out["error"] = self.error
            if self.internal:
                out["internal"] = True
        return out


class BatchService:
    """批量计算服务, 每行独立, 失败不影响其他行"""

    @staticmethod
    def read_lines(text: str) -> list[tuple[int, str]]:
        """(行号, 内容), 跳过空行和 # 注释"""
        out = []
        for line_no, line in enumerate(text.splitlines(), start=1):
            stripped = line.strip()
            if stripped and not stripped.startswith("#"):
                out.append((line_no, stripped))
        return out

    @staticmethod
    def run_line(line_no: int, source: str, base_dir: Optional[Path] = None) -> BatchRecord:
        """计算单行"""
        try:
            link = LinkLoader.from_batch_line(source, base_dir)
            return BatchRecord(line_no, source, result=nh(link).to_json())
        except InternalInvariantError as e:
            logger.error(f"第 {line_no} 行内部错误: {e}")
            return BatchRecord(line_no, source, error=str(e), internal=True)
        except AssertionError as e:
            logger.error(f"第 {line_no} 行断言失败: {e}")
            return BatchRecord(line_no, source, error=f"assertion failed: {e}", internal=True)
        except (NhcalcError, OSError, ValueError) as e:
            logger.error(f"第 {line_no} 行失败: {e}")
            return BatchRecord(line_no, source, error=str(e))

    @staticmethod
    def run(
        lines: list[tuple[int, str]],
        workers: int = BATCH_WORKERS,
        base_dir: Optional[Path] = None,
    ) -> list[BatchRecord]:
        """并发计算, 结果按输入顺序返回"""
        if not lines:
            return []
        workers = max(1, min(workers, len(lines)))
        logger.info(f"批处理 {len(lines)} 行, {workers} 个线程")
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(lambda item: BatchService.run_line(item[0], item[1], base_dir), lines))

    @staticmethod
    def run_file(path: str, workers: int = BATCH_WORKERS) -> list[BatchRecord]:
        text = Path(path).read_text(encoding="utf-8")
        return BatchService.run(BatchService.read_lines(text), workers, Path(path).parent)
