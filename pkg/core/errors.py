"""错误类型"""
from typing import Optional


class NhcalcError(Exception):
    """所有输入/计算错误的基类 (CLI 退出码 1)"""


class ConfigError(NhcalcError):
    """配置无效"""


class ParseError(NhcalcError):
    """文本解析错误, 带行列位置 (1-based)"""

    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None):
        self.line = line
        self.column = column
        self.reason = message
        where = ""
        if line is not None and column is not None:
            where = f" (line {line}, column {column})"
        elif column is not None:
            where = f" (column {column})"
        super().__init__(f"{message}{where}")


class WordSyntaxError(ParseError):
    """自由群词语法错误"""


class BraidSyntaxError(ParseError):
    """纯辫子词语法错误"""


class HLSyntaxError(ParseError):
    """Habegger-Lin 正规形文件语法错误"""


class MatrixSyntaxError(ParseError):
    """矩阵文件语法错误"""


class CommutatorSyntaxError(ParseError):
    """换位子括号文本语法错误"""


class RankError(NhcalcError):
    """生成元下标超出秩, 秩不匹配, 或秩超过上限"""


class StrandError(NhcalcError):
    """辫子股数不匹配或股下标越界"""


class ComponentCountError(NhcalcError):
    """分支数不符合运算要求"""


class OracleLimitError(NhcalcError):
    """暴力枚举超出长度上限"""


class SeifertShapeError(NhcalcError):
    """Seifert 矩阵形状无效"""


class InternalInvariantError(NhcalcError):
    """内部不变量被破坏 (实现错误信号, CLI 退出码 2)"""


class DecompositionError(InternalInvariantError):
    """基本换位子分解失败"""


class CombingError(InternalInvariantError):
    """梳理时无法提取共轭元"""
