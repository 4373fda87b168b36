"""输出格式 - 文本与 JSON"""
import json
import sys

from core.config import get_config


def to_json(data) -> str:
    """确定性 JSON (键排序, 紧凑分隔符), 相同输入得到逐字节相同的输出"""
    return json.dumps(data, sort_keys=True, ensure_ascii=False, separators=(",", ":"))


def json_mode() -> bool:
    return get_config().output_mode == "json"


def emit(data, text: str | None = None):
    """
    输出一个结果

    Args:
        data: JSON 模式下输出的对象
        text: 文本模式下输出的内容, None 时回退为 JSON
    """
    if json_mode() or text is None:
        print(to_json(data))
    else:
        print(text)


def emit_lines(items):
    """逐行输出 (批处理, 每行一个 JSON 对象)"""
    for item in items:
        print(to_json(item))
        sys.stdout.flush()


def print_error(message: str):
    print(f"ERROR: {message}", file=sys.stderr)


def format_matrix(matrix: list[list[int]]) -> str:
    width = max((len(str(x)) for row in matrix for x in row), default=1)
    return "\n".join(" ".join(str(x).rjust(width) for x in row) for row in matrix)


def format_nh(result: dict) -> str:
    """n_h 结果的文本形式"""
    nh = result["nh"]
    lines = [
        f"components: {result['components']}",
        f"lambda:     {result['lambda']}",
        f"parity:     {result['parity']}",
    ]
    if "mu123" in result:
        lines.append(f"mu123:      {result['mu123']}")
    if nh["exact"] is not None:
        lines.append(f"n_h:        {nh['exact']} (exact, n_d = n_h)")
    else:
        lines.append(f"n_h:        {nh['lower']} <= n_h <= {nh['upper']} (n_d = n_h)")
    for cert in result["certificates"]:
        lines.append(f"  [{cert['kind']}] {cert['detail']}")
    return "\n".join(lines)
