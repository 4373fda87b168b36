"""Link Loader - 链环输入解析"""
import json
from pathlib import Path
from typing import Optional

from algebra.braids import HLNormalForm, PureBraidWord, braid_from_letters, parse_braid, parse_hl
from algebra.free_words import parse_word
from algebra.invariants import LinkInput
from core.errors import HLSyntaxError, ParseError
from utils.logger import get_logger

logger = get_logger("link_loader")


class LinkLoader:
    """
    链环输入解析服务

    支持的格式:
        strands:<n> A(i,j) ...               纯辫子
        components:<n> + gamma<k> = <word>   HL 正规形
        .json                                {"braid": ...} 或 {"hl": {...}}
    """

    @staticmethod
    def from_text(text: str) -> LinkInput:
        """按内容识别格式"""
        stripped = text.strip()
        if stripped.startswith("{"):
            try:
                data = json.loads(stripped)
            except json.JSONDecodeError as e:
                raise ParseError(f"invalid JSON link: {e.msg}", line=e.lineno, column=e.colno)
            return LinkLoader.from_json(data)
        if stripped.startswith("strands:"):
            return LinkInput.from_braid(parse_braid(text))
        if stripped.startswith("components:"):
            return LinkInput.from_hl(parse_hl(text))
        raise ParseError("unrecognized link format, expected 'strands:' or 'components:'", line=1, column=1)

    @staticmethod
    def from_file(path: str) -> LinkInput:
        text = Path(path).read_text(encoding="utf-8")
        logger.debug(f"读取链环文件: {path}")
        return LinkLoader.from_text(text)

    @staticmethod
    def braid_from_file(path: str) -> PureBraidWord:
        link = LinkLoader.from_file(path)
        if link.braid is None:
            raise ParseError(f"{path} holds an HL form, a braid is required", line=1, column=1)
        return link.braid

    @staticmethod
    def from_json(data) -> LinkInput:
        """
        {"braid": "strands:3 A(1,3)"} 或 {"braid": {"strands": 3, "letters": [[1, 3, 1]]}}
        {"hl": {"components": 3, "gammas": {"3": "x1 x2 x1^-1 x2^-1"}}}
        """
        if not isinstance(data, dict):
            raise ParseError("JSON link must be an object", line=1, column=1)
        if "braid" in data:
            braid = data["braid"]
            if isinstance(braid, str):
                return LinkInput.from_braid(parse_braid(braid))
            try:
                return LinkInput.from_braid(braid_from_letters(int(braid["strands"]), braid.get("letters", [])))
            except (KeyError, TypeError, ValueError) as e:
                raise ParseError(f"invalid JSON braid: {e}", line=1, column=1)
        if "hl" in data:
            hl = data["hl"]
            try:
                n = int(hl["components"])
                gammas = {int(k): parse_word(v) for k, v in hl.get("gammas", {}).items()}
            except (KeyError, TypeError, ValueError, AttributeError) as e:
                raise HLSyntaxError(f"invalid JSON HL form: {e}", line=1, column=1)
            for k, gamma in gammas.items():
                if gamma.letters and max(letter.index for letter in gamma.letters) >= k:
                    raise HLSyntaxError(f"gamma{k} may only use x1..x{k - 1}", line=1, column=1)
            return LinkInput.from_hl(HLNormalForm(n, gammas))
        raise ParseError("JSON link needs a 'braid' or 'hl' key", line=1, column=1)

    @staticmethod
    def from_batch_line(line: str, base_dir: Optional[Path] = None) -> LinkInput:
        """批处理行: 文件路径, 或内联记录 (HL 记录的各行用 ';' 分隔)"""
        record = line.strip()
        if record.startswith("strands:"):
            return LinkInput.from_braid(parse_braid(record))
        if record.startswith("components:"):
            return LinkInput.from_hl(parse_hl("\n".join(part.strip() for part in record.split(";"))))
        if record.startswith("{"):
            return LinkLoader.from_text(record)
        path = Path(record)
        if base_dir is not None and not path.is_absolute():
            path = Path(base_dir) / path
        return LinkLoader.from_file(str(path))
