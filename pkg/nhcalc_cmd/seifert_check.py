"""seifert-check command - Null-form pattern check of a Seifert matrix"""
from pathlib import Path

from algebra.seifert import is_null_form, parse_matrix, validate_intersection
from utils.logger import get_logger
from utils.output import emit

logger = get_logger("seifert_check")


def cmd_seifert_check(args) -> int:
    matrix = parse_matrix(Path(args.matrix_file).read_text(encoding="utf-8"))
    report = is_null_form(matrix)
    intersection = validate_intersection(matrix)
    if not intersection.ok:
        logger.warning(f"det(V - V^T) = {intersection.determinant}, not a genuine Seifert matrix")

    data = {"size": matrix.size, "genus": matrix.genus, **report.to_json(), **intersection.to_json()}
    lines = [f"null form: {'yes' if report.ok else 'no'}"]
    if report.diagnostic:
        lines.append(f"  {report.diagnostic}")
    lines.append(f"det(V - V^T) = {intersection.determinant}{'' if intersection.ok else '  (warning: not +-1)'}")
    emit(data, "\n".join(lines))
    return 0
