"""lambda command - Sum of absolute linking numbers"""
from algebra.invariants import lambda_of, linking_matrix_of
from services.link_loader import LinkLoader
from utils.output import emit, format_matrix


def cmd_lambda(args) -> int:
    """Print Lambda and the linking matrix"""
    link = LinkLoader.from_file(args.link_file)
    matrix = linking_matrix_of(link)
    value = lambda_of(link)
    emit(
        {"components": link.components, "lambda": value, "linking_matrix": matrix},
        f"lambda: {value}\n{format_matrix(matrix)}",
    )
    return 0
