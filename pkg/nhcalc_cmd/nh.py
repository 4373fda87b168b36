"""nh command - Homotopy trivializing number of a link"""
from algebra.invariants import nh
from services.link_loader import LinkLoader
from utils.output import emit, format_nh


def cmd_nh(args) -> int:
    """Compute n_h (exact for <= 3 components, bounds otherwise)"""
    link = LinkLoader.from_file(args.link_file)
    result = nh(link).to_json()
    emit(result, format_nh(result))
    return 0
