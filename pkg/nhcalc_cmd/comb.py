"""comb command - Habegger-Lin normal form of a pure braid"""
from algebra.braids import comb, format_hl
from services.link_loader import LinkLoader
from utils.output import emit


def cmd_comb(args) -> int:
    """Print the combed form; the text output is itself a valid HL file"""
    braid = LinkLoader.braid_from_file(args.braid_file)
    hl = comb(braid)
    data = {
        "hl": {
            "components": hl.components,
            "gammas": {str(k): str(hl.gamma(k)) for k in range(2, hl.components + 1)},
        }
    }
    emit(data, format_hl(hl).rstrip("\n"))
    return 0
