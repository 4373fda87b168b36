"""mu123 command - Triple linking number of a 3-component link"""
from algebra.invariants import lambda_of, mu123
from services.link_loader import LinkLoader
from utils.output import emit


def cmd_mu123(args) -> int:
    link = LinkLoader.from_file(args.link_file)
    value = mu123(link)
    linking_vanishes = lambda_of(link) == 0
    text = f"mu123: {value}"
    if not linking_vanishes:
        text += " (raw string-link coefficient: linking numbers do not vanish)"
    emit({"mu123": value, "linking_vanishes": linking_vanishes}, text)
    return 0
