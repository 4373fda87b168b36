"""witt command - Number of basic commutators of a given weight"""
from algebra.hall import witt
from utils.output import emit


def cmd_witt(args) -> int:
    value = witt(args.rank, args.weight)
    emit({"rank": args.rank, "weight": args.weight, "witt": value}, str(value))
    return 0
