"""rz-upper command - Upper bound on the reduced trivializing number"""
from algebra.free_words import parse_word
from algebra.hall import decompose, format_commutator
from algebra.trivializing import rz_upper
from utils.output import emit


def cmd_rz_upper(args) -> int:
    word = parse_word(args.word)
    bound = rz_upper(word, args.rank)
    factors = [
        {"bracket": format_commutator(c), "exponent": a}
        for c, a in decompose(word, args.rank) if a
    ]
    data = {"word": str(word), "rank": args.rank, **bound.to_json(), "factors": factors}
    text = "\n".join(
        [f"upper: {bound.upper} ({bound.method})", f"witness: {bound.witness}"]
        + [f"  {f['bracket']}^{f['exponent']}" for f in factors]
    )
    emit(data, text)
    return 0
