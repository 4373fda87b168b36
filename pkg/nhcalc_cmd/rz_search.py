"""rz-search command - Bounded search for a better RZ witness"""
from algebra.free_words import parse_word
from algebra.trivializing import rz_search
from utils.output import emit


def cmd_rz_search(args) -> int:
    word = parse_word(args.word)
    bound = rz_search(word, args.rank, max_len=args.max_len, budget=args.budget)
    data = {"word": str(word), "rank": args.rank, **bound.to_json()}
    emit(data, f"upper: {bound.upper} ({bound.method})\nwitness: {bound.witness}")
    return 0
