"""znumber command - Trivializing number of a word"""
from algebra.free_words import parse_word
from algebra.trivializing import z_number
from utils.output import emit


def cmd_znumber(args) -> int:
    word = parse_word(args.word)
    result = z_number(word)
    emit({"word": str(word), **result.to_json(), "method": "interval-dp"}, str(result.value))
    return 0
