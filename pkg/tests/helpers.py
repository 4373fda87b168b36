"""测试用随机输入"""
import random

from algebra.braids import PureBraidWord, braid_from_letters
from algebra.free_words import Word


def random_word(rng: random.Random, n: int, max_len: int) -> Word:
    length = rng.randint(0, max_len)
    return Word.from_ints([rng.choice([1, -1]) * rng.randint(1, n) for _ in range(length)])


def random_braid(rng: random.Random, n: int, max_len: int, min_len: int = 0) -> PureBraidWord:
    letters = []
    for _ in range(rng.randint(min_len, max_len)):
        i, j = sorted(rng.sample(range(1, n + 1), 2))
        letters.append((i, j, rng.choice([1, -1])))
    return braid_from_letters(n, letters)
