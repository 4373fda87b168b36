"""
Free group words over generators x1, ..., xn.

Words are stored exactly as given; reduction only happens through
free_reduce. The ambient rank is not part of a word: callers pass it to
the operations that need one.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Sequence

from core.errors import RankError, WordSyntaxError


@dataclass(frozen=True, order=True)
class Letter:
    """x_index^sign"""
    index: int
    sign: int = 1

    def __post_init__(self):
        if isinstance(self.index, bool) or not isinstance(self.index, int) or self.index < 1:
            raise ValueError(f"generator index must be a positive integer, got {self.index!r}")
        if self.sign not in (1, -1):
            raise ValueError(f"letter sign must be +1 or -1, got {self.sign!r}")

    def inverse(self) -> Letter:
        return Letter(self.index, -self.sign)

    def __str__(self) -> str:
        return f"x{self.index}" if self.sign == 1 else f"x{self.index}^-1"


@dataclass(frozen=True)
class Word:
    letters: tuple[Letter, ...] = ()

    def __post_init__(self):
        if not isinstance(self.letters, tuple):
            object.__setattr__(self, "letters", tuple(self.letters))
        for letter in self.letters:
            if not isinstance(letter, Letter):
                raise TypeError(f"Word letters must be Letter instances, got {letter!r}")

    @classmethod
    def from_ints(cls, ints: Iterable[int]) -> Word:
        """Build from signed integers: 2 -> x2, -2 -> x2^-1."""
        return cls(tuple(Letter(abs(i), 1 if i > 0 else -1) for i in ints))

    def to_ints(self) -> list[int]:
        return [letter.index * letter.sign for letter in self.letters]

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __getitem__(self, item):
        if isinstance(item, slice):
            return Word(self.letters[item])
        return self.letters[item]

    def __mul__(self, other: Word) -> Word:
        return concat(self, other)

    def __invert__(self) -> Word:
        return invert(self)

    def __pow__(self, a: int) -> Word:
        return power(self, a)

    def __str__(self) -> str:
        return format_word(self)

    def is_empty(self) -> bool:
        return not self.letters


EMPTY = Word()


def generator(i: int, sign: int = 1) -> Word:
    return Word((Letter(i, sign),))


def concat(u: Word, v: Word) -> Word:
    return Word(u.letters + v.letters)


def invert(w: Word) -> Word:
    return Word(tuple(letter.inverse() for letter in reversed(w.letters)))


def free_reduce(w: Word) -> Word:
    stack: list[Letter] = []
    for letter in w.letters:
        if stack and stack[-1].index == letter.index and stack[-1].sign == -letter.sign:
            stack.pop()
        else:
            stack.append(letter)
    return Word(tuple(stack))


def is_freely_trivial(w: Word) -> bool:
    return free_reduce(w).is_empty()


def commutator(u: Word, v: Word) -> Word:
    """[u, v] = u v u^-1 v^-1, unreduced."""
    return Word(u.letters + v.letters + invert(u).letters + invert(v).letters)


def power(w: Word, a: int) -> Word:
    if a == 0:
        return EMPTY
    base = w if a > 0 else invert(w)
    return Word(base.letters * abs(a))


def exponent_sum(w: Word, i: int) -> int:
    return sum(letter.sign for letter in w.letters if letter.index == i)


def max_index(w: Word) -> int:
    """Largest generator index used, 0 for the empty word."""
    return max((letter.index for letter in w.letters), default=0)


def check_rank(w: Word, n: int):
    """Raise RankError if w uses a generator beyond x_n."""
    top = max_index(w)
    if top > n:
        raise RankError(f"word uses x{top} but the rank is {n}")


def substitute(w: Word, images: Mapping[int, Word] | Sequence[Word]) -> Word:
    """
    Apply the homomorphism x_i -> images[i] letter by letter (unreduced).

    images may be a mapping keyed by generator index or a sequence indexed
    from 1 (images[0] stands for x1). Generators without an image are kept.
    """
    if isinstance(images, Mapping):
        lookup = images
    else:
        lookup = {i + 1: image for i, image in enumerate(images)}

    out: list[Letter] = []
    for letter in w.letters:
        image = lookup.get(letter.index)
        if image is None:
            out.append(letter)
        elif letter.sign == 1:
            out.extend(image.letters)
        else:
            out.extend(invert(image).letters)
    return Word(tuple(out))


def delete_positions(w: Word, positions: Iterable[int]) -> Word:
    drop = set(positions)
    return Word(tuple(letter for k, letter in enumerate(w.letters) if k not in drop))


# ============ text form ============

_TOKEN = re.compile(r"x(\d+)(?:\^(-?\d+))?$")


def parse_word(text: str, line: int | None = None) -> Word:
    """
    Parse "x1 x2^-1 x3" (whitespace separated); "e" or blank is the empty word.

    x<i>^<k> with any nonzero k is accepted as shorthand for |k| letters.
    """
    stripped = text.strip()
    if stripped in ("", "e"):
        return EMPTY

    letters: list[Letter] = []
    for match in re.finditer(r"\S+", text):
        token = match.group(0)
        column = match.start() + 1
        parsed = _TOKEN.match(token)
        if parsed is None:
            raise WordSyntaxError(f"invalid word token {token!r}", line=line, column=column)
        index = int(parsed.group(1))
        if index < 1:
            raise WordSyntaxError(f"generator index must be >= 1 in {token!r}", line=line, column=column)
        exponent = int(parsed.group(2)) if parsed.group(2) is not None else 1
        if exponent == 0:
            raise WordSyntaxError(f"zero exponent in {token!r}", line=line, column=column)
        sign = 1 if exponent > 0 else -1
        letters.extend([Letter(index, sign)] * abs(exponent))
    return Word(tuple(letters))


def format_word(w: Word) -> str:
    if w.is_empty():
        return "e"
    return " ".join(str(letter) for letter in w.letters)
