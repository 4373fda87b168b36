"""
Pure braids on n strands, their Artin action, and combing into
Habegger-Lin coordinates (gamma_2, ..., gamma_n).

A(i,j) is the positive full twist of strands i < j, expanded as
sigma_{j-1} ... sigma_{i+1} sigma_i^2 sigma_{i+1}^-1 ... sigma_{j-1}^-1.
Actions compose left to right: the action of b c sends y to phi_c(phi_b(y)).
Under this convention A(i,k) alone sends y_k to y_i y_k y_i^-1, so combing
it on k strands gives gamma_k = x_i.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Mapping

from algebra.free_words import (
    EMPTY,
    Letter,
    Word,
    check_rank,
    exponent_sum,
    free_reduce,
    generator,
    invert,
    parse_word,
    substitute,
)
from algebra.hall import decompose_expansion, product_word
from algebra.magnus import ReducedPolynomial, check_rank_cap, expand
from core.errors import BraidSyntaxError, CombingError, HLSyntaxError, ParseError, StrandError
from utils.logger import get_logger

logger = get_logger("braids")


@dataclass(frozen=True)
class BraidLetter:
    """A(i,j)^sign"""
    i: int
    j: int
    sign: int = 1

    def inverse(self) -> BraidLetter:
        return BraidLetter(self.i, self.j, -self.sign)

    def __str__(self) -> str:
        base = f"A({self.i},{self.j})"
        return base if self.sign == 1 else f"{base}^-1"


@dataclass(frozen=True)
class PureBraidWord:
    """A word in the A(i,j), read left to right."""
    strands: int
    letters: tuple[BraidLetter, ...] = ()

    def __post_init__(self):
        if self.strands < 1:
            raise StrandError(f"a braid needs at least one strand, got {self.strands}")
        letters = tuple(
            letter if isinstance(letter, BraidLetter) else BraidLetter(*letter)
            for letter in self.letters
        )
        for letter in letters:
            if not 1 <= letter.i < letter.j <= self.strands:
                raise StrandError(f"{letter} does not fit {self.strands} strands (need 1 <= i < j <= n)")
            if letter.sign not in (1, -1):
                raise StrandError(f"{letter} has sign {letter.sign}, expected +1 or -1")
        object.__setattr__(self, "letters", letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return format_braid(self)


def identity_braid(n: int) -> PureBraidWord:
    return PureBraidWord(n, ())


def braid_from_letters(n: int, letters: Iterable[tuple[int, int, int]]) -> PureBraidWord:
    return PureBraidWord(n, tuple(BraidLetter(i, j, s) for i, j, s in letters))


# ============ text form ============

_HEADER = re.compile(r"strands:(\d+)$")
_LETTER = re.compile(r"A\((\d+),(\d+)\)(\^-1)?$")


def _tokens(text: str) -> list[tuple[str, int, int]]:
    """(token, line, column), 1-based"""
    out = []
    for line_no, line in enumerate(text.splitlines(), start=1):
        for match in re.finditer(r"\S+", line):
            out.append((match.group(0), line_no, match.start() + 1))
    return out


def parse_braid(text: str) -> PureBraidWord:
    """
    strands:<n> followed by whitespace-separated A(i,j) or A(i,j)^-1
    tokens, 1 <= i < j <= n.
    """
    tokens = _tokens(text)
    if not tokens:
        raise BraidSyntaxError("empty braid text, expected 'strands:<n>'", line=1, column=1)

    head, line, column = tokens[0]
    header = _HEADER.match(head)
    if header is None:
        raise BraidSyntaxError(f"expected 'strands:<n>', got {head!r}", line=line, column=column)
    n = int(header.group(1))
    if n < 1:
        raise BraidSyntaxError("strand count must be >= 1", line=line, column=column)

    letters = []
    for token, line, column in tokens[1:]:
        match = _LETTER.match(token)
        if match is None:
            raise BraidSyntaxError(f"invalid braid token {token!r}", line=line, column=column)
        i, j = int(match.group(1)), int(match.group(2))
        if i >= j:
            raise BraidSyntaxError(f"{token} requires i < j", line=line, column=column)
        if i < 1 or j > n:
            raise BraidSyntaxError(f"{token} is out of range for {n} strands", line=line, column=column)
        letters.append(BraidLetter(i, j, -1 if match.group(3) else 1))
    return PureBraidWord(n, tuple(letters))


def format_braid(b: PureBraidWord) -> str:
    return " ".join([f"strands:{b.strands}"] + [str(letter) for letter in b.letters])


# ============ braid operations ============

def stack(b1: PureBraidWord, b2: PureBraidWord) -> PureBraidWord:
    if b1.strands != b2.strands:
        raise StrandError(f"cannot stack braids on {b1.strands} and {b2.strands} strands")
    return PureBraidWord(b1.strands, b1.letters + b2.letters)


def invert_braid(b: PureBraidWord) -> PureBraidWord:
    return PureBraidWord(b.strands, tuple(letter.inverse() for letter in reversed(b.letters)))


def braid_commutator(b1: PureBraidWord, b2: PureBraidWord) -> PureBraidWord:
    """b1 b2 b1^-1 b2^-1"""
    return stack(stack(b1, b2), stack(invert_braid(b1), invert_braid(b2)))


def delete_strand(b: PureBraidWord, k: int) -> PureBraidWord:
    if not 1 <= k <= b.strands:
        raise StrandError(f"strand {k} is out of range for {b.strands} strands")
    if b.strands == 1:
        raise StrandError("cannot delete the only strand")

    def shift(index: int) -> int:
        return index - 1 if index > k else index

    letters = tuple(
        BraidLetter(shift(letter.i), shift(letter.j), letter.sign)
        for letter in b.letters
        if k not in (letter.i, letter.j)
    )
    return PureBraidWord(b.strands - 1, letters)


def sub_braid(b: PureBraidWord, strands: Iterable[int]) -> PureBraidWord:
    """Keep the given strands (re-indexed in increasing order), delete the rest."""
    keep = set(strands)
    for k in keep:
        if not 1 <= k <= b.strands:
            raise StrandError(f"strand {k} is out of range for {b.strands} strands")
    if not keep:
        raise StrandError("a sub-braid needs at least one strand")
    out = b
    for k in sorted(set(range(1, b.strands + 1)) - keep, reverse=True):
        out = delete_strand(out, k)
    return out


def linking_matrix(b: PureBraidWord) -> list[list[int]]:
    n = b.strands
    matrix = [[0] * n for _ in range(n)]
    for letter in b.letters:
        matrix[letter.i - 1][letter.j - 1] += letter.sign
        matrix[letter.j - 1][letter.i - 1] += letter.sign
    return matrix


# ============ Artin action ============

@dataclass(frozen=True)
class ArtinAction:
    """images[k-1] is the image of y_k; words use Letter indices as y indices."""
    images: tuple[Word, ...]

    @property
    def strands(self) -> int:
        return len(self.images)

    def image(self, k: int) -> Word:
        return self.images[k - 1]

    def apply(self, w: Word) -> Word:
        return free_reduce(substitute(w, self.images))

    def then(self, other: ArtinAction) -> ArtinAction:
        """The action of b followed by c, for self = action(b), other = action(c)."""
        if self.strands != other.strands:
            raise StrandError(f"cannot compose actions on {self.strands} and {other.strands} strands")
        return ArtinAction(tuple(other.apply(image) for image in self.images))

    def is_identity(self) -> bool:
        return all(free_reduce(image) == generator(k) for k, image in enumerate(self.images, start=1))


def identity_action(n: int) -> ArtinAction:
    return ArtinAction(tuple(generator(k) for k in range(1, n + 1)))


def _sigma(n: int, i: int, sign: int) -> ArtinAction:
    """
    sigma_i:    y_i -> y_i y_{i+1} y_i^-1,  y_{i+1} -> y_i
    sigma_i^-1: y_i -> y_{i+1},             y_{i+1} -> y_{i+1}^-1 y_i y_{i+1}
    """
    images = [generator(k) for k in range(1, n + 1)]
    yi, yj = generator(i), generator(i + 1)
    if sign == 1:
        images[i - 1] = yi * yj * ~yi
        images[i] = yi
    else:
        images[i - 1] = yj
        images[i] = ~yj * yi * yj
    return ArtinAction(tuple(images))


@lru_cache(maxsize=1024)
def letter_action(n: int, i: int, j: int, sign: int) -> ArtinAction:
    """Action of A(i,j)^sign on the free group of rank n, via its sigma expansion."""
    if not 1 <= i < j <= n:
        raise StrandError(f"A({i},{j}) does not fit {n} strands")
    up = [(t, 1) for t in range(j - 1, i, -1)]
    down = [(t, -1) for t in range(i + 1, j)]
    sigmas = up + [(i, sign), (i, sign)] + down
    action = identity_action(n)
    for t, s in sigmas:
        action = action.then(_sigma(n, t, s))
    return action


def artin_action(b: PureBraidWord) -> ArtinAction:
    action = identity_action(b.strands)
    for letter in b.letters:
        action = action.then(letter_action(b.strands, letter.i, letter.j, letter.sign))
    return action


# ============ combing ============

@dataclass(frozen=True)
class HLNormalForm:
    """gammas[k] is gamma_k, a word over x_1..x_{k-1}; absent keys are trivial."""
    components: int
    gammas: Mapping[int, Word] = field(default_factory=dict)

    def __post_init__(self):
        if self.components < 1:
            raise StrandError(f"an HL form needs at least one component, got {self.components}")
        gammas = {}
        for k, gamma in dict(self.gammas).items():
            if not 2 <= k <= self.components:
                raise StrandError(f"gamma{k} does not fit {self.components} components")
            check_rank(gamma, k - 1)
            gammas[k] = gamma
        object.__setattr__(self, "gammas", {k: gammas.get(k, EMPTY) for k in range(2, self.components + 1)})

    def gamma(self, k: int) -> Word:
        if not 2 <= k <= self.components:
            raise StrandError(f"gamma{k} does not exist for {self.components} components")
        return self.gammas[k]

    def __eq__(self, other) -> bool:
        if not isinstance(other, HLNormalForm):
            return NotImplemented
        return self.components == other.components and dict(self.gammas) == dict(other.gammas)

    def __hash__(self) -> int:
        return hash((self.components, tuple(self.gammas.items())))


def gamma_from_conjugator(w: Word, k: int) -> Word:
    """y_i -> x_i for i < k, y_k -> e."""
    return free_reduce(substitute(w, {k: EMPTY}))


def extract_conjugator(image: Word, k: int) -> Word:
    """w with free_reduce(image) == w y_k w^-1, w reduced."""
    reduced = free_reduce(image)
    size = len(reduced)
    if size % 2 == 0:
        raise CombingError(f"image {reduced} of y{k} has even length, not a conjugate of y{k}")
    middle = size // 2
    if reduced[middle] != Letter(k, 1):
        raise CombingError(f"image {reduced} of y{k} is not centred on y{k}")
    prefix = reduced[:middle]
    if prefix != invert(reduced[middle + 1:]):
        raise CombingError(f"image {reduced} of y{k} is not of the form w y{k} w^-1")
    return prefix


def conjugator_gamma(b: PureBraidWord, k: int) -> Word:
    """gamma_k read off the free-group action of the sub-braid on strands 1..k."""
    if not 2 <= k <= b.strands:
        raise StrandError(f"strand {k} cannot be combed on {b.strands} strands")
    action = artin_action(sub_braid(b, range(1, k + 1)))
    return gamma_from_conjugator(extract_conjugator(action.image(k), k), k)


def comb_by_action(b: PureBraidWord) -> HLNormalForm:
    """
    Combing straight through the free-group action. Image lengths can grow
    exponentially with the braid length, so this is for short braids.
    """
    return HLNormalForm(b.strands, {k: conjugator_gamma(b, k) for k in range(2, b.strands + 1)})


def _image_expansion(
    w: Word,
    images: list[ReducedPolynomial],
    inverses: list[ReducedPolynomial],
    rank: int,
) -> ReducedPolynomial:
    out = ReducedPolynomial.one(rank)
    for letter in w.letters:
        out = out * (images[letter.index] if letter.sign == 1 else inverses[letter.index])
    return out


def gamma_expansion(b: PureBraidWord, k: int) -> ReducedPolynomial:
    """
    Reduced Magnus expansion (rank k-1) of gamma_k.

    Uses gamma(b c) = phi'_c(gamma(b)) gamma(c), where phi'_c is the action
    of c with strand k forgotten. A(i,k)^s contributes x_i^s and letters
    on lower strands contribute nothing, so gamma_k is the product, in
    braid order, of phi'_suffix(x_i^s) over the letters touching strand k.
    Scanning from the right keeps the expansions of phi'_suffix(y_i) and
    their inverses, which stay bounded in the reduced ring.
    """
    rank = k - 1
    check_rank_cap(rank)
    letters = [letter for letter in b.letters if letter.j <= k]

    # index 0 unused so that lists line up with generator indices
    images = [ReducedPolynomial.one(rank)] + [expand(generator(i), rank) for i in range(1, k)]
    inverses = [ReducedPolynomial.one(rank)] + [expand(generator(i, -1), rank) for i in range(1, k)]
    result = ReducedPolynomial.one(rank)

    for letter in reversed(letters):
        if letter.j == k:
            factor = images[letter.i] if letter.sign == 1 else inverses[letter.i]
            result = factor * result
            continue
        action = letter_action(rank, letter.i, letter.j, letter.sign)
        new_images = list(images)
        new_inverses = list(inverses)
        for t in range(letter.i, letter.j + 1):
            word = action.image(t)
            new_images[t] = _image_expansion(word, images, inverses, rank)
            new_inverses[t] = _image_expansion(invert(word), images, inverses, rank)
        images, inverses = new_images, new_inverses

    return result


def comb(b: PureBraidWord) -> HLNormalForm:
    """
    Habegger-Lin coordinates of b. gamma_k is returned as its canonical
    product of nonrepeating basic commutators on x_1..x_{k-1}.
    """
    gammas = {}
    for k in range(b.strands, 1, -1):
        expansion = gamma_expansion(b, k)
        gammas[k] = product_word(decompose_expansion(expansion))
        logger.debug(f"combed strand {k} of {b.strands}: gamma{k} = {gammas[k]}")
    return HLNormalForm(b.strands, gammas)


# ============ HL forms ============

_HL_HEADER = re.compile(r"components:\s*(\d+)$")
_HL_LINE = re.compile(r"gamma(\d+)\s*=(.*)$")


def parse_hl(text: str) -> HLNormalForm:
    """
    components:<n>
    gamma<k> = <word>     (k = 2..n, missing lines mean trivial)
    """
    lines = [(no, line) for no, line in enumerate(text.splitlines(), start=1) if line.strip()]
    if not lines:
        raise HLSyntaxError("empty HL text, expected 'components:<n>'", line=1, column=1)

    line_no, head = lines[0]
    header = _HL_HEADER.match(head.strip())
    if header is None:
        raise HLSyntaxError(f"expected 'components:<n>', got {head.strip()!r}", line=line_no, column=1)
    n = int(header.group(1))
    if n < 1:
        raise HLSyntaxError("component count must be >= 1", line=line_no, column=1)

    gammas: dict[int, Word] = {}
    for line_no, line in lines[1:]:
        column = len(line) - len(line.lstrip()) + 1
        match = _HL_LINE.match(line.strip())
        if match is None:
            raise HLSyntaxError(f"expected 'gamma<k> = <word>', got {line.strip()!r}", line=line_no, column=column)
        k = int(match.group(1))
        if not 2 <= k <= n:
            raise HLSyntaxError(f"gamma{k} does not fit {n} components", line=line_no, column=column)
        if k in gammas:
            raise HLSyntaxError(f"gamma{k} given twice", line=line_no, column=column)
        word_text = match.group(2)
        word_column = column + line.strip().index("=") + 1
        try:
            gamma = parse_word(word_text)
        except ParseError as e:
            raise HLSyntaxError(
                f"gamma{k}: {e.reason}",
                line=line_no,
                column=word_column + (e.column or 1) - 1,
            )
        if gamma.letters and max(letter.index for letter in gamma.letters) >= k:
            raise HLSyntaxError(f"gamma{k} may only use x1..x{k - 1}", line=line_no, column=word_column)
        gammas[k] = gamma
    return HLNormalForm(n, gammas)


def format_hl(hl: HLNormalForm) -> str:
    lines = [f"components:{hl.components}"]
    for k in range(2, hl.components + 1):
        lines.append(f"gamma{k} = {hl.gamma(k)}")
    return "\n".join(lines) + "\n"


def hl_delete_top(hl: HLNormalForm) -> HLNormalForm:
    """Drop the last component; middle components cannot be deleted from an HL form."""
    if hl.components == 1:
        raise StrandError("cannot delete the only component")
    n = hl.components - 1
    return HLNormalForm(n, {k: hl.gamma(k) for k in range(2, n + 1)})


def hl_linking_matrix(hl: HLNormalForm) -> list[list[int]]:
    n = hl.components
    matrix = [[0] * n for _ in range(n)]
    for k in range(2, n + 1):
        for i in range(1, k):
            lk = exponent_sum(hl.gamma(k), i)
            matrix[i - 1][k - 1] = lk
            matrix[k - 1][i - 1] = lk
    return matrix
