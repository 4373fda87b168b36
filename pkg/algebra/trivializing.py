"""
Trivializing numbers of words and upper bounds for reduced trivializing numbers.

Z(w) is the least number of letters to delete from w (as written) so that
the rest freely reduces to the empty word. RZ(gamma) is the least Z over all
words representing gamma in RF(n); only upper bounds are computed for it.
"""
from __future__ import annotations

import heapq
import itertools
import random
from dataclasses import dataclass

from algebra.free_words import (
    EMPTY,
    Word,
    concat,
    delete_positions,
    free_reduce,
    generator,
    invert,
    is_freely_trivial,
    power,
)
from algebra.hall import BasicCommutator, as_word, decompose, format_commutator, product_word
from algebra.magnus import rf_equal
from core.config import SEARCH_MAX_LEN, Z_ORACLE_MAX_LEN, get_config
from core.errors import DecompositionError, OracleLimitError
from utils.logger import get_logger

logger = get_logger("trivializing")

METHOD_LEMMA = "lemma"
METHOD_LINKED = "linked"
METHOD_WORD = "word"
METHOD_SEARCH = "search"
METHOD_SEARCH_EXHAUSTED = "search-exhausted"


@dataclass(frozen=True)
class ZResult:
    value: int
    witness_deletions: frozenset[int]

    def to_json(self) -> dict:
        return {"value": self.value, "witness": sorted(self.witness_deletions)}


@dataclass(frozen=True)
class RZBound:
    upper: int
    witness: Word
    method: str = METHOD_LEMMA

    def to_json(self) -> dict:
        return {"upper": self.upper, "witness": str(self.witness), "method": self.method}


# ============ Z(w) ============

def z_number(w: Word) -> ZResult:
    """
    Interval DP over the maximum non-crossing matching of inverse letters:
    best[i][j] = max(best[i+1][j], 2 + best[i+1][k-1] + best[k+1][j]) over
    k with w_k = w_i^-1. A word is freely trivial exactly when all of its
    letters admit such a matching.
    """
    letters = w.letters
    size = len(letters)
    if size == 0:
        return ZResult(0, frozenset())

    # best[i][j] covers letters i..j-1 (half-open), so empty intervals read 0
    best = [[0] * (size + 1) for _ in range(size + 1)]
    partners = [
        [k for k in range(i + 1, size) if letters[k] == letters[i].inverse()]
        for i in range(size)
    ]
    for i in range(size - 1, -1, -1):
        row = best[i]
        below = best[i + 1]
        for j in range(i + 1, size + 1):
            value = below[j]
            for k in partners[i]:
                if k >= j:
                    break
                candidate = 2 + below[k] + best[k + 1][j]
                if candidate > value:
                    value = candidate
            row[j] = value

    matched: set[int] = set()
    stack = [(0, size)]
    while stack:
        i, j = stack.pop()
        if i >= j:
            continue
        if best[i][j] == best[i + 1][j]:
            stack.append((i + 1, j))
            continue
        for k in partners[i]:
            if k < j and best[i][j] == 2 + best[i + 1][k] + best[k + 1][j]:
                matched.update((i, k))
                stack.append((i + 1, k))
                stack.append((k + 1, j))
                break

    deletions = frozenset(set(range(size)) - matched)
    return ZResult(size - best[0][size], deletions)


def z_number_oracle(w: Word) -> int:
    """Brute force over deletion subsets, smallest first."""
    size = len(w)
    if size > Z_ORACLE_MAX_LEN:
        raise OracleLimitError(f"brute-force Z is limited to {Z_ORACLE_MAX_LEN} letters, got {size}")
    for count in range(size + 1):
        for positions in itertools.combinations(range(size), count):
            if is_freely_trivial(delete_positions(w, positions)):
                return count
    raise AssertionError("deleting every letter always leaves the empty word")


# ============ lemma witnesses ============

def rz_witness(c: BasicCommutator, a: int) -> RZBound:
    """
    Witness for c^a in RF(n).

    A generator gives x_t^a. For c = [u, v], v is a product of conjugates of
    one generator, so c^a = u v^a u^-1 v^-a in RF(n), and deleting the letters
    that trivialize a witness of u (and their mirror images in its inverse)
    leaves v^a v^-a. The cheaper side is used as the conjugating factor,
    through [u, v]^a = [v, u]^-a.
    """
    if a == 0:
        return RZBound(0, EMPTY, METHOD_LEMMA)
    if c.is_leaf:
        return RZBound(abs(a), power(generator(c.index), a), METHOD_LEMMA)

    left = rz_witness(c.left, 1)
    right = rz_witness(c.right, 1)
    if left.upper <= right.upper:
        outer, inner, exponent = left, as_word(c.right), a
    else:
        outer, inner, exponent = right, as_word(c.left), -a

    witness = concat(
        concat(outer.witness, power(inner, exponent)),
        concat(invert(outer.witness), power(inner, -exponent)),
    )
    upper = 2 * outer.upper
    assert upper <= c.weight, f"lemma bound exceeded for {format_commutator(c)}"
    return RZBound(upper, witness, METHOD_LEMMA)


def _linked_pair(i: int, j: int, a: int, b: int, c: int) -> RZBound:
    """
    x_i^a x_j^b [x_i,x_j]^c (i < j, b != 0) is represented by
    x_i^(a+c) x_j x_i^-c x_j^(b-1)  (b > 0), or x_i^(a-c) x_j^-1 x_i^c x_j^(b+1)  (b < 0);
    deleting |a| letters x_i and every x_j trivializes it.
    """
    xi, xj = generator(i), generator(j)
    if b > 0:
        parts = [power(xi, a + c), xj, power(xi, -c), power(xj, b - 1)]
    else:
        parts = [power(xi, a - c), invert(xj), power(xi, c), power(xj, b + 1)]
    witness = EMPTY
    for part in parts:
        witness = concat(witness, part)
    return RZBound(abs(a) + abs(b), witness, METHOD_LINKED)


def _lemma_bound(factors: list[tuple[BasicCommutator, int]]) -> RZBound:
    upper = 0
    witness = EMPTY
    for c, a in factors:
        if a == 0:
            continue
        bound = rz_witness(c, a)
        upper += bound.upper
        witness = concat(witness, bound.witness)
    return RZBound(upper, witness, METHOD_LEMMA)


def _best_linked_step(
    factors: list[tuple[BasicCommutator, int]], n: int
) -> tuple[RZBound, list[tuple[BasicCommutator, int]]] | None:
    """
    Cheapest split of the product into a linked pair witness times the
    decomposition of what is left, over every pair i < j.
    """
    exps = {format_commutator(c): a for c, a in factors}
    current = product_word(factors)
    best = None
    for i, j in itertools.combinations(range(1, n + 1), 2):
        a, b = exps.get(f"x{i}", 0), exps.get(f"x{j}", 0)
        c = exps.get(f"[x{i},x{j}]", 0)
        if b == 0 or c == 0:
            continue
        linked = _linked_pair(i, j, a, b, c)
        target = product_word([
            (BasicCommutator.leaf(i), a),
            (BasicCommutator.leaf(j), b),
            (BasicCommutator.node(BasicCommutator.leaf(i), BasicCommutator.leaf(j)), c),
        ])
        if not rf_equal(linked.witness, target, n):
            raise DecompositionError(f"linked witness for x{i}, x{j} does not represent its factors")
        rest = decompose(concat(invert(linked.witness), current), n)
        cost = linked.upper + _lemma_bound(rest).upper
        if best is None or cost < best[0]:
            best = (cost, linked, rest)
    if best is None:
        return None
    return best[1], best[2]


def rz_upper(gamma: Word, n: int) -> RZBound:
    """
    Upper bound on RZ(gamma) in RF(n), the least of
      - the sum of lemma bounds over the basic-commutator decomposition,
      - linked pair witnesses peeled off greedily, lemma bounds on the rest,
      - Z of the reduced product word of the decomposition.
    Only the decomposition enters, so rf-equal inputs get the same bound.
    """
    factors = decompose(gamma, n)
    result = _lemma_bound(factors)

    prefix, prefix_cost, current = EMPTY, 0, factors
    while True:
        step = _best_linked_step(current, n)
        if step is None:
            break
        linked, rest = step
        rest_bound = _lemma_bound(rest)
        if prefix_cost + linked.upper + rest_bound.upper >= result.upper:
            break
        prefix = concat(prefix, linked.witness)
        prefix_cost += linked.upper
        current = rest
        result = RZBound(prefix_cost + rest_bound.upper, concat(prefix, rest_bound.witness), METHOD_LINKED)

    product = free_reduce(product_word(factors))
    direct = z_number(product)
    if direct.value < result.upper:
        result = RZBound(direct.value, product, METHOD_WORD)

    if not rf_equal(result.witness, gamma, n):
        raise DecompositionError(f"{result.method} witness does not represent the input")
    return result


# ============ bounded search ============

def _conjugate_blocks(word: tuple[int, ...]) -> list[tuple[int, int, int]]:
    """(start, end, generator) for every subword g x^{+-1} g^-1 (end exclusive)."""
    blocks = []
    size = len(word)
    for centre in range(size):
        radius = 0
        while True:
            start, end = centre - radius, centre + radius + 1
            blocks.append((start, end, abs(word[centre])))
            left, right = start - 1, end
            if left < 0 or right >= size or word[left] != -word[right]:
                break
            radius += 1
    return blocks


def _neighbours(word: tuple[int, ...], n: int, max_len: int) -> list[tuple[int, ...]]:
    out = []
    size = len(word)
    for k in range(size - 1):
        if word[k] == -word[k + 1]:
            out.append(word[:k] + word[k + 2:])
    if size + 2 <= max_len:
        for k in range(size + 1):
            for g in range(1, n + 1):
                for s in (g, -g):
                    out.append(word[:k] + (s, -s) + word[k:])
    # adjacent conjugates of the same generator commute in RF(n)
    by_start: dict[int, list[tuple[int, int]]] = {}
    blocks = _conjugate_blocks(word)
    for start, end, g in blocks:
        by_start.setdefault(start, []).append((end, g))
    for start, end, g in blocks:
        for end2, g2 in by_start.get(end, []):
            if g2 == g:
                out.append(word[:start] + word[end:end2] + word[start:end] + word[end2:])
    return out


def rz_search(
    gamma: Word,
    n: int,
    max_len: int | None = None,
    budget: int | None = None,
    seed: int | None = None,
) -> RZBound:
    """
    Best-first search over representatives of gamma of length <= max_len,
    moving by free insertions/cancellations and swaps of adjacent conjugates
    of one generator. Starts from the lemma witness, so the result never
    exceeds rz_upper. Never certifies exactness.
    """
    config = get_config()
    max_len = config.search_max_len if max_len is None else max_len
    budget = config.search_budget if budget is None else budget
    seed = config.seed if seed is None else seed
    if max_len > SEARCH_MAX_LEN:
        raise OracleLimitError(f"rz_search max_len is limited to {SEARCH_MAX_LEN}, got {max_len}")

    lemma = rz_upper(gamma, n)
    best = lemma
    rng = random.Random(seed)

    frontier: list[tuple[int, int, float, tuple[int, ...]]] = []
    seen: set[tuple[int, ...]] = set()

    def push(word: tuple[int, ...]):
        nonlocal best
        if word in seen or len(word) > max_len:
            return
        seen.add(word)
        value = z_number(Word.from_ints(word)).value
        if value < best.upper:
            best = RZBound(value, Word.from_ints(word), METHOD_SEARCH)
        heapq.heappush(frontier, (value, len(word), rng.random(), word))

    push(tuple(free_reduce(gamma).to_ints()))
    push(tuple(lemma.witness.to_ints()))

    expanded = 0
    while frontier and expanded < budget and best.upper > 0:
        _, _, _, word = heapq.heappop(frontier)
        expanded += 1
        for neighbour in _neighbours(word, n, max_len):
            push(neighbour)

    exhausted = bool(frontier) and expanded >= budget and best.upper > 0
    if exhausted:
        logger.warning(f"rz_search budget {budget} exhausted, best upper bound {best.upper}")
    method = METHOD_SEARCH_EXHAUSTED if exhausted else METHOD_SEARCH
    return RZBound(best.upper, best.witness, method)
