"""
Hall bases of basic commutators, Witt counts, and decomposition of RF(n)
elements into ordered products of basic-commutator powers.

Ordering convention: weights are non-decreasing; within one weight,
commutators are ordered lexicographically by their bracket text.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterator, Optional

import sympy
from sympy.ntheory import divisors, mobius

from algebra.free_words import EMPTY, Word, check_rank, commutator, concat, generator, invert, power, free_reduce
from algebra.magnus import ReducedPolynomial, check_rank_cap, expand, poly_multiply, rf_equal
from core.errors import CommutatorSyntaxError, DecompositionError
from utils.logger import get_logger

logger = get_logger("hall")

# within-weight order of generate; part of the cache key
HALL_ORDERING = "bracket-text"


@dataclass(frozen=True)
class BasicCommutator:
    """A commutator tree: a leaf x_index, or the bracket [left, right]."""
    index: Optional[int] = None
    left: Optional[BasicCommutator] = None
    right: Optional[BasicCommutator] = None
    weight: int = field(default=0, compare=False)

    def __post_init__(self):
        if self.index is not None:
            if self.left is not None or self.right is not None:
                raise ValueError("a leaf has no subtrees")
            if self.index < 1:
                raise ValueError(f"generator index must be >= 1, got {self.index}")
            object.__setattr__(self, "weight", 1)
        else:
            if self.left is None or self.right is None:
                raise ValueError("a bracket needs both subtrees")
            object.__setattr__(self, "weight", self.left.weight + self.right.weight)

    @classmethod
    def leaf(cls, i: int) -> BasicCommutator:
        return cls(index=i)

    @classmethod
    def node(cls, left: BasicCommutator, right: BasicCommutator) -> BasicCommutator:
        return cls(left=left, right=right)

    @property
    def is_leaf(self) -> bool:
        return self.index is not None

    def __str__(self) -> str:
        return format_commutator(self)


def leaves(c: BasicCommutator) -> list[int]:
    if c.is_leaf:
        return [c.index]
    return leaves(c.left) + leaves(c.right)


def has_repeated_index(c: BasicCommutator) -> bool:
    indices = leaves(c)
    return len(set(indices)) != len(indices)


def format_commutator(c: BasicCommutator) -> str:
    if c.is_leaf:
        return f"x{c.index}"
    return f"[{format_commutator(c.left)},{format_commutator(c.right)}]"


_BRACKET_TOKEN = re.compile(r"\s*(\[|\]|,|x\d+)")


def parse_commutator(text: str) -> BasicCommutator:
    """Parse nested bracket text such as "[[x1,x2],x3]"."""
    tokens: list[tuple[str, int]] = []
    pos = 0
    stripped = text.rstrip()
    while pos < len(stripped):
        match = _BRACKET_TOKEN.match(stripped, pos)
        if match is None:
            raise CommutatorSyntaxError(f"unexpected character {stripped[pos]!r}", column=pos + 1)
        tokens.append((match.group(1), match.start(1) + 1))
        pos = match.end()

    def parse_at(k: int) -> tuple[BasicCommutator, int]:
        if k >= len(tokens):
            raise CommutatorSyntaxError("unexpected end of input", column=len(stripped) + 1)
        token, column = tokens[k]
        if token.startswith("x"):
            index = int(token[1:])
            if index < 1:
                raise CommutatorSyntaxError(f"generator index must be >= 1 in {token!r}", column=column)
            return BasicCommutator.leaf(index), k + 1
        if token != "[":
            raise CommutatorSyntaxError(f"expected '[' or a generator, got {token!r}", column=column)
        left, k = parse_at(k + 1)
        if k >= len(tokens) or tokens[k][0] != ",":
            raise CommutatorSyntaxError("expected ','", column=tokens[k][1] if k < len(tokens) else len(stripped) + 1)
        right, k = parse_at(k + 1)
        if k >= len(tokens) or tokens[k][0] != "]":
            raise CommutatorSyntaxError("expected ']'", column=tokens[k][1] if k < len(tokens) else len(stripped) + 1)
        return BasicCommutator.node(left, right), k + 1

    tree, end = parse_at(0)
    if end != len(tokens):
        raise CommutatorSyntaxError(f"trailing input {tokens[end][0]!r}", column=tokens[end][1])
    return tree


def as_word(c: BasicCommutator) -> Word:
    if c.is_leaf:
        return generator(c.index)
    return commutator(as_word(c.left), as_word(c.right))


def lie_polynomial(c: BasicCommutator, n: int) -> ReducedPolynomial:
    """Bracket polynomial: X_i for a leaf, PQ - QP for [P, Q]."""
    if c.is_leaf:
        return ReducedPolynomial.variable(c.index, n)
    p = lie_polynomial(c.left, n)
    q = lie_polynomial(c.right, n)
    return poly_multiply(p, q) - poly_multiply(q, p)


# ============ Hall basis ============

@dataclass(frozen=True)
class HallBasis:
    rank: int
    max_weight: int
    nonrepeating: bool
    elements: tuple[BasicCommutator, ...]

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[BasicCommutator]:
        return iter(self.elements)

    def of_weight(self, w: int) -> list[BasicCommutator]:
        return [c for c in self.elements if c.weight == w]

    def count_by_weight(self) -> dict[int, int]:
        counts: dict[int, int] = {}
        for c in self.elements:
            counts[c.weight] = counts.get(c.weight, 0) + 1
        return counts

    def to_json(self) -> list[dict]:
        return [{"bracket": format_commutator(c), "weight": c.weight} for c in self.elements]


@lru_cache(maxsize=64)
def generate(n: int, wmax: int, nonrepeating: bool = False) -> HallBasis:
    if n < 1 or wmax < 1:
        raise ValueError(f"generate needs n >= 1 and wmax >= 1, got n={n}, wmax={wmax}")

    elements: list[BasicCommutator] = [BasicCommutator.leaf(i) for i in range(1, n + 1)]
    position = {c: k for k, c in enumerate(elements)}
    by_weight: dict[int, list[int]] = {1: list(range(n))}

    for w in range(2, wmax + 1):
        batch: list[BasicCommutator] = []
        for j, cj in enumerate(elements):
            if cj.weight >= w:
                continue
            # [c_l, c_j] with c_j = [c_r, c_s] needs r <= l
            r = 0 if cj.is_leaf else position[cj.left]
            for l in by_weight.get(w - cj.weight, []):
                if l >= j or l < r:
                    continue
                cl = elements[l]
                candidate = BasicCommutator.node(cl, cj)
                if nonrepeating and has_repeated_index(candidate):
                    continue
                batch.append(candidate)
        batch.sort(key=format_commutator)
        for candidate in batch:
            position[candidate] = len(elements)
            by_weight.setdefault(w, []).append(len(elements))
            elements.append(candidate)

    return HallBasis(rank=n, max_weight=wmax, nonrepeating=nonrepeating, elements=tuple(elements))


BasisProvider = Callable[[int, int, bool], HallBasis]
_basis_provider: BasisProvider = generate


def use_basis_provider(provider: Optional[BasisProvider]):
    """Route basis lookups through provider (e.g. the disk cache); None restores generate."""
    global _basis_provider
    _basis_provider = provider or generate


def get_basis(n: int, wmax: int, nonrepeating: bool = False) -> HallBasis:
    return _basis_provider(n, wmax, nonrepeating)


def witt(n: int, w: int) -> int:
    """Number of basic commutators of weight w on n generators."""
    if n < 1 or w < 1:
        raise ValueError(f"witt needs n >= 1 and w >= 1, got n={n}, w={w}")
    total = sum(mobius(d) * n ** (w // d) for d in divisors(w))
    return int(total) // w


# ============ decomposition in RF(n) ============

@lru_cache(maxsize=None)
def _multidegree_system(candidates: tuple[BasicCommutator, ...], n: int):
    """(monomials, matrix, left inverse) for the Lie polynomials of one leaf set."""
    columns = [lie_polynomial(c, n) for c in candidates]
    monomials = tuple(sorted({m for poly in columns for m in poly.terms}))
    matrix = sympy.Matrix([[poly.terms.get(m, 0) for poly in columns] for m in monomials])
    if matrix.rank() < len(candidates):
        raise DecompositionError("basic commutator Lie polynomials are linearly dependent")
    left_inverse = (matrix.T * matrix).inv() * matrix.T
    return monomials, matrix, left_inverse


def _solve_multidegree(
    target: ReducedPolynomial,
    candidates: list[BasicCommutator],
    n: int,
) -> list[int]:
    """Integer a with target == sum a_c * lie_polynomial(c) on one leaf set."""
    monomials, matrix, left_inverse = _multidegree_system(tuple(candidates), n)
    stray = set(target.terms) - set(monomials)
    if stray:
        raise DecompositionError(f"degree part {target} is not a Lie element (stray monomials {sorted(stray)})")
    rhs = sympy.Matrix([target.terms.get(m, 0) for m in monomials])
    solution = left_inverse * rhs
    if matrix * solution != rhs:
        raise DecompositionError(f"degree part {target} is not a combination of basic commutators")
    exponents = []
    for value in solution:
        if not value.is_integer:
            raise DecompositionError(f"non-integral basic commutator exponent {value}")
        exponents.append(int(value))
    return exponents


def decompose(gamma: Word, n: int) -> list[tuple[BasicCommutator, int]]:
    """
    Exponents a_i over the nonrepeating Hall basis of RF(n) with
    gamma == c_1^a_1 c_2^a_2 ... c_N^a_N in RF(n), the product in basis order.
    """
    check_rank(gamma, n)
    result = decompose_expansion(expand(gamma, n))
    if not rf_equal(gamma, product_word(result), n):
        raise DecompositionError("basic commutator product does not reproduce the input")
    return result


def decompose_expansion(expansion: ReducedPolynomial) -> list[tuple[BasicCommutator, int]]:
    """
    decompose, starting from a reduced Magnus expansion instead of a word.

    Works weight by weight on the reduced Magnus expansion: the lowest-degree
    part of the residue is a Lie element, solved exactly on each leaf set,
    and the matching factor is peeled off the left of the residue.
    """
    n = expansion.rank
    check_rank_cap(n)
    if expansion.terms.get((), 0) != 1:
        raise DecompositionError(f"{expansion} has constant term other than 1, not a group element")
    basis = get_basis(n, n, True)
    exponents: dict[BasicCommutator, int] = {c: 0 for c in basis}
    residue = expansion

    for d in range(1, n + 1):
        lowest = residue.lowest_degree()
        if lowest is None:
            break
        if lowest < d:
            raise DecompositionError(f"residue has degree {lowest} terms after peeling weight {d - 1}")
        if lowest > d:
            continue
        part = residue.degree_part(d)

        by_leaf_set: dict[tuple[int, ...], list[BasicCommutator]] = {}
        for c in basis.of_weight(d):
            by_leaf_set.setdefault(tuple(sorted(leaves(c))), []).append(c)

        pending: dict[tuple[int, ...], dict] = {}
        for mono, coef in part.terms.items():
            pending.setdefault(tuple(sorted(mono)), {})[mono] = coef

        factor = EMPTY
        for leaf_set in sorted(pending):
            candidates = by_leaf_set.get(leaf_set)
            if not candidates:
                raise DecompositionError(f"no basic commutator of weight {d} on generators {leaf_set}")
            target = ReducedPolynomial(n, pending[leaf_set])
            for c, a in zip(candidates, _solve_multidegree(target, candidates, n)):
                exponents[c] += a

        for c in basis.of_weight(d):
            if exponents[c]:
                factor = concat(factor, power(as_word(c), exponents[c]))
        residue = poly_multiply(expand(invert(free_reduce(factor)), n), residue)
        logger.debug(f"decompose rank {n}: peeled weight {d}, residue lowest degree {residue.lowest_degree()}")

    if not residue.is_one():
        raise DecompositionError(f"residue {residue} did not vanish after weight {n}")

    return [(c, exponents[c]) for c in basis]


def product_word(factors: list[tuple[BasicCommutator, int]]) -> Word:
    """Ordered product c_1^a_1 ... c_N^a_N as a word."""
    out = EMPTY
    for c, a in factors:
        if a:
            out = concat(out, power(as_word(c), a))
    return out


def c_constant(n: int, nonrepeating: bool = False) -> int:
    """C_2 = 0 and C_{k+1} = C_k + sum of weights >= 2 in generate(k, k)."""
    if n < 2:
        raise ValueError(f"c_constant needs n >= 2, got {n}")
    total = 0
    for k in range(2, n):
        if nonrepeating:
            total += sum(c.weight for c in get_basis(k, k, True) if c.weight >= 2)
        else:
            # the unfiltered basis is counted by Witt's formula
            total += sum(w * witt(k, w) for w in range(2, k + 1))
    return total


def c_constant_table(n_max: int) -> list[dict]:
    return [
        {"n": n, "unfiltered": c_constant(n, False), "nonrepeating": c_constant(n, True)}
        for n in range(2, n_max + 1)
    ]
