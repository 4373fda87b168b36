"""
Reduced Magnus expansion: the equality oracle for the reduced free group RF(n).

x_i maps to 1 + X_i (and x_i^-1 to 1 - X_i) in the ring of non-commuting
integer polynomials in which every monomial repeating an index is zero.
Two words are equal in RF(n) exactly when their expansions agree; this is
Milnor's injectivity theorem for the reduced free group (Milnor, "Link
groups", Ann. of Math. 1954), which we use as the definition of equality.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import factorial
from types import MappingProxyType
from typing import Iterable, Mapping, Optional

from algebra.free_words import Word, check_rank
from core.config import get_config
from core.errors import RankError

Monomial = tuple[int, ...]
CONSTANT: Monomial = ()


def monomial_key(m: Monomial) -> tuple[int, Monomial]:
    """Canonical order: by length, then lexicographically."""
    return len(m), m


def check_monomial(m: Monomial, n: int):
    if len(set(m)) != len(m):
        raise ValueError(f"monomial {m} repeats an index")
    if any(i < 1 or i > n for i in m):
        raise RankError(f"monomial {m} does not fit rank {n}")


def max_terms(n: int) -> int:
    """Number of square-free monomials in n letters (including the constant)."""
    return sum(factorial(n) // factorial(n - k) for k in range(n + 1))


def check_rank_cap(n: int):
    cap = get_config().rank_cap
    if n < 1:
        raise RankError(f"rank must be positive, got {n}")
    if n > cap:
        raise RankError(f"rank {n} exceeds the configured cap {cap}")


@dataclass(frozen=True, eq=False)
class ReducedPolynomial:
    rank: int
    terms: Mapping[Monomial, int]

    def __post_init__(self):
        items = [(tuple(mono), coef) for mono, coef in self.terms.items()]
        cleaned = {}
        for mono, coef in sorted(items, key=lambda item: monomial_key(item[0])):
            check_monomial(mono, self.rank)
            if coef:
                cleaned[mono] = cleaned.get(mono, 0) + int(coef)
        cleaned = {m: c for m, c in cleaned.items() if c}
        object.__setattr__(self, "terms", MappingProxyType(cleaned))

    # ---- constructors ----

    @classmethod
    def one(cls, n: int) -> ReducedPolynomial:
        return cls(n, {CONSTANT: 1})

    @classmethod
    def zero(cls, n: int) -> ReducedPolynomial:
        return cls(n, {})

    @classmethod
    def variable(cls, i: int, n: int) -> ReducedPolynomial:
        return cls(n, {(i,): 1})

    # ---- arithmetic ----

    def _check_rank(self, other: ReducedPolynomial):
        if self.rank != other.rank:
            raise RankError(f"rank mismatch: {self.rank} vs {other.rank}")

    def __add__(self, other: ReducedPolynomial) -> ReducedPolynomial:
        self._check_rank(other)
        out = dict(self.terms)
        for mono, coef in other.terms.items():
            out[mono] = out.get(mono, 0) + coef
        return ReducedPolynomial(self.rank, out)

    def __neg__(self) -> ReducedPolynomial:
        return ReducedPolynomial(self.rank, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: ReducedPolynomial) -> ReducedPolynomial:
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return ReducedPolynomial(self.rank, {m: c * other for m, c in self.terms.items()})
        return poly_multiply(self, other)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, ReducedPolynomial):
            return NotImplemented
        return self.rank == other.rank and dict(self.terms) == dict(other.terms)

    def __hash__(self) -> int:
        return hash((self.rank, tuple(self.terms.items())))

    # ---- inspection ----

    def coefficient(self, m: Iterable[int]) -> int:
        return coefficient(self, tuple(m))

    def degree_part(self, d: int) -> ReducedPolynomial:
        return ReducedPolynomial(self.rank, {m: c for m, c in self.terms.items() if len(m) == d})

    def lowest_degree(self) -> Optional[int]:
        """Smallest degree >= 1 carrying a nonzero coefficient."""
        degrees = [len(m) for m in self.terms if m]
        return min(degrees) if degrees else None

    def is_one(self) -> bool:
        return dict(self.terms) == {CONSTANT: 1}

    def to_json(self) -> list[dict]:
        return [{"mono": list(m), "coef": c} for m, c in self.terms.items()]

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for mono, coef in self.terms.items():
            name = "".join(f"X{i}" for i in mono)
            if not name:
                parts.append(str(coef))
            elif coef == 1:
                parts.append(name)
            elif coef == -1:
                parts.append(f"-{name}")
            else:
                parts.append(f"{coef}*{name}")
        return " + ".join(parts).replace("+ -", "- ")


def poly_multiply(p: ReducedPolynomial, q: ReducedPolynomial) -> ReducedPolynomial:
    """Non-commutative product, discarding monomials with a repeated index."""
    if p.rank != q.rank:
        raise RankError(f"rank mismatch: {p.rank} vs {q.rank}")
    out: dict[Monomial, int] = {}
    for m1, c1 in p.terms.items():
        used = set(m1)
        for m2, c2 in q.terms.items():
            if used.intersection(m2):
                continue
            mono = m1 + m2
            out[mono] = out.get(mono, 0) + c1 * c2
    return ReducedPolynomial(p.rank, out)


def _times_letter(terms: dict[Monomial, int], index: int, sign: int) -> dict[Monomial, int]:
    # p * (1 + sign*X_index)
    out = dict(terms)
    for mono, coef in terms.items():
        if index in mono:
            continue
        extended = mono + (index,)
        out[extended] = out.get(extended, 0) + sign * coef
    return out


def expand(w: Word, n: int) -> ReducedPolynomial:
    check_rank_cap(n)
    check_rank(w, n)
    terms: dict[Monomial, int] = {CONSTANT: 1}
    for letter in w.letters:
        terms = _times_letter(terms, letter.index, letter.sign)
    return ReducedPolynomial(n, terms)


def rf_equal(u: Word, v: Word, n: int) -> bool:
    return expand(u, n) == expand(v, n)


def rf_is_trivial(w: Word, n: int) -> bool:
    return expand(w, n).is_one()


def coefficient(p: ReducedPolynomial, m: Monomial) -> int:
    m = tuple(m)
    check_monomial(m, p.rank)
    return p.terms.get(m, 0)


def first_nonvanishing(p: ReducedPolynomial) -> Optional[tuple[Monomial, int]]:
    """First non-constant monomial in canonical order with nonzero coefficient."""
    for mono, coef in p.terms.items():
        if mono:
            return mono, coef
    return None
