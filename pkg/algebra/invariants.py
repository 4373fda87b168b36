"""
Link-homotopy invariants and the homotopy trivializing number n_h.

n_h is exact for at most three components. From four components on, it is
reported as a lower/upper bound pair, both adjusted to the parity of
Lambda, since n_h = Lambda (mod 2). n_d (the disk intersection number)
always equals n_h and is reported alongside it. Links in homology spheres
are handled through any S^3 link with the same string-link coordinates.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Optional

from algebra.braids import (
    HLNormalForm,
    PureBraidWord,
    comb,
    gamma_expansion,
    hl_linking_matrix,
    linking_matrix,
    sub_braid,
)
from algebra.hall import c_constant
from algebra.magnus import ReducedPolynomial, expand, first_nonvanishing, rf_is_trivial
from algebra.trivializing import rz_upper
from core.errors import ComponentCountError, InternalInvariantError
from utils.logger import get_logger

logger = get_logger("invariants")

CERT_TRIVIAL = "trivial"
CERT_LINKING = "linking"
CERT_MU123 = "mu123"
CERT_RF_TRIVIAL = "rf-trivial"
CERT_NONTRIVIAL = "sublink-nontrivial"
CERT_UPPER = "rz-upper"
CERT_PARITY = "parity"


@dataclass
class LinkInput:
    """A link given by a pure braid (combed on demand) or directly by its HL form."""
    components: int
    braid: Optional[PureBraidWord] = None
    _hl: Optional[HLNormalForm] = field(default=None, repr=False)

    def __post_init__(self):
        if self.components < 1:
            raise ComponentCountError(f"a link needs at least one component, got {self.components}")
        if (self.braid is None) == (self._hl is None):
            raise ValueError("a LinkInput holds exactly one of a braid or an HL form")

    @classmethod
    def from_braid(cls, braid: PureBraidWord) -> LinkInput:
        return cls(components=braid.strands, braid=braid)

    @classmethod
    def from_hl(cls, hl: HLNormalForm) -> LinkInput:
        return cls(components=hl.components, _hl=hl)

    @property
    def hl(self) -> HLNormalForm:
        if self._hl is None:
            self._hl = comb(self.braid)
        return self._hl


@dataclass(frozen=True)
class Certificate:
    kind: str
    detail: str

    def to_json(self) -> dict:
        return {"kind": self.kind, "detail": self.detail}


@dataclass
class NhResult:
    components: int
    lambda_: int
    lower: int
    upper: int
    exact: Optional[int] = None
    certificates: list[Certificate] = field(default_factory=list)
    mu123: Optional[int] = None

    @property
    def parity(self) -> int:
        return self.lambda_ % 2

    @property
    def nd(self) -> dict:
        # n_d(L) = n_h(L): the disk intersection number matches the homotopy trivializing number
        return {"exact": self.exact, "lower": self.lower, "upper": self.upper}

    def to_json(self) -> dict:
        out = {
            "components": self.components,
            "lambda": self.lambda_,
            "parity": self.parity,
            "nh": {"exact": self.exact, "lower": self.lower, "upper": self.upper},
            "nd": self.nd,
            "nd_equals_nh": True,
            "certificates": [c.to_json() for c in self.certificates],
        }
        if self.mu123 is not None:
            out["mu123"] = self.mu123
        return out


# ============ elementary invariants ============

def linking_matrix_of(link: LinkInput) -> list[list[int]]:
    if link.braid is not None:
        return linking_matrix(link.braid)
    return hl_linking_matrix(link.hl)


def _lambda(matrix: list[list[int]], indices=None) -> int:
    n = len(matrix)
    indices = sorted(indices) if indices is not None else range(1, n + 1)
    return sum(abs(matrix[i - 1][j - 1]) for i, j in itertools.combinations(indices, 2))


def lambda_of(link: LinkInput) -> int:
    return _lambda(linking_matrix_of(link))


def mu123(link: LinkInput) -> int:
    """
    Coefficient of X1X2 in the expansion of gamma_3. It is Milnor's triple
    linking number of the closure when all linking numbers vanish; otherwise
    the raw string-link coefficient.
    """
    if link.components != 3:
        raise ComponentCountError(f"mu123 needs exactly 3 components, got {link.components}")
    if link.braid is not None and link._hl is None:
        expansion = gamma_expansion(link.braid, 3)
    else:
        expansion = expand(link.hl.gamma(3), 2)
    value = expansion.coefficient((1, 2))
    if lambda_of(link):
        logger.info(f"mu123 = {value} read with nonzero linking numbers; not a closure invariant")
    return value


def sublink_mu123(link: LinkInput, strands: tuple[int, int, int]) -> int:
    """
    mu123 of the 3-component sublink on the given strands. Braids are cut
    down with delete_strand; for HL forms the coefficient of X_iX_j in
    gamma_k is the same number (i < j < k).
    """
    i, j, k = sorted(strands)
    if link.braid is not None:
        return mu123(LinkInput.from_braid(sub_braid(link.braid, (i, j, k))))
    if k > link.components:
        raise ComponentCountError(f"strand {k} is out of range for {link.components} components")
    return expand(link.hl.gamma(k), k - 1).coefficient((i, j))


# ============ n_h ============

def _nontriviality_certificate(hl: HLNormalForm, matrix: list[list[int]]) -> Optional[Certificate]:
    """
    A sublink S with Lambda(S) = 0 whose string link is nontrivial.

    Dropping the monomials of gamma_k that use an index outside S gives the
    expansion for the sublink on S + {k}. When Lambda of that sublink is 0 its
    first non-vanishing coefficient is a Milnor invariant of the closure, so
    the sublink needs at least one, hence two, crossing changes.
    """
    found = None
    for k in range(2, hl.components + 1):
        expansion = expand(hl.gamma(k), k - 1)
        for size in range(2, k):
            for subset in itertools.combinations(range(1, k), size):
                strands = set(subset) | {k}
                if _lambda(matrix, strands):
                    continue
                restricted = ReducedPolynomial(
                    k - 1, {m: c for m, c in expansion.terms.items() if strands.issuperset(m)}
                )
                hit = first_nonvanishing(restricted)
                if hit is None:
                    continue
                mono, coef = hit
                key = (len(mono), k, mono)
                if found is None or key < found[0]:
                    found = (key, set(mono) | {k}, coef)
    if found is None:
        return None
    (_, k, mono), strands, coef = found
    name = "".join(f"X{i}" for i in mono)
    return Certificate(
        CERT_NONTRIVIAL,
        f"sublink {sorted(strands)} has vanishing linking numbers and gamma{k} has "
        f"coefficient {coef} on {name}; restricting a trivializing sequence to it needs >= 2 changes",
    )


def _adjust_parity(lower: int, upper: int, lam: int) -> tuple[int, int]:
    if (lower - lam) % 2:
        lower += 1
    if (upper - lam) % 2:
        upper -= 1
    return lower, upper


def nh(link: LinkInput) -> NhResult:
    n = link.components
    matrix = linking_matrix_of(link)
    lam = _lambda(matrix)

    if n == 1:
        return NhResult(n, 0, 0, 0, 0, [Certificate(CERT_TRIVIAL, "a knot is link-homotopically trivial")])

    if n == 2:
        cert = Certificate(CERT_LINKING, f"two components: n_h = |lk(1,2)| = {lam}")
        return NhResult(n, lam, lam, lam, lam, [cert])

    if n == 3:
        return _nh_three(link, lam)

    return _nh_general(link, matrix, lam)


def _nh_three(link: LinkInput, lam: int) -> NhResult:
    mu = mu123(link)
    if lam:
        cert = Certificate(CERT_LINKING, f"Lambda = {lam} != 0: n_h = Lambda")
        return NhResult(3, lam, lam, lam, lam, [cert], mu123=mu)
    if mu:
        cert = Certificate(CERT_MU123, f"Lambda = 0 and mu123 = {mu} != 0: n_h = 2")
        return NhResult(3, 0, 2, 2, 2, [cert], mu123=mu)

    hl = link.hl
    if not (rf_is_trivial(hl.gamma(2), 1) and rf_is_trivial(hl.gamma(3), 2)):
        raise InternalInvariantError("Lambda = 0 and mu123 = 0 but the HL coordinates are not trivial")
    cert = Certificate(CERT_RF_TRIVIAL, "Lambda = 0, mu123 = 0, gamma2 and gamma3 trivial: homotopically trivial")
    return NhResult(3, 0, 0, 0, 0, [cert], mu123=mu)


def _nh_general(link: LinkInput, matrix: list[list[int]], lam: int) -> NhResult:
    n = link.components
    hl = link.hl
    certificates = [Certificate(CERT_LINKING, f"Lambda = {lam} is a lower bound")]

    upper = lam
    for k in range(3, n + 1):
        bound = rz_upper(hl.gamma(k), k - 1)
        linking = sum(abs(matrix[i - 1][k - 1]) for i in range(1, k))
        extra = bound.upper - linking
        assert extra >= 0, f"RZ bound {bound.upper} of gamma{k} is below its linking numbers {linking}"
        if extra:
            certificates.append(
                Certificate(CERT_UPPER, f"gamma{k}: RZ <= {bound.upper} ({bound.method}), {extra} beyond linking")
            )
        upper += extra

    lower = lam
    nontrivial = _nontriviality_certificate(hl, matrix)
    if nontrivial is not None:
        certificates.append(nontrivial)
        lower = lam + 2

    adjusted_lower, adjusted_upper = _adjust_parity(lower, upper, lam)
    if (adjusted_lower, adjusted_upper) != (lower, upper):
        certificates.append(
            Certificate(CERT_PARITY, f"n_h = Lambda (mod 2): bounds [{lower}, {upper}] -> [{adjusted_lower}, {adjusted_upper}]")
        )
    lower, upper = adjusted_lower, adjusted_upper

    assert lower <= upper, f"lower bound {lower} exceeds upper bound {upper}"
    assert upper <= lam + nh_constant(n), f"upper bound {upper} exceeds Lambda + C_{n}"
    exact = lower if lower == upper else None
    logger.debug(f"nh on {n} components: Lambda={lam}, bounds [{lower}, {upper}]")
    return NhResult(n, lam, lower, upper, exact, certificates)


def nh_constant(n: int, nonrepeating: bool = False) -> int:
    """C_n with Lambda <= n_h <= Lambda + C_n."""
    return c_constant(n, nonrepeating)
