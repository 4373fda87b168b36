"""
Null-form pattern check for Seifert matrices.

A 2g x 2g matrix is in null form when, cut into 2x2 blocks:
  diagonal blocks     [[0, e], [1 - e, 0]]  with e in {0, 1}
  above the diagonal  [[0, *], [0, *]]
  below the diagonal  [[0, 0], [*, *]]
Reducibility by S-equivalence moves is not decided here.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional

import sympy

from core.errors import MatrixSyntaxError, SeifertShapeError


@dataclass(frozen=True)
class SeifertMatrix:
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.entries)
        size = len(rows)
        if size == 0:
            raise SeifertShapeError("empty matrix")
        if any(len(row) != size for row in rows):
            raise SeifertShapeError(f"matrix is not square ({size} rows, row lengths {[len(r) for r in rows]})")
        if size % 2:
            raise SeifertShapeError(f"matrix size {size} is odd")
        object.__setattr__(self, "entries", rows)

    @property
    def size(self) -> int:
        return len(self.entries)

    @property
    def genus(self) -> int:
        return self.size // 2

    def block(self, r: int, c: int) -> tuple[tuple[int, int], tuple[int, int]]:
        """2x2 block (r, c), 1-based."""
        i, j = 2 * (r - 1), 2 * (c - 1)
        e = self.entries
        return (e[i][j], e[i][j + 1]), (e[i + 1][j], e[i + 1][j + 1])

    def to_sympy(self) -> sympy.Matrix:
        return sympy.Matrix(self.entries)


@dataclass(frozen=True)
class NullFormReport:
    ok: bool
    diagnostic: Optional[str] = None
    block: Optional[tuple[int, int]] = None

    def __bool__(self) -> bool:
        return self.ok

    def to_json(self) -> dict:
        out = {"null_form": self.ok, "diagnostic": self.diagnostic}
        out["block"] = list(self.block) if self.block else None
        return out


@dataclass(frozen=True)
class IntersectionReport:
    determinant: int

    @property
    def ok(self) -> bool:
        return self.determinant in (1, -1)

    def to_json(self) -> dict:
        return {"det": self.determinant, "unimodular": self.ok}


def _check_block(r: int, c: int, block) -> Optional[str]:
    (a, b), (d, e) = block
    where = f"block ({r},{c})"
    if r == c:
        if a != 0:
            return f"diagonal {where} entry (1,1) nonzero"
        if e != 0:
            return f"diagonal {where} entry (2,2) nonzero"
        if b not in (0, 1):
            return f"diagonal {where} entry (1,2) is {b}, expected 0 or 1"
        if d != 1 - b:
            return f"diagonal {where} entry (2,1) is {d}, expected {1 - b}"
        return None
    if r < c:
        if a != 0 or d != 0:
            return f"{where} above the diagonal has a nonzero first column"
        return None
    if a != 0 or b != 0:
        return f"{where} below the diagonal has a nonzero first row"
    return None


def is_null_form(v: SeifertMatrix) -> NullFormReport:
    """Blocks are scanned row by row; the first violation is reported."""
    g = v.genus
    for r in range(1, g + 1):
        for c in range(1, g + 1):
            problem = _check_block(r, c, v.block(r, c))
            if problem:
                return NullFormReport(False, problem, (r, c))
    return NullFormReport(True)


def zero_null_form(g: int) -> SeifertMatrix:
    if g < 1:
        raise SeifertShapeError(f"genus must be >= 1, got {g}")
    size = 2 * g
    rows = [[0] * size for _ in range(size)]
    for t in range(g):
        rows[2 * t + 1][2 * t] = 1
    return SeifertMatrix(tuple(tuple(row) for row in rows))


def validate_intersection(v: SeifertMatrix) -> IntersectionReport:
    """det(V - V^T); a genuine Seifert matrix has +-1. Informational only."""
    m = v.to_sympy()
    return IntersectionReport(int((m - m.T).det()))


def parse_matrix(text: str) -> SeifertMatrix:
    """One row per line of space-separated integers, or a JSON array of arrays."""
    stripped = text.strip()
    if stripped.startswith("["):
        try:
            rows = json.loads(stripped)
        except json.JSONDecodeError as e:
            raise MatrixSyntaxError(f"invalid JSON matrix: {e.msg}", line=e.lineno, column=e.colno)
        if not isinstance(rows, list) or not all(isinstance(row, list) for row in rows):
            raise MatrixSyntaxError("JSON matrix must be an array of arrays", line=1, column=1)
        for r, row in enumerate(rows, start=1):
            for x in row:
                if isinstance(x, bool) or not isinstance(x, int):
                    raise MatrixSyntaxError(f"row {r} holds non-integer {x!r}", line=1, column=1)
        return SeifertMatrix(tuple(tuple(row) for row in rows))

    rows = []
    for line_no, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        row = []
        for token in line.split():
            try:
                row.append(int(token))
            except ValueError:
                raise MatrixSyntaxError(f"invalid integer {token!r}", line=line_no, column=line.index(token) + 1)
        rows.append(tuple(row))
    if not rows:
        raise SeifertShapeError("empty matrix")
    return SeifertMatrix(tuple(rows))
