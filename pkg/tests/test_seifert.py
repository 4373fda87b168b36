import random
from pathlib import Path

import pytest

from algebra.seifert import (
    SeifertMatrix,
    is_null_form,
    parse_matrix,
    validate_intersection,
    zero_null_form,
)
from core.errors import MatrixSyntaxError, SeifertShapeError

SAMPLES = Path(__file__).resolve().parent.parent / "samples"


def matrix(rows) -> SeifertMatrix:
    return SeifertMatrix(tuple(tuple(row) for row in rows))


def is_star(i: int, j: int) -> bool:
    r, c = i // 2, j // 2
    if r < c:
        return j % 2 == 1
    if r > c:
        return i % 2 == 1
    return False


def test_small_examples():
    assert is_null_form(matrix([[0, 1], [0, 0]]))
    assert is_null_form(matrix([[0, 0], [1, 0]]))
    report = is_null_form(matrix([[1, 0], [1, 0]]))
    assert not report
    assert report.block == (1, 1)
    assert report.diagnostic == "diagonal block (1,1) entry (1,1) nonzero"
    assert not is_null_form(matrix([[0, 1], [1, 0]]))


def test_sample_file_is_null_form():
    v = parse_matrix((SAMPLES / "null_form.txt").read_text())
    assert v.genus == 2
    assert is_null_form(v).to_json() == {"null_form": True, "diagnostic": None, "block": None}


@pytest.mark.parametrize("g", [1, 2, 3])
def test_single_entry_perturbations(g):
    base = zero_null_form(g)
    assert is_null_form(base)
    size = 2 * g
    for i in range(size):
        for j in range(size):
            rows = [list(row) for row in base.entries]
            rows[i][j] += 1
            report = is_null_form(matrix(rows))
            if is_star(i, j):
                assert report, (i, j)
            else:
                assert not report, (i, j)
                assert report.block == (i // 2 + 1, j // 2 + 1)


def test_random_star_entries_keep_null_form():
    rng = random.Random(6)
    for _ in range(50):
        g = rng.randint(1, 4)
        rows = [list(row) for row in zero_null_form(g).entries]
        for t in range(g):
            if rng.random() < 0.5:
                rows[2 * t][2 * t + 1], rows[2 * t + 1][2 * t] = 1, 0
        for i in range(2 * g):
            for j in range(2 * g):
                if is_star(i, j):
                    rows[i][j] = rng.randint(-5, 5)
        assert is_null_form(matrix(rows))


def test_intersection_determinant():
    assert validate_intersection(zero_null_form(3)).to_json() == {"det": 1, "unimodular": True}
    assert validate_intersection(matrix([[0, 1], [0, 0]])).ok
    report = validate_intersection(matrix([[0, 0], [0, 0]]))
    assert report.determinant == 0
    assert not report.ok


def test_parse_formats():
    assert parse_matrix("[[0, 0], [1, 0]]") == parse_matrix("0 0\n\n1 0\n")
    with pytest.raises(MatrixSyntaxError) as info:
        parse_matrix("0 1\n0 x")
    assert (info.value.line, info.value.column) == (2, 3)
    with pytest.raises(MatrixSyntaxError):
        parse_matrix("[[0, true], [1, 0]]")
    with pytest.raises(MatrixSyntaxError):
        parse_matrix("[[0, 1], [1, 0]")


@pytest.mark.parametrize("text", ["0", "0 1\n1", "[[0, 1], [1]]", "  \n"])
def test_shape_errors(text):
    with pytest.raises(SeifertShapeError):
        parse_matrix(text)


def test_zero_null_form_needs_positive_genus():
    with pytest.raises(SeifertShapeError):
        zero_null_form(0)
