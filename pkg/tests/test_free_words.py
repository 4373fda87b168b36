import random

import pytest

from algebra.free_words import (
    EMPTY,
    Letter,
    Word,
    check_rank,
    commutator,
    concat,
    delete_positions,
    exponent_sum,
    format_word,
    free_reduce,
    generator,
    invert,
    is_freely_trivial,
    max_index,
    parse_word,
    power,
    substitute,
)
from core.errors import RankError, WordSyntaxError
from tests.helpers import random_word


def test_parse_and_format():
    w = parse_word("x1 x2^-1 x3")
    assert w.to_ints() == [1, -2, 3]
    assert format_word(w) == "x1 x2^-1 x3"
    assert parse_word("e") == EMPTY
    assert parse_word("   ") == EMPTY
    assert format_word(EMPTY) == "e"


def test_parse_power_shorthand():
    assert parse_word("x1^3 x2^-2").to_ints() == [1, 1, 1, -2, -2]


@pytest.mark.parametrize("text, column", [
    ("x1 y2", 4),
    ("x0", 1),
    ("x1 x2^0", 4),
    ("x1^-", 1),
])
def test_parse_errors_carry_column(text, column):
    with pytest.raises(WordSyntaxError) as info:
        parse_word(text)
    assert info.value.column == column


def test_words_are_stored_raw():
    w = parse_word("x1 x1^-1 x2")
    assert len(w) == 3
    assert free_reduce(w) == generator(2)
    assert w != free_reduce(w)


def test_commutator_is_unreduced():
    c = commutator(generator(1), generator(2))
    assert c.to_ints() == [1, 2, -1, -2]
    assert is_freely_trivial(commutator(generator(1), generator(1)))
    assert len(commutator(generator(1), generator(1))) == 4


def test_power_and_exponent_sum():
    w = power(parse_word("x1 x2^-1"), -2)
    assert w.to_ints() == [2, -1, 2, -1]
    assert exponent_sum(w, 1) == -2
    assert exponent_sum(w, 2) == 2
    assert power(w, 0) == EMPTY


def test_rank_checks():
    w = parse_word("x1 x4")
    assert max_index(w) == 4
    check_rank(w, 4)
    with pytest.raises(RankError):
        check_rank(w, 3)


def test_substitute_and_delete():
    w = parse_word("x1 x2^-1")
    images = {1: parse_word("x2 x1"), 2: parse_word("x3")}
    assert substitute(w, images).to_ints() == [2, 1, -3]
    assert substitute(w, [parse_word("x2")]).to_ints() == [2, -2]
    assert delete_positions(parse_word("x1 x2 x3"), [0, 2]) == generator(2)


def test_letter_validation():
    with pytest.raises(ValueError):
        Letter(0, 1)
    with pytest.raises(ValueError):
        Letter(1, 2)


def test_reduction_laws_on_random_words():
    rng = random.Random(7)
    for _ in range(200):
        u = random_word(rng, 3, 12)
        v = random_word(rng, 3, 12)
        assert free_reduce(free_reduce(u)) == free_reduce(u)
        assert invert(invert(u)) == u
        assert is_freely_trivial(concat(u, invert(u)))
        assert free_reduce(u * v) == free_reduce(free_reduce(u) * free_reduce(v))
        assert ~(u * v) == ~v * ~u
