import random

import pytest

from algebra.free_words import EMPTY, commutator, exponent_sum, generator, parse_word
from algebra.hall import (
    as_word,
    c_constant,
    c_constant_table,
    decompose,
    format_commutator,
    generate,
    has_repeated_index,
    lie_polynomial,
    parse_commutator,
    product_word,
    witt,
)
from algebra.magnus import rf_equal
from core.errors import CommutatorSyntaxError, RankError
from tests.helpers import random_word


def test_generate_rank_two():
    basis = generate(2, 3)
    assert [format_commutator(c) for c in basis] == [
        "x1", "x2", "[x1,x2]", "[x1,[x1,x2]]", "[x2,[x1,x2]]",
    ]
    assert basis.to_json()[2] == {"bracket": "[x1,x2]", "weight": 2}


@pytest.mark.parametrize("n,w,expected", [
    (2, 2, 1), (3, 2, 3), (3, 3, 8), (2, 4, 3), (3, 4, 18), (4, 4, 60), (2, 1, 2),
])
def test_witt_values(n, w, expected):
    assert witt(n, w) == expected


def test_generated_counts_match_witt():
    for n in range(1, 5):
        for wmax in range(1, 5):
            counts = generate(n, wmax).count_by_weight()
            for w in range(1, wmax + 1):
                assert counts.get(w, 0) == witt(n, w)


def test_nonrepeating_filter():
    basis = generate(3, 3, True)
    assert len(basis) == 8
    assert not any(has_repeated_index(c) for c in basis)
    assert [format_commutator(c) for c in basis.of_weight(3)] == ["[x2,[x1,x3]]", "[x3,[x1,x2]]"]


def test_weights_are_ordered_by_bracket_text():
    for nonrepeating in (False, True):
        basis = generate(3, 4, nonrepeating)
        for w in range(1, 5):
            names = [format_commutator(c) for c in basis.of_weight(w)]
            assert names == sorted(names)
    names = [format_commutator(c) for c in generate(3, 4)]
    assert names.index("[[x1,x2],[x1,x3]]") < names.index("[x3,[x3,[x2,x3]]]")


def test_c_constants():
    assert c_constant(2) == 0
    assert c_constant(3) == 2
    assert c_constant(4) == 32
    assert c_constant(4, nonrepeating=True) == 14
    assert c_constant_table(3) == [
        {"n": 2, "unfiltered": 0, "nonrepeating": 0},
        {"n": 3, "unfiltered": 2, "nonrepeating": 2},
    ]
    with pytest.raises(ValueError):
        c_constant(1)


def test_commutator_text_round_trip():
    for c in generate(3, 4):
        assert parse_commutator(format_commutator(c)) == c
    assert format_commutator(parse_commutator(" [ x1 , [x1,x2] ] ")) == "[x1,[x1,x2]]"


@pytest.mark.parametrize("text", ["[x1,x2", "[x1 x2]", "x0", "[x1,x2]]", "y1", ""])
def test_commutator_syntax_errors(text):
    with pytest.raises(CommutatorSyntaxError):
        parse_commutator(text)


def test_lie_polynomial_of_bracket():
    c = parse_commutator("[x1,x2]")
    assert dict(lie_polynomial(c, 2).terms) == {(1, 2): 1, (2, 1): -1}
    assert as_word(c) == commutator(generator(1), generator(2))


def test_decompose_weight_three_commutator():
    gamma = as_word(parse_commutator("[[x1,x2],x3]"))
    nonzero = {format_commutator(c): a for c, a in decompose(gamma, 3) if a}
    assert nonzero == {"[x3,[x1,x2]]": -1}


def test_decompose_trivial_and_generators():
    assert not any(a for _, a in decompose(EMPTY, 3))
    nonzero = {format_commutator(c): a for c, a in decompose(parse_word("x2 x1^3"), 2) if a}
    assert nonzero == {"x1": 3, "x2": 1, "[x1,x2]": -3}


def test_decompose_reproduces_random_words():
    rng = random.Random(7)
    for _ in range(200):
        n = rng.randint(1, 4)
        w = random_word(rng, n, 12)
        factors = decompose(w, n)
        assert rf_equal(product_word(factors), w, n)
        weight_one = {c.index: a for c, a in factors if c.is_leaf}
        assert weight_one == {i: exponent_sum(w, i) for i in range(1, n + 1)}


def test_decompose_checks_rank():
    with pytest.raises(RankError):
        decompose(generator(4), 3)
