import random

import pytest

from algebra.free_words import EMPTY, commutator, exponent_sum, generator, invert, parse_word, power
from algebra.hall import as_word, generate, has_repeated_index
from algebra.magnus import (
    ReducedPolynomial,
    coefficient,
    expand,
    first_nonvanishing,
    max_terms,
    rf_equal,
    rf_is_trivial,
)
from core.config import Config, configure
from core.errors import RankError
from tests.helpers import random_word


def test_generator_expansions():
    assert expand(generator(1), 2) == ReducedPolynomial(2, {(): 1, (1,): 1})
    assert expand(generator(1, -1), 2) == ReducedPolynomial(2, {(): 1, (1,): -1})
    assert expand(EMPTY, 3).is_one()
    # X1 X1 vanishes, so x1^k expands to 1 + k X1
    assert expand(power(generator(1), 5), 1) == ReducedPolynomial(1, {(): 1, (1,): 5})


def test_commutator_coefficients():
    p = expand(commutator(generator(1), generator(2)), 2)
    assert coefficient(p, (1, 2)) == 1
    assert coefficient(p, (2, 1)) == -1
    assert coefficient(p, (1,)) == 0
    assert first_nonvanishing(p) == ((1, 2), 1)


def test_first_nonvanishing_of_identity():
    assert first_nonvanishing(expand(parse_word("x1 x1^-1"), 1)) is None


def test_rf_distinguishes_order():
    assert not rf_equal(parse_word("x1 x2"), parse_word("x2 x1"), 2)
    assert rf_equal(parse_word("x1 x2 x2^-1"), generator(1), 2)


def test_rank_errors():
    with pytest.raises(RankError):
        expand(generator(3), 2)
    with pytest.raises(RankError):
        expand(generator(1), 1) * expand(generator(1), 2)
    configure(Config(rank_cap=3))
    with pytest.raises(RankError):
        expand(generator(1), 4)


def test_degree_one_coefficients_are_exponent_sums():
    rng = random.Random(4)
    for _ in range(100):
        w = random_word(rng, 4, 15)
        p = expand(w, 4)
        for i in range(1, 5):
            assert coefficient(p, (i,)) == exponent_sum(w, i)


def test_term_count_is_bounded():
    rng = random.Random(3)
    for _ in range(20):
        w = random_word(rng, 4, 30)
        assert len(expand(w, 4).terms) <= max_terms(4)
    assert max_terms(3) == 16


def test_expansion_is_multiplicative():
    rng = random.Random(11)
    for _ in range(100):
        u = random_word(rng, 3, 10)
        v = random_word(rng, 3, 10)
        assert expand(u * v, 3) == expand(u, 3) * expand(v, 3)
        assert (expand(u, 3) * expand(invert(u), 3)).is_one()


def test_conjugates_of_one_generator_commute():
    rng = random.Random(5)
    for _ in range(100):
        g = random_word(rng, 3, 6)
        h = random_word(rng, 3, 6)
        i = rng.randint(1, 3)
        a = g * generator(i) * ~g
        b = h * generator(i, rng.choice([1, -1])) * ~h
        assert rf_is_trivial(commutator(a, b), 3)


def test_repeated_index_commutators_are_trivial():
    for n in (2, 3):
        for c in generate(n, 4):
            if has_repeated_index(c):
                assert rf_is_trivial(as_word(c), n)
            else:
                assert not rf_is_trivial(as_word(c), n)


def test_polynomial_arithmetic():
    x1 = ReducedPolynomial.variable(1, 2)
    x2 = ReducedPolynomial.variable(2, 2)
    assert (x1 * x1) == ReducedPolynomial.zero(2)
    assert (x1 * x2 - x2 * x1).coefficient((2, 1)) == -1
    assert (2 * x1 + x1).coefficient((1,)) == 3
    assert str(ReducedPolynomial.one(2) + x1 * x2) == "1 + X1X2"
    assert (x1 + x2).to_json() == [{"mono": [1], "coef": 1}, {"mono": [2], "coef": 1}]
