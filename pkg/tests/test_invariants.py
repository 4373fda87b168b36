import random

import pytest

from algebra.braids import (
    braid_from_letters,
    comb,
    format_braid,
    identity_braid,
    parse_braid,
    parse_hl,
    stack,
)
from algebra.invariants import (
    CERT_LINKING,
    CERT_MU123,
    CERT_NONTRIVIAL,
    CERT_RF_TRIVIAL,
    CERT_TRIVIAL,
    LinkInput,
    lambda_of,
    mu123,
    nh,
    nh_constant,
    sublink_mu123,
)
from core.errors import ComponentCountError
from tests.helpers import random_braid

BORROMEAN = "strands:3 A(1,3) A(2,3) A(1,3)^-1 A(2,3)^-1"
FOUR_COMPONENT = (
    "components:4\n"
    "gamma4 = x1 x2 x1^-1 x2^-1 x3 x2 x1 x2^-1 x1^-1 x3^-1\n"
)


def braid_link(text: str) -> LinkInput:
    return LinkInput.from_braid(parse_braid(text))


def kinds(result) -> list[str]:
    return [c.kind for c in result.certificates]


def test_knot_and_two_components():
    result = nh(LinkInput.from_braid(identity_braid(1)))
    assert (result.exact, kinds(result)) == (0, [CERT_TRIVIAL])
    result = nh(braid_link("strands:2 A(1,2)^-1 A(1,2)^-1 A(1,2)^-1"))
    assert (result.lambda_, result.exact) == (3, 3)
    assert kinds(result) == [CERT_LINKING]


@pytest.mark.parametrize("k", range(-5, 6))
def test_two_components_equal_linking(k):
    b = braid_from_letters(2, [(1, 2, 1 if k > 0 else -1)] * abs(k))
    assert nh(LinkInput.from_braid(b)).exact == abs(k)


def test_three_components_nonzero_linking_is_exact():
    rng = random.Random(13)
    checked = 0
    while checked < 20:
        link = LinkInput.from_braid(random_braid(rng, 3, 8, min_len=1))
        lam = lambda_of(link)
        if lam == 0:
            continue
        result = nh(link)
        assert (result.lower, result.upper, result.exact) == (lam, lam, lam)
        checked += 1


def test_three_components_with_linking():
    link = braid_link("strands:3 A(1,2) A(1,3)^-1 A(2,3)")
    assert lambda_of(link) == 3
    result = nh(link)
    assert (result.lower, result.upper, result.exact) == (3, 3, 3)


def test_borromean_rings():
    result = nh(braid_link(BORROMEAN))
    assert result.lambda_ == 0
    assert result.mu123 == 1
    assert result.exact == 2
    assert kinds(result) == [CERT_MU123]


def test_mu123_of_commutator_power():
    hl = parse_hl("components:3\ngamma3 = " + " ".join(["x1 x2 x1^-1 x2^-1"] * 4))
    assert mu123(LinkInput.from_hl(hl)) == 4
    braid = parse_braid("strands:3 " + " ".join([BORROMEAN.split(" ", 1)[1]] * 4))
    assert mu123(LinkInput.from_braid(braid)) == 4
    assert nh(LinkInput.from_hl(hl)).exact == 2


def test_mu123_needs_three_components():
    with pytest.raises(ComponentCountError):
        mu123(LinkInput.from_braid(identity_braid(4)))


def test_trivial_three_component_link():
    result = nh(braid_link("strands:3 A(1,2) A(2,3) A(2,3)^-1 A(1,2)^-1"))
    assert (result.exact, result.mu123) == (0, 0)
    assert kinds(result) == [CERT_RF_TRIVIAL]


def test_four_component_hl_example():
    result = nh(LinkInput.from_hl(parse_hl(FOUR_COMPONENT)))
    assert result.lambda_ == 0
    assert (result.lower, result.upper, result.exact) == (2, 2, 2)
    assert CERT_NONTRIVIAL in kinds(result)


def test_four_component_unlink():
    result = nh(LinkInput.from_braid(identity_braid(4)))
    assert (result.lower, result.upper, result.exact) == (0, 0, 0)


def test_flat_and_stacked_braids_agree():
    a24 = parse_braid("strands:4 A(2,4)")
    a14 = parse_braid("strands:4 A(1,4)")
    stacked = stack(a24, a14)
    flat = braid_from_letters(4, [(2, 4, 1), (1, 4, 1)])
    reparsed = parse_braid(format_braid(stacked))
    results = [nh(LinkInput.from_braid(b)).to_json() for b in (stacked, flat, reparsed)]
    assert results[0] == results[1] == results[2]
    assert (results[0]["lambda"], results[0]["nh"]["exact"]) == (2, 2)


def test_bounds_and_parity():
    rng = random.Random(8)
    for _ in range(100):
        n = rng.randint(4, 5)
        result = nh(LinkInput.from_braid(random_braid(rng, n, 12)))
        lam = result.lambda_
        assert lam <= result.lower <= result.upper <= lam + nh_constant(n)
        assert result.lower % 2 == result.upper % 2 == lam % 2
        assert result.nd == result.to_json()["nh"]


def test_inserting_cancelling_pairs_changes_nothing():
    rng = random.Random(17)
    for _ in range(15):
        n = rng.randint(3, 4)
        b = random_braid(rng, n, 6)
        letters = [(l.i, l.j, l.sign) for l in b.letters]
        i, j = sorted(rng.sample(range(1, n + 1), 2))
        position = rng.randint(0, len(letters))
        padded = letters[:position] + [(i, j, 1), (i, j, -1)] + letters[position:]
        assert nh(LinkInput.from_braid(braid_from_letters(n, padded))).to_json() == nh(
            LinkInput.from_braid(b)
        ).to_json()


def test_stacking_is_subadditive():
    rng = random.Random(23)
    pairs = [(random_braid(rng, n, 4), random_braid(rng, n, 4)) for n in (2, 3) for _ in range(10)]
    pairs += [
        (braid_from_letters(4, [(2, 4, 1)]), braid_from_letters(4, [(1, 4, 1)])),
        (braid_from_letters(4, [(1, 3, 1)]), braid_from_letters(4, [(2, 3, 1)])),
        (braid_from_letters(4, [(1, 4, -1)]), braid_from_letters(4, [(3, 4, 1)])),
    ]
    for b1, b2 in pairs:
        flat = braid_from_letters(b1.strands, [(l.i, l.j, l.sign) for l in b1.letters + b2.letters])
        total = nh(LinkInput.from_braid(flat))
        parts = nh(LinkInput.from_braid(b1)).upper + nh(LinkInput.from_braid(b2)).upper
        assert total.upper <= parts


def test_braid_and_combed_hl_agree():
    rng = random.Random(31)
    for _ in range(15):
        n = rng.randint(2, 4)
        b = random_braid(rng, n, 6)
        from_braid = nh(LinkInput.from_braid(b))
        from_hl = nh(LinkInput.from_hl(comb(b)))
        assert from_braid.to_json() == from_hl.to_json()


def test_sublink_mu123_agrees_between_inputs():
    rng = random.Random(40)
    for _ in range(15):
        b = random_braid(rng, 4, 6)
        braid_input = LinkInput.from_braid(b)
        hl_input = LinkInput.from_hl(comb(b))
        for strands in ((1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4)):
            assert sublink_mu123(braid_input, strands) == sublink_mu123(hl_input, strands)


def test_result_json_shape():
    data = nh(braid_link(BORROMEAN)).to_json()
    assert data["nh"] == {"exact": 2, "lower": 2, "upper": 2}
    assert data["nd_equals_nh"] is True
    assert data["parity"] == 0
    assert data["mu123"] == 1
    assert data["certificates"][0]["kind"] == CERT_MU123


def test_link_input_validation():
    with pytest.raises(ValueError):
        LinkInput(components=2)
    with pytest.raises(ComponentCountError):
        LinkInput(components=0, braid=identity_braid(1))
