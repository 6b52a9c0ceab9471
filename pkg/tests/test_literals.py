import random

import pytest
from hypothesis import given, settings, strategies as st

from cinorm import (
    aff_z,
    affz_element,
    bar,
    binary_word,
    free_group,
    free_word,
    from_literal,
    identity,
    perm_from_cycles,
    product,
    sl_z,
    symmetric,
    to_literal,
    wreath_zn,
    z2_infinity,
)
from cinorm.sampling import random_element

S3 = symmetric(3)

CASES = [
    (symmetric(5), "(1 2)(3 4 5)"),
    (symmetric(5), "()"),
    (free_group(2), "a b A"),
    (free_group(2), "1"),
    (aff_z(), "z^3 t"),
    (aff_z(), "z^-2"),
    (aff_z(), "t"),
    (z2_infinity(), "1011"),
    (sl_z(2), "[[1,5],[0,1]]"),
    (wreath_zn(S3, 3), "{0:(1 2); 2:(1 3)}s^1"),
    (bar(S3), "((1 2);(1 3))t"),
    (bar(S3), "((1 2 3);())"),
    (product(S3, free_group(2)), "((1 2);a b)"),
]


@pytest.mark.parametrize("d,text", CASES)
def test_parse_format_round_trip(d, text):
    e = from_literal(d, text)
    assert from_literal(d, to_literal(e)) == e


def test_specific_values():
    assert from_literal(aff_z(), "z^3 t") == affz_element(3, 1)
    assert from_literal(free_group(2), "a b A") == free_word(free_group(2), (1, 2, -1))
    assert from_literal(z2_infinity(), "10110") == binary_word((1, 0, 1, 1))
    assert from_literal(symmetric(4), "1") == identity(symmetric(4))
    assert to_literal(identity(symmetric(4))) == "()"
    assert to_literal(perm_from_cycles(symmetric(4), (1, 2), (3, 4))) == "(1 2)(3 4)"


def test_bad_literals():
    with pytest.raises(ValueError):
        from_literal(symmetric(3), "(1 5)")
    with pytest.raises(ValueError):
        from_literal(free_group(1), "a b")  # b outside rank-1 alphabet
    with pytest.raises(ValueError):
        from_literal(z2_infinity(), "102")


FAMILIES = [d for d, _ in CASES]


@settings(max_examples=80, deadline=None)
@given(st.sampled_from(range(len(FAMILIES))), st.integers(0, 10 ** 9))
def test_round_trip_random(idx, seed):
    d = FAMILIES[idx]
    e = random_element(d, random.Random(seed), size=5)
    assert from_literal(d, to_literal(e)) == e
