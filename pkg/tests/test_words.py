import random

import pytest
from hypothesis import given, strategies as st

from braidnt.garside import normal_form
from braidnt.words import (
    BraidError,
    BraidWord,
    StrandMismatch,
    conjugate_word,
    delete_strand,
    delta_word,
    exponent_sum,
    format_word,
    is_pure,
    linking_number,
    outer_crossing_count,
    parse_word,
    remove_strand,
    underlying_permutation,
    word_concat,
    word_inverse,
    word_power,
)
from helpers import random_pure_word, random_word


def W(*letters, n=4):
    return BraidWord(n, letters)


def test_group_operations_on_words():
    assert word_concat(W(1), W(-1)).letters == (1, -1)
    assert word_inverse(W(1, 2)).letters == (-2, -1)
    assert word_power(W(1), 3).letters == (1, 1, 1)
    assert word_power(W(1, 2), -2).letters == (-2, -1, -2, -1)
    with pytest.raises(StrandMismatch):
        word_concat(W(1), W(1, n=3))


def test_letter_range_is_checked():
    with pytest.raises(BraidError):
        BraidWord(4, (4,))
    with pytest.raises(BraidError):
        BraidWord(4, (0,))
    with pytest.raises(BraidError):
        BraidWord(1, ())


def test_permutations():
    assert underlying_permutation(W(1)) == (1, 0, 2, 3)
    assert not is_pure(W(1))
    assert underlying_permutation(delta_word(4)) == (3, 2, 1, 0)
    assert is_pure(W(1, 2, 3) ** 4)


def test_exponent_sum():
    assert exponent_sum(W(1, -2)) == 0
    assert exponent_sum(delta_word(4)) == 6
    assert exponent_sum(delta_word(4) ** 2) == 12


def test_linking_and_outer_crossings():
    assert linking_number(W(1, 1), 1, 2) == 1
    full = delta_word(4) ** 2
    for i in range(1, 5):
        assert outer_crossing_count(full, i) == 6
        for j in range(i + 1, 5):
            assert linking_number(full, i, j) == 1
    with pytest.raises(BraidError):
        linking_number(W(1), 1, 2)
    with pytest.raises(BraidError):
        outer_crossing_count(W(1), 5)


def test_remove_strand():
    assert remove_strand(W(1, 1), 3) == BraidWord(3, (1, 1))
    assert normal_form(remove_strand(delta_word(4) ** 2, 4)) == normal_form(delta_word(3) ** 2)
    with pytest.raises(BraidError):
        remove_strand(W(1), 1)
    word, end = delete_strand(W(1), 1)
    assert word == BraidWord(3, ()) and end == 2


def test_linking_numbers_survive_conjugation():
    rng = random.Random(11)
    for _ in range(50):
        x = random_pure_word(rng, 4, 10)
        w = random_word(rng, 4, 8)
        y = conjugate_word(x, w)
        perm = underlying_permutation(w)
        for i in range(4):
            for j in range(i + 1, 4):
                assert linking_number(x, i + 1, j + 1) == linking_number(y, perm[i] + 1, perm[j] + 1)


def test_text_round_trip():
    w = parse_word("n=5 s1 S4 s2")
    assert w == BraidWord(5, (1, -4, 2))
    assert parse_word(format_word(w)) == w
    assert parse_word("s1 s3").n == 4
    assert parse_word("", 4) == BraidWord(4, ())
    with pytest.raises(BraidError):
        parse_word("s1 t2")
    with pytest.raises(BraidError):
        parse_word("n=3 s1", 4)


@given(st.lists(st.integers(1, 3).flatmap(lambda i: st.sampled_from([i, -i])), max_size=30))
def test_format_parse_round_trip(letters):
    w = BraidWord(4, tuple(letters))
    assert parse_word(format_word(w)) == w
