"""Word layer.  The oracle is a naive quadratic reducer that rescans the
whole sequence after every cancellation."""

from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from autcosets.words import (
    EMPTY,
    WordSyntaxError,
    concat,
    format_word,
    generator_word,
    invert_word,
    max_generator,
    parse_word,
    reduce,
    substitute,
)


def naive_reduce(letters):
    out = [tuple(letter) for letter in letters]
    changed = True
    while changed:
        changed = False
        for i in range(len(out) - 1):
            if out[i][0] == out[i + 1][0] and out[i][1] == -out[i + 1][1]:
                del out[i : i + 2]
                changed = True
                break
    return tuple(out)


letters_st = st.lists(
    st.tuples(st.integers(1, 5), st.sampled_from((1, -1))), max_size=40
)


@given(letters_st)
def test_reduce_matches_naive_oracle(seq):
    assert reduce(seq) == naive_reduce(seq)


@given(letters_st)
def test_reduce_idempotent_and_fully_reduced(seq):
    w = reduce(seq)
    assert reduce(w) == w
    assert all(
        not (w[i][0] == w[i + 1][0] and w[i][1] == -w[i + 1][1])
        for i in range(len(w) - 1)
    )


@given(letters_st, letters_st)
def test_concat_matches_reduction_of_concatenation(a, b):
    wa, wb = reduce(a), reduce(b)
    assert concat(wa, wb) == naive_reduce(list(wa) + list(wb))


@given(letters_st, letters_st, letters_st)
def test_concat_associative(a, b, c):
    wa, wb, wc = reduce(a), reduce(b), reduce(c)
    assert concat(concat(wa, wb), wc) == concat(wa, concat(wb, wc))


@given(letters_st)
def test_identity_and_inverse_laws(seq):
    w = reduce(seq)
    assert concat(w, EMPTY) == w
    assert concat(EMPTY, w) == w
    assert concat(w, invert_word(w)) == EMPTY
    assert concat(invert_word(w), w) == EMPTY
    assert invert_word(invert_word(w)) == w


def test_reduce_frozen_cases():
    assert reduce([]) == ()
    assert reduce([(1, 1), (1, -1)]) == ()
    assert reduce([(1, 1), (2, 1), (2, -1), (3, 1)]) == ((1, 1), (3, 1))
    assert reduce([(2, -1), (1, 1), (1, -1), (2, 1)]) == ()
    assert reduce([(1, 1), (1, 1)]) == ((1, 1), (1, 1))


def test_reduce_rejects_bad_letters():
    with pytest.raises(ValueError):
        reduce([(0, 1)])
    with pytest.raises(ValueError):
        reduce([(-2, -1)])
    with pytest.raises(ValueError):
        reduce([(1, 2)])
    with pytest.raises(ValueError):
        reduce([(1, 0)])


def test_parse_frozen_cases():
    assert parse_word("x1 x2^-1") == ((1, 1), (2, -1))
    assert parse_word("") == ()
    assert parse_word("   ") == ()
    assert parse_word("x3") == ((3, 1),)
    assert parse_word("x12^-1") == ((12, -1),)
    # parsing reduces
    assert parse_word("x1 x1^-1") == ()
    assert parse_word("x2 x2") == ((2, 1), (2, 1))


@pytest.mark.parametrize(
    "text",
    ["x0", "x0^-1", "x", "y1", "x1^1", "x1^-2", "x-1", "x1^", "1", "x1x2", "X1"],
)
def test_parse_rejects_bad_tokens(text):
    with pytest.raises(WordSyntaxError):
        parse_word(text)


@given(letters_st)
def test_format_parse_roundtrip(seq):
    w = reduce(seq)
    assert parse_word(format_word(w)) == w


def test_format_frozen():
    assert format_word(()) == ""
    assert format_word(((1, 1), (2, -1), (10, 1))) == "x1 x2^-1 x10"


def test_substitute_frozen():
    images = {1: ((1, 1), (2, 1))}
    assert substitute(images, ((1, -1),)) == ((2, -1), (1, -1))
    assert substitute(images, ((3, 1),)) == ((3, 1),)
    # x1 -> x2, applied to x2^-1 x1 x2 gives x2^-1 x2 x2 = x2
    assert substitute({1: ((2, 1),)}, ((2, -1), (1, 1), (2, 1))) == ((2, 1),)


@given(letters_st, letters_st)
def test_substitute_is_a_homomorphism(a, b):
    images = {1: ((2, 1), (3, -1)), 2: ((1, 1), (1, 1)), 4: ()}
    wa, wb = reduce(a), reduce(b)
    assert substitute(images, concat(wa, wb)) == concat(
        substitute(images, wa), substitute(images, wb)
    )
    assert substitute(images, invert_word(wa)) == invert_word(substitute(images, wa))


def test_helpers():
    assert generator_word(4) == ((4, 1),)
    with pytest.raises(ValueError):
        generator_word(0)
    assert max_generator(()) == 0
    assert max_generator(((3, 1), (7, -1), (2, 1))) == 7
