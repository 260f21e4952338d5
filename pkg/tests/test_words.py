import pytest
from hypothesis import given

from braidkit.maps import GeneratorMap, canonical_to_reduced
from braidkit.words import (
    Alphabet, Generator, MalformedWord, NonInvertibleLetter, Word, concat, free_reduce, invert, substitute,
)

from strategies import words_over

BR = Alphabet(["s1", "s"])
SB = Alphabet(["s1", "s", Generator("x1", invertible=False)])


def test_cancel_inverse_pair():
    assert free_reduce(BR.word("s1 s1^-1")) == BR.identity


def test_nested_cancellation():
    assert free_reduce(BR.word("s s1 s1^-1 s^-1")) == BR.identity


def test_noninvertible_letter_survives():
    assert free_reduce(SB.word("x1 s1 s1^-1")) == SB.word("x1")


def test_reduction_merges_exponents():
    w = free_reduce(BR.word("s s s^-3 s1 s1"))
    assert str(w) == "s^-1 s1^2"


def test_invert_examples():
    assert invert(BR.identity) == BR.identity
    assert invert(BR.word("s1 s")) == BR.word("s^-1 s1^-1")
    with pytest.raises(NonInvertibleLetter) as err:
        invert(SB.word("x1"))
    assert err.value.generator == "x1"


def test_word_invariants():
    with pytest.raises(MalformedWord):
        SB.word("x1^-1")
    with pytest.raises(MalformedWord):
        BR.word("s2")
    with pytest.raises(MalformedWord):
        Word(BR, (("s1", 0),))
    with pytest.raises(MalformedWord):
        BR.word("s1^^2")


def test_alphabet_invariants():
    for bad in (["a", "a"], ["a b"], ["a^2"], [""], []):
        with pytest.raises(ValueError):
            Alphabet(bad)


def test_text_roundtrip():
    w = BR.word("s^-2 s1 s^3")
    assert Word.parse(BR, str(w)) == w
    assert len(w) == 6


def test_substitute_examples():
    m = canonical_to_reduced("artin", 3)
    assert str(substitute(m.source.word("s2"), m)) == "s s1 s^-1"
    m = canonical_to_reduced("singular", 3)
    assert str(substitute(m.source.word("x2"), m)) == "s x1 s^-1"


def identity_map(alpha):
    return GeneratorMap(alpha, alpha, {g: alpha.gen(g) for g in alpha.names})


@given(words_over(SB))
def test_identity_map_is_reduction(w):
    assert substitute(w, identity_map(SB)) == free_reduce(w)


@given(words_over(SB))
def test_free_reduce_idempotent(w):
    once = free_reduce(w)
    assert free_reduce(once) == once
    assert once.is_reduced()


@given(words_over(BR))
def test_word_times_inverse_reduces_to_identity(w):
    assert free_reduce(w * invert(w)) == BR.identity


@given(words_over(SB, 6), words_over(SB, 6))
def test_substitute_respects_concatenation(u, v):
    m = canonical_to_reduced("singular", 4)
    src = m.source
    # transport u, v onto the canonical alphabet of SB_4 by name
    rename = {"s1": "s1", "s": "s2", "x1": "x1"}
    u2 = Word(src, tuple((rename[g], k) for g, k in u.letters))
    v2 = Word(src, tuple((rename[g], k) for g, k in v.letters))
    lhs = substitute(concat([u2, v2], src), m)
    rhs = free_reduce(substitute(u2, m) * substitute(v2, m))
    assert lhs == rhs


@given(words_over(SB))
def test_exponent_sum_is_reduction_invariant(w):
    for g in SB.names:
        assert free_reduce(w).exponent_sum(g) == w.exponent_sum(g)
