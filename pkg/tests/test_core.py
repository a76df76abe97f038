import pytest
from hypothesis import given, strategies as st

from ascseq.core import (LENGTH3_PATTERNS, PatternSet, asc, contains,
                         contains_ending_at_last, format_word, is_ascent_sequence,
                         is_reduced, is_rgf, parse_word, reduce)
from ascseq.enumeration import all_ascent_sequences


def brute_contains(w, p):
    from itertools import combinations
    return any(reduce([w[i] for i in idx]) == tuple(p)
               for idx in combinations(range(len(w)), len(p)))


words = st.lists(st.integers(0, 6), max_size=9).map(tuple)
patterns = st.lists(st.integers(0, 3), min_size=1, max_size=4).map(reduce)


@pytest.mark.parametrize("w, ok", [
    ("0", True), ("01", True), ("0102", True), ("01013", True), ("01014", False),
    ("0120334", True), ("1", False), ("", True), ("00", True),
])
def test_is_ascent_sequence(w, ok):
    assert is_ascent_sequence(parse_word(w)) is ok


def test_asc():
    assert asc((0, 1, 0, 2, 3, 1)) == 3
    assert asc(()) == 0


def test_parse_and_format_roundtrip():
    assert parse_word("01210") == (0, 1, 2, 1, 0)
    assert parse_word("0,1,2,10,11") == (0, 1, 2, 10, 11)
    assert format_word((0, 1, 2)) == "012"
    assert format_word((0, 1, 10)) == "0,1,10"
    with pytest.raises(ValueError):
        parse_word("01a")


@given(st.lists(st.integers(0, 30), max_size=12).map(tuple))
def test_format_parse_inverse(w):
    assert parse_word(format_word(w)) == w


def test_reduce_examples():
    assert reduce((5, 2, 2, 9)) == (1, 0, 0, 2)
    assert reduce(()) == ()
    assert is_reduced((0, 2, 1))
    assert not is_reduced((0, 2))


@given(words)
def test_reduce_idempotent(w):
    assert reduce(reduce(w)) == reduce(w)


@given(words, st.integers(0, 5), st.integers(1, 4))
def test_reduce_invariant_under_monotone_maps(w, shift, scale):
    assert reduce([scale * v + shift for v in w]) == reduce(w)


@given(words, patterns)
def test_contains_matches_brute_force(w, p):
    assert contains(w, p) == brute_contains(w, p)


@given(words, patterns)
def test_subpattern_monotonicity(w, p):
    # any reduced subpattern of a contained pattern is contained too
    if contains(w, p):
        for i in range(len(p)):
            assert contains(w, reduce(p[:i] + p[i + 1:]))


def test_empty_pattern_is_contained_everywhere():
    assert contains((), ())
    assert contains((0, 1), ())


@given(words, patterns)
def test_ending_at_last_is_the_new_part(w, p):
    if not w:
        return
    expect = contains(w, p) and not contains(w[:-1], p)
    if expect:
        assert contains_ending_at_last(w, p)
    if contains_ending_at_last(w, p):
        assert contains(w, p)


def test_length3_patterns():
    assert len(LENGTH3_PATTERNS) == 13
    assert all(is_reduced(p) and len(p) == 3 for p in LENGTH3_PATTERNS)


def test_rgf_dichotomy():
    # A_p(n) is all RGFs exactly when p is a subpattern of 01012
    rgf_forcing = {p for p in LENGTH3_PATTERNS if contains((0, 1, 0, 1, 2), p)}
    assert rgf_forcing == {(0, 0, 1), (0, 1, 0), (0, 1, 1), (0, 1, 2), (1, 0, 1), (1, 0, 2)}
    seqs = [w for n in range(1, 10) for w in all_ascent_sequences(n)]
    for p in LENGTH3_PATTERNS:
        all_rgf = all(is_rgf(w) for w in seqs if not contains(w, p))
        assert all_rgf == (p in rgf_forcing), p


def test_patternset_canonical():
    a = PatternSet.parse("012,000")
    b = PatternSet.of([(0, 0, 0), "012"])
    assert a == b and a.key() == "000,012" and str(a) == "000,012"
    assert len(PatternSet.parse("")) == 0
    with pytest.raises(ValueError):
        PatternSet.parse("02")


def test_patternset_drop_redundant():
    ps = PatternSet.parse("01,012", drop_redundant=True)
    assert ps.key() == "01"
    assert ps.dropped == ((0, 1, 2),)
