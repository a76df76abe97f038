import json

import pytest

from ascseq.core import contains, is_ascent_sequence
from ascseq.enumeration import count_levels
from ascseq.extremal import (ExtremalParams, confirm_threshold, emptiness_threshold,
                             specialized_threshold, witness, witness_valid)

GRID = [(a, b) for a in (2, 3, 4) for b in (2, 3, 4)]


def test_params_validation():
    with pytest.raises(ValueError):
        ExtremalParams(1, 2)
    with pytest.raises(ValueError):
        ExtremalParams(2, 0)
    assert ExtremalParams(3, 2).patterns == ((0, 0, 0), (0, 1, 2))


def test_bounds():
    assert emptiness_threshold(ExtremalParams(3, 2)) == 5
    assert emptiness_threshold(ExtremalParams(3, 3)) == 9
    assert emptiness_threshold(ExtremalParams(2, 1)) == 2
    assert specialized_threshold(ExtremalParams(4, 2)) == 7
    assert specialized_threshold(ExtremalParams(4, 3)) is None


def test_witness_shape():
    assert witness(ExtremalParams(3, 3)) == (0, 1, 0, 1, 3, 3, 2, 2)
    assert witness(ExtremalParams(3, 1)) == (0, 0)


@pytest.mark.parametrize("a, b", GRID + [(2, 1), (5, 1), (5, 2)])
def test_bound_is_tight(a, b):
    p = ExtremalParams(a, b)
    N = emptiness_threshold(p)
    counts = count_levels(N, p.patterns)
    assert counts[N] == 0 and counts[N - 1] > 0
    w = witness(p)
    assert witness_valid(p)
    assert is_ascent_sequence(w) and not any(contains(w, q) for q in p.patterns)


@pytest.mark.parametrize("a", range(2, 7))
def test_specialized_bound_for_012(a):
    p = ExtremalParams(a, 2)
    counts = count_levels(2 * a + 1, p.patterns)
    assert all(c == 0 for c in counts[2 * a - 1:])
    assert specialized_threshold(p) == emptiness_threshold(p)


def test_allzeros_values():
    assert count_levels(7, "000,012")[1:] == [1, 2, 3, 3, 0, 0, 0]


def test_report():
    r = confirm_threshold(ExtremalParams(3, 3), n_probe=10)
    assert r.observed_threshold == 9 and r.observed_max_length == 8
    assert r.empty_at_general_bound and r.witness == "01013322" and r.witness_valid
    assert r.binding == "general"
    assert json.loads(r.to_json())["general_bound"] == 9
    r2 = confirm_threshold(ExtremalParams(3, 2))
    assert r2.binding == "both"
    r3 = confirm_threshold(ExtremalParams(3, 3), n_probe=5)
    assert r3.observed_threshold is None and r3.empty_at_general_bound is None
    with pytest.raises(ValueError):
        confirm_threshold(ExtremalParams(3, 3), n_probe=0)
