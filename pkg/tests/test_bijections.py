from itertools import product

import pytest

from ascseq import bijections as bij
from ascseq.closedforms import dduu_avoiding_dyck_count
from ascseq.core import contains, is_ascent_sequence, is_rgf, parse_word
from ascseq.enumeration import generate
from ascseq.errors import DomainError

EXAMPLE_D = "UUUDDUDUUDDUDUUDDDUDUUDD"


def dduu_free(n):
    return [d for d in bij.dyck_words(n) if bij.avoids_dduu(d)]


def w(s):
    return parse_word(s)


def test_u_heights_examples():
    assert bij.u_heights("UUUDDUDUUDDDUD") == w("0121120")
    assert bij.u_heights(EXAMPLE_D) == w("012112112001")
    assert bij.u_heights("UD") == (0,)


def test_from_u_heights_examples():
    assert bij.from_u_heights(w("012112112001")) == EXAMPLE_D
    assert bij.from_u_heights((0,)) == "UD"
    assert bij.from_u_heights((0, 0, 0)) == "UDUDUD"
    with pytest.raises(DomainError):
        bij.from_u_heights((0, 2))


def test_parse_dyck():
    assert bij.parse_dyck("(())") == "UUDD"
    assert bij.parse_dyck(" uudd ") == "UUDD"
    with pytest.raises(DomainError):
        bij.parse_dyck("UDD")


def test_avoids_dduu():
    assert not bij.avoids_dduu("UUDDUUDD")
    assert not bij.avoids_dduu("UUDDDUUD")
    assert bij.avoids_dduu("UUDUDD")
    assert bij.avoids_dduu(EXAMPLE_D)


def test_phi_worked_example():
    steps = bij.phi_steps(EXAMPLE_D)
    assert steps == [w("012112112001"), w("012134334001"),
                     w("012134356001"), w("012134356078")]
    assert bij.phi_inverse(w("012134356078")) == EXAMPLE_D


def test_phi_trivial_cases():
    for n in range(1, 6):
        assert bij.phi("UD" * n) == (0,) * n
        assert bij.phi("U" * n + "D" * n) == tuple(range(n))
    assert bij.phi_inverse((0,)) == "UD"
    assert bij.phi_inverse((0, 1, 2)) == "UUUDDD"


def test_phi_rejects_bad_input():
    with pytest.raises(DomainError):
        bij.phi("UUDDDUUD")
    with pytest.raises(DomainError):
        bij.phi("UUDDUUDD")  # contains DDUU at positions 3-6
    with pytest.raises(DomainError):
        bij.phi("UDD")
    with pytest.raises(DomainError):
        bij.phi_inverse(w("0100"))


def test_phi_inverse_cases_needing_block_lowering():
    # inputs where lowering beyond the lifted block breaks the round trip
    for s in ("01234352", "0121304567"):
        x = w(s)
        assert bij.phi(bij.phi_inverse(x)) == x


@pytest.mark.parametrize("n", range(1, 9))
def test_height_words_rise_by_one_and_determine_the_path(n):
    seen = set()
    for d in bij.dyck_words(n):
        h = bij.u_heights(d)
        assert bij.from_u_heights(h) == d
        assert h[0] == 0 and is_rgf(h)
        assert all(b == a + 1 for a, b in zip(h, h[1:]) if b > a)
        seen.add(h)
    # distinct paths give distinct height words
    assert len(seen) == sum(1 for _ in bij.dyck_words(n))


def rise_follows_flat_or_step(h):
    return all(h[i - 1] in (h[i], h[i] - 1)
               for i in range(1, len(h) - 1) if h[i] < h[i + 1])


def first_100_before_101(h):
    n = len(h)
    triples = [(i, j, k) for j in range(n) for k in range(j + 1, n)
               for i in range(j) if h[i] > h[j] and h[k] in (h[j], h[i])]
    if not triples:
        return True
    j = min(t[1] for t in triples)
    k = min(t[2] for t in triples if t[1] == j)
    return any(h[kk] == h[jj] for _, jj, kk in triples if jj == j and kk == k)


@pytest.mark.parametrize("n", range(1, 9))
def test_dduu_free_height_word_shape(n):
    for d in dduu_free(n):
        h = bij.u_heights(d)
        assert rise_follows_flat_or_step(h), d
        assert first_100_before_101(h), d


def test_first_100_before_101_example():
    assert first_100_before_101(w("012112"))


@pytest.mark.parametrize("n", range(1, 9))
def test_phi_roundtrip_and_image(n):
    target = generate(n, "100,101").as_set()
    images = set()
    for d in dduu_free(n):
        x = bij.phi(d)
        assert x in target and is_ascent_sequence(x)
        assert bij.phi_inverse(x) == d
        images.add(x)
    assert images == target


def test_phi_inverse_roundtrip_n10():
    for n in (9, 10):
        for x in generate(n, "100,101"):
            d = bij.phi_inverse(x)
            assert bij.avoids_dduu(d) and len(d) == 2 * n
            assert bij.phi(d) == x


def test_lifts_strictly_remove_100s():
    for n in range(1, 8):
        for d in dduu_free(n):
            steps = bij.phi_steps(d)
            for a, b in zip(steps, steps[1:]):
                assert set(bij.occurrences_100(b)) < set(bij.occurrences_100(a))


def test_cardinalities():
    for n in range(1, 11):
        assert len(dduu_free(n)) == dduu_avoiding_dyck_count(n) == len(generate(n, "100,101"))


def test_first_100_end():
    assert bij.first_100_end(w("012112")) == 4
    assert bij.first_100_end(w("0123")) is None


def test_cb_examples():
    assert bij.cb_encode(w("012131114")) == "DCBCBAAD"
    assert bij.cb_encode(w("000")) == "AA"
    assert bij.cb_encode(w("0111023453")) == "CAABDDCDB"
    assert bij.cb_decode("CAABDDCDB") == w("0111023453")
    assert bij.cb_decode("DCBCBAAD") == w("012131114")
    assert bij.cb_decode("AAA") == w("0000")
    assert bij.cb_to_ternary("DCBCBAAD") == "12222001"
    assert bij.cb_to_ternary("AA") == "00"
    assert bij.cb_to_ternary("CB") == "22"


def test_cb_errors():
    with pytest.raises(DomainError):
        bij.cb_decode("BC")
    with pytest.raises(DomainError):
        bij.cb_encode(w("0101"))
    with pytest.raises(DomainError):
        bij.cb_decode("CA")
    with pytest.raises(DomainError):
        bij.ternary_to_cb("013")
    with pytest.raises(DomainError):
        bij.ternary_to_cb("2")


@pytest.mark.parametrize("n", range(1, 11))
def test_cb_roundtrip(n):
    members = generate(n, "101,210")
    words = set()
    for x in members:
        wd = bij.cb_encode(x)
        assert bij.is_cb_alternating(wd) and len(wd) == n - 1
        assert bij.cb_decode(wd) == x
        words.add(wd)
    assert len(members) == (3 ** (n - 1) + 1) // 2 == len(words)


def test_cb_decode_image_exhaustive():
    for length in range(0, 10):
        assert sum(1 for _ in bij.cb_words(length)) == (3 ** length + 1) // 2
        for wd in bij.cb_words(length):
            x = bij.cb_decode(wd)
            assert is_ascent_sequence(x)
            assert not contains(x, (1, 0, 1)) and not contains(x, (2, 1, 0))
            assert bij.cb_encode(x) == wd


def test_ternary_correspondence():
    for length in range(0, 8):
        cbs = set(bij.cb_words(length))
        even = {"".join(t) for t in product("012", repeat=length) if t.count("2") % 2 == 0}
        assert {bij.cb_to_ternary(c) for c in cbs} == even
        for t in even:
            assert bij.cb_to_ternary(bij.ternary_to_cb(t)) == t
