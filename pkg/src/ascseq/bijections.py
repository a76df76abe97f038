"""Constructive bijections with their inverses.

* Dyck words <-> U-height words (heights of the up-steps).
* DDUU-avoiding Dyck words <-> ascent sequences avoiding 100 and 101, by
  repeatedly lifting the tail of the U-height word (``phi``).
* Ascent sequences avoiding 101 and 210 <-> CB-alternating words over
  {A, B, C, D} <-> ternary words with an even number of 2s.
"""

from __future__ import annotations

from itertools import product
from typing import Iterator, Sequence

from .core import Word, contains
from .errors import DomainError

DyckWord = str
CBWord = str

_PAREN = str.maketrans("()", "UD")


def parse_dyck(text: str) -> DyckWord:
    """Accept ``UUDD`` or ``(())``; return the U/D form after validating it."""
    d = text.strip().upper().translate(_PAREN)
    if not is_dyck(d):
        raise DomainError(f"not a Dyck word: {text!r}")
    return d


def is_dyck(d: str) -> bool:
    h = 0
    for s in d:
        if s == "U":
            h += 1
        elif s == "D":
            h -= 1
            if h < 0:
                return False
        else:
            return False
    return h == 0


def dyck_words(n: int) -> Iterator[DyckWord]:
    """All Dyck words of semilength ``n`` in lexicographic order (D < U)."""

    def rec(prefix: list[str], ups: int, downs: int):
        if ups == downs == n:
            yield "".join(prefix)
            return
        if downs < ups:
            prefix.append("D")
            yield from rec(prefix, ups, downs + 1)
            prefix.pop()
        if ups < n:
            prefix.append("U")
            yield from rec(prefix, ups + 1, downs)
            prefix.pop()

    yield from rec([], 0, 0)


def avoids_dduu(d: DyckWord) -> bool:
    return "DDUU" not in d


def u_heights(d: DyckWord) -> Word:
    out = []
    h = 0
    for s in d:
        if s == "U":
            out.append(h)
            h += 1
        else:
            h -= 1
    return tuple(out)


def is_u_height_word(w: Sequence[int]) -> bool:
    if not w:
        return True
    if w[0] != 0 or any(d < 0 for d in w):
        return False
    return all(b <= a + 1 for a, b in zip(w, w[1:]))


def from_u_heights(w: Sequence[int]) -> DyckWord:
    """Inverse of :func:`u_heights`."""
    if not is_u_height_word(w):
        raise DomainError(f"not a U-height word: {list(w)}")
    parts = []
    for a, b in zip(w, w[1:]):
        parts.append("U" + "D" * (a - b + 1))
    if w:
        parts.append("U" + "D" * (w[-1] + 1))
    return "".join(parts)


def occurrences_100(w: Sequence[int]) -> list[tuple[int, int, int]]:
    """All index triples i<j<k with w[j] == w[k] < w[i]."""
    n = len(w)
    return [(i, j, k) for j in range(n) for k in range(j + 1, n) if w[j] == w[k]
            for i in range(j) if w[i] > w[j]]


def first_100_end(w: Sequence[int]) -> int | None:
    """Smallest k that ends some occurrence of 100, or None."""
    seen_max = -1          # running maximum of w[:j]
    dominated = set()      # values v seen at a j with some earlier larger letter
    for k, v in enumerate(w):
        if v in dominated:
            return k
        if seen_max > v:
            dominated.add(v)
        seen_max = max(seen_max, v)
    return None


def lift_once(w: Sequence[int]) -> Word | None:
    """One lift of the word, or None if it avoids 100."""
    k = first_100_end(w)
    if k is None:
        return None
    n = len(w)
    ell = next((t for t in range(k + 1, n) if w[t] < w[k]), n)
    shift = max(w[:k]) + 1 - w[k]
    return tuple(w[:k]) + tuple(v + shift for v in w[k:ell]) + tuple(w[ell:])


def phi_steps(d: DyckWord) -> list[Word]:
    """The words w^0, w^1, ... produced while computing ``phi(d)``."""
    if not is_dyck(d):
        raise DomainError(f"not a Dyck word: {d!r}")
    if not avoids_dduu(d):
        raise DomainError(f"Dyck word contains DDUU: {d}")
    steps = [u_heights(d)]
    while (nxt := lift_once(steps[-1])) is not None:
        steps.append(nxt)
    return steps


def phi(d: DyckWord) -> Word:
    """DDUU-avoiding Dyck word -> ascent sequence avoiding 100 and 101."""
    return phi_steps(d)[-1]


def _last_big_jump(x: Sequence[int]) -> int | None:
    for ell in range(len(x) - 1, 0, -1):
        if x[ell - 1] + 1 < x[ell]:
            return ell
    return None


def phi_inverse(x: Sequence[int]) -> DyckWord:
    if contains(x, (1, 0, 0)) or contains(x, (1, 0, 1)):
        raise DomainError(f"word does not avoid 100 and 101: {list(x)}")
    x = list(x)
    while (ell := _last_big_jump(x)) is not None:
        gap = x[ell] - x[ell - 1]
        # the lifted block runs from ell up to the first letter below x[ell]
        end = next((t for t in range(ell + 1, len(x)) if x[t] < x[ell]), len(x))
        x = x[:ell] + [v - gap for v in x[ell:end]] + x[end:]
    return from_u_heights(x)


def cb_encode(x: Sequence[int]) -> CBWord:
    """Ascent sequence avoiding 101 and 210 -> CB-alternating word."""
    if contains(x, (1, 0, 1)) or contains(x, (2, 1, 0)):
        raise DomainError(f"word does not avoid 101 and 210: {list(x)}")
    n = len(x)
    letters = []
    for i in range(n - 1):
        a, b = x[i], x[i + 1]
        if a == b:
            letters.append("A")
        elif a > b:
            letters.append("B")
        else:
            letters.append("C" if _closes_later_descent(x, i) else "D")
    return "".join(letters)


def _closes_later_descent(x: Sequence[int], i: int) -> bool:
    # x[i] is the last copy of its value before some later descent lands on it
    d = x[i]
    for j in range(i + 1, len(x) - 1):
        if x[j] > x[j + 1] == d:
            return True
        if x[j] == d:
            return False
    return False


def is_cb_alternating(wd: str) -> bool:
    """B and C alternate starting with C, and every C is closed by a B."""
    if any(c not in "ABCD" for c in wd):
        return False
    expect = "C"
    for c in wd:
        if c in "BC":
            if c != expect:
                return False
            expect = "B" if c == "C" else "C"
    # an unmatched trailing C would decode to a word that encodes with D there
    return expect == "C"


def cb_decode(wd: CBWord) -> Word:
    if not is_cb_alternating(wd):
        raise DomainError(f"not a CB-alternating word: {wd!r}")
    x = [0]
    top = 0
    anchor = None  # value at the most recent C
    for c in wd:
        if c == "A":
            x.append(x[-1])
        elif c == "B":
            x.append(anchor)
        else:
            if c == "C":
                anchor = x[-1]
            top += 1
            x.append(top)
    return tuple(x)


def cb_words(length: int) -> Iterator[CBWord]:
    for letters in product("ABCD", repeat=length):
        wd = "".join(letters)
        if is_cb_alternating(wd):
            yield wd


_TERNARY = str.maketrans("ABCD", "0221")


def cb_to_ternary(wd: CBWord) -> str:
    return wd.translate(_TERNARY)


def ternary_to_cb(t: str) -> CBWord:
    out = []
    next_two = "C"
    for c in t:
        if c == "0":
            out.append("A")
        elif c == "1":
            out.append("D")
        elif c == "2":
            out.append(next_two)
            next_two = "B" if next_two == "C" else "C"
        else:
            raise DomainError(f"not a ternary word: {t!r}")
    if next_two != "C":
        raise DomainError(f"ternary word has an odd number of 2s: {t!r}")
    return "".join(out)
