"""Words, ascent sequences, reduction and pattern containment.

A word is a tuple of nonnegative ints.  Patterns are reduced words.  All
functions here are pure and accept any sequence of ints; they never mutate
their arguments.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

Word = tuple[int, ...]


def parse_word(text: str) -> Word:
    """Parse ``"0120102"`` or ``"0,1,2,10"`` into a tuple of ints."""
    text = text.strip()
    if not text:
        return ()
    if "," in text:
        parts = [p.strip() for p in text.split(",")]
        if parts[-1] == "":
            parts.pop()  # "10," is the one-letter word (10,)
    else:
        parts = list(text)
    try:
        digits = tuple(int(p) for p in parts)
    except ValueError:
        raise ValueError(f"not a word: {text!r}") from None
    if any(d < 0 for d in digits):
        raise ValueError(f"negative digit in word: {text!r}")
    return digits


def format_word(w: Sequence[int]) -> str:
    if all(d <= 9 for d in w):
        return "".join(str(d) for d in w)
    out = ",".join(str(d) for d in w)
    return out + "," if len(w) == 1 else out


def asc(w: Sequence[int]) -> int:
    return sum(1 for a, b in zip(w, w[1:]) if a < b)


def is_ascent_sequence(w: Sequence[int]) -> bool:
    if not w:
        return True
    if w[0] != 0:
        return False
    ascents = 0
    for prev, cur in zip(w, w[1:]):
        if cur < 0 or cur > ascents + 1:
            return False
        if prev < cur:
            ascents += 1
    return True


def is_rgf(w: Sequence[int]) -> bool:
    """Restricted growth: each prefix maximum grows by at most one."""
    top = -1
    for d in w:
        if d < 0 or d > top + 1:
            return False
        top = max(top, d)
    return True


def reduce(w: Sequence[int]) -> Word:
    rank = {v: i for i, v in enumerate(sorted(set(w)))}
    return tuple(rank[d] for d in w)


def is_reduced(w: Sequence[int]) -> bool:
    return tuple(w) == reduce(w)


def _match(w: Sequence[int], p: Sequence[int], pos: int, start: int,
           stop: int, assigned: dict[int, int]) -> bool:
    # Depth-first over pattern positions; `assigned` maps pattern symbol -> value.
    if pos == len(p):
        return True
    sym = p[pos]
    need = len(p) - pos
    if sym in assigned:
        target = assigned[sym]
        for idx in range(start, stop - need + 1):
            if w[idx] == target and _match(w, p, pos + 1, idx + 1, stop, assigned):
                return True
        return False
    lo, hi = -1, None
    for s, v in assigned.items():
        if s < sym and v > lo:
            lo = v
        elif s > sym and (hi is None or v < hi):
            hi = v
    for idx in range(start, stop - need + 1):
        v = w[idx]
        if v <= lo or (hi is not None and v >= hi):
            continue
        assigned[sym] = v
        if _match(w, p, pos + 1, idx + 1, stop, assigned):
            del assigned[sym]
            return True
        del assigned[sym]
    return False


def contains(w: Sequence[int], p: Sequence[int]) -> bool:
    """True iff some subsequence of ``w`` is order-isomorphic to ``p``.

    Every word contains the empty pattern.
    """
    if len(p) > len(w):
        return False
    return _match(w, p, 0, 0, len(w), {})


def contains_ending_at_last(w: Sequence[int], p: Sequence[int]) -> bool:
    """True iff an occurrence of ``p`` in ``w`` uses the final letter of ``w``."""
    if not p:
        return True
    if not w or len(p) > len(w):
        return False
    assigned = {p[-1]: w[-1]}
    return _match(w, p[:-1], 0, 0, len(w) - 1, assigned)


def avoids_all(w: Sequence[int], patterns: Iterable[Sequence[int]]) -> bool:
    return not any(contains(w, p) for p in patterns)


@dataclass(frozen=True)
class PatternSet:
    """A canonical, sorted set of reduced patterns.

    With ``drop_redundant`` any pattern containing another member is
    discarded; those are recorded in ``dropped``.
    """

    patterns: tuple[Word, ...]
    dropped: tuple[Word, ...] = field(default=())

    @classmethod
    def of(cls, patterns: Iterable[Sequence[int] | str],
           drop_redundant: bool = False) -> "PatternSet":
        pats = set()
        for p in patterns:
            w = parse_word(p) if isinstance(p, str) else tuple(p)
            if not is_reduced(w):
                raise ValueError(f"pattern {format_word(w)} is not reduced")
            pats.add(w)
        dropped = set()
        if drop_redundant:
            for q in pats:
                if any(p != q and contains(q, p) for p in pats):
                    dropped.add(q)
        keep = tuple(sorted(pats - dropped, key=lambda w: (len(w), w)))
        return cls(keep, tuple(sorted(dropped, key=lambda w: (len(w), w))))

    @classmethod
    def parse(cls, text: str, drop_redundant: bool = False) -> "PatternSet":
        """Parse ``"000,012"``; the empty string is the empty set."""
        text = text.strip()
        if not text:
            return cls(())
        return cls.of([t for t in text.split(",") if t.strip()], drop_redundant)

    def __iter__(self):
        return iter(self.patterns)

    def __len__(self) -> int:
        return len(self.patterns)

    def __str__(self) -> str:
        return ",".join(format_word(p) for p in self.patterns)

    def key(self) -> str:
        return str(self)

    def issubset(self, other: "PatternSet") -> bool:
        return set(self.patterns) <= set(other.patterns)


LENGTH3_PATTERNS: tuple[Word, ...] = tuple(sorted(
    {reduce(w) for w in
     ((a, b, c) for a in range(3) for b in range(3) for c in range(3))}
))
