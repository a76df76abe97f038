"""Emptiness thresholds for ascent sequences avoiding ``0^a`` and ``01...b``.

``b`` is the largest letter of the increasing pattern, so ``01...b`` has
length ``b + 1``; ``b = 2`` is the pattern ``012``.  Any avoider of both
patterns has length at most ``(a-1)((a-1)(b-2)+2)``, and a word of exactly
that length exists.  For ``012`` the bound reads ``2a - 2``.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass

from .core import Word, avoids_all, format_word, is_ascent_sequence
from .enumeration import count_levels


@dataclass(frozen=True)
class ExtremalParams:
    a: int
    b: int

    def __post_init__(self):
        if self.a < 2:
            raise ValueError(f"a must be >= 2, got {self.a}")
        if self.b < 1:
            raise ValueError(f"b must be >= 1, got {self.b}")

    @property
    def patterns(self) -> tuple[Word, Word]:
        return (0,) * self.a, tuple(range(self.b + 1))


def emptiness_threshold(p: ExtremalParams) -> int:
    """Least length from which no avoider exists (the general bound)."""
    a, b = p.a, p.b
    if b == 1:
        # avoiding 01 leaves only all-zero words, at most a-1 of them long
        return a
    return (a - 1) * ((a - 1) * (b - 2) + 2) + 1


def specialized_threshold(p: ExtremalParams) -> int | None:
    """``2a - 1`` when the increasing pattern is ``012``, else None."""
    return 2 * p.a - 1 if p.b == 2 else None


def witness(p: ExtremalParams) -> Word:
    """A longest avoider.

    ``(0 1 ... b-2)`` repeated a-1 times, then each value from
    ``(a-1)(b-2)+1`` down to ``b-1`` repeated a-1 times.
    """
    a, b = p.a, p.b
    r = a - 1
    if b == 1:
        return (0,) * r
    w = list(range(b - 1)) * r
    for v in range(r * (b - 2) + 1, b - 2, -1):
        w.extend([v] * r)
    return tuple(w)


def witness_valid(p: ExtremalParams, w: Word | None = None) -> bool:
    w = witness(p) if w is None else w
    return (is_ascent_sequence(w) and avoids_all(w, p.patterns)
            and len(w) == emptiness_threshold(p) - 1)


@dataclass(frozen=True)
class ThresholdReport:
    a: int
    b: int
    pattern: str
    general_bound: int
    specialized_bound: int | None
    probe: int
    observed_max_length: int
    observed_threshold: int | None  # None when avoiders still exist at the probe length
    empty_at_general_bound: bool | None
    witness: str
    witness_valid: bool
    binding: str

    def to_json(self) -> str:
        return json.dumps(asdict(self), indent=2)


def confirm_threshold(p: ExtremalParams, n_probe: int | None = None,
                      budget: int | None = None, jobs: int = 1) -> ThresholdReport:
    general = emptiness_threshold(p)
    special = specialized_threshold(p)
    probe = general if n_probe is None else n_probe
    if probe < 1:
        raise ValueError("probe length must be >= 1")
    counts = count_levels(probe, p.patterns, budget, jobs)
    longest = max(n for n, c in enumerate(counts) if c)
    # prefixes of avoiders are avoiders, so emptiness is monotone in n
    observed = longest + 1 if counts[probe] == 0 else None
    empty_at_general = counts[general] == 0 if general <= probe else None
    if special is None:
        binding = "general"
    elif special < general:
        binding = "specialized"
    elif special == general:
        binding = "both"
    else:
        binding = "general"
    w = witness(p)
    return ThresholdReport(
        a=p.a, b=p.b, pattern=f"{format_word(p.patterns[0])},{format_word(p.patterns[1])}",
        general_bound=general, specialized_bound=special, probe=probe,
        observed_max_length=longest, observed_threshold=observed,
        empty_at_general_bound=empty_at_general, witness=format_word(w),
        witness_valid=witness_valid(p, w), binding=binding,
    )
