"""Brute-force generation and counting of pattern-avoiding ascent sequences.

The search walks the tree of ascent sequences rooted at ``0``; a child
``x z`` exists for each ``0 <= z <= asc(x) + 1``.  Containment is monotone
under extension, so a branch is cut as soon as its newest letter completes
a forbidden pattern.
"""

from __future__ import annotations

import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Sequence

from . import kernel
from .core import PatternSet, Word, avoids_all, format_word
from .errors import NodeBudgetExceeded

DEFAULT_BUDGET = 10**8


def default_budget() -> int:
    return int(os.environ.get("ASCSEQ_NODE_BUDGET", DEFAULT_BUDGET))


def _as_patternset(patterns) -> PatternSet:
    if isinstance(patterns, PatternSet):
        return patterns
    if isinstance(patterns, str):
        return PatternSet.parse(patterns)
    return PatternSet.of(patterns)


@dataclass(frozen=True)
class AvoidanceClass:
    length: int
    patterns: PatternSet
    members: tuple[Word, ...]

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, w) -> bool:
        return tuple(w) in set(self.members)

    def as_set(self) -> frozenset[Word]:
        return frozenset(self.members)

    def to_lines(self) -> str:
        return "".join(format_word(w) + "\n" for w in self.members)


@dataclass(frozen=True)
class CountTable:
    patterns: PatternSet
    counts: tuple[int, ...]  # counts[i] is a_B(i + 1)

    def __getitem__(self, n: int) -> int:
        if n < 1:
            raise IndexError(n)
        return self.counts[n - 1]

    @property
    def n_max(self) -> int:
        return len(self.counts)

    def to_bfile(self) -> str:
        return "".join(f"{n} {c}\n" for n, c in enumerate(self.counts, 1))

    def to_json(self) -> str:
        return json.dumps(list(self.counts))

    def to_csv(self) -> str:
        return "n,count\n" + "".join(f"{n},{c}\n" for n, c in enumerate(self.counts, 1))


def _prefixes(depth: int, pats, budget: int) -> tuple[list[Word], int]:
    return kernel.list_level(depth, pats, budget)


def _pool_map(fn, argsets, jobs):
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, *zip(*argsets)))


def _split_depth(n: int) -> int:
    return max(1, min(n - 1, 4))


def count_levels(n_max: int, patterns, budget: int | None = None,
                 jobs: int = 1) -> list[int]:
    """Counts ``a_B(n)`` for ``n = 0..n_max`` from a single search."""
    B = _as_patternset(patterns)
    budget = default_budget() if budget is None else budget
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    if () in B.patterns:
        return [0] * (n_max + 1)
    if n_max == 0:
        return [1]
    pats = list(B.patterns)
    if jobs <= 1 or n_max < 6:
        counts, _ = kernel.count_levels(n_max, pats, budget)
    else:
        depth = _split_depth(n_max)
        head, nodes = kernel.count_levels(depth - 1, pats, budget)
        prefixes, more = _prefixes(depth, pats, budget)
        spent = nodes + more
        if spent > budget:
            raise NodeBudgetExceeded(budget)
        args = [(n_max, pats, budget - spent, p) for p in prefixes]
        parts = _pool_map(kernel.count_levels, args, jobs)
        counts = [0] * (n_max + 1)
        counts[:depth] = head
        for part, used in parts:
            spent += used
            for i, c in enumerate(part):
                counts[i] += c
        if spent > budget:
            raise NodeBudgetExceeded(budget)
    counts = [int(c) for c in counts]
    counts[0] = 1
    return counts


def generate(n: int, patterns=(), budget: int | None = None,
             jobs: int = 1) -> AvoidanceClass:
    """All ascent sequences of length ``n`` avoiding ``patterns``, sorted."""
    B = _as_patternset(patterns)
    budget = default_budget() if budget is None else budget
    if n < 0:
        raise ValueError("n must be >= 0")
    if () in B.patterns:
        return AvoidanceClass(n, B, ())
    if n == 0:
        return AvoidanceClass(0, B, ((),))
    pats = list(B.patterns)
    if jobs <= 1 or n < 6:
        members, _ = kernel.list_level(n, pats, budget)
    else:
        prefixes, spent = _prefixes(_split_depth(n), pats, budget)
        args = [(n, pats, budget - spent, p) for p in prefixes]
        members = []
        # prefixes come out in lexicographic order, so concatenation is the ordered merge
        for part, used in _pool_map(kernel.list_level, args, jobs):
            spent += used
            members.extend(part)
        if spent > budget:
            raise NodeBudgetExceeded(budget)
    return AvoidanceClass(n, B, tuple(members))


def count(n: int, patterns=(), budget: int | None = None, jobs: int = 1) -> int:
    return count_levels(n, patterns, budget, jobs)[n]


def count_sequence(patterns, n_max: int, budget: int | None = None,
                   jobs: int = 1) -> CountTable:
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    B = _as_patternset(patterns)
    return CountTable(B, tuple(count_levels(n_max, B, budget, jobs)[1:]))


def classes_equal(n: int, patterns1, patterns2, budget: int | None = None) -> bool:
    """Set equality (not just equinumerosity) of two avoidance classes."""
    a = generate(n, patterns1, budget)
    b = generate(n, patterns2, budget)
    return a.members == b.members


def all_ascent_sequences(n: int) -> Iterable[Word]:
    """Unpruned generator of every ascent sequence of length ``n``."""
    if n == 0:
        yield ()
        return

    def rec(w: list[int], ascents: int):
        if len(w) == n:
            yield tuple(w)
            return
        last = w[-1]
        for z in range(ascents + 2):
            w.append(z)
            yield from rec(w, ascents + (last < z))
            w.pop()

    yield from rec([0], 0)


def filter_avoiders(n: int, patterns: Sequence[Sequence[int]]) -> list[Word]:
    """Reference route: filter every ascent sequence by a full containment scan."""
    pats = [tuple(p) for p in patterns]
    return [w for w in all_ascent_sequences(n) if avoids_all(w, pats)]
