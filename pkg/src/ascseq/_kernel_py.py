"""Pure-Python search kernel; same contract as the compiled ``_kernel_c``.

Both kernels walk the tree of ascent sequences depth first, children in
increasing digit order, and prune a child as soon as its last letter
completes an occurrence of a forbidden pattern.
"""

from __future__ import annotations

from .core import contains_ending_at_last
from .errors import NodeBudgetExceeded


def _setup(prefix, patterns):
    w = list(prefix)
    ascents = sum(1 for a, b in zip(w, w[1:]) if a < b)
    pats = [tuple(p) for p in patterns]
    return w, ascents, pats


def count_levels(n_max, patterns, budget, prefix=(0,)):
    """Return ``(counts, nodes)``; ``counts[L]`` counts avoiders of length L
    extending ``prefix`` (zero below ``len(prefix)``)."""
    w, ascents, pats = _setup(prefix, patterns)
    counts = [0] * (n_max + 1)
    if len(w) > n_max:
        return counts, 0
    nodes = 0

    def dfs(ascents):
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise NodeBudgetExceeded(budget)
        counts[len(w)] += 1
        if len(w) == n_max:
            return
        last = w[-1]
        for z in range(ascents + 2):
            w.append(z)
            if not any(contains_ending_at_last(w, p) for p in pats):
                dfs(ascents + (last < z))
            w.pop()

    dfs(ascents)
    return counts, nodes


def list_level(n, patterns, budget, prefix=(0,)):
    """Return ``(members, nodes)``: avoiders of length ``n`` extending
    ``prefix`` in lexicographic order."""
    w, ascents, pats = _setup(prefix, patterns)
    out = []
    if len(w) > n:
        return out, 0
    nodes = 0

    def dfs(ascents):
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise NodeBudgetExceeded(budget)
        if len(w) == n:
            out.append(tuple(w))
            return
        last = w[-1]
        for z in range(ascents + 2):
            w.append(z)
            if not any(contains_ending_at_last(w, p) for p in pats):
                dfs(ascents + (last < z))
            w.pop()

    dfs(ascents)
    return out, nodes
