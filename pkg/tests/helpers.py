"""Shared oracles for the test modules."""

from collections import Counter

from ascseq.core import asc, contains
from ascseq.enumeration import generate
from ascseq.gentree import BUILTIN_PATTERNS, BUILTIN_TREES, tree_labeler


def children_in_class(x, patterns):
    out = []
    for z in range(asc(x) + 2):
        y = x + (z,)
        if not any(contains(y, p) for p in patterns):
            out.append(y)
    return out


def isomorphism_failures(name, n_max):
    """Members whose concrete children disagree with the rule for their label."""
    tree = BUILTIN_TREES[name]
    pats = generate(1, BUILTIN_PATTERNS[name]).patterns.patterns
    bad = []
    for n in range(1, n_max + 1):
        for x in generate(n, BUILTIN_PATTERNS[name]):
            label = tree_labeler(name, x)
            kids = Counter(tree_labeler(name, y) for y in children_in_class(x, pats))
            if kids != tree.children(label):
                bad.append(x)
    return bad


def fib_case_formula(n, k):
    from ascseq.closedforms import fibonacci
    if 2 <= k <= n:
        return fibonacci(2 * n - 2 * k + 2)
    return 1 if k == n + 1 else 0
