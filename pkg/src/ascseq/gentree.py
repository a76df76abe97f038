"""Labelled generating trees.

Finite trees are expanded level by level on a label-count vector; the
production matrix is the same data in the augmented form whose first row
selects the root.  The bisected-Fibonacci tree, with rule
``(k) -> (2)^(k-1) (k+1)`` and root ``(2)``, has infinitely many labels and
gets its own integer-labelled expander.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Sequence

from .closedforms import (GF_021_102, GF_101_120, GF_102_120, RationalGF,
                          series_of_rational)
from .core import contains
from .errors import DomainError


@dataclass(frozen=True)
class GeneratingTree:
    labels: tuple[str, ...]
    root: str
    rules: dict[str, tuple[str, ...]]

    def __post_init__(self):
        if self.root not in self.labels:
            raise ValueError(f"root {self.root!r} is not a declared label")
        for lab, kids in self.rules.items():
            if lab not in self.labels:
                raise ValueError(f"rule for undeclared label {lab!r}")
            for k in kids:
                if k not in self.labels:
                    raise ValueError(f"undeclared child label {k!r} in rule for {lab!r}")

    def children(self, label: str) -> Counter:
        return Counter(self.rules.get(label, ()))

    def to_text(self) -> str:
        lines = [f"root: {self.root}"]
        for lab in self.labels:
            lines.append(f"rule: {lab} -> " + " ".join(self.rules.get(lab, ())))
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "GeneratingTree":
        root = None
        rules: dict[str, tuple[str, ...]] = {}
        order: list[str] = []
        for raw in text.splitlines():
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            key, _, rest = line.partition(":")
            key = key.strip()
            if key == "root":
                root = rest.strip()
            elif key == "rule":
                lhs, arrow, rhs = rest.partition("->")
                if not arrow:
                    raise ValueError(f"bad rule line: {raw!r}")
                lab = lhs.strip()
                rules[lab] = tuple(rhs.split())
                order.append(lab)
            else:
                raise ValueError(f"unknown line: {raw!r}")
        if root is None:
            raise ValueError("missing root line")
        labels = list(order)
        for lab in [root, *(k for kids in rules.values() for k in kids)]:
            if lab not in labels:
                labels.append(lab)
        return cls(tuple(labels), root, rules)


def _tree(labels: str, rules: dict[str, str]) -> GeneratingTree:
    labs = tuple(labels.split())
    return GeneratingTree(labs, labs[0], {k: tuple(v.split()) for k, v in rules.items()})


BUILTIN_TREES: dict[str, GeneratingTree] = {
    "021_102": _tree("(0) (01) (010) (012) (0120)", {
        "(0)": "(0) (01)",
        "(01)": "(01) (010) (012)",
        "(010)": "(010) (010)",
        "(012)": "(0120) (012) (012)",
        "(0120)": "(0120)",
    }),
    "102_120": _tree("(0) (01) (010)", {
        "(0)": "(0) (01)",
        "(01)": "(01) (01) (010)",
        "(010)": "(010) (010)",
    }),
    "101_120": _tree("(0) (01) (010) (0102)", {
        "(0)": "(0) (01)",
        "(01)": "(01) (01) (010)",
        "(010)": "(010) (0102)",
        "(0102)": "(01) (0102)",
    }),
}

BUILTIN_PATTERNS = {"021_102": "021,102", "102_120": "102,120", "101_120": "101,120"}
BUILTIN_GFS: dict[str, RationalGF] = {
    "021_102": GF_021_102, "102_120": GF_102_120, "101_120": GF_101_120,
}


def builtin_tree(name: str) -> GeneratingTree:
    try:
        return BUILTIN_TREES[name]
    except KeyError:
        raise DomainError(f"unknown tree {name!r}; known: {', '.join(BUILTIN_TREES)}") from None


def level_distributions(t: GeneratingTree, n_max: int) -> list[Counter]:
    """Label counts on levels 1..n_max (level 1 is the root)."""
    level = Counter({t.root: 1})
    out = []
    for _ in range(n_max):
        out.append(level)
        nxt: Counter = Counter()
        for lab, c in level.items():
            for kid, m in t.children(lab).items():
                nxt[kid] += c * m
        level = nxt
    return out


def level_counts(t: GeneratingTree, n_max: int) -> list[int]:
    return [sum(d.values()) for d in level_distributions(t, n_max)]


def production_matrix(t: GeneratingTree) -> list[list[int]]:
    size = len(t.labels) + 1
    col = {lab: i + 1 for i, lab in enumerate(t.labels)}
    P = [[0] * size for _ in range(size)]
    P[0][col[t.root]] = 1
    for lab in t.labels:
        for kid, m in t.children(lab).items():
            P[col[lab]][col[kid]] += m
    return P


def matrix_level_counts(P: Sequence[Sequence[int]], n_max: int) -> list[int]:
    """Row sums of the first row of P^n for n = 1..n_max."""
    row = [1] + [0] * (len(P) - 1)
    out = []
    for _ in range(n_max):
        row = [sum(row[i] * P[i][j] for i in range(len(P))) for j in range(len(P))]
        out.append(sum(row))
    return out


def gf_check(t: GeneratingTree, claimed: RationalGF, n_max: int) -> bool:
    series = series_of_rational(claimed, n_max)
    return level_counts(t, n_max) == series[1:]


def fib_tree_distribution(n_max: int) -> list[dict[int, int]]:
    """``b(n, k)`` for levels 1..n_max as ``{k: count}`` with k = 2..n+1."""
    level = {2: 1}
    out = []
    for n in range(1, n_max + 1):
        out.append({k: level.get(k, 0) for k in range(2, n + 2)})
        nxt: dict[int, int] = {}
        for k, c in level.items():
            nxt[2] = nxt.get(2, 0) + (k - 1) * c
            nxt[k + 1] = nxt.get(k + 1, 0) + c
        level = nxt
    return out


def fib_triangle_csv(n_max: int) -> str:
    rows = fib_tree_distribution(n_max)
    ks = list(range(2, n_max + 2))
    lines = ["n," + ",".join(f"k={k}" for k in ks) + ",row_sum"]
    for n, row in enumerate(rows, 1):
        vals = [row.get(k, 0) for k in ks]
        lines.append(f"{n}," + ",".join(map(str, vals)) + f",{sum(vals)}")
    return "\n".join(lines) + "\n"


def _weakly_increasing(x: Sequence[int]) -> bool:
    return all(a <= b for a, b in zip(x, x[1:]))


def _label_021_102(x):
    if max(x) == 0:
        return "(0)"
    if _weakly_increasing(x):
        return "(01)" if max(x) == 1 else "(012)"
    return "(010)" if max(x) == 1 else "(0120)"


def _label_102_120(x):
    if max(x) == 0:
        return "(0)"
    return "(01)" if _weakly_increasing(x) else "(010)"


def _label_101_120(x):
    top = max(x)
    if top == 0:
        return "(0)"
    if x[-1] < top:
        return "(010)"
    # the new maximum either followed the old maximum, or followed a return to a smaller value
    first = x.index(top)
    return "(01)" if x[first - 1] == top - 1 else "(0102)"


_LABELERS = {"021_102": _label_021_102, "102_120": _label_102_120,
             "101_120": _label_101_120}


def tree_labeler(name: str, x: Sequence[int]) -> str:
    """Label a member of the avoidance class carries in the named tree."""
    if name not in _LABELERS:
        raise DomainError(f"unknown tree {name!r}")
    pats = [tuple(int(c) for c in p) for p in BUILTIN_PATTERNS[name].split(",")]
    if not x or any(contains(x, p) for p in pats):
        raise DomainError(f"{list(x)} is not in the class avoiding {BUILTIN_PATTERNS[name]}")
    return _LABELERS[name](tuple(x))
