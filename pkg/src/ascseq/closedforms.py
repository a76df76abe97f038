"""Closed forms, recurrences and generating functions for the 16 pattern pairs.

Everything is exact integer arithmetic.  Rational generating functions are
expanded by the linear recurrence their denominator induces; the one
algebraic generating function (pair 100,101) is checked as a polynomial
identity instead of being expanded through a square root.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Callable, Sequence

from .core import PatternSet
from .errors import DomainError


@lru_cache(maxsize=None)
def fibonacci(n: int) -> int:
    """F_0 = 0, F_1 = 1."""
    if n < 0:
        raise ValueError("n must be >= 0")
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


@lru_cache(maxsize=None)
def motzkin(n: int) -> int:
    if n < 2:
        return 1
    return motzkin(n - 1) + sum(motzkin(i) * motzkin(n - 2 - i) for i in range(n - 1))


class IntPolynomial:
    """Integer polynomial, coefficients in ascending degree, no trailing zeros."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[int] = ()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def x(cls) -> "IntPolynomial":
        return cls((0, 1))

    @classmethod
    def const(cls, a: int) -> "IntPolynomial":
        return cls((a,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = IntPolynomial.const(other)
        return isinstance(other, IntPolynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        other = _poly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial([self[i] + other[i] for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial([-a for a in self.coeffs])

    def __sub__(self, other):
        return self + (-_poly(other))

    def __rsub__(self, other):
        return _poly(other) - self

    def __mul__(self, other):
        other = _poly(other)
        if not self.coeffs or not other.coeffs:
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = IntPolynomial.const(1)
        for _ in range(k):
            out = out * self
        return out

    def truncate(self, order: int) -> "IntPolynomial":
        """Drop every term of degree > ``order``."""
        return IntPolynomial(self.coeffs[: order + 1])

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)})"

    def __str__(self) -> str:
        terms = []
        for k, a in enumerate(self.coeffs):
            if a == 0:
                continue
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            if mono and abs(a) == 1:
                coef = "-" if a < 0 else ""
            else:
                coef = str(a)
            terms.append(coef + mono)
        if not terms:
            return "0"
        return " + ".join(terms).replace("+ -", "- ")


def _poly(p) -> IntPolynomial:
    return IntPolynomial.const(p) if isinstance(p, int) else p


X = IntPolynomial.x()


@dataclass(frozen=True)
class RationalGF:
    numerator: IntPolynomial
    denominator: IntPolynomial

    def __post_init__(self):
        if self.denominator[0] == 0:
            raise DomainError("denominator has zero constant term")

    def __str__(self) -> str:
        return f"({self.numerator}) / ({self.denominator})"


def series_of_rational(gf: RationalGF, n_max: int) -> list[int]:
    """Coefficients ``[c_0, ..., c_n_max]`` of ``numerator / denominator``."""
    den, num = gf.denominator, gf.numerator
    d0 = den[0]
    if d0 == 0:
        raise DomainError("denominator has zero constant term")
    out: list[int] = []
    for k in range(n_max + 1):
        acc = num[k] - sum(den[i] * out[k - i] for i in range(1, min(k, den.degree) + 1))
        q, r = divmod(acc, d0)
        if r:
            raise DomainError(f"coefficient {k} is not an integer")
        out.append(q)
    return out


# Transfer-matrix generating functions of the three finite-label trees.
GF_021_102 = RationalGF(X**4 - 3 * X**3 + 6 * X**2 - 4 * X + 1, (X - 1) ** 3 * (2 * X - 1))
# cross-checked against the closed form (n-1)2^(n-2)+1 in the tests
GF_102_120 = RationalGF(X**3 - 5 * X**2 + 4 * X - 1, (X - 1) * (2 * X - 1) ** 2)
GF_101_120 = RationalGF((X - 1) ** 3, 3 * X**3 - 5 * X**2 + 4 * X - 1)


@lru_cache(maxsize=None)
def dduu_avoiding_dyck_count(n: int) -> int:
    """Dyck words of semilength ``n`` with no ``DDUU`` factor.

    DP over (height, state) where state tracks the suffix relevant to DDUU:
    0 = none, 1 = ends in D, 2 = ends in DD, 3 = ends in DDU.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    steps = 2 * n
    table: dict[tuple[int, int], int] = {(0, 0): 1}
    for _ in range(steps):
        nxt: dict[tuple[int, int], int] = {}
        for (h, s), c in table.items():
            # up-step
            if s != 3:
                ns = 3 if s == 2 else 0
                key = (h + 1, ns)
                nxt[key] = nxt.get(key, 0) + c
            # down-step
            if h > 0:
                ns = 2 if s in (1, 2) else 1
                key = (h - 1, ns)
                nxt[key] = nxt.get(key, 0) + c
        table = nxt
    return sum(c for (h, _), c in table.items() if h == 0)


def verify_algebraic_gf(n_max: int, coefficients: Sequence[int] | None = None) -> bool:
    """Check ``(2x^2 f - (1-x)^2)^2 == 1 - 4x + 2x^2 + x^4`` through order n_max+2.

    ``f`` is the series with coefficients ``coefficients`` (default: the
    DDUU-avoiding Dyck counts for semilengths 0..n_max).  The coefficient of
    x^(k+2) on the left is the first to see f_k, so the check runs to n_max+2.
    """
    if coefficients is None:
        coefficients = [dduu_avoiding_dyck_count(k) for k in range(n_max + 1)]
    f = IntPolynomial(coefficients[: n_max + 1])
    order = n_max + 2
    lhs = ((2 * X**2 * f - (1 - X) ** 2) ** 2).truncate(order)
    rhs = IntPolynomial([1, -4, 2, 0, 1]).truncate(order)
    return lhs == rhs


def _two_pow(n: int) -> int:
    return 2 ** (n - 1)


def _allzeros(n: int) -> int:
    return {1: 1, 2: 2, 3: 3, 4: 3}.get(n, 0)


def _series_value(gf: RationalGF) -> Callable[[int], int]:
    def value(n: int) -> int:
        return series_of_rational(gf, n)[n]
    return value


def _binomial_catalan(n: int) -> int:
    return sum(comb(n - 1, k) * catalan(k) for k in range(n))


@dataclass(frozen=True)
class Formula:
    patterns: PatternSet
    description: str
    evaluate: Callable[[int], int]
    name: str
    oeis: str


def _entry(pats: str, description: str, fn, name: str, oeis: str) -> Formula:
    return Formula(PatternSet.parse(pats), description, fn, name, oeis)


REGISTRY: dict[str, Formula] = {f.patterns.key(): f for f in (
    _entry("010,021", "2^(n-1)", _two_pow, "powers of two", "A000079"),
    _entry("101,201", "C_n", catalan, "Catalan", "A000108"),
    _entry("101,210", "(3^(n-1)+1)/2", lambda n: (3 ** (n - 1) + 1) // 2, "ternary words, even number of 2s", "A007051"),
    _entry("000,012", "1,2,3,3,0,0,...", _allzeros, "finite class", "trivial"),
    _entry("000,011", "n", lambda n: n, "natural numbers", "A000027"),
    _entry("000,001", "F_(n+1)", lambda n: fibonacci(n + 1), "Fibonacci", "A000045"),
    _entry("011,100", "n(n-1)/2+1", lambda n: n * (n - 1) // 2 + 1, "lazy caterer", "A000124"),
    _entry("001,100", "F_(n+2)-1", lambda n: fibonacci(n + 2) - 1, "Fibonacci minus one", "A000071"),
    _entry("001,210", "C(n,3)+n", lambda n: comb(n, 3) + n, "cake numbers", "A000125"),
    _entry("000,101", "M_n", motzkin, "Motzkin", "A001006"),
    _entry("100,101", "DDUU-avoiding Dyck words of semilength n",
           dduu_avoiding_dyck_count, "generalized Catalan", "A025242"),
    _entry("021,102", "3*2^(n-1)-C(n+1,2)-1",
           lambda n: 3 * 2 ** (n - 1) - comb(n + 1, 2) - 1, "5-label generating tree", "A116702"),
    _entry("102,120", "(n-1)*2^(n-2)+1",
           lambda n: (n - 1) * 2 ** (n - 2) + 1 if n >= 2 else 1, "3-label generating tree", "A005183"),
    _entry("101,120", f"[x^n] {GF_101_120}", _series_value(GF_101_120), "4-label generating tree", "A116703"),
    _entry("101,110", "F_(2n-1)", lambda n: fibonacci(2 * n - 1), "bisected Fibonacci", "A001519"),
    _entry("201,210", "sum_k C(n-1,k) C_k", _binomial_catalan, "binomial transform of Catalan", "A007317"),
)}


def lookup(patterns) -> Formula:
    key = (patterns if isinstance(patterns, PatternSet) else
           PatternSet.parse(patterns) if isinstance(patterns, str) else
           PatternSet.of(patterns)).key()
    try:
        return REGISTRY[key]
    except KeyError:
        raise DomainError(f"no registered formula for patterns {key!r}") from None


def formula_value(patterns, n: int) -> int:
    if n < 1:
        raise ValueError("n must be >= 1")
    return lookup(patterns).evaluate(n)


def registry_report(n_terms: int = 12) -> list[dict]:
    return [
        {
            "patterns": key,
            "formula": f.description,
            "name": f.name,
            "oeis": f.oeis,
            "terms": [f.evaluate(n) for n in range(1, n_terms + 1)],
        }
        for key, f in REGISTRY.items()
    ]


def registry_report_json(n_terms: int = 12) -> str:
    return json.dumps(registry_report(n_terms), indent=2)


def registry_report_text(n_terms: int = 12) -> str:
    lines = []
    for row in registry_report(n_terms):
        terms = ",".join(str(t) for t in row["terms"])
        lines.append(f"{row['patterns']:<8} {row['oeis']:<8} {row['formula']:<40} {terms}")
    return "\n".join(lines) + "\n"
