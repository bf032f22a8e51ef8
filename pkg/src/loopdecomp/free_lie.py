"""Lyndon words, standard bracketings and Witt dimension formulas."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache, reduce
from typing import Union

import numpy as np

from .fplinalg import Subspace
from .series import MultiSeries, TruncatedSeries, geometric_inverse, mul, unit_inverse
from .tensor_hopf import TensorContext, TensorElement, Word, concat_product

Bracket = Union[int, tuple["Bracket", "Bracket"]]


class LyndonError(ValueError):
    pass


def is_lyndon(w: Word) -> bool:
    """Strictly smaller than every proper rotation."""
    n = len(w)
    if n == 0:
        return False
    return all(w < w[i:] + w[:i] for i in range(1, n))


def duval(m: int, max_len: int):
    """Yield Lyndon words over ``range(m)`` of length <= max_len in lexicographic order."""
    if m < 1 or max_len < 1:
        return
    w = [0]
    while w:
        yield tuple(w)
        k = len(w)
        while len(w) < max_len:
            w.append(w[len(w) - k])
        while w and w[-1] == m - 1:
            w.pop()
        if w:
            w[-1] += 1


def lyndon_words(m: int, max_len: int) -> list[Word]:
    """All Lyndon words up to ``max_len``, length first then lexicographic."""
    if m < 1 or max_len < 1:
        raise LyndonError("need m >= 1 and max_len >= 1")
    return sorted(duval(m, max_len), key=lambda w: (len(w), w))


def multidegree(w: Word, m: int) -> tuple[int, ...]:
    a = [0] * m
    for g in w:
        a[g] += 1
    return tuple(a)


@lru_cache(maxsize=None)
def _mobius_terms(n: int) -> tuple[tuple[int, int], ...]:
    """(d, mu(d)) for divisors d of n with mu(d) != 0."""
    # deferred: sympy costs ~0.25 s at import, most CLI commands never need it
    from sympy import divisors, mobius

    return tuple((d, int(mobius(d))) for d in divisors(n) if mobius(d))


def witt_count(m: int, n: int) -> int:
    if n < 1:
        raise LyndonError("n must be positive")
    total = sum(mu * m ** (n // d) for d, mu in _mobius_terms(n))
    return total // n


def multinomial(parts) -> int:
    out, acc = 1, 0
    for k in parts:
        acc += k
        out *= math.comb(acc, k)
    return out


def witt_count_multi(alpha) -> int:
    alpha = tuple(int(a) for a in alpha)
    n = sum(alpha)
    if n < 1 or min(alpha) < 0:
        raise LyndonError(f"multidegree {alpha} must be nonzero and non-negative")
    g = reduce(math.gcd, alpha)
    total = sum(mu * multinomial([a // d for a in alpha]) for d, mu in _mobius_terms(g))
    return total // n


def standard_factorization(w: Word) -> tuple[Word, Word]:
    """``w = u v`` with ``v`` the longest proper Lyndon suffix."""
    if len(w) < 2 or not is_lyndon(w):
        raise LyndonError(f"{w} is not a Lyndon word of length >= 2")
    for i in range(1, len(w)):
        if is_lyndon(w[i:]):
            return w[:i], w[i:]
    raise AssertionError("unreachable: the last letter is always Lyndon")


def standard_bracketing(w: Word) -> Bracket:
    if len(w) == 1:
        return w[0]
    u, v = standard_factorization(w)
    return (standard_bracketing(u), standard_bracketing(v))


def bracket_str(b: Bracket, names=None) -> str:
    if isinstance(b, int):
        return names[b] if names else chr(ord("a") + b)
    return f"[{bracket_str(b[0], names)},{bracket_str(b[1], names)}]"


def expand(b: Bracket, ctx: TensorContext) -> TensorElement:
    """Commutator expansion ``[x, y] = xy - yx`` in T(V)."""
    if isinstance(b, int):
        return ctx.generator(b)
    x = expand(b[0], ctx)
    y = expand(b[1], ctx)
    out = concat_product(x, y) - concat_product(y, x)
    if out.truncated:
        raise LyndonError(f"expansion of {bracket_str(b)} exceeds the context cutoffs")
    return out


@dataclass
class LyndonBasisElement:
    word: Word
    m: int
    multidegree: tuple[int, ...] = field(init=False)
    bracketing: Bracket = field(init=False)

    def __post_init__(self):
        if not is_lyndon(self.word):
            raise LyndonError(f"{self.word} is not Lyndon")
        self.multidegree = multidegree(self.word, self.m)
        self.bracketing = standard_bracketing(self.word)

    def expansion(self, ctx: TensorContext) -> TensorElement:
        return expand(self.bracketing, ctx)

    def label(self, names=None) -> str:
        names = names or [chr(ord("a") + i) for i in range(self.m)]
        return "".join(names[g] for g in self.word)


def lyndon_basis(m: int, max_len: int) -> list[LyndonBasisElement]:
    return [LyndonBasisElement(w, m) for w in lyndon_words(m, max_len)]


def lie_power_subspace(ctx: TensorContext, n: int) -> Subspace:
    """Span of the Lyndon bracket expansions of length ``n`` inside T_n(V)."""
    if n > ctx.max_length:
        raise LyndonError(f"length {n} exceeds max_length {ctx.max_length}")
    words = [w for w in lyndon_words(ctx.m, n) if len(w) == n] if n >= 1 else []
    if not words:
        return Subspace.zero(ctx.p, ctx.dim(n))
    rows = np.vstack([expand(standard_bracketing(w), ctx).to_vector(n) for w in words])
    return Subspace(rows, ctx.p, ctx.dim(n))


@dataclass
class WittTable:
    m: int
    max_len: int
    by_length: dict[int, int]
    by_multidegree: dict[tuple[int, ...], int]

    def rows(self):
        """(length, multidegree, lyndon words, count) in length-lex order of multidegree."""
        words = lyndon_words(self.m, self.max_len)
        grouped: dict[tuple[int, ...], list[Word]] = {}
        for w in words:
            grouped.setdefault(multidegree(w, self.m), []).append(w)
        for alpha in sorted(grouped, key=lambda a: (sum(a), tuple(-x for x in a))):
            yield sum(alpha), alpha, grouped[alpha], self.by_multidegree[alpha]


def witt_table(m: int, max_len: int) -> WittTable:
    by_len = {n: witt_count(m, n) for n in range(1, max_len + 1)}
    by_alpha = {}
    for w in lyndon_words(m, max_len):
        a = multidegree(w, m)
        if a not in by_alpha:
            by_alpha[a] = witt_count_multi(a)
    return WittTable(m, max_len, by_len, by_alpha)


@dataclass
class PBWReport:
    holds: bool
    cutoff: int
    grading: str
    first_failure: int | None
    lhs: TruncatedSeries
    rhs: TruncatedSeries
    rank_checked_through: int

    def verdict(self) -> str:
        if self.holds:
            return f"PBW identity holds through degree {self.cutoff}"
        return f"PBW identity FAILS at degree {self.first_failure}"


def pbw_series_check(ctx: TensorContext, cutoff: int, grading: str = "length",
                     rank_check_through: int = 0) -> PBWReport:
    """Compare 1/(1 - v(t)) with the product over Lie basis elements of 1/(1 - t^deg).

    Basis degrees come from the Lyndon words; for lengths up to
    ``rank_check_through`` the count is also confirmed as the rank of the
    bracket expansions in ``ctx``.
    """
    if grading not in ("length", "internal"):
        raise LyndonError(f"unknown grading {grading!r}")
    degs = [1] * ctx.m if grading == "length" else list(ctx.degrees)
    if grading == "internal" and any(d % 2 for d in degs):
        raise LyndonError("internal-degree PBW check needs even generator degrees")
    v = TruncatedSeries({}, cutoff)
    for d in degs:
        v = v + TruncatedSeries.monomial(d, cutoff)
    lhs = geometric_inverse(v)
    if ctx.m == 0:
        rhs = TruncatedSeries.one(cutoff)
        return PBWReport(True, cutoff, grading, None, lhs, rhs, 0)
    max_len = cutoff // min(degs)
    counts: dict[int, int] = {}
    checked = 0
    if max_len >= 1:
        by_len: dict[int, int] = {}
        for w in duval(ctx.m, max_len):
            d = sum(degs[g] for g in w)
            if d <= cutoff:
                counts[d] = counts.get(d, 0) + 1
            by_len[len(w)] = by_len.get(len(w), 0) + 1
        for n in range(1, min(rank_check_through, ctx.max_length, max_len) + 1):
            if lie_power_subspace(ctx, n).dim != by_len.get(n, 0):
                raise LyndonError(f"Lie power rank mismatch at length {n}")
            checked = n
    rhs = TruncatedSeries.one(cutoff)
    for d, k in sorted(counts.items()):
        factor = unit_inverse(TruncatedSeries({0: 1, d: -1}, cutoff))
        rhs = mul(rhs, factor**k)
    cmp = lhs.compare(rhs)
    return PBWReport(cmp.equal, cutoff, grading, cmp.first_mismatch, lhs, rhs, checked)


def multigraded_pbw(m: int, total: int) -> tuple[MultiSeries, MultiSeries]:
    """Both sides of 1/(1 - x_1 - ... - x_m) = prod_alpha (1 - x^alpha)^(-W(alpha))."""
    cut = (total,) * m
    v = MultiSeries({}, cut)
    for i in range(m):
        v = v + MultiSeries.variable(i, cut)
    lhs = v.geometric_inverse()
    rhs = MultiSeries.one(cut)
    seen = set()
    for w in duval(m, total):
        a = multidegree(w, m)
        if a in seen:
            continue
        seen.add(a)
        factor = MultiSeries({a: 1}, cut).geometric_inverse()
        for _ in range(witt_count_multi(a)):
            rhs = rhs * factor
    lhs = MultiSeries({k: c for k, c in lhs.coefficients().items() if sum(k) <= total}, cut)
    rhs = MultiSeries({k: c for k, c in rhs.coefficients().items() if sum(k) <= total}, cut)
    return lhs, rhs
