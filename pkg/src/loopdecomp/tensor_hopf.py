"""The tensor algebra T(V) over F_p as a primitively generated Hopf algebra.

Words are tuples of generator indices. Inside a fixed tensor length ``n`` the
words are ordered lexicographically, which is the same as reading a word as a
base-``m`` numeral; that index is the column of the word in dense vectors, so
concatenation of homogeneous vectors is a Kronecker product.

Only the sign-free ("even") coproduct is implemented: generators of odd
internal degree are treated as if they were even.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, product
from typing import Iterable, Sequence

import numpy as np

from .fplinalg import PrimeField, Subspace, kernel
from .series import TruncatedSeries

Word = tuple[int, ...]


class ContextError(ValueError):
    pass


@dataclass(frozen=True)
class TensorContext:
    """Weighted generator alphabet, prime field and truncation bounds."""

    generators: tuple[tuple[str, int], ...]
    field: PrimeField
    max_length: int
    max_degree: int | None = None

    def __post_init__(self):
        gens = tuple((str(n), int(d)) for n, d in self.generators)
        object.__setattr__(self, "generators", gens)
        names = [n for n, _ in gens]
        if len(set(names)) != len(names):
            raise ContextError(f"duplicate generator names in {names}")
        if any(d < 1 for _, d in gens):
            raise ContextError("generator internal degrees must be positive")
        if self.max_length < 0:
            raise ContextError("max_length must be non-negative")

    @classmethod
    def build(cls, m_or_degrees, p: int, max_length: int, max_degree: int | None = None,
              names: Sequence[str] | None = None) -> "TensorContext":
        """``m_or_degrees`` is either a generator count (all of degree 1) or a list of degrees."""
        if isinstance(m_or_degrees, int):
            degrees = [1] * m_or_degrees
        else:
            degrees = list(m_or_degrees)
        if names is None:
            names = _default_names(len(degrees))
        return cls(tuple(zip(names, degrees)), PrimeField(p), max_length, max_degree)

    @property
    def m(self) -> int:
        return len(self.generators)

    @property
    def p(self) -> int:
        return self.field.p

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(d for _, d in self.generators)

    def names(self) -> tuple[str, ...]:
        return tuple(n for n, _ in self.generators)

    def dim(self, n: int) -> int:
        return self.m**n

    def words(self, n: int) -> list[Word]:
        return list(product(range(self.m), repeat=n))

    def word_index(self, w: Word) -> int:
        i = 0
        for g in w:
            i = i * self.m + g
        return i

    def word_degree(self, w: Word) -> int:
        return sum(self.generators[g][1] for g in w)

    def admits(self, w: Word) -> bool:
        if len(w) > self.max_length:
            return False
        return self.max_degree is None or self.word_degree(w) <= self.max_degree

    def word_str(self, w: Word) -> str:
        return " ".join(self.generators[g][0] for g in w) if w else "1"

    def generator(self, i: int) -> "TensorElement":
        return TensorElement(self, {(i,): 1})

    def unit(self) -> "TensorElement":
        return TensorElement(self, {(): 1})

    def word(self, w: Iterable[int] | str) -> "TensorElement":
        if isinstance(w, str):
            lookup = {n: i for i, (n, _) in enumerate(self.generators)}
            w = tuple(lookup[c] for c in w.split()) if " " in w else tuple(lookup[c] for c in w)
        return TensorElement(self, {tuple(w): 1})


def _default_names(m: int) -> list[str]:
    if m <= 26:
        return [chr(ord("a") + i) for i in range(m)]
    return [f"x{i + 1}" for i in range(m)]


class TensorElement:
    """Sparse F_p-linear combination of words."""

    __slots__ = ("ctx", "terms", "truncated")

    def __init__(self, ctx: TensorContext, terms: dict[Word, int] | None = None, truncated: bool = False):
        self.ctx = ctx
        p = ctx.p
        clean: dict[Word, int] = {}
        for w, c in (terms or {}).items():
            w = tuple(w)
            if any(g < 0 or g >= ctx.m for g in w):
                raise ContextError(f"word {w} uses a letter outside the alphabet")
            if not ctx.admits(w):
                truncated = True
                continue
            c %= p
            if c:
                clean[w] = (clean.get(w, 0) + c) % p
        self.terms = {w: c for w, c in clean.items() if c}
        self.truncated = truncated

    def _same(self, other: "TensorElement") -> None:
        if other.ctx != self.ctx:
            raise ContextError("elements live in different tensor contexts")

    def __add__(self, other: "TensorElement") -> "TensorElement":
        self._same(other)
        t = dict(self.terms)
        for w, c in other.terms.items():
            t[w] = t.get(w, 0) + c
        return TensorElement(self.ctx, t, self.truncated or other.truncated)

    def __neg__(self) -> "TensorElement":
        return TensorElement(self.ctx, {w: -c for w, c in self.terms.items()}, self.truncated)

    def __sub__(self, other: "TensorElement") -> "TensorElement":
        return self + (-other)

    def __rmul__(self, k: int) -> "TensorElement":
        return TensorElement(self.ctx, {w: k * c for w, c in self.terms.items()}, self.truncated)

    def __mul__(self, other):
        if isinstance(other, int):
            return other * self
        return concat_product(self, other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self.ctx == other.ctx and self.terms == other.terms

    def __hash__(self):
        return hash(tuple(sorted(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def lengths(self) -> set[int]:
        return {len(w) for w in self.terms}

    def homogeneous_length(self) -> int:
        ls = self.lengths()
        if len(ls) != 1:
            raise ContextError(f"element is not homogeneous in tensor length: {sorted(ls)}")
        return ls.pop()

    def to_vector(self, n: int | None = None) -> np.ndarray:
        if n is None:
            n = self.homogeneous_length()
        v = np.zeros(self.ctx.dim(n), dtype=np.int64)
        for w, c in self.terms.items():
            if len(w) != n:
                raise ContextError(f"word of length {len(w)} in a length-{n} vector")
            v[self.ctx.word_index(w)] = c
        return v

    @classmethod
    def from_vector(cls, ctx: TensorContext, v, n: int) -> "TensorElement":
        words = ctx.words(n)
        return cls(ctx, {words[i]: int(c) for i, c in enumerate(np.asarray(v)) if c})

    def sorted_terms(self) -> list[tuple[Word, int]]:
        return sorted(self.terms.items(), key=lambda wc: (len(wc[0]), wc[0]))

    def dump(self) -> str:
        """One ``c · g1 g2 ... gk`` line per term, length-lex ordered."""
        return "\n".join(f"{c} · {self.ctx.word_str(w)}" for w, c in self.sorted_terms())

    def to_json(self) -> list:
        return [{"word": [self.ctx.generators[g][0] for g in w], "coeff": c} for w, c in self.sorted_terms()]

    def __repr__(self) -> str:
        body = " + ".join(f"{c}*{self.ctx.word_str(w).replace(' ', '')}" for w, c in self.sorted_terms())
        return f"TensorElement({body or '0'})"


def concat_product(a: TensorElement, b: TensorElement) -> TensorElement:
    a._same(b)
    out: dict[Word, int] = {}
    for u, c in a.terms.items():
        for v, d in b.terms.items():
            w = u + v
            out[w] = out.get(w, 0) + c * d
    return TensorElement(a.ctx, out, a.truncated or b.truncated)


def coproduct(x: TensorElement) -> dict[tuple[Word, Word], int]:
    """Delta(w) = sum over position subsets S of w|S (x) w|complement(S), no signs."""
    p = x.ctx.p
    out: dict[tuple[Word, Word], int] = {}
    for w, c in x.terms.items():
        for (u, v), k in _word_coproduct(w).items():
            out[(u, v)] = (out.get((u, v), 0) + c * k) % p
    return {k: v for k, v in out.items() if v}


@lru_cache(maxsize=None)
def _word_coproduct(w: Word) -> dict[tuple[Word, Word], int]:
    n = len(w)
    out: dict[tuple[Word, Word], int] = {}
    for mask in range(1 << n):
        u = tuple(w[i] for i in range(n) if mask >> i & 1)
        v = tuple(w[i] for i in range(n) if not mask >> i & 1)
        out[(u, v)] = out.get((u, v), 0) + 1
    return out


def reduced_coproduct(x: TensorElement) -> dict[tuple[Word, Word], int]:
    return {k: c for k, c in coproduct(x).items() if k[0] and k[1]}


def is_primitive(x: TensorElement) -> bool:
    return not reduced_coproduct(x)


def tensor_square_dump(ctx: TensorContext, t: dict[tuple[Word, Word], int]) -> str:
    key = lambda kv: (len(kv[0][0]) + len(kv[0][1]), len(kv[0][0]), kv[0])
    return "\n".join(f"{c} · {ctx.word_str(u)} ⊗ {ctx.word_str(v)}" for (u, v), c in sorted(t.items(), key=key))


@lru_cache(maxsize=64)
def coproduct_component_matrix(m: int, n: int, k: int) -> np.ndarray:
    """Matrix of the (k, n-k) component of Delta on length-n words.

    Rows index pairs (u, v) as ``idx(u) * m**(n-k) + idx(v)``; columns index words.
    Entries are plain integer counts (reduce mod p before use).
    """
    out = np.zeros((m**n, m**n), dtype=np.int64)
    rest = n - k
    for col, w in enumerate(product(range(m), repeat=n)):
        for s in combinations(range(n), k):
            sset = set(s)
            iu = 0
            for i in s:
                iu = iu * m + w[i]
            iv = 0
            for i in range(n):
                if i not in sset:
                    iv = iv * m + w[i]
            out[iu * m**rest + iv, col] += 1
    out.setflags(write=False)
    return out


def reduced_coproduct_matrix(ctx: TensorContext, n: int) -> np.ndarray:
    if n < 2:
        return np.zeros((0, ctx.dim(n)), dtype=np.int64)
    blocks = [coproduct_component_matrix(ctx.m, n, k) for k in range(1, n)]
    return np.vstack(blocks) % ctx.p


def primitives(ctx: TensorContext, n: int) -> Subspace:
    """Primitive elements of tensor length ``n`` as a subspace of T_n(V)."""
    if n > ctx.max_length:
        raise ContextError(f"length {n} exceeds max_length {ctx.max_length}")
    if n == 0:
        return Subspace.zero(ctx.p, 1)
    return kernel(reduced_coproduct_matrix(ctx, n), ctx.p)


def _products(ctx: TensorContext, left: Subspace, right: Subspace) -> np.ndarray:
    """All products of basis vectors of two homogeneous subspaces, as rows."""
    if left.dim == 0 or right.dim == 0:
        return np.zeros((0, left.ambient * right.ambient), dtype=np.int64)
    rows = [np.kron(x, right.basis) for x in left.basis]
    return np.vstack(rows) % ctx.p


def generated_subalgebra(ctx: TensorContext, family: Iterable[tuple[int, Subspace]]) -> list[Subspace]:
    """Degreewise span of all products of family elements, lengths 0..max_length.

    Every product of generators starts with a generator, so the length-l
    component is the sum over family members (n, S) of S * B_{l-n}.
    """
    fam = [(n, s) for n, s in family if s.dim]
    for n, s in fam:
        if n < 1:
            raise ContextError("family members must have positive tensor length")
        if s.ambient != ctx.dim(n):
            raise ContextError(f"family subspace for length {n} has ambient {s.ambient}, expected {ctx.dim(n)}")
    comps = [Subspace.full(ctx.p, 1)]
    for ell in range(1, ctx.max_length + 1):
        blocks = [_products(ctx, s, comps[ell - n]) for n, s in fam if n <= ell]
        if blocks:
            comps.append(Subspace(np.vstack(blocks), ctx.p, ctx.dim(ell)))
        else:
            comps.append(Subspace.zero(ctx.p, ctx.dim(ell)))
    return comps


def decomposables(ctx: TensorContext, comps: Sequence[Subspace], n: int) -> Subspace:
    """Span of products B_k * B_{n-k}, 0 < k < n, inside T_n(V)."""
    blocks = [_products(ctx, comps[k], comps[n - k]) for k in range(1, n)]
    blocks = [b for b in blocks if b.shape[0]]
    if not blocks:
        return Subspace.zero(ctx.p, ctx.dim(n))
    return Subspace(np.vstack(blocks), ctx.p, ctx.dim(n))


@dataclass
class CoalgebraCheck:
    closed: bool
    length: int | None = None
    element: TensorElement | None = None
    split: tuple[int, int] | None = None
    term: tuple[Word, Word] | None = None
    detail: str = ""

    def __bool__(self) -> bool:
        return self.closed


def is_subcoalgebra(ctx: TensorContext, comps: Sequence[Subspace]) -> CoalgebraCheck:
    """Check Delta(B) lies in B (x) B, componentwise.

    A matrix M in T_k (x) T_{n-k} lies in B_k (x) B_{n-k} exactly when its
    column space lies in B_k and its row space lies in B_{n-k}.
    """
    if comps[0].dim != 1:
        return CoalgebraCheck(False, 0, detail="B does not contain the unit")
    m, p = ctx.m, ctx.p
    for n in range(2, len(comps)):
        for x in comps[n].basis:
            for k in range(1, n):
                mat = (coproduct_component_matrix(m, n, k) @ x % p).reshape(m**k, m ** (n - k))
                if not mat.any():
                    continue
                bad_rows = comps[n - k].residual(mat).any(axis=1)
                bad_cols = comps[k].residual(mat.T).any(axis=1)
                if bad_rows.any() or bad_cols.any():
                    mask = np.zeros_like(mat, dtype=bool)
                    mask[bad_rows, :] = True
                    mask[:, bad_cols] = True
                    iu, iv = np.argwhere(mask & (mat != 0))[0]
                    u = ctx.words(k)[iu]
                    v = ctx.words(n - k)[iv]
                    elt = TensorElement.from_vector(ctx, x, n)
                    return CoalgebraCheck(
                        False, n, elt, (k, n - k), (u, v),
                        f"Delta({elt!r}) has term {ctx.word_str(u)} ⊗ {ctx.word_str(v)} outside B ⊗ B",
                    )
    return CoalgebraCheck(True)


def is_closed_under_product(ctx: TensorContext, comps: Sequence[Subspace]) -> bool:
    for n in range(2, len(comps)):
        if not comps[n].contains(decomposables(ctx, comps, n)):
            return False
    return True


def graded_dims(ctx: TensorContext, sub: Subspace, n: int) -> dict[int, int]:
    """Dimensions of ``sub`` per internal degree, for a subspace of T_n(V).

    Valid for subspaces spanned by internally homogeneous vectors (all
    subspaces built here are multihomogeneous): then the projection onto the
    words of one internal degree is the intersection with that degree.
    """
    by_deg: dict[int, list[int]] = {}
    for i, w in enumerate(ctx.words(n)):
        by_deg.setdefault(ctx.word_degree(w), []).append(i)
    out = {}
    for d, cols in sorted(by_deg.items()):
        block = sub.basis[:, cols]
        r = Subspace(block, ctx.p, len(cols)).dim if block.size else 0
        if r:
            out[d] = r
    return out


def poincare_series_of(ctx: TensorContext, comps: Sequence[Subspace] | None = None,
                       grading: str = "length", cutoff: int | None = None) -> TruncatedSeries:
    """Dimension series of T(V) (``comps=None``) or of a degreewise subspace list."""
    if grading == "length":
        n = ctx.max_length if cutoff is None else min(cutoff, ctx.max_length)
        if comps is None:
            return TruncatedSeries([ctx.m**k for k in range(n + 1)], n)
        return TruncatedSeries([comps[k].dim for k in range(n + 1)], n)
    if grading != "internal":
        raise ContextError(f"unknown grading {grading!r}")
    dmin = min(ctx.degrees) if ctx.m else 1
    certified = (ctx.max_length + 1) * dmin - 1
    if ctx.max_degree is not None:
        certified = min(certified, ctx.max_degree)
    n = certified if cutoff is None else min(cutoff, certified)
    out: dict[int, int] = {0: 1}
    if comps is None:
        for length in range(1, ctx.max_length + 1):
            for w in product(range(ctx.m), repeat=length):
                d = ctx.word_degree(w)
                if d <= n:
                    out[d] = out.get(d, 0) + 1
    else:
        out[0] = comps[0].dim
        for length in range(1, min(ctx.max_length, len(comps) - 1) + 1):
            for d, k in graded_dims(ctx, comps[length], length).items():
                out[d] = out.get(d, 0) + k
    return TruncatedSeries(out, n)
