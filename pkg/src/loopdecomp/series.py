"""Exact truncated power series with integer coefficients.

Every Poincare series in the package is a :class:`TruncatedSeries`: a dense
tuple of Python ints indexed by degree, valid through an inclusive ``cutoff``.
Binary operations truncate to the smaller cutoff, so a result never claims
coefficients that one of its operands could not certify.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import product
from typing import Iterable, Mapping


class SeriesError(ValueError):
    pass


class TruncatedSeries:
    """Integer power series in ``t`` known through degree ``cutoff``."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable[int] | Mapping[int, int], cutoff: int):
        if cutoff < 0:
            raise SeriesError(f"cutoff must be non-negative, got {cutoff}")
        c = [0] * (cutoff + 1)
        if isinstance(coeffs, Mapping):
            items = coeffs.items()
        else:
            items = enumerate(coeffs)
        for d, v in items:
            d = int(d)
            if d < 0:
                raise SeriesError(f"negative degree {d}")
            if d <= cutoff:
                c[d] += int(v)
        self._c = tuple(c)

    # construction helpers
    @classmethod
    def zero(cls, cutoff: int) -> "TruncatedSeries":
        return cls((), cutoff)

    @classmethod
    def one(cls, cutoff: int) -> "TruncatedSeries":
        return cls((1,), cutoff)

    @classmethod
    def monomial(cls, degree: int, cutoff: int, coeff: int = 1) -> "TruncatedSeries":
        return cls({degree: coeff}, cutoff)

    @classmethod
    def from_function(cls, f, cutoff: int, start: int = 0) -> "TruncatedSeries":
        return cls({d: f(d) for d in range(start, cutoff + 1)}, cutoff)

    @property
    def cutoff(self) -> int:
        return len(self._c) - 1

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self._c

    def __getitem__(self, d: int) -> int:
        if d < 0:
            return 0
        if d > self.cutoff:
            raise IndexError(f"degree {d} beyond cutoff {self.cutoff}")
        return self._c[d]

    def coefficients(self) -> dict[int, int]:
        """Nonzero coefficients as ``{degree: value}``."""
        return {d: v for d, v in enumerate(self._c) if v}

    def truncate(self, cutoff: int) -> "TruncatedSeries":
        if cutoff > self.cutoff:
            raise SeriesError(f"cannot extend cutoff {self.cutoff} to {cutoff}")
        return TruncatedSeries(self._c[: cutoff + 1], cutoff)

    def bottom_degree(self) -> int | None:
        """Lowest degree with a nonzero coefficient, or None for the zero series."""
        for d, v in enumerate(self._c):
            if v:
                return d
        return None

    def is_zero(self) -> bool:
        return not any(self._c)

    def is_nonnegative(self) -> bool:
        return all(v >= 0 for v in self._c)

    # arithmetic
    def __add__(self, other):
        if isinstance(other, int):
            other = TruncatedSeries.monomial(0, self.cutoff, other)
        return add(self, other)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries([-v for v in self._c], self.cutoff)

    def __sub__(self, other):
        if isinstance(other, int):
            other = TruncatedSeries.monomial(0, self.cutoff, other)
        return add(self, -other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return TruncatedSeries([other * v for v in self._c], self.cutoff)
        return mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "TruncatedSeries":
        if n < 0:
            raise SeriesError("negative powers are not supported; use unit_inverse")
        result = TruncatedSeries.one(self.cutoff)
        base = self
        while n:
            if n & 1:
                result = mul(result, base)
            n >>= 1
            if n:
                base = mul(base, base)
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self._c == other._c

    def __hash__(self) -> int:
        return hash(self._c)

    def __repr__(self) -> str:
        return f"TruncatedSeries({self.render()}, cutoff={self.cutoff})"

    def __str__(self) -> str:
        return self.render()

    # comparison through the common cutoff
    def compare(self, other: "TruncatedSeries") -> "Comparison":
        n = min(self.cutoff, other.cutoff)
        for d in range(n + 1):
            if self._c[d] != other._c[d]:
                return Comparison(False, n, d)
        return Comparison(True, n, None)

    def agrees_with(self, other: "TruncatedSeries") -> bool:
        return self.compare(other).equal

    # rendering
    def render(self, var: str = "t") -> str:
        terms = []
        for d, v in enumerate(self._c):
            if not v:
                continue
            mag = abs(v)
            if d == 0:
                body = str(mag)
            else:
                mono = var if d == 1 else f"{var}^{d}"
                body = mono if mag == 1 else f"{mag}*{mono}"
            if not terms:
                terms.append(body if v > 0 else f"-{body}")
            else:
                terms.append(("+ " if v > 0 else "- ") + body)
        text = " ".join(terms) if terms else "0"
        return f"{text} + O({var}^{self.cutoff + 1})"

    def to_json(self) -> dict:
        return {"cutoff": self.cutoff, "coeffs": {str(d): v for d, v in self.coefficients().items()}}

    @classmethod
    def from_json(cls, data: Mapping) -> "TruncatedSeries":
        return cls({int(k): int(v) for k, v in data["coeffs"].items()}, int(data["cutoff"]))

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


@dataclass(frozen=True)
class Comparison:
    equal: bool
    cutoff: int
    first_mismatch: int | None

    def __bool__(self) -> bool:
        return self.equal


def add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    n = min(a.cutoff, b.cutoff)
    return TruncatedSeries([a._c[d] + b._c[d] for d in range(n + 1)], n)


def mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    n = min(a.cutoff, b.cutoff)
    out = [0] * (n + 1)
    bc = b._c
    for i in range(n + 1):
        ai = a._c[i]
        if not ai:
            continue
        for j in range(n + 1 - i):
            bj = bc[j]
            if bj:
                out[i + j] += ai * bj
    return TruncatedSeries(out, n)


def geometric_inverse(s: TruncatedSeries) -> TruncatedSeries:
    """Return ``1/(1 - s)``; the series of a tensor algebra on a module with series ``s``."""
    if s[0] != 0:
        raise SeriesError(
            f"geometric_inverse needs zero constant term, got {s[0]}; "
            "1/(1-s) is not a power series with integer coefficients otherwise"
        )
    n = s.cutoff
    sc = s._c
    support = [j for j in range(1, n + 1) if sc[j]]
    g = [0] * (n + 1)
    g[0] = 1
    for d in range(1, n + 1):
        g[d] = sum(sc[j] * g[d - j] for j in support if j <= d)
    return TruncatedSeries(g, n)


def unit_inverse(s: TruncatedSeries) -> TruncatedSeries:
    """Multiplicative inverse of a series with constant term 1 or -1."""
    c0 = s[0]
    if c0 not in (1, -1):
        raise SeriesError(f"constant term {c0} is not a unit in the integers")
    n = s.cutoff
    sc = s._c
    support = [j for j in range(1, n + 1) if sc[j]]
    g = [0] * (n + 1)
    g[0] = c0
    for d in range(1, n + 1):
        acc = sum(sc[j] * g[d - j] for j in support if j <= d)
        g[d] = -acc * c0
    return TruncatedSeries(g, n)


def shift(s: TruncatedSeries, d: int) -> TruncatedSeries:
    """Multiply by ``t**d``. Negative ``d`` desuspends and must not push terms below degree 0."""
    if d >= 0:
        return TruncatedSeries({k + d: v for k, v in s.coefficients().items()}, s.cutoff + d)
    for k, v in s.coefficients().items():
        if k + d < 0:
            raise SeriesError(f"shift by {d} moves the degree-{k} term to degree {k + d}")
    return TruncatedSeries({k + d: v for k, v in s.coefficients().items()}, s.cutoff + d)


class MultiSeries:
    """Integer power series in several variables, truncated per variable."""

    __slots__ = ("_c", "cutoffs")

    def __init__(self, coeffs: Mapping[tuple[int, ...], int], cutoffs: tuple[int, ...]):
        self.cutoffs = tuple(int(c) for c in cutoffs)
        arity = len(self.cutoffs)
        c: dict[tuple[int, ...], int] = {}
        for k, v in coeffs.items():
            k = tuple(int(x) for x in k)
            if len(k) != arity:
                raise SeriesError(f"multidegree {k} has arity {len(k)}, expected {arity}")
            if any(x < 0 for x in k):
                raise SeriesError(f"negative exponent in {k}")
            if v and all(x <= b for x, b in zip(k, self.cutoffs)):
                c[k] = c.get(k, 0) + int(v)
        self._c = {k: v for k, v in c.items() if v}

    @property
    def arity(self) -> int:
        return len(self.cutoffs)

    @classmethod
    def one(cls, cutoffs) -> "MultiSeries":
        return cls({(0,) * len(cutoffs): 1}, cutoffs)

    @classmethod
    def variable(cls, i: int, cutoffs) -> "MultiSeries":
        e = [0] * len(cutoffs)
        e[i] = 1
        return cls({tuple(e): 1}, cutoffs)

    def coefficients(self) -> dict[tuple[int, ...], int]:
        return dict(self._c)

    def __getitem__(self, alpha) -> int:
        return self._c.get(tuple(alpha), 0)

    def _common(self, other: "MultiSeries") -> tuple[int, ...]:
        if other.arity != self.arity:
            raise SeriesError(f"arity mismatch {self.arity} vs {other.arity}")
        return tuple(min(a, b) for a, b in zip(self.cutoffs, other.cutoffs))

    def __add__(self, other: "MultiSeries") -> "MultiSeries":
        cut = self._common(other)
        out = dict(self._c)
        for k, v in other._c.items():
            out[k] = out.get(k, 0) + v
        return MultiSeries(out, cut)

    def __neg__(self) -> "MultiSeries":
        return MultiSeries({k: -v for k, v in self._c.items()}, self.cutoffs)

    def __sub__(self, other: "MultiSeries") -> "MultiSeries":
        return self + (-other)

    def __mul__(self, other: "MultiSeries") -> "MultiSeries":
        cut = self._common(other)
        out: dict[tuple[int, ...], int] = {}
        for ka, va in self._c.items():
            for kb, vb in other._c.items():
                k = tuple(x + y for x, y in zip(ka, kb))
                if all(x <= b for x, b in zip(k, cut)):
                    out[k] = out.get(k, 0) + va * vb
        return MultiSeries(out, cut)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MultiSeries):
            return NotImplemented
        return self.cutoffs == other.cutoffs and self._c == other._c

    def __repr__(self) -> str:
        return f"MultiSeries({self._c!r}, cutoffs={self.cutoffs})"

    def geometric_inverse(self) -> "MultiSeries":
        """``1/(1 - self)``; requires zero constant term."""
        zero = (0,) * self.arity
        if self._c.get(zero, 0):
            raise SeriesError("geometric_inverse needs zero constant term")
        out: dict[tuple[int, ...], int] = {zero: 1}
        # graded by total degree so each coefficient only depends on lower ones
        ranges = [range(b + 1) for b in self.cutoffs]
        for k in sorted(product(*ranges), key=sum):
            if k == zero:
                continue
            acc = 0
            for j, v in self._c.items():
                rest = tuple(x - y for x, y in zip(k, j))
                if min(rest) >= 0:
                    acc += v * out.get(rest, 0)
            if acc:
                out[k] = acc
        return MultiSeries(out, self.cutoffs)


def specialize(m: MultiSeries, weights: tuple[int, ...] | list[int], cutoff: int) -> TruncatedSeries:
    """Substitute ``t**weights[i]`` for variable ``i``."""
    if len(weights) != m.arity:
        raise SeriesError(f"need {m.arity} weights, got {len(weights)}")
    out: dict[int, int] = {}
    for k, v in m._c.items():
        d = sum(a * w for a, w in zip(k, weights))
        if d <= cutoff:
            out[d] = out.get(d, 0) + v
    return TruncatedSeries(out, cutoff)
