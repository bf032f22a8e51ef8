"""Series-level Hilton-Milnor decomposition for wedges of simply connected co-H-spaces.

A space is described by its reduced homology series. Its desuspension
``s(t) = h(t) / t`` is the module V with H_*(Omega Y) = T(V), so the loop
series is ``1/(1 - s)``. The factor indexed by a multidegree alpha has reduced
homology ``t * prod_i s_i^alpha_i`` and appears ``witt_count_multi(alpha)``
times.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .free_lie import witt_count_multi
from .series import SeriesError, TruncatedSeries, geometric_inverse, mul, shift


class SpaceError(ValueError):
    pass


@dataclass(frozen=True)
class SpaceDescriptor:
    name: str
    reduced: TruncatedSeries

    def __post_init__(self):
        if self.reduced.cutoff < 1:
            raise SpaceError(f"{self.name}: series cutoff must be at least 1")
        for d in (0, 1):
            if self.reduced[d]:
                raise SpaceError(f"{self.name} is not simply connected: reduced homology in degree {d}")
        if not self.reduced.is_nonnegative():
            raise SpaceError(f"{self.name}: homology dimensions must be non-negative")

    @property
    def simply_connected(self) -> bool:
        return True

    @property
    def desuspension(self) -> TruncatedSeries:
        return shift(self.reduced, -1)

    @property
    def connectivity(self) -> int | None:
        b = self.reduced.bottom_degree()
        return None if b is None else b - 1

    @classmethod
    def from_degrees(cls, name: str, degrees: dict[int, int], cutoff: int) -> "SpaceDescriptor":
        return cls(name, TruncatedSeries(degrees, cutoff))


def sphere(n: int, cutoff: int) -> SpaceDescriptor:
    return SpaceDescriptor(f"S{n}", TruncatedSeries.monomial(n, cutoff))


def sigma_cp_infinity(cutoff: int) -> SpaceDescriptor:
    """Suspension of CP-infinity: one class in each odd degree >= 3."""
    return SpaceDescriptor("ΣCP∞", TruncatedSeries({d: 1 for d in range(3, cutoff + 1, 2)}, cutoff))


def moore_space(n: int, cutoff: int) -> SpaceDescriptor:
    """Mod-p Moore space P^n: classes in degrees n-1 and n."""
    return SpaceDescriptor(f"P{n}", TruncatedSeries({n - 1: 1, n: 1}, cutoff))


def loop_series(y: SpaceDescriptor, cutoff: int | None = None) -> TruncatedSeries:
    s = y.desuspension
    if cutoff is not None:
        s = _fit(s, cutoff)
    return geometric_inverse(s)


def _fit(s: TruncatedSeries, cutoff: int) -> TruncatedSeries:
    if s.cutoff < cutoff:
        raise SeriesError(f"series known through {s.cutoff}, need {cutoff}")
    return s.truncate(cutoff)


def james_summands(y: SpaceDescriptor, max_n: int) -> list[TruncatedSeries]:
    """Reduced series of the n-th summand of Sigma Omega Y, n = 1..max_n."""
    s = y.desuspension
    out = []
    power = TruncatedSeries.one(s.cutoff)
    for _ in range(max_n):
        power = mul(power, s)
        out.append(shift(power, 1))
    return out


@dataclass
class HMFactor:
    alpha: tuple[int, ...]
    multiplicity: int
    desuspended: TruncatedSeries
    summand: TruncatedSeries = field(init=False)
    loop: TruncatedSeries = field(init=False)

    def __post_init__(self):
        self.summand = shift(self.desuspended, 1).truncate(self.desuspended.cutoff)
        self.loop = geometric_inverse(self.desuspended)

    @property
    def bottom_degree(self) -> int:
        """Bottom degree of the reduced homology of the smash summand."""
        return self.desuspended.bottom_degree() + 1

    def sort_key(self):
        return (self.bottom_degree, self.alpha)


def smash_desuspension(s_list: Sequence[TruncatedSeries], alpha: Sequence[int], cutoff: int) -> TruncatedSeries:
    """prod_i s_i^alpha_i, skipping zero exponents."""
    out = TruncatedSeries.one(cutoff)
    for s, a in zip(s_list, alpha):
        if a:
            out = mul(out, _fit(s, cutoff) ** a)
    return out


def _bounded_multidegrees(bottoms: Sequence[int | None], budget: int):
    """Nonzero alpha with sum alpha_i * bottoms_i <= budget (None bottoms force alpha_i = 0)."""
    m = len(bottoms)

    def rec(i, remaining, acc):
        if i == m:
            if any(acc):
                yield tuple(acc)
            return
        b = bottoms[i]
        top = 0 if b is None else remaining // b
        for a in range(top + 1):
            acc.append(a)
            yield from rec(i + 1, remaining - (a * b if b else 0), acc)
            acc.pop()

    yield from rec(0, budget, [])


def hm_index(descriptors: Sequence[SpaceDescriptor], cutoff: int) -> list[HMFactor]:
    """Factors Omega M(alpha) whose loop series is nontrivial through ``cutoff``.

    Degrees here are in loop-space (desuspended) grading, matching ``loop_series``.
    Sorted by bottom degree of the smash summand, then alpha.
    """
    s_list = [_fit(d.desuspension, cutoff) for d in descriptors]
    bottoms = [s.bottom_degree() for s in s_list]
    factors = []
    for alpha in _bounded_multidegrees(bottoms, cutoff):
        n = witt_count_multi(alpha)
        if n == 0:
            continue
        factors.append(HMFactor(alpha, n, smash_desuspension(s_list, alpha, cutoff)))
    factors.sort(key=HMFactor.sort_key)
    return factors


@dataclass
class HMReport:
    holds: bool
    cutoff: int
    first_failure: int | None
    lhs: TruncatedSeries
    rhs: TruncatedSeries
    factors: list[HMFactor]

    def verdict(self) -> str:
        if self.holds:
            return f"identity holds through degree {self.cutoff}"
        return f"identity FAILS at degree {self.first_failure} (checked through {self.cutoff})"


def hm_product(factors: Iterable[HMFactor], cutoff: int) -> TruncatedSeries:
    rhs = TruncatedSeries.one(cutoff)
    for f in factors:
        loop = f.loop.truncate(cutoff)
        rhs = mul(rhs, loop**f.multiplicity)
    return rhs


def verify_hm(descriptors: Sequence[SpaceDescriptor], cutoff: int) -> HMReport:
    """Check 1/(1 - sum s_i) against the product of Witt-weighted factor loop series."""
    if not descriptors:
        raise SpaceError("need at least one space")
    factors = hm_index(descriptors, cutoff)
    total = TruncatedSeries.zero(cutoff)
    for d in descriptors:
        total = total + _fit(d.desuspension, cutoff)
    lhs = geometric_inverse(total)
    rhs = hm_product(factors, cutoff)
    cmp = lhs.compare(rhs)
    return HMReport(cmp.equal, cutoff, cmp.first_mismatch, lhs, rhs, factors)


# Proof iteration: split off the wedge summands, then apply Porter's fiber
# formula with the GTW/James refinement to the fiber, and repeat.

@dataclass(frozen=True)
class WedgeItem:
    alpha: tuple[int, ...]
    desuspended: TruncatedSeries
    bottom: int


@dataclass
class Stage:
    k: int
    summands: int
    fiber_bottom: int | None


@dataclass
class StageReport:
    cutoff: int
    stages: list[Stage]
    factors: Counter
    index_factors: Counter
    first_fiber_series: TruncatedSeries | None
    first_fiber_matches_porter: bool | None

    @property
    def matches_index(self) -> bool:
        return self.factors == self.index_factors

    @property
    def connectivity_increasing(self) -> bool:
        b = [s.fiber_bottom for s in self.stages if s.fiber_bottom is not None]
        return all(x < y for x, y in zip(b, b[1:]))


def _porter_refine(items: Sequence[WedgeItem], cutoff: int) -> list[WedgeItem]:
    """Wedge summands of the fiber of the wedge-into-product map on ``items``.

    Each subset of size j >= 2 contributes (j - 1) copies of
    Sigma Omega X_1 ^ ... ^ Omega X_j, which splits further into one summand
    per exponent vector (n_1, ..., n_j) >= 1 with desuspension prod s_r^n_r.
    """
    items = sorted(items, key=lambda it: (it.bottom, it.alpha))
    out: list[WedgeItem] = []
    width = len(items[0].alpha) if items else 0

    def rec(start, chosen, budget):
        if len(chosen) >= 2:
            alpha = [0] * width
            series = None
            for idx, n in chosen:
                it = items[idx]
                for i, a in enumerate(it.alpha):
                    alpha[i] += n * a
                term = it.desuspended**n
                series = term if series is None else mul(series, term)
            bottom = series.bottom_degree()
            if bottom is not None and bottom <= cutoff:
                for _ in range(len(chosen) - 1):
                    out.append(WedgeItem(tuple(alpha), series, bottom))
        for idx in range(start, len(items)):
            b = items[idx].bottom
            if b > budget:
                break
            n = 1
            while n * b <= budget:
                chosen.append((idx, n))
                rec(idx + 1, chosen, budget - n * b)
                chosen.pop()
                n += 1

    rec(0, [], cutoff)
    return out


def iterate_stages(descriptors: Sequence[SpaceDescriptor], cutoff: int) -> StageReport:
    from .moment_angle import porter_fiber_series

    s_list = [_fit(d.desuspension, cutoff) for d in descriptors]
    m = len(s_list)
    current = []
    for i, s in enumerate(s_list):
        b = s.bottom_degree()
        if b is not None and b <= cutoff:
            e = [0] * m
            e[i] = 1
            current.append(WedgeItem(tuple(e), s, b))
    factors: Counter = Counter(it.alpha for it in current)
    stages: list[Stage] = []
    first_fiber = None
    porter_ok = None
    k = 1
    while current:
        nxt = _porter_refine(current, cutoff)
        bottom = min((it.bottom for it in nxt), default=None)
        stages.append(Stage(k, len(current), None if bottom is None else bottom + 1))
        if k == 1 and m >= 2:
            first_fiber = TruncatedSeries.zero(cutoff + 1)
            for it in nxt:
                first_fiber = first_fiber + shift(it.desuspended, 1)
            porter = porter_fiber_series([geometric_inverse(s) for s in s_list], m - 1)
            porter_ok = porter.agrees_with(first_fiber)
        factors.update(it.alpha for it in nxt)
        current = nxt
        k += 1
    index = Counter()
    for f in hm_index(descriptors, cutoff):
        index[f.alpha] += f.multiplicity
    return StageReport(cutoff, stages, factors, index, first_fiber, porter_ok)
