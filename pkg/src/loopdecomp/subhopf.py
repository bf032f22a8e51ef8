"""Sub-Hopf algebras B(V) of T(V) generated by Lie powers, and their series data.

``analyze`` builds B degreewise, checks coproduct closure, and derives

* b(t): length series of B,
* q(t) = 1 - 1/b(t): series of the indecomposables (B is free on them),
* a(t) = series(T(V)) / b(t): series of the complement k (x)_B T(V),

together with explicit indecomposable quotients B_n / (decomposables) and the
filtration B^[1] <= B^[2] <= ... by generators of length <= n.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .fplinalg import Subspace, member
from .free_lie import lie_power_subspace
from .hilton_milnor import SpaceDescriptor, loop_series
from .series import TruncatedSeries, geometric_inverse, mul, unit_inverse
from .tensor_hopf import (
    CoalgebraCheck,
    TensorContext,
    decomposables,
    generated_subalgebra,
    graded_dims,
    is_subcoalgebra,
    poincare_series_of,
    primitives,
)

Family = list[tuple[int, Subspace]]


def is_power_of(n: int, p: int) -> bool:
    while n > 1 and n % p == 0:
        n //= p
    return n == 1


def build_llw_family(ctx: TensorContext, max_length: int | None = None) -> Family:
    """Lie powers L_n(V) for 2 <= n <= max_length with n not a power of p."""
    top = ctx.max_length if max_length is None else max_length
    return [(n, lie_power_subspace(ctx, n)) for n in range(2, top + 1) if not is_power_of(n, ctx.p)]


def full_family(ctx: TensorContext) -> Family:
    return [(1, Subspace.full(ctx.p, ctx.m))]


@dataclass
class FiltrationCheck:
    n: int
    passed: bool
    detail: str = ""


@dataclass
class SubHopfResult:
    ctx: TensorContext
    components: list[Subspace]
    b: TruncatedSeries
    q: TruncatedSeries
    a: TruncatedSeries
    indecomposable_dims: list[int]
    coalgebra: CoalgebraCheck
    filtration_checks: list[FiltrationCheck] = field(default_factory=list)
    split_failure: str | None = None

    @property
    def certified_through(self) -> int:
        return self.b.cutoff

    @property
    def coalgebra_closed(self) -> bool:
        return self.coalgebra.closed

    @property
    def q_matches_indecomposables(self) -> bool:
        return list(self.q.coeffs) == self.indecomposable_dims

    @property
    def ba_matches_tensor(self) -> bool:
        return mul(self.b, self.a) == poincare_series_of(self.ctx)

    @property
    def ok(self) -> bool:
        return (self.coalgebra_closed and self.split_failure is None and self.q_matches_indecomposables
                and self.ba_matches_tensor and all(f.passed for f in self.filtration_checks))

    def to_json(self) -> dict:
        return {
            "dim_v": self.ctx.m,
            "prime": self.ctx.p,
            "max_length": self.ctx.max_length,
            "b": list(self.b.coeffs),
            "q": list(self.q.coeffs),
            "a": list(self.a.coeffs),
            "indecomposable_dims": self.indecomposable_dims,
            "coalgebra_closed": self.coalgebra_closed,
            "coalgebra_witness": self.coalgebra.detail or None,
            "filtration": [{"n": f.n, "passed": f.passed} for f in self.filtration_checks],
            "split_failure": self.split_failure,
            "certified_through": self.certified_through,
        }


def indecomposable_dims(ctx: TensorContext, comps: Sequence[Subspace]) -> list[int]:
    out = [0]
    for n in range(1, len(comps)):
        out.append(comps[n].dim - decomposables(ctx, comps, n).dim)
    return out


def _negative(s: TruncatedSeries) -> int | None:
    for d, v in enumerate(s.coeffs):
        if v < 0:
            return d
    return None


def _filtration(ctx: TensorContext, comps: Sequence[Subspace], qdims: Sequence[int]) -> list[FiltrationCheck]:
    """B^[n] is generated by B_i, i <= n; its series must factor as b^[n-1] * a^[n]
    with a^[n] vanishing in lengths 1..n-1, equal to dim Q_n B at length n and
    non-negative, and b^[n] must equal 1/(1 - sum_{i<=n} q_i t^i)."""
    top = len(comps) - 1
    checks = []
    prev = TruncatedSeries.one(top)
    for n in range(1, top + 1):
        gens = [(i, comps[i]) for i in range(1, n + 1)]
        bn = poincare_series_of(ctx, generated_subalgebra(ctx, gens))
        an = mul(bn, unit_inverse(prev))
        free = geometric_inverse(TruncatedSeries({i: qdims[i] for i in range(1, n + 1)}, top))
        problems = []
        if any(an[k] for k in range(1, n)):
            problems.append("complement nonzero below its generating length")
        if an[n] != qdims[n]:
            problems.append(f"complement has {an[n]} at length {n}, expected dim Q_n = {qdims[n]}")
        neg = _negative(an)
        if neg is not None:
            problems.append(f"complement negative at length {neg}")
        if bn != free:
            problems.append("B^[n] is not free on its indecomposables")
        checks.append(FiltrationCheck(n, not problems, "; ".join(problems)))
        prev = bn
    return checks


def analyze(ctx: TensorContext, family: Family, filtration: bool = True) -> SubHopfResult:
    comps = generated_subalgebra(ctx, family)
    closed = is_subcoalgebra(ctx, comps)
    b = poincare_series_of(ctx, comps)
    inv = unit_inverse(b)
    q = TruncatedSeries.one(b.cutoff) - inv
    a = mul(poincare_series_of(ctx), inv)
    qdims = indecomposable_dims(ctx, comps)
    failure = None
    for name, s in (("q", q), ("a", a)):
        d = _negative(s)
        if d is not None:
            failure = f"not coalgebra-split at this truncation: {name} negative in degree {d}"
            break
    checks = _filtration(ctx, comps, qdims) if filtration else []
    return SubHopfResult(ctx, comps, b, q, a, qdims, closed, checks, failure)


def amin_series(ctx: TensorContext, max_length: int | None = None) -> TruncatedSeries:
    """Complement series of the LLW subalgebra: the candidate A^min dimension series."""
    res = analyze(ctx, build_llw_family(ctx, max_length), filtration=False)
    if res.split_failure:
        raise ValueError(res.split_failure)
    return res.a


@dataclass
class LocalizationReport:
    verdicts: dict[int, bool]
    skipped: list[int]

    @property
    def passed(self) -> bool:
        return all(self.verdicts.values())


def primitive_localization_check(ctx: TensorContext, max_length: int | None = None,
                                 components: Sequence[Subspace] | None = None) -> LocalizationReport:
    """Primitives of non-p-power length lie in the LLW subalgebra."""
    top = ctx.max_length if max_length is None else max_length
    comps = components or generated_subalgebra(ctx, build_llw_family(ctx, top))
    verdicts, skipped = {}, []
    for n in range(2, top + 1):
        if is_power_of(n, ctx.p):
            skipped.append(n)
            continue
        prim = primitives(ctx, n)
        verdicts[n] = all(member(v, comps[n]) for v in prim.basis)
    return LocalizationReport(verdicts, skipped)


@dataclass
class FibrationReport:
    holds: bool
    cutoff: int
    first_failure: int | None
    loop: TruncatedSeries
    a: TruncatedSeries
    q: TruncatedSeries
    b_from_q: TruncatedSeries
    b: TruncatedSeries
    nonnegative: bool

    def verdict(self) -> str:
        if self.holds:
            return f"identity holds through degree {self.cutoff}"
        return f"identity FAILS at degree {self.first_failure}"


def context_for_space(y: SpaceDescriptor, p: int, cutoff: int) -> TensorContext:
    """One generator per basis element of V = desuspended reduced homology, degree <= cutoff."""
    s = y.desuspension
    degrees = []
    for d in range(1, min(cutoff, s.cutoff) + 1):
        degrees.extend([d] * s[d])
    if not degrees:
        return TensorContext.build([], p, 0, cutoff)
    return TensorContext.build(degrees, p, cutoff // min(degrees), cutoff,
                               names=[f"v{i + 1}" for i in range(len(degrees))])


def fibration_series_check(y: SpaceDescriptor, p: int, cutoff: int) -> FibrationReport:
    """Loop series of Y against a(t) * 1/(1 - q(t)) in internal degree.

    q(t) comes from explicit indecomposable quotients Q_n B graded by internal
    degree, a(t) from series(T(V)) / b(t); both weight a word by the sum of the
    degrees of its letters in V.
    """
    ctx = context_for_space(y, p, cutoff)
    loop = loop_series(y, cutoff)
    if ctx.m == 0:
        one = TruncatedSeries.one(cutoff)
        zero = TruncatedSeries.zero(cutoff)
        return FibrationReport(True, cutoff, None, loop, one, zero, one, one, True)
    comps = generated_subalgebra(ctx, build_llw_family(ctx))
    b = poincare_series_of(ctx, comps, grading="internal", cutoff=cutoff)
    qd: dict[int, int] = {}
    for n in range(1, ctx.max_length + 1):
        bn = graded_dims(ctx, comps[n], n)
        dn = graded_dims(ctx, decomposables(ctx, comps, n), n)
        for d, k in bn.items():
            if d <= cutoff and k - dn.get(d, 0):
                qd[d] = qd.get(d, 0) + k - dn.get(d, 0)
    q = TruncatedSeries(qd, cutoff)
    b_from_q = geometric_inverse(q)
    a = mul(poincare_series_of(ctx, grading="internal", cutoff=cutoff), unit_inverse(b))
    rhs = mul(a, b_from_q)
    cmp = loop.compare(rhs)
    nonneg = a.is_nonnegative() and q.is_nonnegative()
    holds = cmp.equal and b == b_from_q and nonneg
    first = cmp.first_mismatch
    if first is None and b != b_from_q:
        first = b.compare(b_from_q).first_mismatch
    return FibrationReport(holds, cutoff, first, loop, a, q, b_from_q, b, nonneg)
