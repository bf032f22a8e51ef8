"""Reduced homology series of Porter's fibers F^m_k.

F^m_k is the homotopy fiber of T^m_k -> prod X_i, where T^m_k is the subspace
of the product with at least k coordinates at the basepoint. It is a wedge
over subsets {i_1 < ... < i_j}, j >= m-k+1, of binom(j-1, m-k) copies of
Sigma^(m-k) Omega X_i1 ^ ... ^ Omega X_ij.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .hilton_milnor import SpaceDescriptor, loop_series
from .series import SeriesError, TruncatedSeries, geometric_inverse, mul, shift


class PorterError(ValueError):
    pass


@dataclass
class WedgeRow:
    subset: tuple[int, ...]
    j: int
    multiplicity: int
    summand: TruncatedSeries


def _check_loops(loops: Sequence[TruncatedSeries], k: int) -> int:
    m = len(loops)
    if m < 2:
        raise PorterError("Porter's formula needs m >= 2 spaces")
    if not 1 <= k <= m:
        raise PorterError(f"k = {k} outside 1..{m}")
    for i, w in enumerate(loops):
        if w[0] != 1:
            raise PorterError(f"loop series {i} has constant term {w[0]}, expected 1")
    return m


def porter_wedge_table(loops: Sequence[TruncatedSeries], k: int) -> list[WedgeRow]:
    m = _check_loops(loops, k)
    cutoff = min(w.cutoff for w in loops)
    reduced = [w - 1 for w in loops]
    rows = []
    for j in range(m - k + 1, m + 1):
        mult = math.comb(j - 1, m - k)
        for subset in combinations(range(m), j):
            smash = TruncatedSeries.one(cutoff)
            for i in subset:
                smash = mul(smash, reduced[i])
            rows.append(WedgeRow(subset, j, mult, shift(smash, m - k).truncate(cutoff)))
    return rows


def porter_fiber_series(loops: Sequence[TruncatedSeries], k: int) -> TruncatedSeries:
    """Reduced series of F^m_k from the loop series of X_1..X_m."""
    rows = porter_wedge_table(loops, k)
    cutoff = min(w.cutoff for w in loops)
    total = TruncatedSeries.zero(cutoff)
    for r in rows:
        total = total + r.multiplicity * r.summand
    return total


def loops_of(descriptors: Sequence[SpaceDescriptor], cutoff: int) -> list[TruncatedSeries]:
    return [loop_series(d, cutoff) for d in descriptors]


@dataclass
class PorterHMReport:
    holds: bool | None
    cutoff: int
    first_failure: int | None
    note: str = ""

    def verdict(self) -> str:
        if self.holds is None:
            return f"skipped: {self.note}"
        if self.holds:
            return f"identity holds through degree {self.cutoff}"
        return f"identity FAILS at degree {self.first_failure}"


def porter_hm_consistency(descriptors: Sequence[SpaceDescriptor], cutoff: int) -> PorterHMReport:
    """1/(1 - sum s_i) = prod 1/(1 - s_i) * 1/(1 - F/t) with F the k = m-1 fiber."""
    if len(descriptors) < 2:
        return PorterHMReport(None, cutoff, None, "a single space has no wedge-to-product fiber")
    # the fiber must be known one degree past the cutoff before desuspending
    s_list = []
    for d in descriptors:
        s = d.desuspension
        if s.cutoff < cutoff + 1:
            raise SeriesError(f"{d.name} known only through loop degree {s.cutoff}, need {cutoff + 1}")
        s_list.append(s.truncate(cutoff + 1))
    total = TruncatedSeries.zero(cutoff)
    for s in s_list:
        total = total + s
    lhs = geometric_inverse(total)
    loops = [geometric_inverse(s) for s in s_list]
    fiber = porter_fiber_series(loops, len(loops) - 1)
    rhs = geometric_inverse(shift(fiber, -1))
    for w in loops:
        rhs = mul(rhs, w)
    cmp = lhs.compare(rhs)
    return PorterHMReport(cmp.equal, cmp.cutoff, cmp.first_mismatch)
