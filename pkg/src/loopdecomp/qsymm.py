"""NSymm = T(z_1, z_2, ...) with |z_n| = 2n, its dual QSymm, and the p-local
splittings of Sigma CP-infinity used to factor the QSymm Poincare series.

NSymm elements are dicts ``composition -> int``; the composition
``(a_1, ..., a_l)`` stands for the word ``z_a1 ... z_al`` and ``()`` for 1.
Coefficients are integral throughout.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import Iterator

from .hilton_milnor import SpaceDescriptor, hm_index, hm_product
from .series import TruncatedSeries, geometric_inverse, mul, shift

Composition = tuple[int, ...]
NSymmElement = dict[Composition, int]
TensorSquare = dict[tuple[Composition, Composition], int]


def _clean(d):
    return {k: v for k, v in d.items() if v}


def compositions(n: int) -> Iterator[Composition]:
    """Compositions of n, by length then lexicographically."""
    if n == 0:
        yield ()
        return
    for ell in range(1, n + 1):
        for cuts in _cuts(n, ell):
            yield cuts


def _cuts(n: int, ell: int):
    if ell == 1:
        yield (n,)
        return
    for first in range(1, n - ell + 2):
        for rest in _cuts(n - first, ell - 1):
            yield (first,) + rest


def weight(alpha: Composition) -> int:
    return sum(alpha)


def nsymm_mul(x: NSymmElement, y: NSymmElement) -> NSymmElement:
    out: Counter = Counter()
    for a, c in x.items():
        for b, d in y.items():
            out[a + b] += c * d
    return _clean(out)


def nsymm_add(x: NSymmElement, y: NSymmElement, k: int = 1) -> NSymmElement:
    out = Counter(x)
    for b, d in y.items():
        out[b] += k * d
    return _clean(out)


def truncate(x: NSymmElement, max_weight: int) -> NSymmElement:
    return {a: c for a, c in x.items() if weight(a) <= max_weight}


@lru_cache(maxsize=None)
def _generator_coproduct(n: int) -> tuple[tuple[Composition, Composition], ...]:
    return tuple((((s,) if s else ()), ((n - s,) if n - s else ())) for s in range(n + 1))


@lru_cache(maxsize=None)
def _word_coproduct(alpha: Composition) -> tuple[tuple[tuple[Composition, Composition], int], ...]:
    out: Counter = Counter({((), ()): 1})
    for n in alpha:
        nxt: Counter = Counter()
        for (u, v), c in out.items():
            for (s, t) in _generator_coproduct(n):
                nxt[(u + s, v + t)] += c
        out = nxt
    return tuple(sorted(out.items()))


def nsymm_coproduct(x: NSymmElement, max_weight: int | None = None) -> TensorSquare:
    """Delta(z_n) = sum_{s+t=n} z_s (x) z_t, extended multiplicatively."""
    out: Counter = Counter()
    for a, c in x.items():
        if max_weight is not None and weight(a) > max_weight:
            continue
        for key, k in _word_coproduct(a):
            out[key] += c * k
    return _clean(out)


def counit(x: NSymmElement) -> int:
    return x.get((), 0)


@lru_cache(maxsize=None)
def _antipode_generator(n: int) -> tuple[tuple[Composition, int], ...]:
    # sum_{s+t=n} chi(z_s) z_t = 0 for n >= 1
    if n == 0:
        return (((), 1),)
    acc: Counter = Counter()
    for s in range(n):
        for a, c in _antipode_generator(s):
            acc[a + (n - s,)] -= c
    return tuple(sorted(_clean(acc).items()))


def antipode_generator(n: int) -> NSymmElement:
    """chi(z_n) solved from the antipode axiom."""
    return dict(_antipode_generator(n))


@lru_cache(maxsize=None)
def _antipode_word(alpha: Composition) -> tuple[tuple[Composition, int], ...]:
    # chi is an anti-homomorphism
    out: NSymmElement = {(): 1}
    for n in alpha:
        out = nsymm_mul(antipode_generator(n), out)
    return tuple(sorted(out.items()))


def antipode(x: NSymmElement) -> NSymmElement:
    out: Counter = Counter()
    for a, c in x.items():
        for b, d in _antipode_word(a):
            out[b] += c * d
    return _clean(out)


def antipode_table(max_weight: int) -> dict[int, NSymmElement]:
    return {n: antipode_generator(n) for n in range(1, max_weight + 1)}


def printed_chi(n: int, signed: bool) -> NSymmElement:
    """The closed formula sum over compositions of n of z_alpha, optionally with sign (-1)^length."""
    return {a: ((-1) ** len(a) if signed else 1) for a in compositions(n)}


def antipode_axiom_defect(x: NSymmElement) -> NSymmElement:
    """m (chi (x) id) Delta (x) - unit counit (x); zero when the axiom holds."""
    out: Counter = Counter()
    for (u, v), c in nsymm_coproduct(x).items():
        for a, d in _antipode_word(u):
            out[a + v] += c * d
    out[()] -= counit(x)
    return _clean(out)


@dataclass
class AntipodeReport:
    max_weight: int
    axiom_holds: bool
    signed_formula_matches: bool
    unsigned_formula_matches: bool
    unsigned_first_failure: int | None
    table: dict[int, NSymmElement]

    def note(self) -> str:
        if self.unsigned_formula_matches:
            return "unsigned closed formula agrees with the antipode"
        return (f"sign discrepancy: the unsigned closed formula fails at weight {self.unsigned_first_failure}; "
                "inserting (-1)^length(alpha) "
                + ("recovers the antipode" if self.signed_formula_matches else "does NOT recover it"))


def check_antipode(max_weight: int, all_words: bool = True) -> AntipodeReport:
    """Verify the antipode axiom on every composition (or only generators) up to ``max_weight``."""
    ok = True
    for n in range(1, max_weight + 1):
        basis = compositions(n) if all_words else [(n,)]
        for a in basis:
            if antipode_axiom_defect({a: 1}):
                ok = False
                break
    table = antipode_table(max_weight)
    signed = all(table[n] == printed_chi(n, True) for n in table)
    unsigned_fail = next((n for n in table if table[n] != printed_chi(n, False)), None)
    return AntipodeReport(max_weight, ok, signed, unsigned_fail is None, unsigned_fail, table)


def format_element(x: NSymmElement) -> str:
    if not x:
        return "0"
    parts = []
    for a, c in sorted(x.items(), key=lambda kv: (weight(kv[0]), len(kv[0]), kv[0])):
        mono = "".join(f"z{i}" for i in a) or "1"
        coef = "" if abs(c) == 1 else f"{abs(c)}*"
        sign = "-" if c < 0 else "+"
        parts.append(f"{sign} {coef}{mono}")
    text = " ".join(parts)
    return text[2:] if text.startswith("+ ") else "-" + text[2:]


# QSymm, as the graded dual with monomial basis M_alpha dual to z_alpha.

QSymmElement = dict[Composition, int]


def pairing(f: QSymmElement, x: NSymmElement) -> int:
    """<M_alpha, z_beta> = delta_{alpha, beta}, extended bilinearly."""
    return sum(c * x.get(a, 0) for a, c in f.items())


def quasi_shuffle(alpha: Composition, beta: Composition) -> Counter:
    if not alpha:
        return Counter({beta: 1})
    if not beta:
        return Counter({alpha: 1})
    out: Counter = Counter()
    for comp, c in quasi_shuffle(alpha[1:], beta).items():
        out[(alpha[0],) + comp] += c
    for comp, c in quasi_shuffle(alpha, beta[1:]).items():
        out[(beta[0],) + comp] += c
    for comp, c in quasi_shuffle(alpha[1:], beta[1:]).items():
        out[(alpha[0] + beta[0],) + comp] += c
    return out


def qsymm_mul(f: QSymmElement, g: QSymmElement) -> QSymmElement:
    out: Counter = Counter()
    for a, c in f.items():
        for b, d in g.items():
            for comp, k in quasi_shuffle(a, b).items():
                out[comp] += c * d * k
    return _clean(out)


def qsymm_mul_by_duality(f: QSymmElement, g: QSymmElement) -> QSymmElement:
    """Product dual to Delta: <fg, z_gamma> = <f (x) g, Delta z_gamma>."""
    n = max((weight(a) for a in f), default=0) + max((weight(b) for b in g), default=0)
    out = {}
    for gamma in compositions(n):
        val = sum(c * f.get(u, 0) * g.get(v, 0) for (u, v), c in nsymm_coproduct({gamma: 1}).items())
        if val:
            out[gamma] = val
    return out


def qsymm_coproduct(f: QSymmElement) -> dict[tuple[Composition, Composition], int]:
    """Deconcatenation, dual to concatenation in NSymm."""
    out: Counter = Counter()
    for a, c in f.items():
        for i in range(len(a) + 1):
            out[(a[:i], a[i:])] += c
    return _clean(out)


# Splittings of Sigma CP-infinity and Sigma CP-infinity ^ CP-infinity.

def cp_reduced(cutoff: int) -> TruncatedSeries:
    """Reduced series of CP-infinity: t^2 + t^4 + ..."""
    return TruncatedSeries({d: 1 for d in range(2, cutoff + 1, 2)}, cutoff)


def qsymm_series(cutoff: int) -> TruncatedSeries:
    """1/(1 - c): the series of QSymm (and of Omega Sigma CP-infinity)."""
    return geometric_inverse(cp_reduced(cutoff))


def residue(a: int, p: int) -> int:
    """Representative of a mod (p - 1) in [1, p - 1]."""
    r = a % (p - 1)
    return r if r else p - 1


@dataclass
class SplittingTable:
    p: int
    cutoff: int
    a_i: dict[int, TruncatedSeries] = field(default_factory=dict)
    a_ij: dict[tuple[int, int], TruncatedSeries] = field(default_factory=dict)
    a_plus: dict[tuple[int, int], TruncatedSeries] = field(default_factory=dict)
    a_minus: dict[tuple[int, int], TruncatedSeries] = field(default_factory=dict)

    def refined_summands(self) -> list[tuple[str, TruncatedSeries]]:
        out = []
        for (i, j) in sorted(self.a_plus):
            out.append((f"A+[{i},{j}]", self.a_plus[(i, j)]))
            out.append((f"A-[{i},{j}]", self.a_minus[(i, j)]))
        return out

    def to_json(self) -> dict:
        ser = lambda s: {str(d): v for d, v in s.coefficients().items()}
        return {
            "prime": self.p,
            "cutoff": self.cutoff,
            "A": {str(i): ser(s) for i, s in sorted(self.a_i.items())},
            "A_ij": {f"{i},{j}": ser(s) for (i, j), s in sorted(self.a_ij.items())},
            "A_plus": {f"{i},{j}": ser(s) for (i, j), s in sorted(self.a_plus.items())},
            "A_minus": {f"{i},{j}": ser(s) for (i, j), s in sorted(self.a_minus.items())},
        }


def _check_odd(p: int) -> None:
    from .fplinalg import is_prime

    if not is_prime(p) or p == 2:
        raise ValueError(f"p must be an odd prime, got {p}")


def mnt_splitting(p: int, cutoff: int, table: SplittingTable | None = None) -> SplittingTable:
    """Summand A_i of Sigma CP-infinity holds the classes in degrees 2i+1+2k(p-1)."""
    _check_odd(p)
    table = table or SplittingTable(p, cutoff)
    for i in range(1, p):
        table.a_i[i] = TruncatedSeries({d: 1 for d in range(2 * i + 1, cutoff + 1, 2 * (p - 1))}, cutoff)
    return table


def refined_splitting(p: int, cutoff: int, table: SplittingTable | None = None) -> SplittingTable:
    """Blocks of Sigma CP-infinity ^ CP-infinity by exponent residues, split by the swap.

    A class Sigma(x^a ^ x^b) has degree 2a+2b+1 and sits in block
    (residue(a), residue(b)). The swap exchanges blocks (i, j) and (j, i).
    On a diagonal block the symmetric part has one class per orbit {a, b}
    and the antisymmetric part one per orbit with a != b. For i < j the
    swap-symmetric combinations of the pair of blocks are booked in
    A+[i, j] and the antisymmetric ones in A-[j, i]; A-[i, j] and A+[j, i]
    are empty. Each block then satisfies A+ + A- = A_ij.
    """
    _check_odd(p)
    table = table or SplittingTable(p, cutoff)
    blocks = {(i, j): Counter() for i in range(1, p) for j in range(1, p)}
    plus = {(i, j): Counter() for i in range(1, p) for j in range(1, p)}
    minus = {(i, j): Counter() for i in range(1, p) for j in range(1, p)}
    top = (cutoff - 1) // 2
    for a in range(1, top + 1):
        for b in range(1, top + 1 - a):
            d = 2 * a + 2 * b + 1
            key = (residue(a, p), residue(b, p))
            blocks[key][d] += 1
            i, j = key
            if i == j:
                if a <= b:
                    plus[key][d] += 1
                if a < b:
                    minus[key][d] += 1
            elif i < j:
                plus[key][d] += 1
            else:
                minus[key][d] += 1
    for key in blocks:
        table.a_ij[key] = TruncatedSeries(blocks[key], cutoff)
        table.a_plus[key] = TruncatedSeries(plus[key], cutoff)
        table.a_minus[key] = TruncatedSeries(minus[key], cutoff)
    return table


def smash_reduced(cutoff: int) -> TruncatedSeries:
    """Reduced series of Sigma CP-infinity ^ CP-infinity: t * c^2."""
    c = cp_reduced(cutoff)
    return shift(mul(c, c), 1).truncate(cutoff)


def sigma_cp_reduced(cutoff: int) -> TruncatedSeries:
    return shift(cp_reduced(cutoff), 1).truncate(cutoff)


@dataclass
class GaneaReport:
    cutoff: int
    core_holds: bool
    refined_holds: bool
    first_failure: int | None

    @property
    def holds(self) -> bool:
        return self.core_holds and self.refined_holds

    def verdict(self) -> str:
        if self.holds:
            return f"Ganea splitting identities hold through degree {self.cutoff}"
        return f"Ganea splitting identity FAILS at degree {self.first_failure}"


def ganea_loop_check(cutoff: int, p: int = 3) -> GaneaReport:
    c = cp_reduced(cutoff)
    lhs = geometric_inverse(c)
    core = mul(1 + c, geometric_inverse(mul(c, c)))
    table = refined_splitting(p, cutoff + 1)
    total = TruncatedSeries.zero(cutoff + 1)
    for _, s in table.refined_summands():
        total = total + s
    refined = mul(1 + c, geometric_inverse(shift(total, -1)))
    c1, c2 = lhs.compare(core), lhs.compare(refined)
    first = c1.first_mismatch if not c1 else c2.first_mismatch
    return GaneaReport(cutoff, c1.equal, c2.equal, first)


@dataclass
class FactorizationReport:
    p: int
    cutoff: int
    br_holds: bool
    refined_holds: bool
    br_summands: int
    refined_summands: int
    refined_nonempty: int
    empty_blocks: list[str]
    br_factors: int
    refined_factors: int

    @property
    def holds(self) -> bool:
        return self.br_holds and self.refined_holds

    def verdict(self) -> str:
        if self.holds:
            return f"both factorizations reproduce 1/(1-c) through degree {self.cutoff}"
        return "factorization mismatch"


def _descriptor(name: str, s: TruncatedSeries) -> SpaceDescriptor:
    return SpaceDescriptor(name, s)


def qsymm_factorization_report(p: int, cutoff: int) -> FactorizationReport:
    """Series of QSymm factored two ways: Hilton-Milnor over the wedge of the A_i,
    and CP-infinity times Hilton-Milnor over the refined wedge of A+-[i, j]."""
    _check_odd(p)
    target = qsymm_series(cutoff)
    table = mnt_splitting(p, cutoff + 1)
    br_desc = [_descriptor(f"A{i}", s) for i, s in sorted(table.a_i.items()) if not s.is_zero()]
    br_factors = hm_index(br_desc, cutoff)
    br = hm_product(br_factors, cutoff)

    refined_splitting(p, cutoff + 1, table)
    named = table.refined_summands()
    ref_desc = [_descriptor(n, s) for n, s in named if not s.is_zero()]
    empty = [n for n, s in named if s.is_zero()]
    ref_factors = hm_index(ref_desc, cutoff) if ref_desc else []
    refined = mul(1 + cp_reduced(cutoff), hm_product(ref_factors, cutoff))

    return FactorizationReport(
        p, cutoff, br == target, refined == target,
        p - 1, 2 * (p - 1) ** 2 + 1, len(ref_desc) + 1, empty,
        sum(f.multiplicity for f in br_factors), sum(f.multiplicity for f in ref_factors) + 1,
    )
