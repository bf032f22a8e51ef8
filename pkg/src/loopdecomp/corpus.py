"""Fixture corpus and brute-force oracles.

The oracles here deliberately share no code with the main modules: series are
plain lists, linear algebra is a separate pure-Python elimination over dict
rows, Lyndon words come from filtering all words by rotation. Every expected
value in ``fixtures/`` is produced by one of them; ``check`` compares the
stored files with a fresh oracle run and with the main code path.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass
from itertools import combinations, product
from pathlib import Path
from typing import Callable

# ---------------------------------------------------------------- oracles


def oracle_lyndon(m: int, max_len: int, weights: list[int] | None = None,
                  budget: int | None = None) -> dict:
    """Count words strictly smaller than all their proper rotations.

    With ``weights`` and ``budget`` only words whose letter weights sum to at
    most ``budget`` are enumerated; every rotation has the same weight.
    """
    wts = weights or [1] * m
    cap = budget if budget is not None else max_len * max(wts)
    by_len: dict[int, int] = {n: 0 for n in range(1, max_len + 1)}
    by_alpha: dict[tuple, int] = {}

    def rec(w: list[int], weight: int):
        n = len(w)
        if n:
            t = tuple(w)
            if all(t < t[i:] + t[:i] for i in range(1, n)):
                by_len[n] += 1
                a = tuple(t.count(g) for g in range(m))
                by_alpha[a] = by_alpha.get(a, 0) + 1
        if n == max_len:
            return
        for g in range(m):
            if weight + wts[g] <= cap:
                w.append(g)
                rec(w, weight + wts[g])
                w.pop()

    rec([], 0)
    return {"by_length": by_len, "by_multidegree": by_alpha}


def _conv(a: list[int], b: list[int], n: int) -> list[int]:
    out = [0] * (n + 1)
    for i, x in enumerate(a[: n + 1]):
        if x:
            for j, y in enumerate(b[: n + 1 - i]):
                out[i + j] += x * y
    return out


def _inv_one_minus(s: list[int], n: int) -> list[int]:
    """Expand 1/(1 - s) as sum of powers of s."""
    out = [0] * (n + 1)
    out[0] = 1
    power = [1] + [0] * n
    for _ in range(n):
        power = _conv(power, s, n)
        if not any(power):
            break
        out = [x + y for x, y in zip(out, power)]
    return out


def oracle_series_product(factors: list[tuple[list[int], int]], cutoff: int) -> list[int]:
    """prod over (f, e) of (1/(1 - f))^e, each f with zero constant term."""
    out = [1] + [0] * cutoff
    for f, e in factors:
        g = _inv_one_minus(list(f) + [0] * (cutoff + 1 - len(f)), cutoff)
        for _ in range(e):
            out = _conv(out, g, cutoff)
    return out


def _eliminate_rank(rows: list[dict[int, int]], p: int) -> int:
    pivots: dict[int, dict[int, int]] = {}
    for r in rows:
        r = {k: v % p for k, v in r.items() if v % p}
        while r:
            lead = min(r)
            if lead not in pivots:
                inv = pow(r[lead], -1, p)
                pivots[lead] = {k: v * inv % p for k, v in r.items()}
                break
            piv = pivots[lead]
            c = r[lead]
            for k, v in piv.items():
                r[k] = (r.get(k, 0) - c * v) % p
                if not r[k]:
                    del r[k]
    return len(pivots)


def _word_delta_bar(w: tuple) -> dict:
    n = len(w)
    out: dict = {}
    for k in range(1, n):
        for s in combinations(range(n), k):
            u = tuple(w[i] for i in s)
            v = tuple(w[i] for i in range(n) if i not in s)
            out[(u, v)] = out.get((u, v), 0) + 1
    return out


def oracle_primitives(m: int, p: int, n: int) -> int:
    """dim ker of the reduced coproduct on length-n words, via the transpose system."""
    words = list(product(range(m), repeat=n))
    if n == 1:
        return m
    cols = {}
    for j, w in enumerate(words):
        for key, c in _word_delta_bar(w).items():
            cols.setdefault(key, {})[j] = cols.get(key, {}).get(j, 0) + c
    rank = _eliminate_rank(list(cols.values()), p)
    return len(words) - rank


def _bracket_poly(w: tuple) -> dict:
    """Standard-bracket expansion via the longest Lyndon proper suffix, integer coefficients."""
    if len(w) == 1:
        return {w: 1}
    lyn = lambda x: all(x < x[i:] + x[:i] for i in range(1, len(x)))
    i = next(i for i in range(1, len(w)) if lyn(w[i:]))
    x, y = _bracket_poly(w[:i]), _bracket_poly(w[i:])
    out: dict = {}
    for a, c in x.items():
        for b, d in y.items():
            out[a + b] = out.get(a + b, 0) + c * d
            out[b + a] = out.get(b + a, 0) - c * d
    return {k: v for k, v in out.items() if v}


def oracle_llw_dims(m: int, p: int, max_len: int) -> list[int]:
    """Dimensions of the subalgebra generated by Lie powers of non-p-power length.

    Spans every product of bracket expansions whose lengths sum to each
    length, with no reuse of lower components.
    """
    def ppow(n):
        while n > 1 and n % p == 0:
            n //= p
        return n == 1

    lyn = lambda x: all(x < x[i:] + x[:i] for i in range(1, len(x)))
    gens = {n: [_bracket_poly(w) for w in product(range(m), repeat=n) if lyn(w)]
            for n in range(2, max_len + 1) if not ppow(n)}
    dims = [1]
    for ell in range(1, max_len + 1):
        rows = []

        def rec(remaining, acc):
            if remaining == 0:
                rows.append(acc)
                return
            for n, polys in gens.items():
                if n <= remaining:
                    for g in polys:
                        nxt: dict = {}
                        for a, c in acc.items():
                            for b, d in g.items():
                                nxt[a + b] = nxt.get(a + b, 0) + c * d
                        rec(remaining - n, nxt)

        rec(ell, {(): 1})
        dims.append(_eliminate_rank(rows, p) if rows else 0)
    return dims


def oracle_porter(loops: list[list[int]], k: int, cutoff: int) -> list[int]:
    m = len(loops)
    out = [0] * (cutoff + 1)
    reduced = [[0] + list(w[1 : cutoff + 1]) for w in loops]
    for j in range(m - k + 1, m + 1):
        mult = math.comb(j - 1, m - k)
        for sub in combinations(range(m), j):
            prod_ = [1] + [0] * cutoff
            for i in sub:
                prod_ = _conv(prod_, reduced[i], cutoff)
            for d, v in enumerate(prod_):
                if d + m - k <= cutoff:
                    out[d + m - k] += mult * v
    return out


def oracle_antipode(max_weight: int) -> dict[int, dict[tuple, int]]:
    """Solve sum_{s+t=n} z_s chi(z_t) = 0, the right-handed form of the antipode axiom."""
    chi: dict[int, dict[tuple, int]] = {0: {(): 1}}
    for n in range(1, max_weight + 1):
        acc: dict[tuple, int] = {}
        for s in range(1, n + 1):
            for a, c in chi[n - s].items():
                key = (s,) + a
                acc[key] = acc.get(key, 0) - c
        chi[n] = {k: v for k, v in acc.items() if v}
    del chi[0]
    return chi


# ---------------------------------------------------------------- fixtures

SPACE_SETS = {
    "two_spheres": [{"name": "S2a", "series": {"2": 1}}, {"name": "S2b", "series": {"2": 1}}],
    "s3_s5": [{"name": "S3", "series": {"3": 1}}, {"name": "S5", "series": {"5": 1}}],
    "s3_sigmacp": [{"name": "S3", "series": {"3": 1}}, {"name": "ΣCP∞", "preset": "sigma_cp_inf"}],
    "moore_s3": [{"name": "P4", "series": {"3": 1, "4": 1}}, {"name": "S3", "series": {"3": 1}}],
    "s3_s3_s5": [{"name": "S3a", "series": {"3": 1}}, {"name": "S3b", "series": {"3": 1}},
                 {"name": "S5", "series": {"5": 1}}],
    "s2_s3_sigmacp": [{"name": "S2", "series": {"2": 1}}, {"name": "S3", "series": {"3": 1}},
                      {"name": "ΣCP∞", "preset": "sigma_cp_inf"}],
}


def _space_list(spaces: list[dict], cutoff: int) -> list[list[int]]:
    """Desuspended series as plain lists through ``cutoff`` (oracle side)."""
    out = []
    for s in spaces:
        if s.get("preset") == "sigma_cp_inf":
            coeffs = {d: 1 for d in range(3, cutoff + 2, 2)}
        else:
            coeffs = {int(k): int(v) for k, v in s["series"].items()}
        out.append([coeffs.get(d + 1, 0) for d in range(cutoff + 1)])
    return out


def _hm_oracle(inp: dict) -> dict:
    cutoff = inp["cutoff"]
    s_list = _space_list(inp["spaces"], cutoff)
    total = [sum(col) for col in zip(*s_list)]
    lhs = _inv_one_minus(total, cutoff)
    bottoms = [next(d for d, v in enumerate(x) if v) for x in s_list]
    lyn = oracle_lyndon(len(s_list), cutoff, bottoms, cutoff)["by_multidegree"]
    factors = []
    for alpha, n in sorted(lyn.items()):
        f = [1] + [0] * cutoff
        for s, a in zip(s_list, alpha):
            for _ in range(a):
                f = _conv(f, s, cutoff)
        if any(f):
            factors.append((f, n))
    rhs = oracle_series_product(factors, cutoff)
    return {"lhs": lhs, "rhs": rhs, "holds": lhs == rhs}


def _hm_actual(inp: dict) -> dict:
    from .cli import load_spaces
    from .hilton_milnor import verify_hm

    r = verify_hm(load_spaces({"spaces": inp["spaces"]}, inp["cutoff"] + 2), inp["cutoff"])
    return {"lhs": list(r.lhs.coeffs), "rhs": list(r.rhs.coeffs), "holds": r.holds}


def _lyndon_oracle(inp: dict) -> dict:
    r = oracle_lyndon(inp["m"], inp["max_len"])
    return {"by_length": {str(k): v for k, v in r["by_length"].items()},
            "by_multidegree": {",".join(map(str, k)): v for k, v in sorted(r["by_multidegree"].items())}}


def _lyndon_actual(inp: dict) -> dict:
    from .free_lie import lyndon_words, multidegree, witt_count, witt_count_multi

    words = lyndon_words(inp["m"], inp["max_len"])
    alphas = sorted({multidegree(w, inp["m"]) for w in words})
    return {"by_length": {str(n): witt_count(inp["m"], n) for n in range(1, inp["max_len"] + 1)},
            "by_multidegree": {",".join(map(str, a)): witt_count_multi(a) for a in alphas}}


def _prim_oracle(inp: dict) -> dict:
    return {"dims": [oracle_primitives(inp["m"], inp["p"], n) for n in range(1, inp["max_len"] + 1)]}


def _prim_actual(inp: dict) -> dict:
    from .tensor_hopf import TensorContext, primitives

    ctx = TensorContext.build(inp["m"], inp["p"], inp["max_len"])
    return {"dims": [primitives(ctx, n).dim for n in range(1, inp["max_len"] + 1)]}


def _llw_oracle(inp: dict) -> dict:
    m, p, n = inp["m"], inp["p"], inp["max_len"]
    b = oracle_llw_dims(m, p, n)
    inv = [1] + [0] * n  # 1/b by naive long division
    for d in range(1, n + 1):
        inv[d] = -sum(b[j] * inv[d - j] for j in range(1, d + 1))
    q = [(1 if d == 0 else 0) - inv[d] for d in range(n + 1)]
    a = _conv([m**k for k in range(n + 1)], inv, n)
    return {"b": b, "q": q, "a": a}


def _llw_actual(inp: dict) -> dict:
    from .subhopf import analyze, build_llw_family
    from .tensor_hopf import TensorContext

    ctx = TensorContext.build(inp["m"], inp["p"], inp["max_len"])
    r = analyze(ctx, build_llw_family(ctx), filtration=False)
    return {"b": list(r.b.coeffs), "q": list(r.q.coeffs), "a": list(r.a.coeffs)}


def _porter_oracle(inp: dict) -> dict:
    cutoff = inp["cutoff"]
    loops = [_inv_one_minus(s, cutoff) for s in _space_list(inp["spaces"], cutoff)]
    return {"fiber": oracle_porter(loops, inp["k"], cutoff)}


def _porter_actual(inp: dict) -> dict:
    from .cli import load_spaces
    from .moment_angle import loops_of, porter_fiber_series

    desc = load_spaces({"spaces": inp["spaces"]}, inp["cutoff"] + 2)
    return {"fiber": list(porter_fiber_series(loops_of(desc, inp["cutoff"]), inp["k"]).coeffs)}


def _antipode_oracle(inp: dict) -> dict:
    chi = oracle_antipode(inp["max_weight"])
    return {str(n): {",".join(map(str, a)): c for a, c in sorted(x.items())} for n, x in chi.items()}


def _antipode_actual(inp: dict) -> dict:
    from .qsymm import antipode_table

    t = antipode_table(inp["max_weight"])
    return {str(n): {",".join(map(str, a)): c for a, c in sorted(x.items())} for n, x in t.items()}


def _ganea_oracle(inp: dict) -> dict:
    n = inp["cutoff"]
    c = [0] + [1 if d % 2 == 0 and d >= 2 else 0 for d in range(1, n + 1)]
    one_plus_c = [1] + c[1:]
    rhs = _conv(one_plus_c, _inv_one_minus(_conv(c, c, n), n), n)
    return {"qsymm": _inv_one_minus(c, n), "ganea_rhs": rhs}


def _ganea_actual(inp: dict) -> dict:
    from .qsymm import cp_reduced, qsymm_series
    from .series import geometric_inverse, mul

    n = inp["cutoff"]
    c = cp_reduced(n)
    return {"qsymm": list(qsymm_series(n).coeffs),
            "ganea_rhs": list(mul(1 + c, geometric_inverse(mul(c, c))).coeffs)}


@dataclass
class Fixture:
    id: str
    module: str
    oracle: str
    cutoff: int
    input: dict
    expected: Callable[[dict], dict]
    actual: Callable[[dict], dict]

    @property
    def path(self) -> str:
        return f"{self.module}/{self.id}"


def fixtures() -> list[Fixture]:
    out = []
    for name, spaces in SPACE_SETS.items():
        cutoff = 16 if name == "two_spheres" else 14 if len(spaces) < 3 else 12
        out.append(Fixture(name, "hilton_milnor", "oracle_series_product", cutoff,
                           {"spaces": spaces, "cutoff": cutoff}, _hm_oracle, _hm_actual))
        out.append(Fixture(f"{name}_k{len(spaces) - 1}", "moment_angle", "oracle_porter", cutoff,
                           {"spaces": spaces, "k": len(spaces) - 1, "cutoff": cutoff},
                           _porter_oracle, _porter_actual))
    for m in (1, 2, 3):
        out.append(Fixture(f"lyndon_m{m}", "free_lie", "oracle_lyndon", 7, {"m": m, "max_len": 7},
                           _lyndon_oracle, _lyndon_actual))
    for m, p, n in ((1, 3, 9), (2, 3, 6), (2, 5, 6), (2, 7, 6)):
        out.append(Fixture(f"prim_m{m}_p{p}", "tensor_hopf", "oracle_primitives", n,
                           {"m": m, "p": p, "max_len": n}, _prim_oracle, _prim_actual))
    for m, p in ((1, 3), (2, 3), (2, 5)):
        out.append(Fixture(f"llw_m{m}_p{p}", "subhopf", "oracle_llw_dims", 6,
                           {"m": m, "p": p, "max_len": 6}, _llw_oracle, _llw_actual))
    out.append(Fixture("antipode_w8", "qsymm", "oracle_antipode", 8, {"max_weight": 8},
                       _antipode_oracle, _antipode_actual))
    out.append(Fixture("ganea_30", "qsymm", "oracle_series_product", 30, {"cutoff": 30},
                       _ganea_oracle, _ganea_actual))
    return out


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def render(fx: Fixture) -> dict[str, str]:
    meta = {"id": fx.id, "module": fx.module, "oracle": fx.oracle, "certified_cutoff": fx.cutoff}
    return {"input.json": _dump(fx.input), "expected.json": _dump(fx.expected(fx.input)), "meta.json": _dump(meta)}


def regen(root: Path | str, only: str | None = None) -> list[str]:
    root = Path(root)
    written = []
    for fx in fixtures():
        if only and fx.module != only:
            continue
        d = root / fx.path
        d.mkdir(parents=True, exist_ok=True)
        for name, text in render(fx).items():
            (d / name).write_text(text, encoding="utf-8")
        written.append(fx.path)
    return written


def check(root: Path | str, only: str | None = None) -> list[str]:
    """Problems found: stale files, or main path disagreeing with the oracle."""
    root = Path(root)
    problems = []
    for fx in fixtures():
        if only and fx.module != only:
            continue
        d = root / fx.path
        files = render(fx)
        for name, text in files.items():
            f = d / name
            if not f.exists():
                problems.append(f"{fx.path}/{name}: missing")
            elif f.read_text(encoding="utf-8") != text:
                problems.append(f"{fx.path}/{name}: differs from a fresh oracle run")
        expected = json.loads(files["expected.json"])
        actual = json.loads(_dump(fx.actual(fx.input)))
        if actual != expected:
            problems.append(f"{fx.path}: main path disagrees with {fx.oracle}")
    return problems
