"""Command-line entry point.

Exit codes: 0 verified, 1 verification failure (first failing degree is
reported), 2 input error. Output is deterministic: no timestamps, sorted keys.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Sequence

from . import corpus
from .fplinalg import Subspace, is_prime
from .free_lie import bracket_str, standard_bracketing, witt_table
from .hilton_milnor import (
    SpaceDescriptor,
    SpaceError,
    hm_index,
    iterate_stages,
    loop_series,
    moore_space,
    sigma_cp_infinity,
    sphere,
    verify_hm,
)
from .moment_angle import PorterError, loops_of, porter_fiber_series, porter_hm_consistency, porter_wedge_table
from .qsymm import (
    check_antipode,
    format_element,
    ganea_loop_check,
    mnt_splitting,
    qsymm_factorization_report,
    refined_splitting,
    sigma_cp_reduced,
    smash_reduced,
)
from .series import SeriesError, TruncatedSeries, geometric_inverse
from .subhopf import analyze, build_llw_family, full_family, primitive_localization_check
from .tensor_hopf import TensorContext

TSV_VERSION = "1"


class InputError(Exception):
    pass


@dataclass
class Report:
    code: int = 0
    data: dict = field(default_factory=dict)
    text: list[str] = field(default_factory=list)
    tsv_header: list[str] = field(default_factory=list)
    tsv: list[list[Any]] = field(default_factory=list)
    verdicts: list[str] = field(default_factory=list)

    def fail(self, line: str) -> None:
        self.code = max(self.code, 1)
        self.verdicts.append(line)


# ---------------------------------------------------------------- input


def read_json(path: str) -> Any:
    p = Path(path)
    if not p.is_file():
        raise InputError(f"{path}: no such file")
    text = p.read_text(encoding="utf-8")
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise InputError(f"{path}:{e.lineno}:{e.colno}: malformed JSON: {e.msg}") from None


def _preset(name: str, preset: str, cutoff: int) -> SpaceDescriptor:
    kind, _, arg = preset.partition(":")
    if kind == "sigma_cp_inf":
        return SpaceDescriptor(name or "ΣCP∞", sigma_cp_infinity(cutoff).reduced)
    try:
        n = int(arg)
    except ValueError:
        raise InputError(f"preset {preset!r}: expected an integer after ':'") from None
    if kind == "sphere":
        return SpaceDescriptor(name or f"S{n}", sphere(n, cutoff).reduced)
    if kind == "moore":
        return SpaceDescriptor(name or f"P{n}", moore_space(n, cutoff).reduced)
    raise InputError(f"unknown preset {preset!r}; use sphere:n, moore:n or sigma_cp_inf")


def load_spaces(doc: Any, cutoff: int, where: str = "spaces") -> list[SpaceDescriptor]:
    """Descriptors through ``cutoff`` from a SpaceFile document (list, or object with "spaces")."""
    items = doc.get("spaces") if isinstance(doc, dict) else doc
    if not isinstance(items, list) or not items:
        raise InputError(f"{where}: expected a non-empty list of spaces")
    out = []
    for idx, item in enumerate(items):
        loc = f"{where}[{idx}]"
        if not isinstance(item, dict):
            raise InputError(f"{loc}: expected an object")
        name = item.get("name", "")
        if not isinstance(name, str):
            raise InputError(f"{loc}.name: expected a string")
        if "preset" in item:
            out.append(_preset(name, str(item["preset"]), cutoff))
            continue
        series = item.get("series")
        if not isinstance(series, dict):
            raise InputError(f"{loc}.series: expected an object mapping degree to dimension")
        coeffs = {}
        for k, v in series.items():
            try:
                d = int(k)
            except ValueError:
                raise InputError(f"{loc}.series: degree {k!r} is not an integer") from None
            if not isinstance(v, int) or isinstance(v, bool):
                raise InputError(f"{loc}.series[{k!r}]: dimension must be an integer")
            if d < 0:
                raise InputError(f"{loc}.series: negative degree {d}")
            if d <= cutoff:
                coeffs[d] = v
        try:
            out.append(SpaceDescriptor(name or f"X{idx + 1}", TruncatedSeries(coeffs, cutoff)))
        except SpaceError as e:
            raise InputError(f"{loc}: {e}") from None
    return out


def _spaces_arg(args) -> tuple[Any, int | None, int | None]:
    if not args.spaces:
        raise InputError("--spaces FILE is required")
    doc = read_json(args.spaces)
    cutoff = prime = None
    if isinstance(doc, dict):
        cutoff, prime = doc.get("cutoff"), doc.get("prime")
    return doc, cutoff, prime


def _cutoff(args, file_cutoff: int | None, default: int) -> int:
    n = args.cutoff if args.cutoff is not None else (file_cutoff if file_cutoff is not None else default)
    if not isinstance(n, int) or n < 1:
        raise InputError(f"cutoff must be a positive integer, got {n!r}")
    return n


def _prime(args, file_prime: int | None, default: int) -> int:
    p = args.prime if args.prime is not None else (file_prime if file_prime is not None else default)
    if not isinstance(p, int) or not is_prime(p):
        raise InputError(f"prime must be a prime number, got {p!r}")
    return p


def _ser(s: TruncatedSeries) -> dict:
    return s.to_json()


# ---------------------------------------------------------------- commands


def cmd_series(args) -> Report:
    r = Report()
    if args.kind == "geometric":
        if not args.coeffs:
            raise InputError("series geometric needs --coeffs '{\"1\": 2}'")
        try:
            raw = json.loads(args.coeffs)
        except json.JSONDecodeError as e:
            raise InputError(f"--coeffs:{e.lineno}:{e.colno}: malformed JSON: {e.msg}") from None
        n = _cutoff(args, None, 10)
        try:
            s = TruncatedSeries({int(k): v for k, v in raw.items()}, n)
            g = geometric_inverse(s)
        except (SeriesError, ValueError, AttributeError) as e:
            raise InputError(f"--coeffs: {e}") from None
        r.data = {"input": _ser(s), "geometric_inverse": _ser(g)}
        r.text = [f"s(t)         = {s.render()}", f"1/(1 - s(t)) = {g.render()}"]
        r.tsv_header = ["degree", "coefficient"]
        r.tsv = [[d, v] for d, v in enumerate(g.coeffs)]
        return r
    doc, fc, _ = _spaces_arg(args)
    n = _cutoff(args, fc, 12)
    spaces = load_spaces(doc, n + 2)
    r.data = {"loop_series": {}}
    r.tsv_header = ["space", "degree", "coefficient"]
    for y in spaces:
        s = loop_series(y, n)
        r.data["loop_series"][y.name] = _ser(s)
        r.text.append(f"H(Omega {y.name}) = {s.render()}")
        r.tsv.extend([y.name, d, v] for d, v in enumerate(s.coeffs))
    r.data["order"] = [y.name for y in spaces]
    return r


def cmd_lyndon(args) -> Report:
    m = args.m
    n = args.maxlen if args.maxlen is not None else 6
    if m < 1 or n < 1:
        raise InputError("--m and --maxlen must be positive")
    t = witt_table(m, n)
    r = Report()
    names = [chr(ord("a") + i) for i in range(m)] if m <= 26 else None
    rows = []
    mismatch = None
    for length, alpha, words, count in t.rows():
        if len(words) != count and mismatch is None:
            mismatch = length
        for w in words:
            word = "".join(names[i] for i in w) if names else ".".join(map(str, w))
            rows.append({"length": length, "multidegree": list(alpha), "word": word,
                         "bracket": bracket_str(standard_bracketing(w), names), "witt": count})
    r.data = {"m": m, "max_length": n, "rows": rows,
              "by_length": {str(k): v for k, v in t.by_length.items()}}
    r.tsv_header = ["length", "multidegree", "word", "bracket", "witt"]
    r.tsv = [[x["length"], ",".join(map(str, x["multidegree"])), x["word"], x["bracket"], x["witt"]] for x in rows]
    r.text = [f"{x['length']:>3} | {','.join(map(str, x['multidegree'])):<10} | {x['word']:<{n}} | "
              f"{x['bracket']} | {x['witt']}" for x in rows]
    counts = {k: sum(1 for x in rows if x["length"] == k) for k in range(1, n + 1)}
    for k in range(1, n + 1):
        if counts[k] != t.by_length[k] and mismatch is None:
            mismatch = k
    if mismatch is None:
        r.verdicts.append(f"Lyndon counts equal Witt counts through length {n}")
    else:
        r.fail(f"Lyndon count differs from Witt count at length {mismatch}")
    return r


def _factor_rows(factors) -> list[dict]:
    return [{"alpha": list(f.alpha), "multiplicity": f.multiplicity, "bottom_degree": f.bottom_degree,
             "series": _ser(f.desuspended)} for f in factors]


def _factor_text(factors) -> list[str]:
    return [f"alpha={','.join(map(str, f.alpha)):<10} mult={f.multiplicity:<4} bottom={f.bottom_degree:<4} "
            f"s={f.desuspended.render()}" for f in factors]


def _compare_expected(r: Report, expected_path: str | None, actual: dict) -> None:
    if not expected_path:
        return
    exp = read_json(expected_path)
    if not isinstance(exp, dict):
        raise InputError(f"{expected_path}: expected a JSON object")
    for key in sorted(exp):
        if key not in actual:
            continue
        a, e = actual[key], exp[key]
        if a == e:
            continue
        if isinstance(a, list) and isinstance(e, list):
            first = next((i for i, (x, y) in enumerate(zip(a, e)) if x != y), min(len(a), len(e)))
            r.fail(f"expected.{key} disagrees at degree {first}")
        else:
            r.fail(f"expected.{key} disagrees")


def cmd_hm(args) -> Report:
    doc, fc, _ = _spaces_arg(args)
    n = _cutoff(args, fc, 12)
    spaces = load_spaces(doc, n + 2)
    r = Report()
    r.tsv_header = ["alpha", "multiplicity", "bottom_degree", "series"]
    if args.action == "factors":
        factors = hm_index(spaces, n)
        r.data = {"cutoff": n, "factors": _factor_rows(factors)}
        r.text = _factor_text(factors)
        r.tsv = [[",".join(map(str, f.alpha)), f.multiplicity, f.bottom_degree, f.desuspended.render()]
                 for f in factors]
        return r
    if args.action == "stages":
        rep = iterate_stages(spaces, n)
        stages = [{"k": s.k, "summands": s.summands, "fiber_bottom": s.fiber_bottom} for s in rep.stages]
        r.data = {"cutoff": n, "stages": stages, "matches_index": rep.matches_index,
                  "connectivity_increasing": rep.connectivity_increasing,
                  "first_fiber_matches_porter": rep.first_fiber_matches_porter}
        r.tsv_header = ["stage", "summands", "fiber_bottom"]
        r.tsv = [[s["k"], s["summands"], s["fiber_bottom"]] for s in stages]
        r.text = [f"stage {s['k']}: {s['summands']} wedge summands, next fiber bottom {s['fiber_bottom']}"
                  for s in stages]
        if rep.matches_index and rep.connectivity_increasing and rep.first_fiber_matches_porter is not False:
            r.verdicts.append(f"stage factors equal the Hilton-Milnor index through degree {n}")
        else:
            r.fail(f"stage iteration disagrees with the Hilton-Milnor index (checked through degree {n})")
        return r
    rep = verify_hm(spaces, n)
    r.data = {"cutoff": n, "factors": _factor_rows(rep.factors), "lhs": list(rep.lhs.coeffs),
              "rhs": list(rep.rhs.coeffs), "holds": rep.holds, "first_failure": rep.first_failure}
    r.text = _factor_text(rep.factors) + [f"lhs = {rep.lhs.render()}", f"rhs = {rep.rhs.render()}"]
    r.tsv = [[",".join(map(str, f.alpha)), f.multiplicity, f.bottom_degree, f.desuspended.render()]
             for f in rep.factors]
    if rep.holds:
        r.verdicts.append(rep.verdict())
    else:
        r.fail(rep.verdict())
    _compare_expected(r, args.expected, {"lhs": r.data["lhs"], "rhs": r.data["rhs"], "holds": rep.holds})
    return r


def _family_from_file(ctx: TensorContext, path: str):
    doc = read_json(path)
    if not isinstance(doc, list):
        raise InputError(f"{path}: expected a list of {{\"length\": n, \"vectors\": [[...]]}}")
    fam = []
    for idx, item in enumerate(doc):
        loc = f"{path}[{idx}]"
        try:
            n = int(item["length"])
            vecs = item["vectors"]
        except (KeyError, TypeError, ValueError):
            raise InputError(f"{loc}: needs integer 'length' and list 'vectors'") from None
        if not 1 <= n <= ctx.max_length:
            raise InputError(f"{loc}.length: {n} outside 1..{ctx.max_length}")
        for j, v in enumerate(vecs):
            if not isinstance(v, list) or len(v) != ctx.dim(n):
                raise InputError(f"{loc}.vectors[{j}]: expected {ctx.dim(n)} coordinates")
        fam.append((n, Subspace(vecs, ctx.p, ctx.dim(n))))
    return fam


def cmd_subhopf(args) -> Report:
    p = _prime(args, None, 3)
    n = args.maxlen if args.maxlen is not None else 6
    if args.dimv < 1 or n < 1:
        raise InputError("--dimv and --maxlen must be positive")
    ctx = TensorContext.build(args.dimv, p, n)
    if args.family == "llw":
        fam = build_llw_family(ctx)
    elif args.family == "all":
        fam = full_family(ctx)
    else:
        fam = _family_from_file(ctx, args.family)
    res = analyze(ctx, fam)
    r = Report()
    r.data = res.to_json()
    r.data["family"] = args.family if args.family in ("llw", "all") else "file"
    checks = [("coproduct closure", res.coalgebra_closed, res.coalgebra.detail),
              ("q nonnegative and a nonnegative", res.split_failure is None, res.split_failure or ""),
              ("explicit indecomposables equal q", res.q_matches_indecomposables, ""),
              ("b * a equals series of T(V)", res.ba_matches_tensor, "")]
    for f in res.filtration_checks:
        checks.append((f"filtration B^[{f.n}]", f.passed, f.detail))
    if args.family == "llw":
        loc = primitive_localization_check(ctx, components=res.components)
        bad = [k for k, v in sorted(loc.verdicts.items()) if not v]
        checks.append(("primitive localization", not bad, f"fails at length {bad[0]}" if bad else ""))
        r.data["localization"] = {str(k): v for k, v in sorted(loc.verdicts.items())}
    r.tsv_header = ["length", "b", "q", "a", "indecomposables"]
    r.tsv = [[d, res.b[d], res.q[d], res.a[d], res.indecomposable_dims[d]] for d in range(n + 1)]
    r.text = [f"b(t) = {res.b.render()}", f"q(t) = {res.q.render()}", f"a(t) = {res.a.render()}",
              f"dim Q_n B = {res.indecomposable_dims}"]
    for name, ok, detail in checks:
        r.text.append(f"  {'ok  ' if ok else 'FAIL'} {name}" + (f": {detail}" if detail and not ok else ""))
    failed = [(name, detail) for name, ok, detail in checks if not ok]
    if failed:
        name, detail = failed[0]
        r.fail(f"sub-Hopf checks FAIL: {name}" + (f" ({detail})" if detail else "")
               + f"; checked through length {n}")
    else:
        r.verdicts.append(f"sub-Hopf decomposition verified through length {n}")
    _compare_expected(r, args.expected, {"b": list(res.b.coeffs), "q": list(res.q.coeffs), "a": list(res.a.coeffs)})
    return r


def cmd_porter(args) -> Report:
    doc, fc, _ = _spaces_arg(args)
    n = _cutoff(args, fc, 12)
    spaces = load_spaces(doc, n + 2)
    m = len(spaces)
    k = args.k if args.k is not None else m - 1
    loops = loops_of(spaces, n)
    try:
        rows = porter_wedge_table(loops, k)
    except PorterError as e:
        raise InputError(str(e)) from None
    total = porter_fiber_series(loops, k)
    names = [y.name for y in spaces]
    r = Report()
    r.data = {"cutoff": n, "k": k, "m": m,
              "rows": [{"subset": [names[i] for i in row.subset], "j": row.j, "multiplicity": row.multiplicity,
                        "summand": _ser(row.summand)} for row in rows],
              "total": _ser(total), "fiber": list(total.coeffs)}
    r.tsv_header = ["subset", "j", "multiplicity", "summand"]
    r.tsv = [[",".join(names[i] for i in row.subset), row.j, row.multiplicity, row.summand.render()] for row in rows]
    r.text = [f"{{{','.join(names[i] for i in row.subset)}}} j={row.j} x{row.multiplicity}: {row.summand.render()}"
              for row in rows] + [f"total = {total.render()}"]
    if k == m - 1:
        rep = porter_hm_consistency(spaces, n)
        r.data["consistency"] = {"holds": rep.holds, "first_failure": rep.first_failure}
        if rep.holds is False:
            r.fail(f"Porter/Hilton-Milnor consistency: {rep.verdict()}")
        else:
            r.verdicts.append(f"Porter/Hilton-Milnor consistency: {rep.verdict()}")
    else:
        r.verdicts.append(f"wedge table computed through degree {n}")
    _compare_expected(r, args.expected, {"fiber": r.data["fiber"]})
    return r


def cmd_qsymm(args) -> Report:
    r = Report()
    if args.action == "antipode":
        w = args.maxweight if args.maxweight is not None else 4
        if w < 1:
            raise InputError("--maxweight must be positive")
        rep = check_antipode(w)
        r.data = {"max_weight": w, "axiom_holds": rep.axiom_holds, "signed_matches": rep.signed_formula_matches,
                  "unsigned_matches": rep.unsigned_formula_matches, "unsigned_first_failure": rep.unsigned_first_failure,
                  "chi": {str(n): {".".join(map(str, a)): c for a, c in sorted(x.items())}
                          for n, x in sorted(rep.table.items())}, "note": rep.note()}
        r.tsv_header = ["n", "composition", "coefficient"]
        for n, x in sorted(rep.table.items()):
            r.text.append(f"chi(z{n}) = {format_element(x)}")
            r.tsv.extend([n, ".".join(map(str, a)), c] for a, c in sorted(x.items()))
        r.text.append(f"note: {rep.note()}")
        if rep.axiom_holds and rep.signed_formula_matches:
            r.verdicts.append(f"antipode axiom holds through weight {w}")
        else:
            r.fail(f"antipode check FAILS (axiom {rep.axiom_holds}, signed formula {rep.signed_formula_matches})")
        return r
    p = _prime(args, None, 3)
    n = _cutoff(args, None, 20)
    if p == 2:
        raise InputError("qsymm needs an odd prime")
    if args.action == "split":
        table = mnt_splitting(p, n)
        refined_splitting(p, n, table)
        r.data = table.to_json()
        r.tsv_header = ["summand", "series"]
        named = [(f"A[{i}]", s) for i, s in sorted(table.a_i.items())] + table.refined_summands()
        r.tsv = [[name, s.render()] for name, s in named]
        r.text = [f"{name:<10} {s.render()}" for name, s in named]
        mnt_total = sum((s for s in table.a_i.values()), TruncatedSeries.zero(n))
        ref_total = sum((s for _, s in table.refined_summands()), TruncatedSeries.zero(n))
        for label, got, want in (("A[i] partition Sigma CP-inf", mnt_total, sigma_cp_reduced(n)),
                                 ("A+-[i,j] partition Sigma CP-inf ^ CP-inf", ref_total, smash_reduced(n))):
            cmp = got.compare(want)
            if cmp.equal:
                r.verdicts.append(f"{label}: holds through degree {n}")
            else:
                r.fail(f"{label}: FAILS at degree {cmp.first_mismatch}")
        return r
    g = ganea_loop_check(n, p)
    f = qsymm_factorization_report(p, n)
    r.data = {"prime": p, "cutoff": n,
              "ganea": {"core": g.core_holds, "refined": g.refined_holds, "first_failure": g.first_failure},
              "factorization": {"hm_over_A_i": f.br_holds, "refined": f.refined_holds,
                                "summands": f.br_summands, "refined_summands": f.refined_summands,
                                "refined_nonempty": f.refined_nonempty, "empty_blocks": f.empty_blocks}}
    r.tsv_header = ["check", "holds"]
    r.tsv = [["ganea_core", g.core_holds], ["ganea_refined", g.refined_holds],
             ["factor_A_i", f.br_holds], ["factor_refined", f.refined_holds]]
    r.text = [f"summands: {f.br_summands} MNT, {f.refined_summands} refined "
              f"({f.refined_nonempty} nonempty through degree {n + 1})"]
    for ok, line in ((g.holds, g.verdict()), (f.holds, f.verdict())):
        (r.verdicts.append if ok else r.fail)(line)
    return r


def cmd_corpus(args) -> Report:
    root = Path(args.root)
    r = Report()
    if args.action == "regen":
        written = corpus.regen(root, args.module)
        r.data = {"written": written}
        r.text = [f"wrote {w}" for w in written]
        r.tsv_header = ["fixture"]
        r.tsv = [[w] for w in written]
        r.verdicts.append(f"{len(written)} fixtures regenerated")
        return r
    if not root.is_dir():
        raise InputError(f"{root}: no such directory")
    problems = corpus.check(root, args.module)
    r.data = {"problems": problems}
    r.text = problems
    r.tsv_header = ["problem"]
    r.tsv = [[x] for x in problems]
    if problems:
        r.fail(f"{len(problems)} fixture problems")
    else:
        r.verdicts.append("every fixture matches its oracle and the main path")
    return r


# ---------------------------------------------------------------- driver


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--prime", type=int)
    common.add_argument("--cutoff", type=int)
    common.add_argument("--maxlen", type=int)
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_const", const="json", dest="format")
    fmt.add_argument("--tsv", action="store_const", const="tsv", dest="format")
    common.add_argument("--quiet", action="store_true", help="print verdict lines only")

    ap = argparse.ArgumentParser(prog="loopdecomp",
                                 description="Exact series checks for loop space decompositions.")
    sub = ap.add_subparsers(dest="command", required=True)

    s = sub.add_parser("series", parents=[common], help="loop series of spaces, or 1/(1-s)")
    s.add_argument("kind", choices=["loop", "geometric"])
    s.add_argument("--spaces")
    s.add_argument("--coeffs", help="JSON map degree -> coefficient")
    s.set_defaults(func=cmd_series)

    s = sub.add_parser("lyndon", parents=[common], help="Lyndon words and Witt counts")
    s.add_argument("--m", type=int, default=2)
    s.set_defaults(func=cmd_lyndon)

    s = sub.add_parser("hm", parents=[common], help="Hilton-Milnor series identity")
    s.add_argument("action", choices=["verify", "factors", "stages"])
    s.add_argument("--spaces")
    s.add_argument("--expected", help="golden expected.json to compare against")
    s.set_defaults(func=cmd_hm)

    s = sub.add_parser("subhopf", parents=[common], help="sub-Hopf algebras of T(V)")
    s.add_argument("action", choices=["analyze"])
    s.add_argument("--dimv", type=int, required=True)
    s.add_argument("--family", default="llw", help="llw, all, or a JSON file")
    s.add_argument("--expected")
    s.set_defaults(func=cmd_subhopf)

    s = sub.add_parser("porter", parents=[common], help="Porter fiber wedge table")
    s.add_argument("--spaces")
    s.add_argument("--k", type=int)
    s.add_argument("--expected")
    s.set_defaults(func=cmd_porter)

    s = sub.add_parser("qsymm", parents=[common], help="NSymm antipode and QSymm splittings")
    s.add_argument("action", choices=["antipode", "split", "verify"])
    s.add_argument("--maxweight", type=int)
    s.set_defaults(func=cmd_qsymm)

    s = sub.add_parser("corpus", parents=[common], help="regenerate or check golden fixtures")
    s.add_argument("action", choices=["regen", "check"])
    s.add_argument("--root", default="fixtures")
    s.add_argument("--module")
    s.set_defaults(func=cmd_corpus)
    return ap


def _emit(r: Report, fmt: str | None, quiet: bool, out) -> None:
    if fmt == "json":
        payload = dict(r.data)
        payload["verdicts"] = r.verdicts
        payload["exit_code"] = r.code
        out.write(json.dumps(payload, indent=2, sort_keys=True, ensure_ascii=False) + "\n")
        return
    if fmt == "tsv":
        if not quiet:
            out.write(f"# tsv v{TSV_VERSION}\n")
            out.write("\t".join(r.tsv_header) + "\n")
            for row in r.tsv:
                out.write("\t".join(str(x) for x in row) + "\n")
        for v in r.verdicts:
            out.write(f"# {v}\n")
        return
    if not quiet:
        for line in r.text:
            out.write(line + "\n")
    for v in r.verdicts:
        out.write(v + "\n")


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code else 0
    try:
        report = args.func(args)
    except (InputError, ValueError) as e:
        err.write(f"error: {e}\n")
        return 2
    _emit(report, args.format, args.quiet, out)
    return report.code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
