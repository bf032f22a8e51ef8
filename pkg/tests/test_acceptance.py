"""Acceptance gate: one check per criterion, exact equality, with runtime bounds.

Each criterion prints a PASS/FAIL line in the pytest terminal summary; run
this file directly (``python3 tests/test_acceptance.py``) for the same lines
without pytest.
"""
from __future__ import annotations

import subprocess
import sys
import time
from pathlib import Path

import pytest

from loopdecomp.cli import load_spaces
from loopdecomp.corpus import SPACE_SETS, oracle_lyndon, oracle_primitives
from loopdecomp.free_lie import lie_power_subspace, lyndon_words, pbw_series_check, witt_count
from loopdecomp.hilton_milnor import iterate_stages, sigma_cp_infinity, sphere, verify_hm
from loopdecomp.moment_angle import loops_of, porter_hm_consistency, porter_wedge_table
from loopdecomp.qsymm import (
    check_antipode,
    ganea_loop_check,
    mnt_splitting,
    qsymm_factorization_report,
    refined_splitting,
    sigma_cp_reduced,
    smash_reduced,
)
from loopdecomp.series import TruncatedSeries
from loopdecomp.subhopf import analyze, build_llw_family, is_power_of, primitive_localization_check
from loopdecomp.tensor_hopf import TensorContext, poincare_series_of, primitives

ROOT = Path(__file__).resolve().parent.parent
RESULTS: list[tuple[str, bool, float, str]] = []


def _wedges(cutoff: int):
    return {name: load_spaces({"spaces": spaces}, cutoff + 2) for name, spaces in SPACE_SETS.items()}


def ac1():
    """Hilton-Milnor series identity for S2 v S2 (20), {S3,S5} and {S3, Sigma CP-inf} (14)."""
    notes = []
    cases = [("S2 v S2", [sphere(2, 22), sphere(2, 22)], 20),
             ("S3 v S5", [sphere(3, 16), sphere(5, 16)], 14),
             ("S3 v ΣCP∞", [sphere(3, 16), sigma_cp_infinity(16)], 14)]
    for label, desc, n in cases:
        t0 = time.perf_counter()
        r = verify_hm(desc, n)
        dt = time.perf_counter() - t0
        ok = r.holds and dt < 5
        if label == "S2 v S2":
            ok = ok and list(r.lhs.coeffs) == [2**d for d in range(n + 1)]
            by_len: dict[int, int] = {}
            for f in r.factors:
                by_len[sum(f.alpha)] = by_len.get(sum(f.alpha), 0) + f.multiplicity
            ok = ok and all(by_len[k] == witt_count(2, k) for k in range(1, n + 1))
        notes.append(f"{label}: {r.verdict()} in {dt:.2f}s")
        if not ok:
            return False, "; ".join(notes)
    return True, "; ".join(notes)


def ac2():
    """Lyndon count = Witt count = rank of bracket expansions, m <= 3, n <= 7, p in {3,5,7}."""
    for m in (1, 2, 3):
        words = lyndon_words(m, 7)
        brute = oracle_lyndon(m, 7)["by_length"]
        for p in (3, 5, 7):
            ctx = TensorContext.build(m, p, 7)
            for n in range(1, 8):
                count = sum(1 for w in words if len(w) == n)
                r = lie_power_subspace(ctx, n).dim
                if not count == witt_count(m, n) == r == brute[n]:
                    return False, f"m={m} p={p} n={n}: lyndon {count}, witt {witt_count(m, n)}, rank {r}"
    return True, "all 63 (m, p, n) triples agree"


def ac3():
    """Primitive dimensions: {1,3,9} for one generator; L_n + L_{n/3} for two generators."""
    one = TensorContext.build(1, 3, 9)
    dims = [primitives(one, n).dim for n in range(1, 10)]
    if [n for n, d in enumerate(dims, 1) if d] != [1, 3, 9] or set(dims) != {0, 1}:
        return False, f"one generator: {dims}"
    two = TensorContext.build(2, 3, 6)
    for n in range(1, 7):
        want = witt_count(2, n) + (witt_count(2, n // 3) if n % 3 == 0 else 0)
        got = primitives(two, n).dim
        if got != want or got != oracle_primitives(2, 3, n):
            return False, f"two generators, n={n}: got {got}, want {want}"
    return True, f"one generator {dims}; two generators match L_n + L_(n/3) through 6"


def ac4():
    """Sub-Hopf decomposition for dim V <= 2, p in {3,5}, LLW family through length 6."""
    notes = []
    for m in (1, 2):
        for p in (3, 5):
            ctx = TensorContext.build(m, p, 6)
            r = analyze(ctx, build_llw_family(ctx))
            loc = primitive_localization_check(ctx, components=r.components)
            checks = {
                "closure": r.coalgebra_closed,
                "b*a": r.b * r.a == poincare_series_of(ctx),
                "q = 1 - 1/b nonneg": r.q.is_nonnegative() and r.q == TruncatedSeries.one(6) - _inv(r.b),
                "Q_n dims": r.q_matches_indecomposables,
                "localization": loc.passed and sorted(loc.verdicts) == [n for n in range(2, 7) if not is_power_of(n, p)],
            }
            bad = [k for k, v in checks.items() if not v]
            if bad:
                return False, f"dim V={m} p={p}: {bad}"
            notes.append(f"V={m},p={p} q={list(r.q.coeffs)}")
    return True, "; ".join(notes)


def _inv(b):
    from loopdecomp.series import unit_inverse

    return unit_inverse(b)


def ac5():
    """Porter/Hilton-Milnor consistency for every fixture wedge through 20; multiplicities j-1."""
    for name, desc in _wedges(20).items():
        r = porter_hm_consistency(desc, 20)
        if not r.holds:
            return False, f"{name}: {r.verdict()}"
        rows = porter_wedge_table(loops_of(desc, 20), len(desc) - 1)
        if any(row.multiplicity != row.j - 1 for row in rows):
            return False, f"{name}: multiplicity differs from j-1"
    return True, f"{len(SPACE_SETS)} wedges hold through degree 20"


def ac6():
    """Stage iteration reproduces the Hilton-Milnor factor multiset through 14."""
    notes = []
    for name, desc in _wedges(14).items():
        r = iterate_stages(desc, 14)
        if not (r.matches_index and r.connectivity_increasing):
            return False, f"{name}: matches={r.matches_index} increasing={r.connectivity_increasing}"
        notes.append(f"{name}:{[s.fiber_bottom for s in r.stages if s.fiber_bottom]}")
    return True, " ".join(notes)


def ac7():
    """PBW series identity for m in {1,2,3} through length 12."""
    for m in (1, 2, 3):
        r = pbw_series_check(TensorContext.build(m, 3, 5), 12, rank_check_through=5 if m < 3 else 4)
        if not r.holds:
            return False, f"m={m}: {r.verdict()}"
    return True, "PBW identity holds through degree 12 for m = 1, 2, 3"


def ac8():
    """Antipode axiom through weight 10; signed closed formula matches, unsigned fails at weight 1."""
    r = check_antipode(10)
    ok = r.axiom_holds and r.signed_formula_matches and not r.unsigned_formula_matches and r.unsigned_first_failure == 1
    return ok, r.note()


def ac9():
    """MNT and refined splittings partition their series; Ganea and factorization through 30."""
    for p in (3, 5):
        t = mnt_splitting(p, 30)
        if sum(t.a_i.values(), TruncatedSeries.zero(30)) != sigma_cp_reduced(30):
            return False, f"p={p}: A_i do not partition"
        refined_splitting(p, 30, t)
        if sum((s for _, s in t.refined_summands()), TruncatedSeries.zero(30)) != smash_reduced(30):
            return False, f"p={p}: refined blocks do not partition"
        g, f = ganea_loop_check(30, p), qsymm_factorization_report(p, 30)
        if not (g.holds and f.holds):
            return False, f"p={p}: {g.verdict()}; {f.verdict()}"
    return True, "partitions, Ganea and factorization hold through degree 30 for p = 3, 5"


def cli_runs() -> list[list[str]]:
    runs = []
    for name in SPACE_SETS:
        f = f"fixtures/hilton_milnor/{name}/input.json"
        runs.append(["hm", "verify", "--spaces", f])
        runs.append(["hm", "factors", "--spaces", f, "--json"])
        runs.append(["hm", "stages", "--spaces", f, "--cutoff", "10", "--tsv"])
        runs.append(["porter", "--spaces", f, "--json"])
    for m, p in ((1, 3), (2, 3), (2, 5)):
        runs.append(["subhopf", "analyze", "--dimv", str(m), "--prime", str(p), "--maxlen", "6", "--json"])
    runs += [["qsymm", "antipode", "--maxweight", "8"], ["qsymm", "split", "--prime", "5", "--cutoff", "30", "--tsv"],
             ["qsymm", "verify", "--prime", "3", "--cutoff", "30", "--json"], ["lyndon", "--m", "3", "--maxlen", "5"],
             ["series", "loop", "--spaces", "fixtures/hilton_milnor/s3_sigmacp/input.json"],
             ["corpus", "check", "--root", "fixtures"]]
    return runs


def _invoke(argv: list[str]) -> tuple[int, bytes]:
    p = subprocess.run([sys.executable, "-m", "loopdecomp.cli", *argv], cwd=ROOT, capture_output=True)
    return p.returncode, p.stdout + b"\0" + p.stderr


def ac10():
    """Every CLI fixture run is byte-identical across two invocations."""
    runs = cli_runs()
    for argv in runs:
        a, b = _invoke(argv), _invoke(argv)
        if a != b:
            return False, f"output differs: {' '.join(argv)}"
        if a[0] != 0:
            return False, f"exit {a[0]}: {' '.join(argv)}"
    return True, f"{len(runs)} runs byte-identical, all exit 0"


CRITERIA = [
    ("AC1", "Hilton-Milnor identity", ac1, 15),
    ("AC2", "Witt/Lyndon/rank agreement", ac2, 30),
    ("AC3", "primitives structure", ac3, 60),
    ("AC4", "sub-Hopf decomposition", ac4, 120),
    ("AC5", "Porter consistency", ac5, 10),
    ("AC6", "stage iteration cross-check", ac6, 30),
    ("AC7", "PBW series identity", ac7, 5),
    ("AC8", "NSymm antipode", ac8, 10),
    ("AC9", "QSymm splittings", ac9, 10),
    ("AC10", "CLI determinism", ac10, 60),
]


def evaluate(key, label, fn, limit) -> tuple[bool, str, float]:
    t0 = time.perf_counter()
    ok, detail = fn()
    dt = time.perf_counter() - t0
    if dt >= limit:
        ok, detail = False, f"{detail} (took {dt:.1f}s, limit {limit}s)"
    RESULTS.append((f"{key} {label}", ok, dt, detail))
    return ok, detail, dt


@pytest.mark.parametrize("key, label, fn, limit", CRITERIA, ids=[c[0] for c in CRITERIA])
def test_criterion(key, label, fn, limit):
    ok, detail, _ = evaluate(key, label, fn, limit)
    assert ok, detail


if __name__ == "__main__":
    failed = 0
    for c in CRITERIA:
        ok, detail, dt = evaluate(*c)
        failed += not ok
        print(f"{'PASS' if ok else 'FAIL'} {c[0]} {c[1]} [{dt:.2f}s]: {detail}")
    sys.exit(1 if failed else 0)
