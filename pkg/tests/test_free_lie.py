import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import golden
from loopdecomp.corpus import oracle_lyndon
from loopdecomp.free_lie import (
    bracket_str,
    expand,
    is_lyndon,
    lie_power_subspace,
    lyndon_words,
    multidegree,
    multigraded_pbw,
    pbw_series_check,
    standard_bracketing,
    witt_count,
    witt_count_multi,
    witt_table,
)
from loopdecomp.tensor_hopf import TensorContext


def word(s):
    return tuple(ord(c) - ord("a") for c in s)


def test_lyndon_examples():
    three = [w for w in lyndon_words(2, 3) if len(w) == 3]
    assert three == [word("aab"), word("abb")]
    assert lyndon_words(1, 6) == [(0,)]
    counts = [sum(1 for w in lyndon_words(2, 5) if len(w) == n) for n in range(1, 6)]
    assert counts == [2, 1, 2, 3, 6]


def test_witt_examples():
    assert [witt_count(2, n) for n in (1, 2, 3, 4, 6)] == [2, 1, 2, 3, 9]
    assert witt_count_multi((1, 1)) == 1
    assert all(witt_count(1, n) == 0 for n in range(2, 10))


@pytest.mark.parametrize("m", [1, 2, 3])
def test_lyndon_counts_match_oracle_fixture(m):
    g = golden("free_lie", f"lyndon_m{m}")
    words = lyndon_words(m, 7)
    by_len = {str(n): sum(1 for w in words if len(w) == n) for n in range(1, 8)}
    assert by_len == g["by_length"]
    by_alpha = {}
    for w in words:
        k = ",".join(map(str, multidegree(w, m)))
        by_alpha[k] = by_alpha.get(k, 0) + 1
    assert by_alpha == g["by_multidegree"]


def test_oracle_lyndon_examples():
    assert oracle_lyndon(2, 4)["by_length"][4] == 3
    assert oracle_lyndon(1, 2)["by_length"][2] == 0
    assert oracle_lyndon(3, 2)["by_length"][2] == 3


def test_standard_bracketing():
    assert standard_bracketing(word("aab")) == (0, (0, 1))
    assert standard_bracketing(word("abb")) == ((0, 1), 1)
    assert bracket_str(standard_bracketing(word("ab"))) == "[a,b]"
    assert bracket_str(standard_bracketing(word("aabb"))) == "[a,[[a,b],b]]"


def test_expand():
    ctx = TensorContext.build(2, 5, 3)
    assert expand((0, 1), ctx) == ctx.word("ab") - ctx.word("ba")
    assert expand((0, (0, 1)), ctx) == ctx.word("aab") - 2 * ctx.word("aba") + ctx.word("baa")
    assert expand(0, ctx) == ctx.generator(0)


def test_lie_power_subspace():
    two = TensorContext.build(2, 3, 3)
    assert lie_power_subspace(two, 2).dim == 1
    assert lie_power_subspace(TensorContext.build(1, 3, 2), 2).dim == 0
    assert lie_power_subspace(TensorContext.build(2, 5, 3), 3).dim == 2


def test_witt_table_rows():
    rows = list(witt_table(2, 3).rows())
    assert [(n, a, len(ws), c) for n, a, ws, c in rows] == [
        (1, (1, 0), 1, 1), (1, (0, 1), 1, 1), (2, (1, 1), 1, 1), (3, (2, 1), 1, 1), (3, (1, 2), 1, 1)]


def test_pbw():
    assert pbw_series_check(TensorContext.build(2, 3, 6), 12, rank_check_through=5).holds
    assert pbw_series_check(TensorContext.build(1, 3, 4), 12).holds
    even = TensorContext.build([2], 3, 10, 20)
    r = pbw_series_check(even, 20, grading="internal")
    assert r.holds and r.lhs[4] == 1 and r.lhs[3] == 0


def test_multigraded_pbw():
    lhs, rhs = multigraded_pbw(2, 6)
    assert lhs == rhs


@given(st.lists(st.integers(0, 2), min_size=1, max_size=8))
def test_lyndon_predicate_matches_rotation_definition(w):
    w = tuple(w)
    assert is_lyndon(w) == all(w < w[i:] + w[:i] for i in range(1, len(w)))


@given(st.integers(1, 3), st.integers(1, 8))
def test_witt_sums_over_multidegrees(m, n):
    alphas = {multidegree(w, m) for w in lyndon_words(m, n) if len(w) == n}
    assert sum(witt_count_multi(a) for a in alphas) == witt_count(m, n)
