import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from loopdecomp.corpus import _conv, _inv_one_minus
from loopdecomp.series import (
    MultiSeries,
    SeriesError,
    TruncatedSeries,
    add,
    geometric_inverse,
    mul,
    shift,
    specialize,
    unit_inverse,
)

N = 10


def S(d, n=N):
    return TruncatedSeries(d, n)


def series(cutoff=N, constant=None):
    coeffs = st.lists(st.integers(-50, 50), min_size=cutoff + 1, max_size=cutoff + 1)
    if constant is None:
        return coeffs.map(lambda c: TruncatedSeries(c, cutoff))
    return coeffs.map(lambda c: TruncatedSeries([constant] + c[1:], cutoff))


def test_add_examples():
    assert add(S({0: 1, 1: 1}), S({0: 1, 1: -1})) == S({0: 2})
    s = S({3: 4})
    assert add(TruncatedSeries.zero(N), s) == s
    assert add(S({1: 1, 2: 1}), S({2: 1})) == S({1: 1, 2: 2})


def test_mul_examples():
    assert mul(S({0: 1, 1: 1}), S({0: 1, 1: -1})) == S({0: 1, 2: -1})
    s = S({2: 3, 5: -1})
    assert mul(s, TruncatedSeries.one(N)) == s
    even = TruncatedSeries.from_function(lambda d: 1 if d % 2 == 0 else 0, N, start=2)
    assert mul(even, even)[6] == 2


def test_cutoff_is_min_of_operands():
    a, b = TruncatedSeries.one(5), TruncatedSeries.one(8)
    assert (a + b).cutoff == 5
    assert mul(a, b).cutoff == 5


def test_geometric_inverse_examples():
    assert geometric_inverse(S({1: 1})) == S([1] * (N + 1))
    assert geometric_inverse(S({1: 2}))[3] == 8
    assert geometric_inverse(TruncatedSeries.zero(N)) == TruncatedSeries.one(N)
    with pytest.raises(SeriesError, match="constant"):
        geometric_inverse(S({0: 1, 1: 1}))


def test_unit_inverse_examples():
    assert unit_inverse(S({0: 1, 1: -1})) == S([1] * (N + 1))
    assert unit_inverse(S({0: 1, 1: 1})) == S([(-1) ** d for d in range(N + 1)])
    x = S({0: 1, 2: -1})
    assert mul(x, unit_inverse(x)) == TruncatedSeries.one(N)
    with pytest.raises(SeriesError):
        unit_inverse(S({0: 2}))


def test_shift_examples():
    assert shift(S({2: 1}), -1) == TruncatedSeries({1: 1}, N - 1)
    assert shift(S({1: 1, 3: 1}), 2) == TruncatedSeries({3: 1, 5: 1}, N + 2)
    with pytest.raises(SeriesError, match="degree-0"):
        shift(TruncatedSeries.one(N), -1)


def test_specialize_examples():
    cut = (4, 4)
    x1, x2 = MultiSeries.variable(0, cut), MultiSeries.variable(1, cut)
    assert specialize(x1 * x2, (2, 3), 10) == S({5: 1})
    assert specialize(MultiSeries.one(cut), (2, 3), 10) == TruncatedSeries.one(10)
    assert specialize(x1 * x1, (2, 3), 10) == S({4: 1})


def test_render_and_json():
    s = S({0: 1, 2: -3, 5: 1}, 6)
    assert s.render() == "1 - 3*t^2 + t^5 + O(t^7)"
    assert s.to_json() == {"cutoff": 6, "coeffs": {"0": 1, "2": -3, "5": 1}}
    assert TruncatedSeries.from_json(s.to_json()) == s


def test_compare_reports_first_mismatch():
    c = S({3: 1}).compare(S({3: 1, 7: 2}))
    assert not c.equal and c.first_mismatch == 7


@given(series(), series(), series())
def test_ring_laws(a, b, c):
    assert a + b == b + a
    assert mul(a, b) == mul(b, a)
    assert mul(mul(a, b), c) == mul(a, mul(b, c))
    assert mul(a, b + c) == mul(a, b) + mul(a, c)
    assert a - a == TruncatedSeries.zero(N)


@given(series(constant=0))
def test_geometric_inverse_property(s):
    g = geometric_inverse(s)
    assert mul(TruncatedSeries.one(N) - s, g) == TruncatedSeries.one(N)
    # independent naive expansion
    assert list(g.coeffs) == _inv_one_minus(list(s.coeffs), N)


@given(series(constant=1), series(constant=-1))
def test_unit_inverse_roundtrip(a, b):
    for x in (a, b):
        assert mul(x, unit_inverse(x)) == TruncatedSeries.one(N)


@given(series(), series())
def test_mul_matches_naive_convolution(a, b):
    assert list(mul(a, b).coeffs) == _conv(list(a.coeffs), list(b.coeffs), N)


@settings(max_examples=30)
@given(st.integers(1, 3), st.integers(1, 6))
def test_multiseries_geometric_inverse(m, n):
    cut = (n,) * m
    v = MultiSeries({}, cut)
    for i in range(m):
        v = v + MultiSeries.variable(i, cut)
    g = v.geometric_inverse()
    assert (MultiSeries.one(cut) - v) * g == MultiSeries.one(cut)
