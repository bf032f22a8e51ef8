from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import golden
from loopdecomp.cli import load_spaces
from loopdecomp.hilton_milnor import (
    SpaceDescriptor,
    SpaceError,
    hm_index,
    iterate_stages,
    james_summands,
    loop_series,
    sigma_cp_infinity,
    sphere,
    verify_hm,
)
from loopdecomp.qsymm import qsymm_series
from loopdecomp.series import TruncatedSeries, mul

SETS = ["two_spheres", "s3_s5", "s3_sigmacp", "moore_s3", "s3_s3_s5", "s2_s3_sigmacp"]


def spaces(name, cutoff):
    return load_spaces(golden("hilton_milnor", name, "input.json"), cutoff + 2)


def test_loop_series_examples():
    assert loop_series(sphere(3, 12), 10) == TruncatedSeries({d: 1 for d in range(0, 11, 2)}, 10)
    assert loop_series(sigma_cp_infinity(22), 20) == qsymm_series(20)
    trivial = SpaceDescriptor("pt", TruncatedSeries.zero(10))
    assert loop_series(trivial, 8) == TruncatedSeries.one(8)


def test_descriptor_validation():
    with pytest.raises(SpaceError, match="S1 is not simply connected"):
        SpaceDescriptor("S1", TruncatedSeries({1: 1}, 5))
    with pytest.raises(SpaceError):
        SpaceDescriptor("neg", TruncatedSeries({3: -1}, 5))


def test_james_summands():
    s = james_summands(sphere(3, 12), 5)
    assert s[0].agrees_with(sphere(3, 12).reduced)
    assert [x.bottom_degree() for x in s] == [3, 5, 7, 9, 11]
    total = sum(s, TruncatedSeries.zero(11))
    t = TruncatedSeries.monomial(1, 12)
    assert total.agrees_with(mul(t, loop_series(sphere(3, 14), 11)) - t)


def test_hm_index_examples():
    one = hm_index([sphere(3, 12)], 10)
    assert [(f.alpha, f.multiplicity) for f in one] == [((1,), 1)]
    two = hm_index([sphere(2, 12), sphere(2, 12)], 6)
    f11 = next(f for f in two if f.alpha == (1, 1))
    assert f11.summand.bottom_degree() == 3 and f11.multiplicity == 1
    mixed = hm_index([sphere(3, 20), sphere(5, 20)], 14)
    f21 = next(f for f in mixed if f.alpha == (2, 1))
    assert f21.bottom_degree == 9 and f21.multiplicity == 1
    keys = [f.sort_key() for f in mixed]
    assert keys == sorted(keys)


def test_verify_single_space():
    r = verify_hm([sphere(4, 14)], 12)
    assert r.holds and r.verdict() == "identity holds through degree 12"


@pytest.mark.parametrize("name", SETS)
def test_verify_matches_oracle_fixture(name):
    inp = golden("hilton_milnor", name, "input.json")
    exp = golden("hilton_milnor", name)
    r = verify_hm(spaces(name, inp["cutoff"]), inp["cutoff"])
    assert r.holds and exp["holds"]
    assert list(r.lhs.coeffs) == exp["lhs"] and list(r.rhs.coeffs) == exp["rhs"]


def test_verify_detects_wrong_multiplicity():
    desc = [sphere(2, 14), sphere(2, 14)]
    r = verify_hm(desc, 12)
    r.factors[2].multiplicity += 1
    from loopdecomp.hilton_milnor import hm_product

    assert hm_product(r.factors, 12) != r.lhs


@pytest.mark.parametrize("name", SETS)
def test_stages_match_index(name):
    r = iterate_stages(spaces(name, 10), 10)
    assert r.matches_index and r.connectivity_increasing
    assert r.first_fiber_matches_porter


def test_stages_below_first_fiber():
    r = iterate_stages([sphere(5, 8), sphere(5, 8)], 6)
    assert len(r.stages) == 1 and r.stages[0].fiber_bottom is None
    assert r.factors == Counter({(1, 0): 1, (0, 1): 1})


@settings(max_examples=25, deadline=None)
@given(st.lists(st.integers(2, 6), min_size=1, max_size=3), st.integers(4, 12))
def test_hm_identity_for_random_sphere_wedges(dims, cutoff):
    desc = [sphere(n, cutoff + 2) for n in dims]
    assert verify_hm(desc, cutoff).holds
