import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from loopdecomp.corpus import _eliminate_rank
from loopdecomp.fplinalg import (
    FieldError,
    PrimeField,
    Subspace,
    kernel,
    member,
    rank,
    rref,
    sum_and_intersect,
)

PRIMES = st.sampled_from([3, 5, 7, 11])


@st.composite
def matrices(draw, max_rows=5, max_cols=6):
    p = draw(PRIMES)
    r = draw(st.integers(1, max_rows))
    c = draw(st.integers(1, max_cols))
    rows = draw(st.lists(st.lists(st.integers(0, p - 1), min_size=c, max_size=c), min_size=r, max_size=r))
    return np.array(rows, dtype=np.int64), p


def test_rref_examples():
    r, piv = rref(np.eye(3, dtype=np.int64), 5)
    assert np.array_equal(r, np.eye(3)) and piv == [0, 1, 2]
    r, piv = rref(np.array([[1, 1], [1, 1]]), 3)
    assert r.tolist() == [[1, 1], [0, 0]]
    r, _ = rref(np.array([[0, 2], [1, 0]]), 3)
    assert r.tolist() == [[1, 0], [0, 1]]


def test_kernel_examples():
    assert kernel(np.zeros((2, 2), dtype=np.int64), 3).dim == 2
    assert kernel(np.eye(2, dtype=np.int64), 3).dim == 0
    k = kernel(np.array([[1, 1]]), 5)
    assert k.rows() == [[1, 4]]


def test_sum_and_intersect_examples():
    a = Subspace([[1, 0, 0], [0, 1, 0]], 3, 3)
    b = Subspace([[0, 1, 0], [0, 0, 1]], 3, 3)
    total, inter = sum_and_intersect(a, b)
    assert total.dim == 3 and inter.rows() == [[0, 1, 0]]
    total, inter = sum_and_intersect(a, a)
    assert total == a and inter == a
    x, y = Subspace([[1, 0]], 5, 2), Subspace([[1, 1]], 5, 2)
    total, inter = sum_and_intersect(x, y)
    assert total.dim == 2 and inter.dim == 0


def test_member_examples():
    s = Subspace([[0, 1]], 3, 2)
    assert member([0, 0], s)
    assert not member([1, 0], s)
    assert member([2, 2], Subspace([[1, 1]], 3, 2))
    with pytest.raises(FieldError):
        member([1, 0, 0], s)


def test_field_validation():
    with pytest.raises(FieldError):
        PrimeField(9)
    with pytest.warns(UserWarning, match="odd primes"):
        PrimeField(2)
    with pytest.raises(FieldError):
        sum_and_intersect(Subspace.zero(3, 2), Subspace.zero(5, 2))


@given(matrices())
def test_rref_idempotent(mp):
    m, p = mp
    r, piv = rref(m, p)
    r2, piv2 = rref(r, p)
    assert np.array_equal(r, r2) and piv == piv2


@given(matrices())
def test_rank_nullity_and_independent_rank(mp):
    m, p = mp
    k = kernel(m, p)
    assert rank(m, p) + k.dim == m.shape[1]
    assert not ((m @ k.basis.T) % p).any()
    rows = [{j: int(v) for j, v in enumerate(row) if v} for row in m]
    assert rank(m, p) == _eliminate_rank(rows, p)


@given(matrices(), matrices())
def test_grassmann(ma, mb):
    (a, p), (b, _) = ma, mb
    n = min(a.shape[1], b.shape[1])
    A, B = Subspace(a[:, :n], p, n), Subspace(b[:, :n] % p, p, n)
    total, inter = sum_and_intersect(A, B)
    assert A.dim + B.dim == total.dim + inter.dim
    assert total.contains(A) and total.contains(B)
    assert A.contains(inter) and B.contains(inter)


@given(matrices(), st.data())
def test_membership_of_combinations(mp, data):
    m, p = mp
    s = Subspace(m, p, m.shape[1])
    coeffs = data.draw(st.lists(st.integers(0, p - 1), min_size=m.shape[0], max_size=m.shape[0]))
    v = (np.array(coeffs) @ m) % p
    assert member(v, s)
