"""Dense linear algebra over a prime field F_p.

Matrices are numpy ``int64`` arrays with entries in ``[0, p)``. Elimination is
deterministic (leftmost pivot column, topmost candidate row) so echelon bases
are reproducible and can be stored in fixtures.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass, field

import numpy as np

_MAX_PRIME = 2**31  # keeps p*p inside int64 during row operations


class FieldError(ValueError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class PrimeField:
    p: int
    warning: str | None = field(default=None, compare=False)

    def __post_init__(self):
        if not is_prime(self.p):
            raise FieldError(f"{self.p} is not prime")
        if self.p >= _MAX_PRIME:
            raise FieldError(f"p = {self.p} too large for int64 elimination (need p < 2^31)")
        if self.p == 2 and self.warning is None:
            msg = "p = 2: the decomposition results are stated for odd primes only"
            object.__setattr__(self, "warning", msg)
            warnings.warn(msg, stacklevel=3)

    def inv(self, a: int) -> int:
        a %= self.p
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return pow(a, -1, self.p)

    def reduce(self, a):
        return np.asarray(a, dtype=np.int64) % self.p


def as_matrix(rows, p: int, cols: int | None = None) -> np.ndarray:
    a = np.array(rows, dtype=np.int64)
    if a.ndim == 1:
        a = a.reshape(0 if a.size == 0 else 1, -1) if cols is None else a.reshape(-1, cols)
    if a.size == 0 and cols is not None:
        a = a.reshape(0, cols)
    return a % p


def rref(m: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form of ``m`` over F_p and its pivot columns.

    The returned matrix has the same shape as ``m``; zero rows sit at the bottom.
    """
    a = np.array(m, dtype=np.int64) % p
    rows, cols = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(a[r:, c])
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
        inv = pow(int(a[r, c]), -1, p)
        if inv != 1:
            a[r] = (a[r] * inv) % p
        col = a[:, c].copy()
        col[r] = 0
        hit = np.flatnonzero(col)
        if hit.size:
            a[hit] = (a[hit] - np.outer(col[hit], a[r])) % p
        pivots.append(c)
        r += 1
    return a, pivots


def rank(m: np.ndarray, p: int) -> int:
    if m.size == 0:
        return 0
    return len(rref(m, p)[1])


class Subspace:
    """Subspace of F_p^n held as a reduced row echelon basis."""

    __slots__ = ("p", "ambient", "basis", "pivots")

    def __init__(self, vectors, p: int, ambient: int):
        a = np.array(vectors, dtype=np.int64).reshape(-1, ambient) if ambient else np.zeros((0, 0), np.int64)
        if a.shape[0] == 0:
            self.basis = np.zeros((0, ambient), dtype=np.int64)
            self.pivots: tuple[int, ...] = ()
        else:
            r, piv = rref(a, p)
            self.basis = r[: len(piv)]
            self.pivots = tuple(piv)
        self.p = p
        self.ambient = ambient
        self.basis.setflags(write=False)

    @classmethod
    def zero(cls, p: int, ambient: int) -> "Subspace":
        return cls(np.zeros((0, ambient), dtype=np.int64), p, ambient)

    @classmethod
    def full(cls, p: int, ambient: int) -> "Subspace":
        return cls(np.eye(ambient, dtype=np.int64), p, ambient)

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    def __len__(self) -> int:
        return self.dim

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return (self.p, self.ambient) == (other.p, other.ambient) and np.array_equal(self.basis, other.basis)

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, ambient={self.ambient}, p={self.p})"

    def residual(self, vectors: np.ndarray) -> np.ndarray:
        """Reduce each row of ``vectors`` modulo this subspace; zero rows are members."""
        v = np.array(vectors, dtype=np.int64).reshape(-1, self.ambient) % self.p
        if self.dim == 0 or v.shape[0] == 0:
            return v
        coeffs = v[:, list(self.pivots)]
        return (v - coeffs @ self.basis) % self.p

    def contains(self, other: "Subspace") -> bool:
        _check_ambient(self, other)
        return not self.residual(other.basis).any()

    def rows(self) -> list[list[int]]:
        return self.basis.tolist()


def _check_ambient(a: Subspace, b: Subspace) -> None:
    if a.ambient != b.ambient:
        raise FieldError(f"ambient dimension mismatch: {a.ambient} vs {b.ambient}")
    if a.p != b.p:
        raise FieldError(f"field mismatch: p = {a.p} vs p = {b.p}")


def kernel(m: np.ndarray, p: int) -> Subspace:
    """Null space ``{x : m @ x = 0}`` over F_p."""
    m = np.asarray(m, dtype=np.int64)
    cols = m.shape[1]
    if m.shape[0] == 0:
        return Subspace.full(p, cols)
    r, piv = rref(m, p)
    free = [c for c in range(cols) if c not in set(piv)]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for k, f in enumerate(free):
        basis[k, f] = 1
        for i, pc in enumerate(piv):
            basis[k, pc] = (-r[i, f]) % p
    return Subspace(basis, p, cols)


def span(a: Subspace, b: Subspace) -> Subspace:
    _check_ambient(a, b)
    return Subspace(np.vstack([a.basis, b.basis]), a.p, a.ambient)


def sum_and_intersect(a: Subspace, b: Subspace) -> tuple[Subspace, Subspace]:
    """Zassenhaus: row-reduce ``[[A, A], [B, 0]]``; rows with zero left half span A n B."""
    _check_ambient(a, b)
    n, p = a.ambient, a.p
    top = np.hstack([a.basis, a.basis])
    bottom = np.hstack([b.basis, np.zeros_like(b.basis)])
    stacked = np.vstack([top, bottom])
    if stacked.shape[0] == 0:
        return Subspace.zero(p, n), Subspace.zero(p, n)
    r, piv = rref(stacked, p)
    r = r[: len(piv)]
    left_nonzero = r[:, :n].any(axis=1)
    total = Subspace(r[left_nonzero, :n], p, n)
    inter = Subspace(r[~left_nonzero, n:], p, n)
    if a.dim + b.dim != total.dim + inter.dim:
        raise AssertionError("Grassmann identity violated; elimination bug")
    return total, inter


def member(v, s: Subspace) -> bool:
    v = np.asarray(v, dtype=np.int64)
    if v.shape[-1] != s.ambient:
        raise FieldError(f"vector of length {v.shape[-1]} in ambient dimension {s.ambient}")
    return not s.residual(v).any()
