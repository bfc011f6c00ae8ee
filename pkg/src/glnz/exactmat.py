"""Exact integer and mod-2 linear algebra for automorphisms of Z^n.

Everything runs on plain Python ints: no floating point anywhere, no
overflow.  ``IntMatrix`` is an immutable square matrix; ``Lattice`` stores
the canonical column-Hermite basis of a sublattice of Z^n, so two equal
sublattices are equal as values.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from math import gcd
from typing import Iterable, Sequence

Vector = tuple[int, ...]

__all__ = [
    "IntMatrix",
    "Lattice",
    "Vector",
    "basis_completion",
    "content_and_primitive",
    "element_order",
    "hnf",
    "kernel_lattice",
    "random_elementary_word",
    "random_unimodular",
    "rank_mod2",
    "rational_rank",
    "restriction_matrix",
    "row_hermite",
    "summand_index",
]


def _vec(v: Sequence[int]) -> Vector:
    return tuple(int(x) for x in v)


def row_hermite(rows: Sequence[Sequence[int]], transform: bool = False):
    """Row Hermite normal form by unimodular row operations.

    Returns ``(H, U, rank)``.  ``H`` is the unique row HNF: pivots positive
    with strictly increasing pivot columns, entries above each pivot reduced
    into ``[0, pivot)``, zero rows at the bottom.  When ``transform`` is set,
    ``U`` is unimodular with ``U @ rows == H``; otherwise ``U`` is None.
    """
    H = [[int(x) for x in r] for r in rows]
    m = len(H)
    ncols = len(H[0]) if m else 0
    if any(len(r) != ncols for r in H):
        raise ValueError("ragged matrix")
    U = [[int(i == j) for j in range(m)] for i in range(m)] if transform else None

    def axpy(dst: int, src: int, q: int) -> None:
        H[dst] = [a - q * b for a, b in zip(H[dst], H[src])]
        if U is not None:
            U[dst] = [a - q * b for a, b in zip(U[dst], U[src])]

    r = 0
    for col in range(ncols):
        while True:
            live = [i for i in range(r, m) if H[i][col]]
            if len(live) <= 1:
                break
            live.sort(key=lambda i: (abs(H[i][col]), i))
            base = live[0]
            for i in live[1:]:
                axpy(i, base, H[i][col] // H[base][col])
        live = [i for i in range(r, m) if H[i][col]]
        if not live:
            continue
        i0 = live[0]
        if i0 != r:
            H[r], H[i0] = H[i0], H[r]
            if U is not None:
                U[r], U[i0] = U[i0], U[r]
        if H[r][col] < 0:
            H[r] = [-x for x in H[r]]
            if U is not None:
                U[r] = [-x for x in U[r]]
        p = H[r][col]
        for i in range(r):
            q = H[i][col] // p
            if q:
                axpy(i, r, q)
        r += 1
        if r == m:
            break
    return H, U, r


def _matmul(A: Sequence[Sequence[int]], B: Sequence[Sequence[int]]):
    Bt = list(zip(*B))
    return [[sum(a * b for a, b in zip(row, col)) for col in Bt] for row in A]


@dataclass(frozen=True)
class IntMatrix:
    """Immutable square matrix over Z."""

    rows: tuple[Vector, ...]

    def __post_init__(self) -> None:
        rows = tuple(_vec(r) for r in self.rows)
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise ValueError("matrix must be square and non-empty")
        object.__setattr__(self, "rows", rows)

    # -- construction ----------------------------------------------------
    @staticmethod
    def identity(n: int) -> "IntMatrix":
        return IntMatrix(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @staticmethod
    def diagonal(entries: Sequence[int]) -> "IntMatrix":
        n = len(entries)
        return IntMatrix(
            tuple(tuple(int(entries[i]) if i == j else 0 for j in range(n)) for i in range(n))
        )

    @staticmethod
    def elementary(n: int, i: int, j: int, c: int) -> "IntMatrix":
        """The shear I + c*E_ij (adds c times coordinate j to coordinate i)."""
        if i == j:
            raise ValueError("shear indices must differ")
        rows = [[int(a == b) for b in range(n)] for a in range(n)]
        rows[i][j] = int(c)
        return IntMatrix(tuple(tuple(r) for r in rows))

    @staticmethod
    def from_columns(cols: Sequence[Sequence[int]]) -> "IntMatrix":
        cols = [_vec(c) for c in cols]
        n = len(cols)
        if any(len(c) != n for c in cols):
            raise ValueError("columns do not form a square matrix")
        return IntMatrix(tuple(tuple(c[i] for c in cols) for i in range(n)))

    # -- basic queries ---------------------------------------------------
    @property
    def n(self) -> int:
        return len(self.rows)

    def column(self, j: int) -> Vector:
        return tuple(r[j] for r in self.rows)

    def columns(self) -> tuple[Vector, ...]:
        return tuple(zip(*self.rows))

    def transpose(self) -> "IntMatrix":
        return IntMatrix(tuple(zip(*self.rows)))

    def trace(self) -> int:
        return sum(self.rows[i][i] for i in range(self.n))

    def is_identity(self) -> bool:
        return all(self.rows[i][j] == (i == j) for i in range(self.n) for j in range(self.n))

    def mod(self, m: int) -> "IntMatrix":
        return IntMatrix(tuple(tuple(x % m for x in r) for r in self.rows))

    # -- arithmetic ------------------------------------------------------
    def apply(self, v: Sequence[int]) -> Vector:
        if len(v) != self.n:
            raise ValueError("dimension mismatch")
        return tuple(sum(a * b for a, b in zip(row, v)) for row in self.rows)

    def __mul__(self, other):
        if isinstance(other, IntMatrix):
            if other.n != self.n:
                raise ValueError("dimension mismatch")
            return IntMatrix(tuple(tuple(r) for r in _matmul(self.rows, other.rows)))
        if isinstance(other, Lattice):
            if other.ambient_rank != self.n:
                raise ValueError("dimension mismatch")
            return Lattice(other.ambient_rank, tuple(self.apply(b) for b in other.basis))
        if isinstance(other, (tuple, list)):
            return self.apply(other)
        return NotImplemented

    __matmul__ = __mul__

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        return IntMatrix(
            tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows))
        )

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        return IntMatrix(
            tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows))
        )

    def __neg__(self) -> "IntMatrix":
        return IntMatrix(tuple(tuple(-a for a in r) for r in self.rows))

    def __pow__(self, k: int) -> "IntMatrix":
        if k < 0:
            return self.inverse() ** (-k)
        result = IntMatrix.identity(self.n)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def det(self) -> int:
        """Determinant by fraction-free (Bareiss) elimination."""
        a = [list(r) for r in self.rows]
        n = len(a)
        sign = 1
        prev = 1
        for k in range(n - 1):
            if a[k][k] == 0:
                for i in range(k + 1, n):
                    if a[i][k]:
                        a[k], a[i] = a[i], a[k]
                        sign = -sign
                        break
                else:
                    return 0
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
                a[i][k] = 0
            prev = a[k][k]
        return sign * a[n - 1][n - 1]

    def inverse(self) -> "IntMatrix":
        """Exact inverse; defined only for matrices with determinant +-1."""
        H, U, _ = row_hermite(self.rows, transform=True)
        if any(H[i][j] != (i == j) for i in range(self.n) for j in range(self.n)):
            raise ValueError("matrix is not invertible over the integers")
        return IntMatrix(tuple(tuple(r) for r in U))

    @property
    def is_automorphism(self) -> bool:
        return abs(self.det()) == 1


@dataclass(frozen=True)
class Lattice:
    """Sublattice of Z^n, stored as a canonical column-Hermite basis.

    The constructor canonicalizes any generating set, so lattice equality
    is plain value equality.  A direct-summand ("saturated") lattice is one
    whose quotient in Z^n is torsion-free; see :meth:`is_saturated`.
    """

    ambient_rank: int
    basis: tuple[Vector, ...] = ()

    def __post_init__(self) -> None:
        n = int(self.ambient_rank)
        if n < 1:
            raise ValueError("ambient rank must be positive")
        cols = [list(_vec(c)) for c in self.basis]
        if any(len(c) != n for c in cols):
            raise ValueError("dimension mismatch")
        H, _, r = row_hermite(cols)
        object.__setattr__(self, "ambient_rank", n)
        object.__setattr__(self, "basis", tuple(tuple(row) for row in H[:r]))

    @property
    def rank(self) -> int:
        return len(self.basis)

    def contains(self, v: Sequence[int]) -> bool:
        x = list(_vec(v))
        if len(x) != self.ambient_rank:
            raise ValueError("dimension mismatch")
        for b in self.basis:
            piv = next(i for i, e in enumerate(b) if e)
            q, rem = divmod(x[piv], b[piv])
            if rem:
                return False
            if q:
                x = [a - q * e for a, e in zip(x, b)]
        return not any(x)

    __contains__ = contains

    def saturate(self) -> "Lattice":
        """Smallest sublattice containing self with torsion-free quotient."""
        if self.rank == 0:
            return self
        if self.rank == self.ambient_rank:
            return Lattice(self.ambient_rank, IntMatrix.identity(self.ambient_rank).columns())
        perp = _kernel_vectors(self.basis)
        sat = _kernel_vectors(perp)
        return Lattice(self.ambient_rank, tuple(sat))

    def is_saturated(self) -> bool:
        if self.rank == 0:
            return True
        k = self.rank
        H, _, r = row_hermite(list(zip(*self.basis)))
        return r == k and all(H[i][j] == (i == j) for i in range(k) for j in range(k))


def _kernel_vectors(rows: Sequence[Sequence[int]]) -> list[Vector]:
    """Basis of {v in Z^n : rows @ v = 0}; the result is always saturated."""
    if not rows:
        raise ValueError("empty matrix")
    n = len(rows[0])
    T = [list(col) for col in zip(*rows)]
    _, U, r = row_hermite(T, transform=True)
    return [tuple(U[i]) for i in range(r, n)]


def hnf(cols: Iterable[Sequence[int]], ambient_rank: int | None = None) -> Lattice:
    """Canonical lattice spanned by the given column vectors.

    Idempotent: feeding a lattice's basis back reproduces the same value.
    ``ambient_rank`` is only needed when ``cols`` is empty.
    """
    cols = [_vec(c) for c in cols]
    if ambient_rank is None:
        if not cols:
            raise ValueError("ambient rank required for an empty generating set")
        ambient_rank = len(cols[0])
    return Lattice(ambient_rank, tuple(cols))


def kernel_lattice(M: IntMatrix) -> Lattice:
    """The saturated lattice {v : M v = 0}."""
    return Lattice(M.n, tuple(_kernel_vectors(M.rows)))


def summand_index(L1: Lattice, L2: Lattice) -> int:
    """Index [Z^n : L1 + L2] for complementary-rank lattices meeting in 0.

    Equals 1 exactly when L1 + L2 is all of Z^n.
    """
    if L1.ambient_rank != L2.ambient_rank:
        raise ValueError("dimension mismatch")
    n = L1.ambient_rank
    if L1.rank + L2.rank != n:
        raise ValueError("ranks do not sum to the ambient rank")
    d = IntMatrix.from_columns(list(L1.basis) + list(L2.basis)).det()
    if d == 0:
        raise ValueError("lattices intersect nontrivially")
    return abs(d)


def content_and_primitive(v: Sequence[int]) -> tuple[int, Vector]:
    """Split v as content * primitive; the zero vector has content 0."""
    vv = _vec(v)
    g = 0
    for x in vv:
        g = gcd(g, x)
    if g == 0:
        return 0, vv
    return g, tuple(x // g for x in vv)


def rank_mod2(M: IntMatrix) -> int:
    """Rank of M over GF(2)."""
    pivots: dict[int, int] = {}
    for row in M.rows:
        v = 0
        for j, x in enumerate(row):
            if x & 1:
                v |= 1 << j
        while v:
            h = v.bit_length() - 1
            if h in pivots:
                v ^= pivots[h]
            else:
                pivots[h] = v
                break
    return len(pivots)


def rational_rank(M: IntMatrix) -> int:
    """Rank of M over the rationals."""
    return row_hermite(M.rows)[2]


def element_order(M: IntMatrix, bound: int) -> int | None:
    """Least k <= bound with M^k = I, or None when the order exceeds bound."""
    if bound < 1:
        raise ValueError("bound must be positive")
    if not M.is_automorphism:
        raise ValueError("matrix is not an automorphism of Z^n")
    power = M
    for k in range(1, bound + 1):
        if power.is_identity():
            return k
        power = power * M
    return None


def random_unimodular(n: int, word_length: int, entry_bound: int, seed: int) -> IntMatrix:
    """Deterministic random product of shears and signed permutations.

    The result always has determinant +-1; identical arguments give the
    identical matrix.
    """
    if n < 1 or entry_bound < 1 or word_length < 0:
        raise ValueError("parameters out of range")
    rng = random.Random(seed)
    M = IntMatrix.identity(n)
    for _ in range(word_length):
        if n >= 2 and rng.random() < 0.75:
            i, j = rng.sample(range(n), 2)
            c = rng.randint(1, entry_bound) * rng.choice((1, -1))
            factor = IntMatrix.elementary(n, i, j, c)
        else:
            perm = rng.sample(range(n), n)
            rows = [[0] * n for _ in range(n)]
            for j in range(n):
                rows[perm[j]][j] = rng.choice((1, -1))
            factor = IntMatrix(tuple(tuple(r) for r in rows))
        M = M * factor
    return M


def random_elementary_word(n: int, word_length: int, entry_bound: int, seed: int) -> IntMatrix:
    """Deterministic random product of shears only; determinant exactly 1."""
    if n < 2 or entry_bound < 1 or word_length < 0:
        raise ValueError("parameters out of range")
    rng = random.Random(seed)
    M = IntMatrix.identity(n)
    for _ in range(word_length):
        i, j = rng.sample(range(n), 2)
        c = rng.randint(1, entry_bound) * rng.choice((1, -1))
        M = M * IntMatrix.elementary(n, i, j, c)
    return M


def restriction_matrix(M: IntMatrix, L: Lattice) -> IntMatrix:
    """Matrix of M restricted to the M-invariant saturated lattice L,
    written in L's stored basis."""
    k = L.rank
    if k == 0:
        raise ValueError("cannot restrict to the zero lattice")
    n = L.ambient_rank
    B = [[L.basis[j][i] for j in range(k)] for i in range(n)]
    H, U, r = row_hermite(B, transform=True)
    if r != k or any(H[i][j] != (i == j) for i in range(k) for j in range(k)):
        raise ValueError("lattice is not saturated")
    MB = [[sum(M.rows[i][t] * B[t][j] for t in range(n)) for j in range(k)] for i in range(n)]
    Y = _matmul(U, MB)
    if any(Y[i][j] for i in range(k, n) for j in range(k)):
        raise ValueError("lattice is not invariant under the matrix")
    return IntMatrix(tuple(tuple(Y[i]) for i in range(k)))


def basis_completion(cols: Sequence[Sequence[int]]) -> IntMatrix:
    """Unimodular matrix whose first k columns are exactly the given
    columns; requires the columns to span a saturated rank-k lattice."""
    cols = [_vec(c) for c in cols]
    if not cols:
        raise ValueError("nothing to complete")
    n = len(cols[0])
    k = len(cols)
    B = [[cols[j][i] for j in range(k)] for i in range(n)]
    H, U, r = row_hermite(B, transform=True)
    if r != k or any(H[i][j] != (i == j) for i in range(k) for j in range(k)):
        raise ValueError("columns do not span a saturated lattice")
    return IntMatrix(tuple(tuple(r_) for r_ in U)).inverse()
