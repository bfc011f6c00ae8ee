"""Transvections of Z^n: construction, recognition, the conjugacy
invariant m, and the shared eigen-summand criterion for extremal
involutions.

A transvection sends a to a + delta(a) x for a nonzero integer covector
delta and a primitive x with delta(x) = 0.  Its conjugacy class in
GL(n, Z) is determined by m = content(delta).
"""

from __future__ import annotations

from dataclasses import dataclass

from .exactmat import IntMatrix, Lattice, Vector, content_and_primitive
from .involution import EXTREMAL, classify, eigen_lattices

__all__ = [
    "MutualSubgroup",
    "TransvectionData",
    "make_transvection",
    "mutual_subgroup",
    "recognize_transvection",
    "shared_summand_predicate",
    "transvections_conjugate",
]


@dataclass(frozen=True)
class TransvectionData:
    """Defining data of a transvection: direction x, covector delta,
    invariant m = content(delta).  delta(x) = 0 and x is primitive."""

    x: Vector
    delta: Vector
    m: int

    def matrix(self) -> IntMatrix:
        return make_transvection(self.delta, self.x)


def make_transvection(delta, x) -> IntMatrix:
    """The automorphism a -> a + delta(a) x, as a matrix I + x (x) delta."""
    delta = tuple(int(d) for d in delta)
    x = tuple(int(e) for e in x)
    n = len(x)
    if len(delta) != n:
        raise ValueError("dimension mismatch")
    if not any(delta):
        raise ValueError("covector must be nonzero")
    content, _ = content_and_primitive(x)
    if content != 1:
        raise ValueError("direction vector must be primitive")
    if sum(d * e for d, e in zip(delta, x)) != 0:
        raise ValueError("covector must vanish on the direction vector")
    return IntMatrix(
        tuple(
            tuple((i == j) + x[i] * delta[j] for j in range(n))
            for i in range(n)
        )
    )


def recognize_transvection(M: IntMatrix) -> TransvectionData | None:
    """Recover (x, delta, m) from a matrix, or None when it is not a
    transvection.

    Signs are normalized so delta's first nonzero entry is positive; the
    opposite sign is absorbed into x.
    """
    n = M.n
    N = M - IntMatrix.identity(n)
    j0 = next((j for j in range(n) if any(N.rows[i][j] for i in range(n))), None)
    if j0 is None:
        return None
    _, x = content_and_primitive(N.column(j0))
    i0 = next(i for i in range(n) if x[i])
    delta = []
    for j in range(n):
        q, rem = divmod(N.rows[i0][j], x[i0])
        if rem:
            return None
        if any(N.rows[i][j] != q * x[i] for i in range(n)):
            return None
        delta.append(q)
    if sum(d * e for d, e in zip(delta, x)) != 0:
        return None
    lead = next(d for d in delta if d)
    if lead < 0:
        delta = [-d for d in delta]
        x = tuple(-e for e in x)
    m, _ = content_and_primitive(delta)
    return TransvectionData(x=x, delta=tuple(delta), m=m)


def transvections_conjugate(M: IntMatrix, N: IntMatrix) -> bool:
    """Two transvections are conjugate exactly when their m invariants
    agree."""
    dm = recognize_transvection(M)
    dn = recognize_transvection(N)
    if dm is None or dn is None:
        raise ValueError("input is not a transvection")
    return dm.m == dn.m


@dataclass(frozen=True)
class MutualSubgroup:
    """Shared eigen-summand of two extremal involutions, plus the even
    invariant of their product."""

    shared: Lattice
    side: str  # "plus" (shared fixed hyperplane) or "minus" (shared negated line)
    product_m: int


def mutual_subgroup(P: IntMatrix, Q: IntMatrix) -> MutualSubgroup | None:
    """Shared fixed hyperplane or shared negated line of two distinct
    extremal involutions, or None.

    When the summand exists, Q P is a transvection of even invariant,
    recorded as product_m.
    """
    if P == Q:
        raise ValueError("involutions must be distinct")
    if classify(P).name != EXTREMAL or classify(Q).name != EXTREMAL:
        raise ValueError("inputs must be extremal involutions")
    p_plus, p_minus = eigen_lattices(P)
    q_plus, q_minus = eigen_lattices(Q)
    if p_plus == q_plus:
        shared, side = p_plus, "plus"
    elif p_minus == q_minus:
        shared, side = p_minus, "minus"
    else:
        return None
    data = recognize_transvection(Q * P)
    if data is None or data.m % 2 or data.m == 0:
        raise RuntimeError(
            "product of extremal involutions with a shared eigen-summand "
            "must be a transvection of even invariant"
        )
    return MutualSubgroup(shared=shared, side=side, product_m=data.m)


def _is_even_transvection(M: IntMatrix) -> bool:
    data = recognize_transvection(M)
    return data is not None and data.m % 2 == 0


def shared_summand_predicate(
    pair1: tuple[IntMatrix, IntMatrix], pair2: tuple[IntMatrix, IntMatrix]
) -> bool:
    """Do two extremal-involution pairs encode the same direct summand?

    Each pair must share an eigen-summand on the same side.  The answer is
    computed two ways: by comparing the shared lattices, and by the
    first-order condition "each cross product is either an equality or a
    transvection of even invariant"; the two must agree.
    """
    p1, p2 = pair1
    q1, q2 = pair2
    r1 = mutual_subgroup(p1, p2)
    r2 = mutual_subgroup(q1, q2)
    if r1 is None or r2 is None:
        raise ValueError("each pair must share an eigen-summand")
    if r1.side != r2.side:
        raise ValueError("pairs must share an eigen-summand on the same side")
    semantic = r1.shared == r2.shared
    syntactic = all(
        f == g or _is_even_transvection(f * g)
        for f in (p1, p2)
        for g in (q1, q2)
    )
    if semantic != syntactic:
        raise RuntimeError("summand predicate disagrees with lattice comparison")
    return syntactic
