"""Congruence subgroups of GL(n, Z) and the rank-2/rank-3 matrix identities
behind them: shear factorizations, unipotent square roots, braid-relation
involutions, commutator identities, and mod-2 lifting.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .exactmat import IntMatrix, rank_mod2

__all__ = [
    "CommutatorReport",
    "ElementaryFactor",
    "FactorClass",
    "Factorization",
    "braid_involution_solutions",
    "commutator_identities",
    "elementary_factorization",
    "factor_mod2_classes",
    "in_gamma",
    "lift_mod2",
    "lift_row_to_sl3",
    "unipotent_sqrt_sl2",
]


@dataclass(frozen=True)
class ElementaryFactor:
    """A shear I + c*E_ij with i != j and c != 0 (indices 0-based)."""

    i: int
    j: int
    c: int

    def __post_init__(self) -> None:
        if self.i == self.j:
            raise ValueError("shear indices must differ")
        if self.c == 0:
            raise ValueError("shear coefficient must be nonzero")

    def matrix(self, n: int) -> IntMatrix:
        return IntMatrix.elementary(n, self.i, self.j, self.c)


@dataclass(frozen=True)
class Factorization:
    """Ordered shear factors whose left-to-right product is the target."""

    n: int
    factors: tuple[ElementaryFactor, ...]

    def __len__(self) -> int:
        return len(self.factors)

    def product(self) -> IntMatrix:
        M = IntMatrix.identity(self.n)
        for f in self.factors:
            M = M * f.matrix(self.n)
        return M


def in_gamma(M: IntMatrix, m: int) -> bool:
    """Membership in the principal congruence subgroup of level m:
    matrices acting trivially on (Z/m)^n, i.e. congruent to I mod m."""
    if m < 2:
        raise ValueError("level must be at least 2")
    if not M.is_automorphism:
        raise ValueError("matrix is not an automorphism of Z^n")
    return all(
        (M.rows[i][j] - (i == j)) % m == 0 for i in range(M.n) for j in range(M.n)
    )


def elementary_factorization(M: IntMatrix) -> Factorization:
    """Write a determinant-1 matrix as an exact product of shears.

    Gauss-Jordan over Z: euclidean row reduction brings each pivot to 1
    (the trailing block keeps determinant 1, so each pivot column has
    coprime entries), then the column is cleared.  The recorded operations
    invert to the factorization.  No length bound is promised; the length
    is whatever the reduction produces.
    """
    n = M.n
    if n < 2:
        raise ValueError("rank must be at least 2")
    if M.det() != 1:
        raise ValueError("determinant must be 1")
    A = [list(r) for r in M.rows]
    ops: list[tuple[int, int, int]] = []

    def rowop(i: int, j: int, c: int) -> None:
        if c:
            A[i] = [a + c * b for a, b in zip(A[i], A[j])]
            ops.append((i, j, c))

    for col in range(n):
        while True:
            live = [i for i in range(col, n) if A[i][col]]
            if len(live) <= 1:
                break
            live.sort(key=lambda i: (abs(A[i][col]), i))
            base = live[0]
            for i in live[1:]:
                rowop(i, base, -(A[i][col] // A[base][col]))
        live = [i for i in range(col, n) if A[i][col]]
        if len(live) != 1 or abs(A[live[0]][col]) != 1:
            raise RuntimeError("pivot reduction failed")
        i0 = live[0]
        if A[i0][col] == -1:
            if col == n - 1:
                raise RuntimeError("trailing pivot cannot be -1 for determinant 1")
            other = col if i0 != col else col + 1
            rowop(other, i0, 1)
            rowop(i0, other, -2)
            rowop(other, i0, 1)
            i0 = next(i for i in range(col, n) if A[i][col] == 1)
        if i0 != col:
            rowop(col, i0, 1)
            i0 = col
        for i in range(n):
            if i != col and A[i][col]:
                rowop(i, col, -A[i][col])
    if any(A[i][j] != (i == j) for i in range(n) for j in range(n)):
        raise RuntimeError("reduction did not reach the identity")
    # ops give E_k ... E_1 M = I, so M = E_1^-1 ... E_k^-1 in original order
    factors = tuple(ElementaryFactor(i, j, -c) for (i, j, c) in ops)
    result = Factorization(n=n, factors=factors)
    if result.product() != M:
        raise RuntimeError("factorization does not reproduce the input")
    return result


@dataclass(frozen=True)
class FactorClass:
    """Mod-2 class of a shear factor: trivial exactly when the coefficient
    is even, in which case the factor is the square of the half shear."""

    trivial_mod2: bool
    square_root: ElementaryFactor | None


def factor_mod2_classes(F: Factorization) -> list[FactorClass]:
    classes = []
    for f in F.factors:
        if f.c % 2 == 0:
            classes.append(
                FactorClass(True, ElementaryFactor(f.i, f.j, f.c // 2))
            )
        else:
            classes.append(FactorClass(False, None))
    return classes


def unipotent_sqrt_sl2(T: IntMatrix) -> tuple[IntMatrix, ...]:
    """All X in SL(2, Z) with X*X = T, for unipotent T.

    The trace of a solution is forced to +-2, so X = +-(I + N/2) with
    N = T - I; the set is empty unless N is even, and {I, -I} for T = I.
    """
    if T.n != 2 or T.det() != 1 or T.trace() != 2:
        raise ValueError("matrix is not unipotent in SL(2, Z)")
    N = T - IntMatrix.identity(2)
    if any(x % 2 for row in N.rows for x in row):
        return ()
    half = IntMatrix(tuple(tuple(x // 2 for x in row) for row in N.rows))
    X = IntMatrix.identity(2) + half
    if X * X != T:
        raise RuntimeError("square-root construction failed")
    return tuple(sorted((X, -X), key=lambda m: m.rows))


_SWAP = ((0, 1), (1, 0))


def _braid_candidates_bounded(bound: int) -> list[IntMatrix]:
    """Trace-0, determinant -1 solutions of S R S = R S R with entries in
    [-bound, bound], excluding the swap S itself.  The determinant pins
    b c = 1 - a^2, so only divisor pairs are enumerated."""
    S = IntMatrix(_SWAP)
    found = []
    for a in range(-bound, bound + 1):
        rest = 1 - a * a
        if rest == 0:
            pairs = [(0, c) for c in range(-bound, bound + 1)]
            pairs += [(b, 0) for b in range(-bound, bound + 1)]
        else:
            pairs = []
            for b in range(-bound, bound + 1):
                if b and rest % b == 0 and abs(rest // b) <= bound:
                    pairs.append((b, rest // b))
        for b, c in pairs:
            R = IntMatrix(((a, b), (c, -a)))
            if R != S and R.det() == -1 and S * R * S == R * S * R:
                found.append(R)
    return sorted(set(found), key=lambda m: m.rows)


def braid_involution_solutions(search_bound: int = 50) -> tuple[IntMatrix, ...]:
    """The four trace-0, determinant -1 matrices R, other than the swap S,
    with S R S = R S R.

    Solved exactly: the relation forces either a = 0 (giving only S) or
    b + c + 1 = 0 with a^2 = b^2 + b + 1, i.e. (2a-2b-1)(2a+2b+1) = 3,
    leaving four divisor cases.  A bounded exhaustive search cross-checks
    the enumeration.
    """
    S = IntMatrix(_SWAP)
    solutions = []
    for d1 in (1, 3, -1, -3):
        d2 = 3 // d1
        if (d1 + d2) % 4 or (d2 - d1 - 2) % 4:
            continue
        a = (d1 + d2) // 4
        b = (d2 - d1 - 2) // 4
        c = -b - 1
        R = IntMatrix(((a, b), (c, -a)))
        if not (R != S and R.det() == -1 and R.trace() == 0 and S * R * S == R * S * R):
            raise RuntimeError("braid-relation case analysis produced a bad matrix")
        solutions.append(R)
    solutions = tuple(sorted(set(solutions), key=lambda m: m.rows))
    if len(solutions) != 4:
        raise RuntimeError("braid-relation case analysis must give four solutions")
    if list(solutions) != _braid_candidates_bounded(search_bound):
        raise RuntimeError("bounded search disagrees with the case analysis")
    return solutions


@dataclass(frozen=True)
class CommutatorReport:
    """The four rank-3 square-root candidates of the double shear, their
    conjugates under the 3-cycle, the two commutator values, and the
    eigenvalue -1 discrimination separating the shear from the rest."""

    cycle: IntMatrix
    candidates: tuple[IntMatrix, ...]
    commutators: tuple[IntMatrix, ...]
    candidate_has_minus_one: tuple[bool, ...]
    commutator_has_minus_one: tuple[bool, ...]
    shear_index: int


def _has_eigenvalue_minus_one(M: IntMatrix) -> bool:
    return (M + IntMatrix.identity(M.n)).det() == 0


def commutator_identities() -> CommutatorReport:
    """Check the two rank-3 commutator identities that single out the unit
    shear among the square roots of the double shear.

    For sigma = I + E01 the commutator with its 3-cycle conjugate is
    I + E02; for the negated variants it is [[1,2,-3],[0,1,-2],[0,0,1]].
    Only the unit shear lacks eigenvalue -1 and has its commutator
    conjugate to itself.  Any mismatch raises.
    """
    shear = IntMatrix(((1, 1, 0), (0, 1, 0), (0, 0, 1)))
    negated = IntMatrix(((-1, -1, 0), (0, -1, 0), (0, 0, 1)))
    candidates = (shear, -shear, negated, -negated)
    cycle = IntMatrix(((0, 0, 1), (1, 0, 0), (0, 1, 0)))
    double_shear = IntMatrix(((1, 2, 0), (0, 1, 0), (0, 0, 1)))
    commutators = []
    for sigma in candidates:
        if sigma * sigma != double_shear:
            raise RuntimeError("candidate is not a square root of the double shear")
        conj = cycle * sigma * cycle.inverse()
        commutators.append(sigma * conj * sigma.inverse() * conj.inverse())
    first = IntMatrix(((1, 0, 1), (0, 1, 0), (0, 0, 1)))
    second = IntMatrix(((1, 2, -3), (0, 1, -2), (0, 0, 1)))
    if commutators[0] != first or commutators[1] != first:
        raise RuntimeError("shear commutator identity failed")
    if commutators[2] != second or commutators[3] != second:
        raise RuntimeError("negated-variant commutator identity failed")
    cand_minus = tuple(_has_eigenvalue_minus_one(m) for m in candidates)
    comm_minus = tuple(_has_eigenvalue_minus_one(m) for m in commutators)
    if cand_minus != (False, True, True, True) or any(comm_minus):
        raise RuntimeError("eigenvalue -1 discrimination failed")
    return CommutatorReport(
        cycle=cycle,
        candidates=candidates,
        commutators=tuple(commutators),
        candidate_has_minus_one=cand_minus,
        commutator_has_minus_one=comm_minus,
        shear_index=0,
    )


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    return old_r, old_s, old_t


def lift_row_to_sl3(a: int, c: int) -> IntMatrix:
    """Complete a coprime (odd, even) column to [[a,b,0],[c,d,0],[0,0,1]]
    in SL(3, Z) congruent to I mod 2.

    Determinant 1 forces d odd; b is made even by shifting along the
    solution line, and d is normalized into [1, 2|c|] when c != 0.
    """
    a, c = int(a), int(c)
    if a % 2 == 0:
        raise ValueError("first entry must be odd")
    if c % 2:
        raise ValueError("second entry must be even")
    if gcd(a, c) != 1:
        raise ValueError("entries must be coprime")
    if c == 0:
        d, b = a, 0
    else:
        _, u, v = _xgcd(a, c)
        g = a * u + c * v
        u, v = u // g, v // g
        d, b = u, -v
        if b % 2:
            b += a
            d += c
        step = 2 * abs(c)
        d_target = d % step
        shift = (d_target - d) // (2 * c)
        b += 2 * a * shift
        d = d_target
    M = IntMatrix(((a, b, 0), (c, d, 0), (0, 0, 1)))
    if M.det() != 1 or not in_gamma(M, 2):
        raise RuntimeError("row completion postcondition violated")
    return M


def lift_mod2(rows) -> IntMatrix:
    """Lift an invertible matrix over GF(2) to SL(n, Z).

    The mod-2 matrix is reduced to the identity by row additions only (a
    swap over GF(2) is three additions); each addition lifts to the unit
    shear, and the reversed product is the lift.
    """
    if isinstance(rows, IntMatrix):
        rows = rows.rows
    A = [[int(x) % 2 for x in r] for r in rows]
    n = len(A)
    if n == 0 or any(len(r) != n for r in A):
        raise ValueError("matrix must be square and non-empty")
    if rank_mod2(IntMatrix(tuple(tuple(r) for r in A))) != n:
        raise ValueError("matrix is singular over GF(2)")
    target = tuple(tuple(r) for r in A)
    ops: list[tuple[int, int]] = []

    def add_row(i: int, j: int) -> None:
        A[i] = [(x + y) % 2 for x, y in zip(A[i], A[j])]
        ops.append((i, j))

    for col in range(n):
        if A[col][col] == 0:
            # invertibility puts a 1 below the diagonal once earlier
            # columns are reduced to unit vectors
            pivot = next(i for i in range(col + 1, n) if A[i][col])
            add_row(col, pivot)
        for i in range(n):
            if i != col and A[i][col]:
                add_row(i, col)
    if any(A[i][j] != (i == j) for i in range(n) for j in range(n)):
        raise RuntimeError("GF(2) reduction did not reach the identity")
    # row additions are involutions mod 2, so the input equals the ops
    # composed in original order; lifting each with coefficient 1 keeps
    # the mod-2 value and determinant 1
    M = IntMatrix.identity(n)
    for i, j in ops:
        M = M * IntMatrix.elementary(n, i, j, 1)
    if M.det() != 1 or M.mod(2).rows != target:
        raise RuntimeError("mod-2 lift postcondition violated")
    return M
