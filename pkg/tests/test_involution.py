import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from glnz.exactmat import (
    IntMatrix,
    element_order,
    hnf,
    random_unimodular,
    summand_index,
)
from glnz.involution import (
    CENTRAL,
    DIAGONALIZABLE_OTHER,
    EXTREMAL,
    GAMMA_INVOLUTION,
    NONDIAGONALIZABLE_OTHER,
    ONE_PERMUTATION,
    InvolutionKind,
    canonical_block,
    canonical_form,
    classify,
    eigen_lattices,
    four_involution_witness,
    involution_from_splitting,
    involutions_conjugate,
    is_involution,
    order3_witness,
    profile,
    residue,
    standard_commuting_family,
)

SWAP = IntMatrix(((0, 1), (1, 0)))
SHEARED = IntMatrix(((1, 0), (-1, -1)))


def conj(M, U):
    return U * M * U.inverse()


def random_involution(rng, n, p=None):
    if p is None:
        p = rng.randint(0, n // 2)
    rem = n - 2 * p
    a = rng.randint(0, rem)
    seed_matrix = canonical_block(a, rem - a, p)
    return conj(seed_matrix, random_unimodular(n, 8, 2, rng.randrange(1 << 30)))


class TestEigenLattices:
    def test_diagonal(self):
        plus, minus = eigen_lattices(IntMatrix.diagonal((1, -1)))
        assert plus == hnf([(1, 0)]) and minus == hnf([(0, 1)])

    def test_swap(self):
        plus, minus = eigen_lattices(SWAP)
        assert plus == hnf([(1, 1)]) and minus == hnf([(1, -1)])

    def test_sheared(self):
        plus, minus = eigen_lattices(SHEARED)
        assert plus == hnf([(-2, 1)]) and minus == hnf([(0, 1)])

    def test_rejects_non_involution(self):
        with pytest.raises(ValueError, match="not an involution"):
            eigen_lattices(IntMatrix(((1, 1), (0, 1))))


class TestResidue:
    def test_examples(self):
        assert residue(IntMatrix.diagonal((1, -1, 1))) == 0
        assert residue(canonical_block(2, 0, 1)) == 1  # swap plus fixed plane
        assert residue(SHEARED) == 1

    def test_rejects_non_involution(self):
        with pytest.raises(ValueError, match="not an involution"):
            residue(IntMatrix(((1, 1), (0, 1))))


class TestCanonicalForm:
    def test_identity(self):
        cb = canonical_form(IntMatrix.identity(3))
        assert (cb.profile.a, cb.profile.b, cb.profile.p) == (3, 0, 0)
        assert cb.U.is_identity()

    def test_swap(self):
        cb = canonical_form(SWAP)
        assert (cb.profile.a, cb.profile.b, cb.profile.p) == (0, 0, 1)
        assert cb.U.is_identity()

    def test_sheared_is_swap_conjugate(self):
        cb = canonical_form(SHEARED)
        assert (cb.profile.a, cb.profile.b, cb.profile.p) == (0, 0, 1)
        assert cb.U.inverse() * SHEARED * cb.U == SWAP
        assert summand_index(*eigen_lattices(SHEARED)) == 2

    @settings(max_examples=60, deadline=None)
    @given(st.integers(0, 2**30), st.integers(2, 7))
    def test_random_conjugates_soundness(self, seed, n):
        rng = random.Random(seed)
        P = random_involution(rng, n)
        cb = canonical_form(P)
        assert abs(cb.U.det()) == 1
        assert cb.U.inverse() * P * cb.U == cb.block_matrix()
        prof = cb.profile
        plus, minus = eigen_lattices(P)
        assert plus.rank == prof.a + prof.p
        assert minus.rank == prof.b + prof.p
        assert residue(P) == prof.p
        if 0 < plus.rank and 0 < minus.rank:
            assert summand_index(plus, minus) == 2**prof.p
        assert prof.diagonalizable == (prof.p == 0)


class TestClassify:
    def test_extremal(self):
        assert classify(IntMatrix.diagonal((-1, 1, 1, 1))) == InvolutionKind(EXTREMAL, 1)

    def test_one_permutation(self):
        assert classify(canonical_block(2, 0, 1)).name == ONE_PERMUTATION
        assert classify(canonical_block(0, 2, 1)).name == ONE_PERMUTATION
        assert classify(SWAP).name == ONE_PERMUTATION

    def test_two_involution(self):
        assert classify(IntMatrix.diagonal((-1, -1, 1, 1, 1))) == InvolutionKind(
            GAMMA_INVOLUTION, 2
        )

    def test_central_and_other(self):
        assert classify(IntMatrix.identity(4)).name == CENTRAL
        assert classify(-IntMatrix.identity(4)).name == CENTRAL
        assert classify(IntMatrix.diagonal((1, -1))).name == DIAGONALIZABLE_OTHER
        assert classify(IntMatrix.diagonal((1, -1, -1))).name == DIAGONALIZABLE_OTHER
        assert classify(canonical_block(2, 1, 1)).name == NONDIAGONALIZABLE_OTHER
        assert classify(canonical_block(3, 0, 2)).name == NONDIAGONALIZABLE_OTHER


class TestConjugacy:
    def test_swap_conjugate_to_sheared(self):
        assert involutions_conjugate(SWAP, SHEARED)

    def test_diagonal_not_conjugate_to_swap(self):
        assert not involutions_conjugate(IntMatrix.diagonal((1, -1)), SWAP)

    @settings(max_examples=60, deadline=None)
    @given(st.integers(0, 2**30), st.integers(2, 6))
    def test_conjugation_invariance(self, seed, n):
        rng = random.Random(seed)
        P = random_involution(rng, n)
        U = random_unimodular(n, 8, 2, rng.randrange(1 << 30))
        assert involutions_conjugate(P, conj(P, U))
        assert profile(conj(P, U)) == profile(P)


class TestOrder3Witness:
    def test_swap(self):
        W = order3_witness(SWAP)
        assert W == IntMatrix(((1, -1), (0, -1)))
        assert SWAP * W == IntMatrix(((0, -1), (1, -1)))
        assert element_order(SWAP * W, 3) == 3

    def test_swap_plus_fixed(self):
        P = canonical_block(1, 0, 1)
        W = order3_witness(P)
        assert element_order(P * W, 3) == 3
        assert involutions_conjugate(P, W)

    def test_swap_block_first_layout(self):
        P = IntMatrix(((0, 1, 0), (1, 0, 0), (0, 0, 1)))
        W = order3_witness(P)
        assert element_order(P * W, 3) == 3

    def test_conjugation_equivariance(self):
        rng = random.Random(17)
        for _ in range(15):
            n = rng.randint(2, 6)
            P = random_involution(rng, n, p=rng.randint(1, n // 2))
            W = order3_witness(P)
            assert element_order(P * W, 3) == 3
            assert involutions_conjugate(P, W)

    def test_diagonalizable_rejected(self):
        with pytest.raises(ValueError, match="diagonalizable"):
            order3_witness(IntMatrix.diagonal((1, -1)))

    def test_non_involution_rejected(self):
        with pytest.raises(ValueError, match="not an involution"):
            order3_witness(IntMatrix(((1, 1), (0, 1))))


class TestFourInvolutionWitness:
    def test_two_swaps(self):
        P = canonical_block(5, 0, 2)  # two swap pairs and five fixed vectors
        W = four_involution_witness(P)
        assert P * W == IntMatrix.diagonal((1,) * 5 + (-1,) * 4)
        assert classify(P * W) == InvolutionKind(GAMMA_INVOLUTION, 4)

    def test_two_swaps_leading_layout(self):
        # swap, swap, then five fixed vectors: the product negates the
        # four swapped directions and fixes the rest
        rows = [[0] * 9 for _ in range(9)]
        rows[0][1] = rows[1][0] = rows[2][3] = rows[3][2] = 1
        for i in range(4, 9):
            rows[i][i] = 1
        P = IntMatrix(tuple(tuple(r) for r in rows))
        W = four_involution_witness(P)
        assert P * W == IntMatrix.diagonal((-1,) * 4 + (1,) * 5)

    def test_single_swap_with_mixed_blocks(self):
        P = canonical_block(4, 3, 1)
        W = four_involution_witness(P)
        assert classify(P * W) == InvolutionKind(GAMMA_INVOLUTION, 4)
        assert involutions_conjugate(P, W)

    def test_one_permutation_rejected(self):
        with pytest.raises(ValueError, match="one-permutation"):
            four_involution_witness(canonical_block(7, 0, 1))

    def test_small_rank_rejected(self):
        with pytest.raises(ValueError, match="rank too small"):
            four_involution_witness(canonical_block(3, 2, 1))

    def test_conjugated_inputs(self):
        rng = random.Random(23)
        for _ in range(10):
            P = random_involution(rng, 9, p=2)
            W = four_involution_witness(P)
            assert classify(P * W) == InvolutionKind(GAMMA_INVOLUTION, 4)


class TestStandardCommutingFamily:
    def test_rank_three(self):
        fam = standard_commuting_family(3)
        assert fam[0] == IntMatrix.diagonal((-1, 1, 1))
        assert fam[1] == IntMatrix.diagonal((1, -1, 1))
        assert fam[2] == IntMatrix.diagonal((1, 1, -1))

    def test_pairwise_commuting_and_extremal(self):
        fam = standard_commuting_family(5)
        for f in fam:
            assert classify(f) == InvolutionKind(EXTREMAL, 1)
        for f in fam:
            for g in fam:
                assert f * g == g * f

    def test_products_are_two_involutions_at_large_rank(self):
        # negated rank 2 must stay below fixed rank, so rank five or more
        fam = standard_commuting_family(5)
        assert classify(fam[0] * fam[1]) == InvolutionKind(GAMMA_INVOLUTION, 2)

    def test_small_rank_rejected(self):
        with pytest.raises(ValueError):
            standard_commuting_family(2)


class TestInvolutionFromSplitting:
    def test_matches_eigen_data(self):
        Q = involution_from_splitting([(0, 1, 0), (0, 0, 1)], [(1, 2, 0)])
        assert is_involution(Q)
        plus, minus = eigen_lattices(Q)
        assert plus == hnf([(0, 1, 0), (0, 0, 1)])
        assert minus == hnf([(1, 2, 0)])

    def test_rejects_non_basis(self):
        with pytest.raises(ValueError):
            involution_from_splitting([(1, 0), (0, 2)], [])
