from __future__ import annotations

import random
from fractions import Fraction

import pytest

from oracles import g_from_c, negative_permutation, permutation_matrix, run_extended
from xcluster.laurent import LaurentPoly, RationalFn
from xcluster.looijenga import build_seed, remark_suffix, weyl_w
from xcluster.seed import (
    MutationState,
    PLMap,
    Seed,
    SeedIso,
    apply_word,
    gmat_from_cmat,
    matrix_mutation,
    mutate,
    pullback_word,
    seed_iso_apply,
    tropical_apply,
    x_pullback,
)

TRIANGLE = ((0, -1, 1), (1, 0, -1), (-1, 1, 0))
W4 = (5, 1, 3, 2, 4, 5, 6, 1, 3, 2, 4, 6)


def triangle_seed() -> Seed:
    return Seed.from_exchange(TRIANGLE)


def unit(i: int, n: int = 3) -> tuple:
    return tuple(int(j == i) for j in range(n))


def f_poly(i: int) -> LaurentPoly:
    """F_i = 1 + z_i + z_i z_{i+2} with 1-based cyclic indices."""
    j = (i + 1) % 3 + 1
    zi = LaurentPoly.variable(3, i - 1)
    return 1 + zi + zi * LaurentPoly.variable(3, j - 1)


class TestMutation:
    def test_fundamental_exchange(self):
        state = apply_word(MutationState.initial(triangle_seed()), (1, 3, 2, 1))
        assert state.eps == ((0, 1, -1), (-1, 0, 1), (1, -1, 0))

    def test_fundamental_gmat(self):
        state = apply_word(MutationState.initial(triangle_seed()), (1, 3, 2, 1))
        assert state.gmat == ((0, 0, -1), (0, -1, 0), (-1, 0, 0))

    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_double_mutation_is_identity(self, k):
        start = apply_word(MutationState.initial(triangle_seed()), (2, 1))
        assert apply_word(start, (k, k)) == start

    def test_empty_word(self):
        start = MutationState.initial(build_seed("E6"))
        assert apply_word(start, ()) == start

    def test_w4_cmat(self):
        state = apply_word(MutationState.initial(build_seed("D4")), W4)
        p = permutation_matrix((2, 1, 4, 3, 5, 6))
        expected = tuple(tuple(-v for v in row) for row in p)
        assert state.cmat == expected

    @pytest.mark.parametrize("n", [4, 5, 6, 7])
    def test_wn_block_form(self, n):
        state = apply_word(MutationState.initial(build_seed(f"D{n}")), weyl_w(f"D{n}").mutations)
        size = n + 2
        for i in range(size):
            for j in range(size):
                if i >= 4 or j >= 4:
                    assert state.cmat[i][j] == (-1 if i == j else 0)

    def test_agrees_with_extended_matrix_oracle(self):
        seed = build_seed("E6")
        rng = random.Random(7)
        for _ in range(20):
            word = [rng.randint(1, seed.n) for _ in range(8)]
            state = apply_word(MutationState.initial(seed), word)
            eps, cmat = run_extended(seed.eps, word)
            assert state.eps == eps
            assert state.cmat == cmat
            assert state.gmat == g_from_c(cmat, seed.d)

    def test_skew_symmetrizable_duality(self):
        seed = Seed(((0, 1, -1), (-1, 0, 1), (1, -1, 0)), (2, 2, 3))
        state = apply_word(MutationState.initial(seed), (1, 3, 2, 3, 1))
        assert state.gmat == g_from_c(state.cmat, seed.d)
        assert gmat_from_cmat(state.cmat, seed.d) == state.gmat

    def test_bad_index(self):
        with pytest.raises(IndexError):
            mutate(MutationState.initial(triangle_seed()), 4)

    def test_matrix_mutation_is_zero_based(self):
        assert matrix_mutation(TRIANGLE, 0) == apply_word(MutationState.initial(triangle_seed()), (1,)).eps

    def test_seed_validation(self):
        with pytest.raises(ValueError):
            Seed(((0, 1), (1, 0)))

    def test_json_round_trip(self):
        seed = build_seed("D5")
        assert Seed.from_json(seed.to_json()) == seed


class TestDTWordsFromMutation:
    def test_w4_alone_is_negative_permutation(self):
        state = apply_word(MutationState.initial(build_seed("D4")), W4)
        assert negative_permutation(state.gmat)

    @pytest.mark.parametrize("n", [5, 6, 7])
    def test_suffix_needed(self, n):
        after = apply_word(MutationState.initial(build_seed(f"D{n}")), weyl_w(f"D{n}").mutations)
        assert not negative_permutation(after.gmat)
        assert negative_permutation(apply_word(after, remark_suffix(n)).gmat)


class TestSeedIso:
    def test_identity(self):
        state = apply_word(MutationState.initial(triangle_seed()), (1, 2))
        assert seed_iso_apply(state, SeedIso.identity(3)) == state

    def test_gamma_restores_exchange(self):
        state = apply_word(MutationState.initial(triangle_seed()), (1, 3, 2, 1))
        back = seed_iso_apply(state, SeedIso.from_cycles(3, [(2, 3)]), target=TRIANGLE)
        assert back.eps == TRIANGLE

    def test_odd_n_gamma(self):
        assert weyl_w("D5").iso.perm[:4] == (3, 4, 1, 2)

    def test_wrong_iso_rejected(self):
        state = apply_word(MutationState.initial(triangle_seed()), (1, 3, 2, 1))
        with pytest.raises(ValueError):
            seed_iso_apply(state, SeedIso.identity(3), target=TRIANGLE)

    def test_invalid_permutation(self):
        with pytest.raises(ValueError):
            SeedIso((1, 1, 2))


class TestPullback:
    def test_isolated_index(self):
        seed = Seed(((0, 0, 0), (0, 0, 1), (0, -1, 0)))
        images = x_pullback(seed, 1)
        assert images[0] == RationalFn.monomial((-1, 0, 0))
        assert images[1] == RationalFn.monomial(unit(1))
        assert images[2] == RationalFn.monomial(unit(2))

    def test_single_step_formula(self):
        images = x_pullback(triangle_seed(), 1)
        z = [LaurentPoly.variable(3, i) for i in range(3)]
        # eps_12 = -1 and eps_13 = 1 for the triangle seed
        assert images[1] == RationalFn.from_poly(z[1] * (1 + z[0]))
        assert images[2] == RationalFn.quotient(z[0] * z[2], 1 + z[0])

    def test_delta_pullback_closed_form(self):
        images = pullback_word(triangle_seed(), (1, 3, 2, 1), SeedIso.from_cycles(3, [(2, 3)]))
        for i in (1, 2, 3):
            shift = [0, 0, 0]
            shift[(i + 1) % 3] = -1
            expected = RationalFn.monomial(shift) * RationalFn.quotient(f_poly(i), f_poly(i % 3 + 1))
            assert images[i - 1] == expected

    def test_delta_inverts_alpha(self):
        images = pullback_word(triangle_seed(), (1, 3, 2, 1), SeedIso.from_cycles(3, [(2, 3)]))
        alpha = images[0] * images[1] * images[2]
        assert alpha == RationalFn.monomial((-1, -1, -1))

    def test_delta_is_an_involution(self):
        images = pullback_word(triangle_seed(), (1, 3, 2, 1), SeedIso.from_cycles(3, [(2, 3)]))
        for i, f in images.items():
            assert f.substitute(images) == RationalFn.monomial(unit(i))


class TestTropical:
    def test_empty_word(self):
        p = (Fraction(1, 3), -2, 5)
        assert tropical_apply(PLMap(triangle_seed(), ()), p) == p

    def test_fixed_on_boundary(self):
        seed = build_seed("D4")
        p = (1, -2, 3, 1, 0, 4)
        image = tropical_apply(PLMap(seed, (5,)), p)
        assert image == p[:4] + (0,) + p[5:]

    def test_double_step_is_identity(self):
        seed = build_seed("D4")
        rng = random.Random(3)
        for _ in range(50):
            p = tuple(Fraction(rng.randint(-30, 30), rng.randint(1, 9)) for _ in range(6))
            assert tropical_apply(PLMap(seed, (5, 5)), p) == p
