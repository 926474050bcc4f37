from __future__ import annotations

import time
from fractions import Fraction

import pytest

from xcluster.folding import fold_seed, model_pi
from xcluster.laurent import LaurentPoly, RationalFn, TruncSeries
from xcluster.looijenga import build_seed
from xcluster.scatter import (
    Chamber,
    Diagram,
    NonGenericPathError,
    ResourceCapError,
    Wall,
    complete,
    cross_wall,
    enumerate_chambers,
    equivalent,
    initial_diagram,
    is_consistent,
    loop_products,
    mutation_product,
    path_ordered_product,
    permute_diagram,
    seed_form,
    to_svg,
)
from xcluster.seed import MutationState, Seed, apply_word, x_pullback

A2 = Seed(((0, 1), (-1, 0)))
KRONECKER = Seed(((0, 2), (-2, 0)))
TRIANGLE = Seed(((0, -1, 1), (1, 0, -1), (-1, 1, 0)))


def pentagon_by_hand(k: int) -> Diagram:
    """e1^perp, e2^perp and the ray through (-1, 1) carrying 1 + z1 z2."""
    walls = (
        Wall((1, 0), TruncSeries.binomial((1, 0), k), hyperplane=True, incoming=True),
        Wall((0, 1), TruncSeries.binomial((0, 1), k), hyperplane=True, incoming=True),
        Wall((1, 1), TruncSeries.binomial((1, 1), k), generators=((-1, 1),)),
    )
    return Diagram(seed_form(A2), k, walls, (1, 1))


class TestInitialDiagram:
    def test_rank_two(self):
        diag = initial_diagram(A2, 5)
        assert {w.n0 for w in diag.walls} == {(1, 0), (0, 1)}
        assert all(w.hyperplane and w.incoming for w in diag.walls)

    def test_triangle_has_three_hyperplanes(self):
        assert len(initial_diagram(TRIANGLE, 3).walls) == 3

    def test_folded_markov_weights(self):
        folded = fold_seed(build_seed("D4"), model_pi("D4"))
        assert [w.weight for w in initial_diagram(folded.seed, 3).walls] == [2, 2, 2]

    def test_order_must_be_positive(self):
        with pytest.raises(ValueError):
            initial_diagram(A2, 0)

    def test_wall_validation(self):
        with pytest.raises(ValueError):
            Wall((2, 0), TruncSeries.binomial((2, 0), 3), hyperplane=True)
        with pytest.raises(ValueError):
            Wall((1, 0), TruncSeries.binomial((1, 0), 3), generators=((1, 1),))


class TestCrossing:
    def wall(self):
        return initial_diagram(A2, 4).walls[0]

    def test_parallel_monomial_fixed(self):
        z1 = RationalFn.monomial((1, 0))
        assert cross_wall(z1, self.wall(), 1, seed_form(A2)) == z1

    def test_matches_mutation_pullback(self):
        z2 = RationalFn.monomial((0, 1))
        one_plus = RationalFn.from_poly(1 + LaurentPoly.variable(2, 0))
        crossed = {cross_wall(z2, self.wall(), s, seed_form(A2)) for s in (1, -1)}
        assert crossed == {z2 * one_plus, z2 / one_plus}
        # the X-mutation image of z^{e2} is the same factor up to a monomial
        pulled = x_pullback(A2, 1)[1]
        ratios = [pulled / c for c in crossed]
        assert any(not r.factors and r.num.is_monomial() for r in ratios)

    def test_recrossing_is_identity(self):
        z2 = RationalFn.monomial((0, 1))
        once = cross_wall(z2, self.wall(), 1, seed_form(A2))
        assert cross_wall(once, self.wall(), -1, seed_form(A2)) == z2

    def test_tangent_crossing_rejected(self):
        with pytest.raises(NonGenericPathError):
            cross_wall(RationalFn.monomial((0, 1)), self.wall(), 0, seed_form(A2))


class TestPathProducts:
    def test_path_inside_chamber(self):
        diag = complete(initial_diagram(A2, 5), 5)
        assert path_ordered_product(diag, [(1, 2), (3, 1)]).is_identity()

    def test_pentagon_loop(self):
        diag = complete(initial_diagram(A2, 8), 8)
        assert all(a.is_identity() for _, a in loop_products(diag))

    def test_incomplete_diagram_is_inconsistent(self):
        assert not is_consistent(initial_diagram(A2, 4))

    def test_dt_path_in_triangle_diagram(self):
        diag = complete(initial_diagram(TRIANGLE, 4), 4)
        expected = mutation_product(TRIANGLE, (1, 3, 2, 1), 4)
        path = [(2, 3, 7), (-5, -2, -3)]
        assert path_ordered_product(diag, path, method="walls").log == expected
        assert path_ordered_product(diag, path, method="element").log == expected

    def test_short_path_rejected(self):
        with pytest.raises(ValueError):
            path_ordered_product(initial_diagram(A2, 3), [(1, 1)])


class TestComplete:
    def test_single_wall_already_consistent(self):
        seed = Seed(((0, 0), (0, 0)))
        diag = complete(initial_diagram(seed, 4), 4)
        assert len(diag.walls) == 2

    @pytest.mark.parametrize("k", [2, 5, 8])
    def test_pentagon_one_new_wall(self, k):
        diag = complete(initial_diagram(A2, k), k)
        new = diag.outgoing_walls
        assert len(new) == 1
        assert new[0].n0 == (1, 1)
        assert new[0].func == TruncSeries.binomial((1, 1), k)

    def test_kronecker_limit_wall(self):
        diag = complete(initial_diagram(KRONECKER, 8), 8)
        limit = [w for w in diag.outgoing_walls if w.n0 == (1, 1)]
        assert len(limit) == 1
        assert limit[0].generators == ((-1, 1),)
        # every other outgoing wall is a cluster wall carrying a binomial
        for w in diag.outgoing_walls:
            if w.n0 != (1, 1):
                assert w.func == TruncSeries.binomial(w.n0, 8)

    def test_wall_cap(self):
        with pytest.raises(ResourceCapError) as err:
            complete(initial_diagram(KRONECKER, 8), 8, max_walls=4)
        assert err.value.partial_order >= 1

    def test_rank_three_walls_are_consistent(self):
        diag = complete(initial_diagram(TRIANGLE, 4), 4)
        assert is_consistent(diag)

    def test_json_round_trip(self):
        diag = complete(initial_diagram(A2, 4), 4)
        again = Diagram.from_json(diag.to_json())
        assert equivalent(diag, again, 4, trials=5)


class TestChambers:
    def test_depth_zero(self):
        chambers = enumerate_chambers(A2, 0)
        assert [c.gmat for c in chambers] == [((1, 0), (0, 1))]

    def test_a2_closes_up(self):
        assert len(enumerate_chambers(A2, 5)) == 5
        assert len(enumerate_chambers(A2, 9)) == 5

    def test_d4_w4_chamber_reachable_along_word(self):
        # a full depth 12 search on rank 6 is out of reach, so follow W4 directly
        state = apply_word(MutationState.initial(build_seed("D4")), (5, 1, 3, 2, 4, 5, 6, 1, 3, 2, 4, 6))
        final = Chamber(state.gmat)
        assert final.is_negative
        p = ((0, 1, 0, 0, 0, 0), (1, 0, 0, 0, 0, 0), (0, 0, 0, 1, 0, 0), (0, 0, 1, 0, 0, 0),
             (0, 0, 0, 0, 1, 0), (0, 0, 0, 0, 0, 1))
        assert final.key() == Chamber(tuple(tuple(-v for v in r) for r in p)).key()

    def test_contains(self):
        chamber = Chamber(((1, 0), (0, 1)))
        assert chamber.contains((1, 2))
        assert not chamber.contains((1, 0))
        assert chamber.contains((1, 0), strict=False)

    def test_negative_side(self):
        negative = enumerate_chambers(A2, 0, negative=True)
        assert negative[0].is_negative


class TestEquivalence:
    def test_self(self):
        diag = complete(initial_diagram(A2, 6), 6)
        assert equivalent(diag, diag, 6, trials=10)

    def test_pentagon_by_hand(self):
        diag = complete(initial_diagram(A2, 6), 6)
        assert equivalent(diag, pentagon_by_hand(6), 6, trials=20)

    def test_incomplete_differs(self):
        diag = complete(initial_diagram(A2, 6), 6)
        assert not equivalent(diag, initial_diagram(A2, 6), 6, trials=20)

    def test_permutation_of_symmetric_seed(self):
        seed = build_seed("D4")
        diag = complete(initial_diagram(seed, 3), 3)
        assert equivalent(diag, permute_diagram(diag, (2, 1, 3, 4, 5, 6)), 3, trials=10)

    def test_lattice_mismatch(self):
        with pytest.raises(ValueError):
            equivalent(initial_diagram(A2, 3), initial_diagram(TRIANGLE, 3))


class TestPicture:
    def test_svg(self):
        text = to_svg(complete(initial_diagram(A2, 3), 3))
        assert text.startswith("<svg") and text.count("<line") == 5

    def test_svg_rank_two_only(self):
        with pytest.raises(ValueError):
            to_svg(initial_diagram(TRIANGLE, 2))


def test_pentagon_runtime():
    start = time.perf_counter()
    complete(initial_diagram(A2, 8), 8)
    assert time.perf_counter() - start < 1.0


def test_fraction_points_accepted():
    diag = complete(initial_diagram(A2, 4), 4)
    assert path_ordered_product(diag, [(Fraction(1, 3), Fraction(5, 7)), (Fraction(2, 3), Fraction(1, 9))]).is_identity()
