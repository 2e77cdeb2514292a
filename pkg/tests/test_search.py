import random
from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from radokit.linalg import RatMatrix
from radokit.search import (
    BudgetExceededError,
    Colouring,
    GroundSet,
    SolutionAssignment,
    doubling_distinct,
    log2_parity_colour,
    min_rado_number,
    monochromatic_solution,
)

SCHUR = RatMatrix.from_rows([[1, 1, -1]])

nonzero_fractions = st.fractions(
    min_value=F(-10**6), max_value=F(10**6), max_denominator=10**6
).filter(lambda x: x != 0)


def reference_floor_log2(x: F) -> int:
    """Bracket |x| into [2^e, 2^{e+1}) by exact repeated doubling/halving."""
    a = abs(x)
    e = 0
    while a >= 2:
        a /= 2
        e += 1
    while a < 1:
        a *= 2
        e -= 1
    return e


class TestLog2ParityColour:
    @pytest.mark.parametrize(
        "x,colour",
        [(F(1), 0), (F(2), 1), (F(3), 1), (F(4), 0), (F(1, 2), 1),
         (F(1, 3), 0), (F(-5), 0), (F(2, 3), 1), (F(1, 4), 0)],
    )
    def test_examples(self, x, colour):
        assert log2_parity_colour(x) == colour

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            log2_parity_colour(F(0))

    @given(nonzero_fractions)
    def test_matches_reference_bracketing(self, x):
        assert log2_parity_colour(x) == reference_floor_log2(x) % 2

    @given(nonzero_fractions)
    def test_doubling_flips(self, x):
        assert log2_parity_colour(2 * x) == 1 - log2_parity_colour(x)


class TestColouring:
    def test_table_lookup(self):
        c = Colouring.table([1, 2], [0, 1])
        assert c.r == 2
        assert c.colour_of(F(1)) == 0 and c.colour_of(F(2)) == 1
        assert c.covers(F(1)) and not c.covers(F(3))

    def test_uncoloured_value_rejected(self):
        c = Colouring.table([1], [0])
        with pytest.raises(ValueError):
            c.colour_of(F(2))

    def test_validation(self):
        with pytest.raises(ValueError):
            Colouring.table([0], [0])
        with pytest.raises(ValueError):
            Colouring.table([1, 1], [0, 1])
        with pytest.raises(ValueError):
            Colouring.table([1], [2], r=2)
        with pytest.raises(ValueError):
            Colouring("spots", 2)
        with pytest.raises(ValueError):
            Colouring.table([1, 2], [0])

    def test_log2_parity_kind(self):
        c = Colouring.log2_parity()
        assert c.r == 2
        assert c.covers(F(-7)) and not c.covers(F(0))
        assert c.colour_of(F(4)) == 0


class TestGroundSet:
    def test_integers(self):
        assert list(GroundSet.integers(3)) == [F(1), F(2), F(3)]

    def test_slice(self):
        assert list(GroundSet.slice(4, 2)) == [F(1, 2), F(1), F(3, 2), F(2)]

    def test_rejects_zero_and_duplicates(self):
        with pytest.raises(ValueError):
            GroundSet((F(0),))
        with pytest.raises(ValueError):
            GroundSet((F(1), F(1)))
        with pytest.raises(ValueError):
            GroundSet.slice(0)


class TestDoublingDistinct:
    def test_log2_parity_always_passes(self):
        g = GroundSet((F(1), F(3), F(1, 2), F(-7), F(5, 3)))
        assert doubling_distinct(Colouring.log2_parity(), g)

    def test_same_colour_pair_fails(self):
        c = Colouring.table([1, 2], [0, 0])
        assert not doubling_distinct(c, GroundSet.integers(2))

    def test_only_in_scope_pairs_checked(self):
        # pairs (1,2) and (2,4) differ; 2*3 and 2*4 are uncoloured, skipped
        c = Colouring.table([1, 2, 3, 4], [0, 1, 0, 0])
        assert doubling_distinct(c, GroundSet.integers(4))


class TestMonochromaticSolution:
    def test_single_class_finds_schur_triple(self):
        c = Colouring.table([1, 2, 3, 4], [0, 0, 0, 0])
        found = monochromatic_solution(SCHUR, c, GroundSet.integers(4))
        assert found.values == (F(1), F(1), F(2))
        assert found.solves(SCHUR)

    def test_good_colouring_blocks_all(self):
        c = Colouring.table([1, 2, 3, 4], [0, 1, 1, 0])
        assert monochromatic_solution(SCHUR, c, GroundSet.integers(4)) is None

    def test_distinct_mode(self):
        c = Colouring.table([1, 2, 3], [0, 0, 0])
        found = monochromatic_solution(
            SCHUR, c, GroundSet.integers(3), distinct=True
        )
        assert found.values == (F(1), F(2), F(3))

    def test_distinct_mode_excludes_repeats(self):
        c = Colouring.table([1, 2], [0, 0])
        assert monochromatic_solution(
            SCHUR, c, GroundSet.integers(2), distinct=True
        ) is None

    def test_log2_parity_classes(self):
        # {1,4} vs {2,3}: both classes Schur-free within {1..4}
        assert monochromatic_solution(
            SCHUR, Colouring.log2_parity(), GroundSet.integers(4)
        ) is None

    def test_budget_guard(self):
        c = Colouring.table(list(range(1, 11)), [0] * 10)
        with pytest.raises(BudgetExceededError):
            monochromatic_solution(SCHUR, c, GroundSet.integers(10), budget=10)

    def test_no_columns_rejected(self):
        with pytest.raises(ValueError):
            monochromatic_solution(
                RatMatrix.from_rows([]), Colouring.log2_parity(),
                GroundSet.integers(2)
            )

    def test_soundness_on_random_colourings(self):
        rng = random.Random(51)
        for _ in range(30):
            n = rng.randint(3, 8)
            colours = [rng.randint(0, 1) for _ in range(n)]
            c = Colouring.table(list(range(1, n + 1)), colours, r=2)
            g = GroundSet.integers(n)
            found = monochromatic_solution(SCHUR, c, g, distinct=rng.random() < 0.5)
            if found is not None:
                assert found.solves(SCHUR)
                assert len({c.colour_of(x) for x in found.values}) == 1


class TestSolutionAssignment:
    def test_residuals(self):
        a = SolutionAssignment((F(1), F(2), F(3)))
        assert a.residuals(SCHUR) == (F(0),)
        assert a.solves(SCHUR)

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            SolutionAssignment((F(1),)).residuals(SCHUR)


class TestMinRadoNumber:
    def test_schur_number(self):
        result = min_rado_number(SCHUR, 2, 10)
        assert result.number == 5
        assert result.witness == (0, 1, 1, 0)

    def test_schur_witness_is_solution_free(self):
        result = min_rado_number(SCHUR, 2, 10)
        c = Colouring.table([1, 2, 3, 4], list(result.witness), r=2)
        assert monochromatic_solution(SCHUR, c, GroundSet.integers(4)) is None

    def test_single_colour(self):
        result = min_rado_number(SCHUR, 1, 10)
        assert result.number == 2
        assert result.witness == (0,)

    def test_two_colour_number_of_x_plus_y_eq_3z(self):
        # failing the columns condition rules out partition regularity over
        # the whole of N, but two colours are not enough for this equation:
        # {1..8} has a solution-free 2-colouring and {1..9} has none
        M = RatMatrix.from_rows([[1, 1, -3]])
        result = min_rado_number(M, 2, 12)
        assert result.number == 9
        assert result.witness == (0, 1, 0, 0, 1, 1, 0, 1)
        c = Colouring.table(list(range(1, 9)), list(result.witness), r=2)
        assert monochromatic_solution(M, c, GroundSet.integers(8)) is None

    def test_survivor_when_no_positive_solutions(self):
        M = RatMatrix.from_rows([[1, 1, 1]])
        result = min_rado_number(M, 2, 64)
        assert result.number is None
        assert len(result.witness) == 64

    def test_survivor_for_doubling_equation(self):
        M = RatMatrix.from_rows([[1, -2]])
        result = min_rado_number(M, 2, 64)
        assert result.number is None
        c = Colouring.table(list(range(1, 65)), list(result.witness), r=2)
        assert monochromatic_solution(M, c, GroundSet.integers(64)) is None

    def test_regular_matrices_reach_a_number(self):
        for rows, expected in [
            ([[1, 1, -1]], 5),
            ([[1, 2, -3]], 1),   # x = y = z solves
            ([[2, -1, -1]], 1),
            ([[1, 1, -2]], 1),
        ]:
            result = min_rado_number(RatMatrix.from_rows(rows), 2, 64)
            assert result.number == expected

    def test_three_colour_schur(self):
        result = min_rado_number(SCHUR, 3, 16)
        assert result.number == 14

    def test_bounds_rejected(self):
        with pytest.raises(ValueError):
            min_rado_number(SCHUR, 5, 10)
        with pytest.raises(ValueError):
            min_rado_number(SCHUR, 0, 10)
        with pytest.raises(ValueError):
            min_rado_number(SCHUR, 2, 65)
        with pytest.raises(ValueError):
            min_rado_number(RatMatrix.from_rows([]), 2, 5)
