import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mixedstirling import oracle
from mixedstirling.core import bell, stirling2
from mixedstirling.errors import InvalidArgument, SizeGuardExceeded
from mixedstirling.mixed import (
    b0_nkr,
    b_nkr,
    b_nkr_inclusion_exclusion,
    b_nkr_recurrence,
    canonical_route,
    compositions,
    mixed_ball_removal_recurrence,
    mixed_count,
    mixed_count_empty_expansion,
    mixed_distinct_balls_multinomial,
    mixed_distinct_balls_signsum,
    product_formula_labeled_cells,
    r_bell,
    r_bell_direct,
    r_bell_polynomial,
    r_bell_theorem_sum,
    r_mixed_bell,
    r_mixed_bell_stirling_sum,
    r_mixed_stirling,
    r_mixed_stirling_composition,
    r_mixed_stirling_theorem,
    r_stirling2,
    r_stirling_corollary_recurrence,
    r_stirling_rec_ii,
    r_stirling_rec_iii,
    r_stirling_via_B,
    surjective_formula_labeled_cells,
)
from mixedstirling.problem import BallSpec, CellSpec, PartitionProblem


def problem(balls, cells, empty=False, r=0):
    return PartitionProblem(BallSpec(tuple(balls)), CellSpec(tuple(cells)), empty, r)


def nkr_cells(k, r):
    return (r,) + (1,) * (k - 1)


# -- worked examples -------------------------------------------------------


@pytest.mark.parametrize(
    "balls,cells,empty,r,expected",
    [
        ((1, 1), (2, 1), True, 0, 5),
        ((), (3,), True, 0, 1),
        ((2, 1), (1, 1), True, 0, 6),
        ((1, 1, 1, 1), (2, 1), False, 2, 15),
        ((), (1,), True, 0, 1),
    ],
)
def test_mixed_count_examples(balls, cells, empty, r, expected):
    assert mixed_count(problem(balls, cells, empty, r)) == expected


@pytest.mark.parametrize("balls,cells,expected", [((1, 1), (2, 1), 5), ((), (2,), 1), ((1, 1, 1), (3,), 5)])
def test_empty_expansion_examples(balls, cells, expected):
    assert mixed_count_empty_expansion(balls, cells) == expected


@pytest.mark.parametrize("args,expected", [((2, 2, 2), 5), ((0, 3, 2), 1), ((3, 2, 1), 8)])
def test_b0_examples(args, expected):
    assert b0_nkr(*args) == expected


def test_b_examples():
    assert b_nkr(5, 1, 3) == stirling2(5, 3) == 25
    assert b_nkr(2, 2, 2) == 0
    # 18, not {4 brace 2} = 7: the lone labeled cell is distinguishable
    assert b_nkr(4, 2, 2) == 18 == oracle.count(problem((1, 1, 1, 1), (2, 1)))


def test_b_recurrence_examples():
    assert b_nkr_recurrence(4, 2, 2) == 18
    assert b_nkr_recurrence(1, 1, 1) == 1
    # two balls cannot fill three non-empty cells
    assert b_nkr_recurrence(2, 3, 1) == 0 == oracle.count(problem((1, 1), (1, 1, 1)))


def test_b_inclusion_exclusion_is_literal():
    assert b_nkr_inclusion_exclusion(4, 2, 2) == 17
    assert b_nkr_inclusion_exclusion(1, 1, 1) == 1
    assert b_nkr_inclusion_exclusion(2, 2, 2) == -1


def test_b_requires_positive_k_and_r():
    for f in (b_nkr, b0_nkr, b_nkr_recurrence):
        with pytest.raises(InvalidArgument):
            f(3, 0, 1)
        with pytest.raises(InvalidArgument):
            f(3, 1, 0)


def test_distinct_ball_examples():
    assert mixed_distinct_balls_multinomial(4, (2, 1)) == 18
    assert mixed_distinct_balls_multinomial(2, (3,)) == 0
    assert mixed_distinct_balls_multinomial(3, (1, 1)) == 6
    assert mixed_ball_removal_recurrence(4, (2, 1)) == 18
    assert mixed_ball_removal_recurrence(1, (1,)) == 1
    assert mixed_ball_removal_recurrence(3, (1, 1)) == 6


def test_signsum_is_literal():
    assert mixed_distinct_balls_signsum(4, (2, 1)) == 47
    assert mixed_distinct_balls_signsum(1, (1,)) == -1
    assert mixed_distinct_balls_signsum(3, (2,)) == -5


def test_labeled_cell_examples():
    assert product_formula_labeled_cells((1, 1), 2) == 4
    assert product_formula_labeled_cells((2, 1), 2) == 6
    assert product_formula_labeled_cells((3,), 1) == 1
    assert surjective_formula_labeled_cells((2, 1), 2) == 4
    assert surjective_formula_labeled_cells((1,), 2) == 0
    assert surjective_formula_labeled_cells((1, 1), 2) == 2


def test_r_stirling_examples():
    assert r_stirling2(4, 2, 1) == stirling2(4, 2) == 7
    assert r_stirling2(3, 3, 3) == 1
    assert r_stirling2(4, 3, 2) == 5
    assert r_stirling2(2, 1, 3) == 0
    # the empty set has no element 1, so only r=0 admits it
    assert (r_stirling2(0, 0, 0), r_stirling2(0, 0, 1)) == (1, 0)


@pytest.mark.parametrize("n", range(1, 9))
def test_r_stirling_r0_r1_match_stirling(n):
    for k in range(n + 2):
        assert r_stirling2(n, k, 0) == r_stirling2(n, k, 1) == stirling2(n, k)


def test_r_stirling_literal_forms():
    assert r_stirling_rec_ii(4, 3, 2) == 5
    assert r_stirling_rec_ii(5, 3, 2) == 22
    assert r_stirling_corollary_recurrence(4, 2, 1) == 10
    assert r_stirling_corollary_recurrence(3, 3, 3) == 0
    assert r_stirling_corollary_recurrence(5, 3, 2) == 29
    assert r_stirling_via_B(4, 3, 2) == 0
    assert r_stirling_via_B(5, 3, 2) == 42
    assert r_stirling2(5, 3, 2) == 19


@pytest.mark.parametrize("n", range(2, 9))
def test_r_stirling_rec_iii_holds(n):
    for r in range(2, n + 1):
        for k in range(n + 1):
            assert r_stirling_rec_iii(n, k, r) == r_stirling2(n, k, r)


def test_r_bell_examples(count):
    assert r_bell(3, 0) == 5
    assert r_bell_direct(3, 3) == 1 == count(3, (3,), True, 3)
    assert r_bell_direct(4, 2) == count(4, (4,), True, 2) == 10
    assert r_bell_polynomial(3, 2, 1) == r_bell(3, 2) == 37
    assert r_bell_polynomial(2, 1, 0) == 1
    assert r_bell_polynomial(0, 1, 5) == 1
    with pytest.raises(InvalidArgument):
        r_bell(2, 3)


def test_r_bell_theorem_sum_literal():
    assert (r_bell_theorem_sum(3, 1), r_bell(3, 1)) == (10, 15)
    assert (r_bell_theorem_sum(2, 2), r_bell(2, 2)) == (1, 10)
    assert r_bell_theorem_sum(1, 1) == 1


def test_r_mixed_examples():
    assert r_mixed_stirling(4, (2, 1), 2) == 15
    assert r_mixed_stirling(2, (1, 1), 2) == 2
    assert r_mixed_stirling(1, (1,), 1) == 1
    assert r_mixed_bell(2, (2, 1), 0) == 5
    assert r_mixed_bell(1, (1,), 1) == 1
    assert r_mixed_bell(3, (2, 1), 2) == 9


def test_r_mixed_literal_forms():
    assert r_mixed_stirling_theorem(4, 2, 2, 2) == 4
    assert r_mixed_stirling_theorem(3, 2, 1, 1) == 2
    assert r_mixed_stirling_composition(4, (2, 1), 2) == 0
    assert r_mixed_stirling_composition(2, (1, 1), 1) == 0


@pytest.mark.parametrize("n", range(6))
def test_r_mixed_bell_stirling_sum_matches(n):
    for cells in [(1,), (2,), (2, 1), (1, 1, 1), (3, 1)]:
        for r in range(min(n, 3) + 1):
            assert r_mixed_bell_stirling_sum(n, cells, r) == r_mixed_bell(n, cells, r)


def test_compositions_colex():
    assert list(compositions(2, 2)) == [(2, 0), (1, 1), (0, 2)]
    assert list(compositions(0, 3)) == [(0, 0, 0)]
    assert list(compositions(3, 0)) == []
    assert len(list(compositions(4, 3))) == 15


# -- properties ------------------------------------------------------------


@pytest.mark.parametrize("n", range(1, 9))
def test_collapse_to_classic_numbers(n):
    for k in range(1, min(n, 6) + 1):
        assert mixed_count(problem((1,) * n, (k,))) == stirling2(n, k)
    if n <= 6:
        assert mixed_count(problem((1,) * n, (n,), True)) == bell(n)


@settings(max_examples=50, deadline=None)
@given(
    st.lists(st.integers(1, 2), max_size=4),
    st.lists(st.integers(1, 3), min_size=1, max_size=3).filter(lambda c: sum(c) <= 5),
    st.booleans(),
    st.randoms(use_true_random=False),
)
def test_group_permutation_symmetry(balls, cells, empty, rnd):
    shuffled = list(cells)
    rnd.shuffle(shuffled)
    assert mixed_count(problem(balls, cells, empty)) == mixed_count(problem(balls, shuffled, empty))


@pytest.mark.parametrize("n", range(1, 9))
def test_recurrence_consistency(n):
    for k in range(1, 5):
        for r in range(1, 4):
            assert b_nkr_recurrence(n, k, r) == b_nkr(n, k, r)


@settings(max_examples=60, deadline=None)
@given(
    st.lists(st.integers(1, 3), max_size=4).filter(lambda b: sum(b) <= 7),
    st.lists(st.integers(1, 3), min_size=1, max_size=3).filter(lambda c: sum(c) <= 5),
)
def test_monotone_containment(balls, cells):
    assert mixed_count(problem(balls, cells, False)) <= mixed_count(problem(balls, cells, True))


@pytest.mark.parametrize("cells", [(2, 1), (3,), (1, 1, 1), (2, 2), (3, 1)])
def test_r_monotonicity(cells):
    total = sum(cells)
    for n in range(1, 7):
        for r in range(min(n, total)):
            assert r_mixed_stirling(n, cells, r + 1) <= r_mixed_stirling(n, cells, r)


@pytest.mark.parametrize("n", range(8))
def test_b_forms_match_oracle(n):
    for k in range(1, 4):
        for r in range(1, 4):
            if k - 1 + r > 6:
                continue
            cells = nkr_cells(k, r)
            assert b_nkr(n, k, r) == oracle.count(problem((1,) * n, cells, False))
            assert b0_nkr(n, k, r) == oracle.count(problem((1,) * n, cells, True))


def test_routes():
    assert canonical_route(problem((1, 1), (2, 1), True)) == "prop-2.3"
    assert canonical_route(problem((1, 1), (2, 1), False)) == "thm-multinomial"
    assert canonical_route(problem((2, 1), (1, 1), True)) == "thm-multip1"
    assert canonical_route(problem((2, 1), (1, 1), False)) == "thm-multip2"
    assert canonical_route(problem((1, 1, 1), (3,), False, 2)) == "r-stirling-table"
    assert canonical_route(problem((2, 1), (2, 1), False)) == "oracle"
    assert canonical_route(problem((1, 1, 1), (2, 1), False, 2)) == "oracle"
    assert canonical_route(problem((1,), (), False)) == "no-cells"
    assert canonical_route(problem((1, 1, 1), (1, 1), False, 3)) == "prefix-exceeds-cells"


def test_closed_routes_skip_the_guard():
    big = problem((1,) * 40, (3, 2, 2), False)
    assert canonical_route(big) == "thm-multinomial"
    assert mixed_count(big) > 0
    with pytest.raises(SizeGuardExceeded):
        mixed_count(problem((2,) * 12, (2, 1), False))


def test_every_route_agrees_with_oracle_on_small_cases():
    seen = set()
    for balls in [(), (1,), (1, 1), (2,), (2, 1), (1, 1, 1), (1, 1, 1, 1)]:
        for cells in [(1,), (2,), (1, 1), (2, 1), (3,), (1, 1, 1)]:
            for empty, r in itertools.product((False, True), range(4)):
                if r > len(balls) or any(b != 1 for b in balls[:r]):
                    continue
                p = problem(balls, cells, empty, r)
                seen.add(canonical_route(p))
                assert mixed_count(p) == oracle.count(p), p
    assert seen >= {"prop-2.3", "thm-multinomial", "thm-multip1", "thm-multip2", "r-stirling-table", "oracle"}
