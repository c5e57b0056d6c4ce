"""Acceptance criteria, one test each, with a PASS/FAIL line per criterion."""

import contextlib
import itertools
import math
import time

import pytest

from mixedstirling import audit, oracle
from mixedstirling.core import bell, binomial, stirling2
from mixedstirling.factor import (
    big_omega,
    factorize,
    ordered_factorizations_no_units,
    ordered_factorizations_with_units,
    total_ordered_factorizations,
    unordered_multiplicative_partitions,
)
from mixedstirling.mixed import (
    b0_nkr,
    b_nkr,
    b_nkr_recurrence,
    mixed_ball_removal_recurrence,
    mixed_count,
    mixed_count_empty_expansion,
    mixed_distinct_balls_multinomial,
    product_formula_labeled_cells,
    r_bell_direct,
    r_mixed_bell,
    r_mixed_stirling,
    r_stirling2,
    surjective_formula_labeled_cells,
)
from mixedstirling.oracle import SizeGuard
from mixedstirling.problem import BallSpec, CellSpec, PartitionProblem

CONSTRUCTIVE = (
    "prop-2.3", "prop-BB", "prop-BBB", "prop-bioo", "thm-multinomial", "thm-ball-removal",
    "thm-multip1", "thm-multip2", "eq-bino", "bell-binomial-rec", "factor-thm-i", "factor-thm-ii",
)
SUSPECT = (
    "thm-signsum", "rstirling-rec-ii", "thm-rstirling-via-B", "cor-rstirling-rec", "thm-rbell-sum",
    "thm-rmixed-stirling", "cor-rmixed-composition", "thm-rmixed-bell", "prop-rmixed-bell-multinomial",
)


@pytest.fixture
def criterion(pytestconfig):
    """Time the body, enforce the limit and print one PASS/FAIL line."""
    capture = pytestconfig.pluginmanager.getplugin("capturemanager")

    @contextlib.contextmanager
    def _run(number, title, limit):
        start = time.perf_counter()
        status, detail = "FAIL", ""
        try:
            yield
            elapsed = time.perf_counter() - start
            detail = f"{elapsed:.2f}s (limit {limit}s)"
            assert elapsed < limit, f"took {elapsed:.1f}s, limit {limit}s"
            status = "PASS"
        except BaseException as exc:
            detail = detail or f"{type(exc).__name__}: {exc}"
            raise
        finally:
            with capture.global_and_fixture_disabled():
                print(f"\n[acceptance {number}] {status} {title}: {detail}", flush=True)

    return _run


def distinct(n, cells, empty=False, r=0):
    return PartitionProblem(BallSpec.distinct(n), CellSpec(tuple(cells)), empty, r)


def cell_compositions(max_total):
    """Ordered group-size tuples with positive parts summing to at most ``max_total``."""
    for total in range(1, max_total + 1):
        for cuts in itertools.product((False, True), repeat=total - 1):
            parts, run = [], 1
            for cut in cuts:
                if cut:
                    parts.append(run)
                    run = 1
                else:
                    run += 1
            parts.append(run)
            yield tuple(parts)


def test_criterion_1_worked_example_b0(criterion):
    with criterion(1, "B0(2,2,2) = 5 with 5 enumerated configurations", 1):
        assert b0_nkr(2, 2, 2) == 5
        configs = oracle.enumerate_configurations(distinct(2, (2, 1), True))
        assert len(configs) == 5
        assert len({c.serialize() for c in configs}) == 5


def test_criterion_2_worked_example_fifteen(criterion):
    with criterion(2, "r-mixed Stirling example against the oracle and the audit", 1):
        truth = oracle.count(distinct(4, (2, 1), False, 2))
        assert r_mixed_stirling(4, (2, 1), 2) == truth
        report = audit.run_audit(only=["example-rmixed-stirling-15"])
        verdict = report.verdict("example-rmixed-stirling-15")
        assert verdict.grid_points_checked == 1
        if truth == 15:
            assert verdict.status == audit.VERIFIED
        else:
            assert verdict.status == audit.REFUTED and verdict.counterexamples


def test_criterion_3_oracle_equivalence(criterion):
    guard = SizeGuard(max_balls=10, max_total_cells=6, max_states=10**7)
    count = lambda p: oracle.count(p, guard)  # noqa: E731
    grid_points = 0
    with criterion(3, "canonical operations equal the oracle on the full grid", 300):
        all_cells = list(cell_compositions(6))
        for n in range(8):
            for cells in all_cells:
                for empty in (False, True):
                    for r in range(min(n, 3) + 1):
                        p = distinct(n, cells, empty, r)
                        expected = count(p)
                        assert mixed_count(p, guard) == expected, p
                        if empty:
                            assert r_mixed_bell(n, cells, r, guard) == expected, p
                        else:
                            assert r_mixed_stirling(n, cells, r, guard) == expected, p
                        grid_points += 1
                truth_empty = count(distinct(n, cells, True))
                truth_full = count(distinct(n, cells, False))
                assert mixed_count_empty_expansion(BallSpec.distinct(n), cells, guard) == truth_empty
                assert mixed_distinct_balls_multinomial(n, cells) == truth_full
                assert mixed_ball_removal_recurrence(n, cells) == truth_full
            for k in range(1, 7):
                for r in range(0, 4):
                    if r <= n:
                        assert r_stirling2(n, k, r) == count(distinct(n, (k,), False, r))
                for rr in range(1, 4):
                    if k - 1 + rr > 6:
                        continue
                    cells = (rr,) + (1,) * (k - 1)
                    assert b0_nkr(n, k, rr) == count(distinct(n, cells, True))
                    truth = count(distinct(n, cells, False))
                    assert b_nkr(n, k, rr) == truth
                    if n >= 1:
                        assert b_nkr_recurrence(n, k, rr) == truth
            if n <= 6:
                for r in range(min(n, 3) + 1):
                    assert r_bell_direct(n, r) == count(distinct(n, (n,) if n else (1,), True, r))
        # multiset balls with labeled cells
        for total in range(0, 8):
            for balls in _multisets(total):
                spec = BallSpec(balls)
                for k in range(1, 7):
                    labeled = CellSpec.labeled(k)
                    assert product_formula_labeled_cells(spec, k) == count(
                        PartitionProblem(spec, labeled, True)
                    )
                    assert surjective_formula_labeled_cells(spec, k) == count(
                        PartitionProblem(spec, labeled, False)
                    )
        # 63 compositions of totals 1..6, two flags, sum over n of (min(n, 3) + 1) prefixes
        assert grid_points == 63 * 2 * 26


def _multisets(total):
    """Nonincreasing positive multiplicity vectors summing to ``total`` with at most 4 labels."""

    def rec(rest, cap, acc):
        if rest == 0:
            yield tuple(acc)
            return
        if len(acc) == 4:
            return
        for part in range(min(rest, cap), 0, -1):
            yield from rec(rest - part, part, acc + [part])

    yield from rec(total, total, [])


def test_criterion_4_constructive_identities(criterion):
    with criterion(4, "constructive identities verified on the default grid", 600):
        report = audit.run_audit(audit.Grid())
        for ident in CONSTRUCTIVE:
            verdict = report.verdict(ident)
            assert verdict.status == audit.VERIFIED, ident
            assert verdict.counterexamples == [], ident
            assert verdict.grid_points_checked > 0, ident


def test_criterion_5_suspect_identities(criterion):
    with criterion(5, "suspect identities adjudicated, report byte-deterministic", 600):
        first = audit.run_audit(audit.Grid())
        second = audit.run_audit(audit.Grid())
        for ident in SUSPECT:
            verdict = first.verdict(ident)
            assert verdict.grid_points_checked > 0, ident
            assert verdict.status in (audit.VERIFIED, audit.REFUTED), ident
            if verdict.status == audit.REFUTED:
                assert len(verdict.counterexamples) >= 1
        assert first.to_text() == second.to_text()
        assert first.to_json() == second.to_json()


def test_criterion_6_classic_numbers(criterion):
    guard = SizeGuard(max_balls=8, max_total_cells=8, max_states=10**8)
    with criterion(6, "Stirling triangle and Bell numbers regression", 60):
        for n in range(9):
            for k in range(n + 1):
                if k == 0:
                    assert stirling2(n, 0) == (1 if n == 0 else 0)
                    continue
                assert stirling2(n, k) == oracle.count(distinct(n, (k,)), guard)
        recurrence = [1]
        for n in range(10):
            recurrence.append(sum(binomial(n, k) * recurrence[k] for k in range(n + 1)))
        for n in range(11):
            assert bell(n) == recurrence[n]
            if 1 <= n <= 8:
                assert bell(n) == oracle.count(distinct(n, (n,), True), guard)
        assert bell(0) == 1


def _brute_tuples(m, k, least):
    """Enumerate ordered k-tuples of divisors >= least with product m and count them."""
    divisors = [d for d in range(least, m + 1) if m % d == 0]
    total = 0
    stack = [(m, k)]
    while stack:
        rest, slots = stack.pop()
        if slots == 0:
            total += rest == 1
            continue
        for d in divisors:
            if d > rest:
                break
            if rest % d == 0:
                stack.append((rest // d, slots - 1))
    return total


def test_criterion_7_factorization_counts(criterion):
    with criterion(7, "ordered factorizations against divisor-tuple enumeration", 120):
        for m in range(2, 2001):
            for k in range(1, big_omega(m) + 1):
                assert ordered_factorizations_with_units(m, k) == _brute_tuples(m, k, 1), (m, k)
                assert ordered_factorizations_no_units(m, k) == _brute_tuples(m, k, 2), (m, k)
        assert total_ordered_factorizations(12) == 8
        assert unordered_multiplicative_partitions(12) == 4


def test_criterion_8_bridge(criterion):
    with criterion(8, "factorization counts equal labeled-cell formulas", 60):
        for m in range(2, 501):
            exps = tuple(factorize(m).values())
            assert math.prod(p**e for p, e in factorize(m).items()) == m
            for k in range(1, 5):
                assert ordered_factorizations_with_units(m, k) == product_formula_labeled_cells(exps, k)
                assert ordered_factorizations_no_units(m, k) == surjective_formula_labeled_cells(exps, k)
