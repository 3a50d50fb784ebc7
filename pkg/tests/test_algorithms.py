from fractions import Fraction

import pytest

from oracles import expected_best_of_subset, expected_best_without_replacement, popcount_table
from nfl_lab.algorithms import (
    AlgorithmKind,
    Enumerative,
    Lcg64,
    RngKind,
    SeededAlgorithm,
    SeedFamily,
    run_algorithm,
    seed_average,
)
from nfl_lab.core import Measure, SearchSpace, ValueTable
from nfl_lab.errors import BudgetError, NFLError
from nfl_lab.problems import onemax

CUBE = SearchSpace.bitstrings(3)


def test_lcg_reference_stream():
    g = Lcg64(0)
    assert g.next64() == 1442695040888963407
    assert g.next64() == (1442695040888963407 * 6364136223846793005 + 1442695040888963407) % 2**64
    draws = [Lcg64(7).below(10) for _ in range(3)]
    assert len(set(draws)) == 1 and 0 <= draws[0] < 10


def test_enumerative_digits():
    e = Enumerative(5 + 8 * 3)
    assert (e.below(8), e.below(7)) == (5, 3)


def test_best_first_from_000_reaches_optimum():
    alg = SeededAlgorithm(AlgorithmKind.BEST_FIRST, 0, RngKind.ENUMERATIVE)  # start at point 0
    trace = run_algorithm(alg, CUBE, onemax(3), 8)
    assert trace.points[0] == 0
    best = [max(trace.values[: i + 1]) for i in range(8)]
    assert best == sorted(best) and best[-1] == 3
    # probes 001, 010, 100; the tie moves to 001 (lowest index), which probes 011, 101
    assert trace.points[:6] == (0, 1, 2, 4, 3, 5)


def test_random_search_full_budget_is_permutation():
    f = onemax(3)
    for seed in range(20):
        trace = run_algorithm(SeededAlgorithm("random-search", seed), CUBE, f, 8)
        assert sorted(trace.values) == sorted(f.values)


def test_same_seed_same_trace():
    for kind in AlgorithmKind:
        a = SeededAlgorithm(kind, 12345)
        assert run_algorithm(a, CUBE, onemax(3), 6) == run_algorithm(a, CUBE, onemax(3), 6)


def test_worst_first_mirrors_best_first_on_negation():
    f = ValueTable.of([3, 1, 4, 1, 5, 9, 2, 6])
    neg = f.with_values(-v for v in f.values)
    for seed in range(30):
        w = run_algorithm(SeededAlgorithm("worst-first", seed), CUBE, f, 8)
        b = run_algorithm(SeededAlgorithm("best-first", seed), CUBE, neg, 8)
        assert w.values == tuple(-v for v in b.values)


def test_local_search_needs_neighborhood():
    with pytest.raises(NFLError):
        run_algorithm(SeededAlgorithm("best-first", 0), SearchSpace(4), ValueTable.of([0, 1, 2, 3]), 2)


def test_budget():
    with pytest.raises(BudgetError):
        run_algorithm(SeededAlgorithm("random-search", 0), CUBE, onemax(3), 9)


class TestSeedAverage:
    def test_constant(self):
        f = ValueTable.of([4] * 8)
        for kind in AlgorithmKind:
            assert seed_average(kind, CUBE, f, Measure.parse("best:3"), range(10)) == 4

    def test_full_enumeration_finds_optimum(self):
        fam = SeedFamily.all_starts("random-search", CUBE)
        assert fam.average(CUBE, onemax(3), Measure.parse("best:8")) == 3

    def test_all_orderings_match_hypergeometric_oracle(self):
        ms = popcount_table(3)
        fam = SeedFamily.all_orderings("random-search", CUBE, 4)
        got = fam.average(CUBE, onemax(3), Measure.parse("best:4"))
        assert got == expected_best_of_subset(ms, 4) == expected_best_without_replacement(ms, 4) == Fraction(87, 35)

    def test_empty_seed_set(self):
        with pytest.raises(NFLError):
            seed_average("random-search", CUBE, onemax(3), Measure.parse("best:1"), [])

    def test_lcg_average_converges_toward_exact(self):
        exact = Fraction(87, 35)
        approx = seed_average("random-search", CUBE, onemax(3), Measure.parse("best:4"), range(4000))
        assert abs(float(approx - exact)) < 0.05
