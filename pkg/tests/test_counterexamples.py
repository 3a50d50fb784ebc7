from fractions import Fraction
from itertools import product

import pytest

from oracles import max2sat_brute_realizable, tour_cost
from nfl_lab.counterexamples import (
    EXAMPLE_PROGRAMS,
    HEXAGON_MATRIX,
    Max2SatInstance,
    TspInstance,
    all_tours,
    boolgp_objective,
    boolgp_realizable,
    canonical_tour,
    distinct_clauses,
    duplicated_semantics_check,
    format_tour,
    max2sat_realizable,
    max2sat_table,
    parse_tour,
    spheres_intersect,
    swapped_optimum_constraints,
    tour_length,
    tsp_realizable,
    two_opt_neighbors,
)
from nfl_lab.errors import NFLError, PreconditionError
from nfl_lab.linalg import dot

HEX = TspInstance(HEXAGON_MATRIX)


class TestMax2Sat:
    PHI = Max2SatInstance.from_dimacs(3, [[1, 2]])

    def test_table(self):
        assert max2sat_table(self.PHI).values == (0, 0, 1, 1, 1, 1, 1, 1)

    def test_empty_formula(self):
        assert max2sat_table(Max2SatInstance(3, ())).values == (0,) * 8

    def test_four_variable_extremes(self):
        f = max2sat_table(Max2SatInstance.from_dimacs(4, [[1, 2], [1, 3], [1, 4]]))
        assert (min(f.values), f[0]) == (0, 0)
        assert (max(f.values), f[0b1000]) == (3, 3)

    def test_dimacs_roundtrip(self):
        inst = Max2SatInstance.from_dimacs(3, [[1, -3], [-2, 3]])
        assert inst.to_dimacs() == [[1, -3], [-2, 3]]
        with pytest.raises(NFLError):
            Max2SatInstance.from_dimacs(3, [[1, 1]])

    def test_twelve_distinct_clauses(self):
        assert len(distinct_clauses(3)) == 12

    def test_table_realizable(self):
        res = max2sat_realizable([0, 0, 1, 1, 1, 1, 1, 1], 3)
        assert res.realizable
        assert max2sat_table(res.instance).values == (0, 0, 1, 1, 1, 1, 1, 1)

    def test_permuted_table_unrealizable(self):
        res = max2sat_realizable([0, 1, 1, 0, 1, 1, 1, 1], 3)
        assert not res.realizable
        cert = res.certificate
        assert (cert.clause_count, cert.multiplicity_bound, cert.candidate_space) == (12, 1, 2**12)
        assert not max2sat_brute_realizable([0, 1, 1, 0, 1, 1, 1, 1], 3)

    def test_all_zero(self):
        res = max2sat_realizable([0] * 8, 3)
        assert res.realizable and res.instance.clauses == ()

    @pytest.mark.parametrize("bits", list(product([0, 1], repeat=8))[::9])
    def test_agrees_with_brute_force(self, bits):
        assert max2sat_realizable(list(bits), 3).realizable == max2sat_brute_realizable(bits, 3)

    def test_round_trip_with_multiplicities(self):
        inst = Max2SatInstance.from_dimacs(3, [[1, 2], [1, 2], [-1, 3], [2, -3]])
        res = max2sat_realizable(max2sat_table(inst), 3)
        assert res.realizable and max2sat_table(res.instance) == max2sat_table(inst)


class TestTsp:
    @pytest.mark.parametrize("tour,length", [("123456", 6), ("142536", 32), ("123465", 8)])
    def test_lengths(self, tour, length):
        t = parse_tour(tour)
        assert tour_length(HEX, t) == length == tour_cost(HEXAGON_MATRIX, t)

    def test_tour_count(self):
        assert len(all_tours(6)) == 60
        assert len(all_tours(4)) == 3

    def test_canonical(self):
        assert format_tour(canonical_tour(parse_tour("165432"))) == "123456"
        assert format_tour(canonical_tour(parse_tour("345612"))) == "123456"

    def test_adjacent_exchange_neighbors(self):
        nb = [format_tour(t) for t in two_opt_neighbors(parse_tour("123456"), segment_length=2)]
        assert len(nb) == 6 and "123465" in nb
        assert all(tour_length(HEX, parse_tour(t)) == 8 for t in nb)

    def test_full_two_opt(self):
        nb = two_opt_neighbors(parse_tour("123456"))
        assert len(nb) == 9 and len(set(nb)) == 9

    def test_four_cities(self):
        nb = two_opt_neighbors((0, 1, 2, 3))
        assert nb and len(nb) == len(set(nb)) and canonical_tour((0, 1, 2, 3)) not in nb

    def test_swapped_optimum_system(self):
        cons = swapped_optimum_constraints(HEX, parse_tour("123456"), parse_tour("142536"))
        assert len(cons) == 7 and cons[0][1] == 32 and all(v == 8 for _, v in cons[1:])
        plain = tsp_realizable(cons, 6)
        # consistent over the rationals, but only with negative costs
        assert plain.realizable and plain.rank == 7
        sol = plain.matrix
        assert all(tour_length(sol, t) == v for t, v in cons)
        assert min(min(r) for r in sol.costs) < 0

    def test_swapped_optimum_nonnegative_infeasible(self):
        cons = swapped_optimum_constraints(HEX, parse_tour("123456"), parse_tour("142536"))
        res = tsp_realizable(cons, 6, nonnegative=True)
        assert not res.realizable
        from nfl_lab.counterexamples import tsp_system

        a, b = tsp_system(cons, 6)
        y = res.farkas
        assert all(dot(y, col) >= 0 for col in zip(*a))
        assert dot(y, b) < 0

    def test_single_constraint(self):
        res = tsp_realizable([(parse_tour("123456"), 6)], 6)
        assert res.realizable and tour_length(res.matrix, parse_tour("123456")) == 6

    def test_all_tours_consistent(self):
        cons = [(t, tour_length(HEX, t)) for t in all_tours(6)]
        res = tsp_realizable(cons, 6)
        assert res.realizable
        assert all(tour_length(res.matrix, t) == v for t, v in cons)
        assert all(tour_length(HEX, t) == v for t, v in cons)

    def test_contradictory_constraints_give_certificate(self):
        t = parse_tour("123456")
        res = tsp_realizable([(t, 6), (t, 7)], 6)
        assert not res.realizable
        assert res.inconsistency.residual != 0


class TestBoolGp:
    PROGS = list(EXAMPLE_PROGRAMS.values())

    def test_objective(self):
        assert boolgp_objective(self.PROGS, (0, 0, 0, 1)) == [4, 2, 1]

    def test_self_and_complement(self):
        p0 = self.PROGS[0]
        assert boolgp_objective([p0], p0) == [4]
        assert boolgp_objective([p0], [1 - v for v in p0]) == [0]

    def test_realizable(self):
        res = boolgp_realizable(self.PROGS, [4, 2, 1])
        assert res.realizable and res.target == (0, 0, 0, 1)

    def test_permuted_unrealizable(self):
        res = boolgp_realizable(self.PROGS, [4, 1, 2])
        assert not res.realizable and res.candidates == 16

    def test_single_program(self):
        p = self.PROGS[1]
        res = boolgp_realizable([p], [4])
        assert res.target == tuple(p)


class TestSpheres:
    def test_midpoint(self):
        res = spheres_intersect([(0, 0), (4, 0)], [4, 4])
        assert res.intersects and res.witness == (2, 0)

    def test_apart(self):
        res = spheres_intersect([(0, 0), (4, 0)], [1, 1])
        assert not res.intersects and res.min_residual == 4

    def test_genuine_vs_swapped(self):
        centers = [(0, 0), (4, 0), (0, 2)]
        t = (Fraction(1), Fraction(1))
        radii = [sum((Fraction(c) - x) ** 2 for c, x in zip(p, t)) for p in centers]
        good = spheres_intersect(centers, radii)
        assert good.intersects and good.witness == t
        bad = spheres_intersect(centers, [radii[1], radii[0], radii[2]])
        assert not bad.intersects

    def test_positive_dimensional_witness(self):
        res = spheres_intersect([(0, 0, 0), (2, 0, 0)], [5, 5])
        assert res.intersects and res.free_dimension == 2
        w = res.witness
        assert sum(x * x for x in w) == 5 and sum((x - c) ** 2 for x, c in zip(w, (2, 0, 0))) == 5


class TestSemantics:
    def test_equal_values(self):
        assert duplicated_semantics_check([[0, 1]], [5, 5, 3]).consistent

    def test_distinct_values(self):
        res = duplicated_semantics_check([[0, 1]], [5, 7, 3])
        assert not res.consistent and res.conflict == (0, 1)

    def test_empty_partition(self):
        assert duplicated_semantics_check([], [1, 2]).consistent


def test_bad_realizability_input():
    with pytest.raises(PreconditionError):
        max2sat_realizable([0, 1], 3)
