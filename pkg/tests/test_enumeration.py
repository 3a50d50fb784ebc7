from fractions import Fraction
from itertools import permutations

import pytest

from oracles import all_tables, naive_policies, recurrence_count, run_naive
from nfl_lab.core import SearchSpace, ValueTable, run_policy
from nfl_lab.enumeration import (
    FunctionSet,
    cup_class,
    cup_signature,
    distinct_permutations,
    enumerate_functions,
    enumerate_policies,
    is_cup,
    multinomial,
    partition_cup,
    policy_count,
)
from nfl_lab.errors import EnumerationTooLargeError
from nfl_lab.metrics import trap_transform
from nfl_lab.problems import onemax


@pytest.mark.parametrize("size,cod,count", [(3, [0, 1], 8), (2, [0, 1, 2], 9), (4, [0, 1], 16)])
def test_function_counts(size, cod, count):
    fs = enumerate_functions(SearchSpace(size), cod)
    assert len(fs) == count
    assert {f.values for f in fs} == set(all_tables(size, cod))


def test_enumeration_cap():
    with pytest.raises(EnumerationTooLargeError) as exc:
        enumerate_functions(SearchSpace(10), [0, 1, 2], cap=1000)
    assert exc.value.count == 3**10


def test_signatures():
    assert cup_signature(onemax(2)) == (0, 1, 1, 2)
    assert cup_signature(ValueTable.of([0, 0, 0])) == (0, 0, 0)
    assert cup_signature(ValueTable.of([0, 0, 1, 1, 1, 1, 1, 1])) == (0, 0, 1, 1, 1, 1, 1, 1)


def test_distinct_permutations_matches_itertools():
    items = tuple(map(Fraction, [0, 1, 1, 2, 2]))
    assert list(distinct_permutations(items)) == sorted(set(permutations(items)))


class TestCupClass:
    def test_injective(self):
        assert len(cup_class(ValueTable.of([0, 1, 2]))) == 6

    def test_constant(self):
        assert len(cup_class(ValueTable.of([0, 0, 0]))) == 1

    def test_repeated_value(self):
        assert len(cup_class(ValueTable.of([0, 0, 1]))) == 3 == multinomial((0, 0, 1))


class TestPartition:
    def test_two_points(self):
        parts = partition_cup(enumerate_functions(SearchSpace(2), [0, 1]))
        assert [len(p) for p in parts] == [1, 2, 1]

    def test_single_class(self):
        assert len(partition_cup(cup_class(ValueTable.of([0, 1, 2])))) == 1

    def test_three_points_by_oracle(self):
        fs = enumerate_functions(SearchSpace(3), [0, 1])
        groups = {}
        for t in all_tables(3, [0, 1]):
            groups.setdefault(tuple(sorted(t)), []).append(t)
        assert sorted(len(p) for p in partition_cup(fs)) == sorted(len(g) for g in groups.values()) == [1, 1, 3, 3]


class TestIsCup:
    def test_full_class(self):
        assert is_cup(cup_class(ValueTable.of([0, 1, 2])))

    def test_onemax_singleton_witness_swaps_extremes(self):
        f = onemax(3)
        check = is_cup(FunctionSet(SearchSpace.bitstrings(3), (f,)))
        assert not check
        member, missing = check.witness
        assert member == f
        assert missing.values == trap_transform(f).values

    def test_trap_pair(self):
        f = onemax(3)
        assert not is_cup(FunctionSet(SearchSpace.bitstrings(3), (f, trap_transform(f))))

    def test_witness_is_outside_set(self):
        fs = FunctionSet.of(SearchSpace(3), [[0, 1, 2], [1, 0, 2]])
        check = is_cup(fs)
        assert not check and check.witness[1] not in fs

    def test_union_of_classes(self):
        fs = FunctionSet(SearchSpace(2), tuple(cup_class(ValueTable.of([0, 1]))) + (ValueTable.of([2, 2]),))
        assert is_cup(fs)


@pytest.mark.parametrize("s,k,count", [(2, 1, 2), (2, 3, 2), (3, 2, 12), (3, 3, 24)])
def test_policy_counts(s, k, count):
    assert policy_count(s, k) == count == len(enumerate_policies(s, range(k)))


def test_policies_match_naive_enumeration():
    # same behaviours as the unshared oracle enumeration, each exactly once
    cod = tuple(map(Fraction, (0, 1)))
    tables = all_tables(3, cod)
    space = SearchSpace(3)
    ours = {tuple(run_policy(space, ValueTable(t), p, 3).steps for t in tables) for p in enumerate_policies(3, cod)}
    naive = {tuple(run_naive(p, t, cod) for t in tables) for p in naive_policies(frozenset(range(3)), 2)}
    assert ours == naive
    assert len(ours) == len(enumerate_policies(3, cod)) == recurrence_count(3, 2)


def test_policies_are_valid():
    for p in enumerate_policies(4, [0, 1]):
        p.validate(4)


def test_policy_cap():
    with pytest.raises(EnumerationTooLargeError):
        enumerate_policies(5, [0, 1, 2], cap=10**6)
