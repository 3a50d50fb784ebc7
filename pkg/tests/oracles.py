"""Independent brute-force oracles.

Nothing here imports the package: each oracle recomputes a quantity from
first principles so the tests compare two unrelated code paths.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, permutations, product
from math import comb


def all_tables(size: int, codomain):
    return [tuple(Fraction(v) for v in t) for t in product(codomain, repeat=size)]


def expected_best_without_replacement(multiset, m: int) -> Fraction:
    """E[max of the first m draws] when sampling without replacement."""
    items = list(multiset)
    orders = list(permutations(range(len(items)), m))
    return Fraction(sum(max(items[i] for i in o) for o in orders), len(orders))


def expected_best_of_subset(multiset, m: int) -> Fraction:
    """Same expectation, via unordered m-subsets (hypergeometric view)."""
    items = sorted(multiset)
    n = len(items)
    # P(max is at sorted position j) = C(j, m-1) / C(n, m)
    return Fraction(sum(items[j] * comb(j, m - 1) for j in range(n)), comb(n, m))


def naive_policies(remaining: frozenset[int], k: int):
    """Policies as nested (point, {value_index: subpolicy}) pairs, no sharing."""
    if len(remaining) == 1:
        (p,) = remaining
        yield (p, None)
        return
    for p in sorted(remaining):
        subs = list(naive_policies(remaining - {p}, k))
        for combo in product(subs, repeat=k):
            yield (p, combo)


def run_naive(policy, table, codomain) -> tuple:
    trace = []
    node = policy
    while node is not None:
        p, kids = node
        trace.append((p, table[p]))
        node = None if kids is None else kids[list(codomain).index(table[p])]
    return tuple(trace)


def recurrence_count(s: int, k: int) -> int:
    return 1 if s <= 1 else s * recurrence_count(s - 1, k) ** k


def mean_abs_pairs(values) -> Fraction:
    n = len(values)
    pairs = [(x, y) for x in range(n) for y in range(n) if x != y]
    return Fraction(sum(abs(values[x] - values[y]) for x, y in pairs), len(pairs))


def popcount_table(n: int) -> list[int]:
    return [bin(i).count("1") for i in range(1 << n)]


def hamming(a: int, b: int) -> int:
    return bin(a ^ b).count("1")


def pearson(xs, ys) -> float:
    n = len(xs)
    mx, my = sum(xs) / n, sum(ys) / n
    sxy = sum((x - mx) * (y - my) for x, y in zip(xs, ys))
    sxx = sum((x - mx) ** 2 for x in xs)
    syy = sum((y - my) ** 2 for y in ys)
    return sxy / (sxx * syy) ** 0.5


def local_optima_bitflip(values, n: int) -> int:
    return sum(all(values[x] >= values[x ^ (1 << b)] for b in range(n)) for x in range(1 << n))


def tour_cost(matrix, tour) -> Fraction:
    return sum((Fraction(matrix[tour[i]][tour[(i + 1) % len(tour)]]) for i in range(len(tour))), Fraction(0))


def max2sat_brute_realizable(table, n: int, max_mult: int = 1) -> bool:
    """Try every clause multiset with the given multiplicity bound."""
    lits = [(v, s) for v in range(n) for s in (True, False)]
    clauses = [c for c in combinations(lits, 2) if c[0][0] != c[1][0]]
    rows = []
    for x in range(1 << n):
        bits = [(x >> (n - 1 - i)) & 1 for i in range(n)]
        rows.append([int(any(bits[v] == int(s) for v, s in c)) for c in clauses])
    target = [int(t) for t in table]
    for mult in product(range(max_mult + 1), repeat=len(clauses)):
        if all(sum(a * b for a, b in zip(r, mult)) == t for r, t in zip(rows, target)):
            return True
    return False


def subsets_orderings_count(n: int, m: int) -> int:
    return len(list(permutations(range(n), m)))
