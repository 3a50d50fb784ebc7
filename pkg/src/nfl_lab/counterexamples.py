"""Concrete problem families whose value permutations leave the family.

Each family gets a forward map (instance -> objective table) and a
realizability decision (table -> some instance, or a certificate that none
exists). A permuted table that is certified unrealizable shows the family
is not closed under permutation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations, product, zip_longest
from math import comb, isqrt
from typing import Callable, Iterable, Iterator, Sequence

from .core import Number, ValueTable, as_fraction
from .enumeration import DEFAULT_CAP
from .errors import EnumerationTooLargeError, NFLError, PreconditionError
from .linalg import AffineSolution, Inconsistency, dot, gram_schmidt, solve

# ---------------------------------------------------------------- MAX-2-SAT

Literal = tuple[int, bool]  # (variable, positive)
Clause = tuple[Literal, Literal]


@dataclass(frozen=True)
class Max2SatInstance:
    n: int
    clauses: tuple[Clause, ...]

    def __post_init__(self) -> None:
        clauses = tuple(((int(a), bool(pa)), (int(b), bool(pb))) for (a, pa), (b, pb) in self.clauses)
        for (a, _), (b, _) in clauses:
            if a == b:
                raise NFLError(f"clause repeats variable {a}")
            if not (0 <= a < self.n and 0 <= b < self.n):
                raise NFLError(f"clause variable out of range 0..{self.n - 1}")
        object.__setattr__(self, "clauses", clauses)

    @classmethod
    def from_dimacs(cls, n: int, clauses: Iterable[Sequence[int]]) -> Max2SatInstance:
        """Clauses as signed 1-based literals: ``[1, -3]`` is x0 or not x2."""
        out = []
        for c in clauses:
            if len(c) != 2 or 0 in c:
                raise NFLError(f"malformed 2-clause {list(c)}")
            out.append(tuple((abs(l) - 1, l > 0) for l in c))
        return cls(n, tuple(out))

    def to_dimacs(self) -> list[list[int]]:
        return [[(v + 1) if pos else -(v + 1) for v, pos in c] for c in self.clauses]

    def __str__(self) -> str:
        if not self.clauses:
            return "(empty formula)"
        lit = lambda v, pos: f"x{v}" if pos else f"~x{v}"
        return " & ".join(f"({lit(*a)} | {lit(*b)})" for a, b in self.clauses)


def assignment(n: int, point: int) -> tuple[int, ...]:
    """Bits of ``point`` with x0 most significant (truth-table order)."""
    return tuple((point >> (n - 1 - j)) & 1 for j in range(n))


def clause_satisfied(clause: Clause, bits: Sequence[int]) -> bool:
    return any(bits[v] == int(pos) for v, pos in clause)


def max2sat_table(inst: Max2SatInstance, cap: int = DEFAULT_CAP) -> ValueTable:
    size = 1 << inst.n
    if size > cap:
        raise EnumerationTooLargeError("assignments", size, cap)
    return ValueTable.of(
        sum(clause_satisfied(c, assignment(inst.n, x)) for c in inst.clauses) for x in range(size)
    )


def distinct_clauses(n: int) -> list[Clause]:
    """All 4 * C(n, 2) distinct 2-clauses, positive literals first."""
    return [((a, pa), (b, pb)) for a, b in combinations(range(n), 2)
            for pa, pb in product((True, False), repeat=2)]


@dataclass(frozen=True)
class Max2SatCertificate:
    clause_count: int
    multiplicity_bound: int
    candidate_space: int  # (bound + 1) ** clause_count multisets covered
    nodes_visited: int


@dataclass(frozen=True)
class Max2SatRealizability:
    instance: Max2SatInstance | None
    certificate: Max2SatCertificate

    @property
    def realizable(self) -> bool:
        return self.instance is not None


def max2sat_realizable(table: ValueTable | Sequence[Number], n: int) -> Max2SatRealizability:
    """Search clause multisets whose satisfied-count table equals ``table``.

    Every 2-clause is satisfied somewhere, so its multiplicity is at most the
    table maximum; this bounds the search. Depth-first over the distinct
    clauses with running per-point sums, pruning when a sum overshoots or
    can no longer reach its target.
    """
    values = table.values if isinstance(table, ValueTable) else tuple(as_fraction(v) for v in table)
    if len(values) != 1 << n:
        raise PreconditionError(f"table has {len(values)} entries, expected {1 << n}")
    if any(v < 0 or v.denominator != 1 for v in values):
        raise PreconditionError("MAX-2-SAT tables hold nonnegative integers")
    target = [int(v) for v in values]
    bound = max(target)
    clauses = distinct_clauses(n)
    size = len(target)
    sat = [[int(clause_satisfied(c, assignment(n, x))) for x in range(size)] for c in clauses]
    # sound per-clause bound: a clause cannot be used more often than its smallest satisfied target
    limits = [min(target[x] for x in range(size) if row[x]) for row in sat]
    reach = [[0] * size for _ in range(len(clauses) + 1)]
    for i in range(len(clauses) - 1, -1, -1):
        reach[i] = [reach[i + 1][x] + limits[i] * sat[i][x] for x in range(size)]

    current = [0] * size
    mult = [0] * len(clauses)
    visited = 0

    def dfs(i: int) -> bool:
        nonlocal visited
        visited += 1
        if any(current[x] + reach[i][x] < target[x] for x in range(size)):
            return False
        if i == len(clauses):
            return current == target
        added = 0
        for k in range(limits[i] + 1):
            if k:
                for x in range(size):
                    current[x] += sat[i][x]
                added = k
                if any(current[x] > target[x] for x in range(size)):
                    break
            mult[i] = k
            if dfs(i + 1):
                return True
        for x in range(size):
            current[x] -= added * sat[i][x]
        mult[i] = 0
        return False

    found = dfs(0)
    cert = Max2SatCertificate(len(clauses), bound, (bound + 1) ** len(clauses), visited)
    if not found:
        return Max2SatRealizability(None, cert)
    chosen = tuple(c for c, k in zip(clauses, mult) for _ in range(k))
    return Max2SatRealizability(Max2SatInstance(n, chosen), cert)


# ---------------------------------------------------------------------- TSP

Tour = tuple[int, ...]

# six cities on a ring: neighbors cost 1, two apart 2, opposite 9
HEXAGON_MATRIX = (
    (0, 1, 2, 9, 2, 1),
    (1, 0, 1, 2, 9, 2),
    (2, 1, 0, 1, 2, 9),
    (9, 2, 1, 0, 1, 2),
    (2, 9, 2, 1, 0, 1),
    (1, 2, 9, 2, 1, 0),
)


@dataclass(frozen=True)
class TspInstance:
    costs: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self) -> None:
        costs = tuple(tuple(as_fraction(c) for c in row) for row in self.costs)
        n = len(costs)
        if any(len(row) != n for row in costs):
            raise NFLError("cost matrix must be square")
        for i in range(n):
            if costs[i][i] != 0:
                raise NFLError(f"cost matrix diagonal entry {i} is nonzero")
            for j in range(i + 1, n):
                if costs[i][j] != costs[j][i]:
                    raise NFLError(f"cost matrix not symmetric at ({i}, {j})")
        object.__setattr__(self, "costs", costs)

    @property
    def cities(self) -> int:
        return len(self.costs)


def parse_tour(text: str) -> Tour:
    """``"123456"`` (1-based city labels, single digits) -> ``(0, 1, 2, 3, 4, 5)``."""
    return tuple(int(ch) - 1 for ch in text)


def format_tour(tour: Tour) -> str:
    return "".join(str(c + 1) for c in tour)


def _check_tour(tour: Sequence[int], cities: int) -> None:
    if sorted(tour) != list(range(cities)):
        raise NFLError(f"{tuple(tour)} is not a permutation of {cities} cities")


def tour_length(inst: TspInstance, tour: Sequence[int]) -> Fraction:
    _check_tour(tour, inst.cities)
    n = len(tour)
    return sum((inst.costs[tour[i]][tour[(i + 1) % n]] for i in range(n)), Fraction(0))


def canonical_tour(tour: Sequence[int]) -> Tour:
    """Rotate city 0 to the front and orient so the second city is the smaller neighbor of 0."""
    i = list(tour).index(0)
    t = tuple(tour[i:]) + tuple(tour[:i])
    if len(t) > 2 and t[1] > t[-1]:
        t = (t[0],) + tuple(reversed(t[1:]))
    return t


def all_tours(cities: int) -> list[Tour]:
    """Every distinct undirected tour, canonical form, sorted."""
    return sorted({canonical_tour((0,) + p) for p in permutations(range(1, cities))})


def two_opt_neighbors(tour: Sequence[int], segment_length: int | None = None) -> list[Tour]:
    """Tours reachable by reversing one contiguous (cyclic) segment.

    Reversing a segment of length L yields the same tour as reversing the
    complementary segment of length n - L, so ``segment_length`` selects both.
    ``segment_length=2`` gives the adjacent-exchange neighbors.
    """
    n = len(tour)
    if n < 4:
        raise NFLError("2-opt needs at least 4 cities")
    t = tuple(tour)
    lengths = range(2, n - 1) if segment_length is None else sorted({segment_length, n - segment_length})
    own = canonical_tour(t)
    out = set()
    for start in range(n):
        for length in lengths:
            if not 2 <= length <= n - 2:
                continue
            idx = [(start + k) % n for k in range(length)]
            new = list(t)
            for a, b in zip(idx, reversed(idx)):
                new[a] = t[b]
            c = canonical_tour(new)
            if c != own:
                out.add(c)
    return sorted(out)


def edge_columns(cities: int) -> dict[tuple[int, int], int]:
    return {e: k for k, e in enumerate(combinations(range(cities), 2))}


def tour_edges(tour: Sequence[int]) -> list[tuple[int, int]]:
    n = len(tour)
    return [tuple(sorted((tour[i], tour[(i + 1) % n]))) for i in range(n)]  # type: ignore[misc]


@dataclass(frozen=True)
class TspRealizability:
    """Outcome of a TSP realizability query.

    ``inconsistency`` certifies that the plain equation system has no
    solution at all. ``farkas`` (nonnegative mode only) is a vector y with
    y.A >= 0 componentwise and y.b < 0, which rules out every nonnegative
    solution.
    """

    matrix: TspInstance | None
    inconsistency: Inconsistency | None = None
    farkas: tuple[Fraction, ...] | None = None
    rank: int | None = None
    nonnegative: bool = False

    @property
    def realizable(self) -> bool:
        return self.matrix is not None


def _matrix_from(cities: int, x: Sequence[Fraction]) -> TspInstance:
    cols = edge_columns(cities)
    m = [[Fraction(0)] * cities for _ in range(cities)]
    for (i, j), k in cols.items():
        m[i][j] = m[j][i] = x[k]
    return TspInstance(tuple(tuple(r) for r in m))


def tsp_system(constraints: Sequence[tuple[Sequence[int], Number]], cities: int) -> tuple[list[list[Fraction]], list[Fraction]]:
    """One row per constraint over the C(n, 2) edge-cost unknowns."""
    cols = edge_columns(cities)
    a, b = [], []
    for tour, length in constraints:
        _check_tour(tour, cities)
        row = [Fraction(0)] * len(cols)
        for e in tour_edges(tour):
            row[cols[e]] += 1
        a.append(row)
        b.append(as_fraction(length))
    return a, b


def _independent_rows(a: Sequence[Sequence[Fraction]], ncols: int) -> list[int]:
    keep: list[int] = []
    for i in range(len(a)):
        trial = keep + [i]
        s = solve([a[k] for k in trial], [Fraction(0)] * len(trial), ncols, track=False)
        if isinstance(s, AffineSolution) and s.rank == len(trial):
            keep = trial
    return keep


def _basic_solutions(a, b, ncols: int, rank: int) -> Iterator[list[Fraction] | None]:
    """Yield each nonnegative basic solution; ``None`` marks a rejected basis."""
    for basis in combinations(range(ncols), rank):
        s = solve([[row[c] for c in basis] for row in a], b, len(basis), track=False)
        if isinstance(s, AffineSolution) and not s.nullspace and all(x >= 0 for x in s.particular):
            x = [Fraction(0)] * ncols
            for c, v in zip(basis, s.particular):
                x[c] = v
            yield x
        else:
            yield None


def _farkas_vertices(a, b, ncols: int) -> Iterator[tuple[Fraction, ...] | None]:
    """Yield vertices y of {y.A >= 0, y.b = -1}; ``None`` marks a rejected candidate."""
    r = len(a)
    for tight in combinations(range(ncols), r - 1):
        eqs = [[a[k][c] for k in range(r)] for c in tight] + [list(b)]
        rhs = [Fraction(0)] * (r - 1) + [Fraction(-1)]
        s = solve(eqs, rhs, r, track=False)
        if isinstance(s, AffineSolution) and not s.nullspace and all(
                dot(s.particular, [a[k][c] for k in range(r)]) >= 0 for c in range(ncols)):
            yield s.particular
        else:
            yield None


def tsp_realizable(constraints: Sequence[tuple[Sequence[int], Number]], cities: int,
                   nonnegative: bool = False) -> TspRealizability:
    """Is there a symmetric cost matrix giving each tour its stated length?

    The unknowns are the C(n, 2) off-diagonal costs, solved by exact
    elimination. Without ``nonnegative`` any rational solution counts. With
    it, basic solutions are enumerated (complete for linear feasibility) and
    infeasibility comes with a Farkas certificate.
    """
    if not constraints:
        raise PreconditionError("need at least one constraint")
    a, b = tsp_system(constraints, cities)
    ncols = comb(cities, 2)
    result = solve(a, b, ncols)
    if isinstance(result, Inconsistency):
        return TspRealizability(None, inconsistency=result, nonnegative=nonnegative)
    if not nonnegative or all(x >= 0 for x in result.particular):
        return TspRealizability(_matrix_from(cities, result.particular), rank=result.rank, nonnegative=nonnegative)
    # dependent rows of a consistent system are implied by the others
    rows = _independent_rows(a, ncols)
    ar, br = [a[i] for i in rows], [b[i] for i in rows]
    # exactly one search succeeds (Farkas' lemma); run them in lockstep
    for x, y in zip_longest(_basic_solutions(ar, br, ncols, result.rank), _farkas_vertices(ar, br, ncols)):
        if x is not None:
            return TspRealizability(_matrix_from(cities, x), rank=result.rank, nonnegative=True)
        if y is not None:
            full = [Fraction(0)] * len(a)
            for k, i in enumerate(rows):
                full[i] = y[k]
            return TspRealizability(None, farkas=tuple(full), rank=result.rank, nonnegative=True)
    raise AssertionError("neither a basic feasible solution nor a Farkas certificate exists")


def swapped_optimum_constraints(inst: TspInstance, best: Tour, worst: Tour) -> list[tuple[Tour, Fraction]]:
    """The best tour at the worst length, each adjacent-exchange neighbor at its true length.

    Exchanging the best and worst values keeps the neighbors' values; in the
    hexagon instance all six neighbors of the best tour have length 8.
    """
    out = [(best, tour_length(inst, worst))]
    out += [(t, tour_length(inst, t)) for t in two_opt_neighbors(best, segment_length=2)]
    return out


# ------------------------------------------------------------ Boolean GP

Semantics = tuple[Fraction, ...]


def truth_table(fn: Callable[..., int | bool], inputs: int) -> Semantics:
    """Program output over all input rows, x0 most significant."""
    return tuple(Fraction(int(fn(*assignment(inputs, r)))) for r in range(1 << inputs))


def boolgp_objective(programs: Sequence[Sequence[Number]], t: Sequence[Number]) -> list[int]:
    """Per program, the number of cases agreeing with the target semantics."""
    t = [as_fraction(v) for v in t]
    out = []
    for p in programs:
        if len(p) != len(t):
            raise NFLError("semantics vectors differ in length")
        out.append(sum(as_fraction(a) == b for a, b in zip(p, t)))
    return out


@dataclass(frozen=True)
class BoolGpRealizability:
    target: Semantics | None
    candidates: int

    @property
    def realizable(self) -> bool:
        return self.target is not None


def boolgp_realizable(programs: Sequence[Sequence[Number]], targets: Sequence[int]) -> BoolGpRealizability:
    if not programs:
        raise PreconditionError("need at least one program")
    cases = len(programs[0])
    if any(len(p) != cases for p in programs):
        raise NFLError("semantics vectors differ in length")
    if len(targets) != len(programs):
        raise PreconditionError("one target value per program")
    if any(not 0 <= v <= cases or int(v) != v for v in targets):
        raise PreconditionError(f"targets must be integers in 0..{cases}")
    wanted = [int(v) for v in targets]
    for t in product((0, 1), repeat=cases):
        if boolgp_objective(programs, t) == wanted:
            return BoolGpRealizability(tuple(Fraction(v) for v in t), 1 << cases)
    return BoolGpRealizability(None, 1 << cases)


EXAMPLE_PROGRAMS = {
    "and": truth_table(lambda a, b: a and b, 2),
    "or": truth_table(lambda a, b: a or b, 2),
    "not_x0": truth_table(lambda a, b: not a, 2),
}


# ------------------------------------------------------ symbolic regression


@dataclass(frozen=True)
class SphereIntersection:
    """Outcome of intersecting spheres given by squared radii.

    ``min_residual`` is the smallest squared distance from the first center
    to the affine set on which all pairwise differences agree; when that set
    has positive dimension the reachable squared radii are
    ``[min_residual, inf)``.
    """

    intersects: bool
    witness: tuple[Fraction, ...] | None
    min_residual: Fraction | None
    free_dimension: int | None


def _rational_sqrt(q: Fraction) -> Fraction | None:
    if q < 0:
        return None
    a, b = isqrt(q.numerator), isqrt(q.denominator)
    return Fraction(a, b) if a * a == q.numerator and b * b == q.denominator else None


def spheres_intersect(centers: Sequence[Sequence[Number]], sq_radii: Sequence[Number]) -> SphereIntersection:
    """Decide whether some point t has |t - p_i|^2 = r_i for every i.

    Subtracting the first equation from the others leaves a linear system;
    on its affine solution set the remaining quadratic is minimized at the
    projection of the first center.
    """
    if not centers or len(centers) != len(sq_radii):
        raise NFLError("need one squared radius per center")
    d = len(centers[0])
    if any(len(c) != d for c in centers):
        raise NFLError("centers differ in dimension")
    ps = [tuple(as_fraction(x) for x in c) for c in centers]
    rs = [as_fraction(r) for r in sq_radii]
    if any(r < 0 for r in rs):
        raise NFLError("squared radii must be nonnegative")
    p0, r0 = ps[0], rs[0]
    a = [[2 * (x - y) for x, y in zip(p, p0)] for p in ps[1:]]
    b = [dot(p, p) - dot(p0, p0) - r + r0 for p, r in zip(ps[1:], rs[1:])]
    sol = solve(a, b, d) if a else AffineSolution(tuple(Fraction(0) for _ in range(d)),
                                                  tuple(tuple(Fraction(int(i == j)) for j in range(d)) for i in range(d)), 0)
    if isinstance(sol, Inconsistency):
        return SphereIntersection(False, None, None, None)
    basis = gram_schmidt(sol.nullspace)
    proj = list(sol.particular)
    for u in basis:
        k = dot([x - y for x, y in zip(p0, proj)], u) / dot(u, u)
        proj = [x + k * y for x, y in zip(proj, u)]
    offset = [x - y for x, y in zip(proj, p0)]
    dmin = dot(offset, offset)
    if not basis:
        ok = dmin == r0
        return SphereIntersection(ok, tuple(proj) if ok else None, dmin, 0)
    if r0 < dmin:
        return SphereIntersection(False, None, dmin, len(basis))
    if r0 == dmin:
        return SphereIntersection(True, tuple(proj), dmin, len(basis))
    for u in basis:
        s = _rational_sqrt((r0 - dmin) / dot(u, u))
        if s is not None:
            return SphereIntersection(True, tuple(x + s * y for x, y in zip(proj, u)), dmin, len(basis))
    return SphereIntersection(True, None, dmin, len(basis))


@dataclass(frozen=True)
class SemanticsCheck:
    consistent: bool
    conflict: tuple[int, int] | None = None  # two equivalent points with different values


def duplicated_semantics_check(groups: Iterable[Iterable[int]], table: ValueTable | Sequence[Number]) -> SemanticsCheck:
    """A regression objective must give semantically equal programs equal values."""
    values = table.values if isinstance(table, ValueTable) else tuple(as_fraction(v) for v in table)
    for group in groups:
        members = list(group)
        for x in members[1:]:
            if values[x] != values[members[0]]:
                return SemanticsCheck(False, (members[0], x))
    return SemanticsCheck(True)
