"""Domain types: search spaces, value tables, traces, policies and measures.

Objective values are :class:`fractions.Fraction` everywhere so that averages
over function sets can be compared for exact equality.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .errors import BudgetError, CodomainMismatchError, EmptyTraceError, NFLError

Number = int | Fraction | str


def as_fraction(x: Number) -> Fraction:
    if isinstance(x, float):
        raise TypeError("floats are not accepted as objective values; use Fraction or str")
    return Fraction(x)


class Orientation(str, enum.Enum):
    MAXIMIZE = "max"
    MINIMIZE = "min"

    def better(self, a: Fraction, b: Fraction) -> bool:
        """True if ``a`` is strictly better than ``b``."""
        return a > b if self is Orientation.MAXIMIZE else a < b

    def best(self, values: Iterable[Fraction]) -> Fraction:
        return max(values) if self is Orientation.MAXIMIZE else min(values)


@dataclass(frozen=True)
class Encoding:
    kind: str  # "bits" or "perm"
    length: int


@dataclass(frozen=True)
class SearchSpace:
    """A finite point set ``0 .. size-1`` with optional structure.

    ``neighborhood`` is an adjacency list (one sorted tuple per point) and
    ``distance`` a full matrix of rationals.
    """

    size: int
    encoding: Encoding | None = None
    neighborhood: tuple[tuple[int, ...], ...] | None = None
    distance: tuple[tuple[Fraction, ...], ...] | None = None

    def __post_init__(self) -> None:
        if self.size < 1:
            raise NFLError("search space must have at least one point")
        if self.neighborhood is not None:
            if len(self.neighborhood) != self.size:
                raise NFLError("neighborhood must list adjacency for every point")
            for x, adj in enumerate(self.neighborhood):
                for y in adj:
                    if not 0 <= y < self.size:
                        raise NFLError(f"neighbor {y} of point {x} out of range")
                    if y == x:
                        raise NFLError(f"point {x} is its own neighbor")
                    if x not in self.neighborhood[y]:
                        raise NFLError(f"neighborhood not symmetric at ({x}, {y})")
        if self.distance is not None:
            if len(self.distance) != self.size or any(len(r) != self.size for r in self.distance):
                raise NFLError("distance matrix must be size x size")
            for x in range(self.size):
                if self.distance[x][x] != 0:
                    raise NFLError(f"d({x},{x}) must be 0")
                for y in range(x + 1, self.size):
                    d = self.distance[x][y]
                    if d < 0 or d != self.distance[y][x]:
                        raise NFLError(f"distance must be nonnegative and symmetric at ({x}, {y})")

    @classmethod
    def plain(cls, size: int) -> SearchSpace:
        return cls(size)

    @classmethod
    def bitstrings(cls, n: int) -> SearchSpace:
        """All length-``n`` bitstrings with bit-flip neighbors and Hamming distance.

        Point ``i`` encodes bits ``x_0 .. x_{n-1}`` with ``x_0`` most significant,
        so points enumerate in the natural truth-table order.
        """
        size = 1 << n
        nbrs = tuple(tuple(sorted(i ^ (1 << b) for b in range(n))) for i in range(size))
        dist = tuple(tuple(Fraction((i ^ j).bit_count()) for j in range(size)) for i in range(size))
        return cls(size, Encoding("bits", n), nbrs, dist)

    @classmethod
    def from_edges(cls, size: int, edges: Iterable[tuple[int, int]]) -> SearchSpace:
        adj: list[set[int]] = [set() for _ in range(size)]
        for a, b in edges:
            if not (0 <= a < size and 0 <= b < size):
                raise NFLError(f"edge ({a}, {b}) out of range")
            adj[a].add(b)
            adj[b].add(a)
        return cls(size, neighborhood=tuple(tuple(sorted(s)) for s in adj))

    def bits(self, point: int) -> tuple[int, ...]:
        if self.encoding is None or self.encoding.kind != "bits":
            raise NFLError("space has no bitstring encoding")
        n = self.encoding.length
        return tuple((point >> (n - 1 - j)) & 1 for j in range(n))

    def check_triangle_inequality(self) -> bool:
        if self.distance is None:
            raise NFLError("space has no distance")
        d = self.distance
        return all(d[x][z] <= d[x][y] + d[y][z]
                   for x in range(self.size) for y in range(self.size) for z in range(self.size))


@dataclass(frozen=True)
class ValueTable:
    """An objective function: one exact value per point."""

    values: tuple[Fraction, ...]
    orientation: Orientation = Orientation.MAXIMIZE

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", tuple(as_fraction(v) for v in self.values))
        object.__setattr__(self, "orientation", Orientation(self.orientation))

    @classmethod
    def of(cls, values: Iterable[Number], orientation: Orientation | str = Orientation.MAXIMIZE) -> ValueTable:
        return cls(tuple(values), Orientation(orientation))

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, point: int) -> Fraction:
        return self.values[point]

    def with_values(self, values: Iterable[Number]) -> ValueTable:
        return ValueTable(tuple(values), self.orientation)

    def check_space(self, space: SearchSpace) -> None:
        if len(self.values) != space.size:
            raise NFLError(f"table has {len(self.values)} values but space has {space.size} points")


CupSignature = tuple[Fraction, ...]


@dataclass(frozen=True)
class TraceRecord:
    steps: tuple[tuple[int, Fraction], ...]
    budget: int

    def __post_init__(self) -> None:
        points = [p for p, _ in self.steps]
        if len(set(points)) != len(points):
            raise NFLError("trace repeats a point")
        if len(self.steps) > self.budget:
            raise NFLError("trace longer than its budget")

    @property
    def points(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.steps)

    @property
    def values(self) -> tuple[Fraction, ...]:
        return tuple(v for _, v in self.steps)

    def prefix(self, m: int) -> TraceRecord:
        return TraceRecord(self.steps[:m], min(m, self.budget))


@dataclass(frozen=True)
class PolicyTree:
    """A deterministic non-repeating black-box algorithm as a decision tree.

    The root visits ``point``; after observing value ``codomain[i]`` the
    search continues with ``children[i]``. A node with no children is the
    final step of an exhaustive run.
    """

    point: int
    codomain: tuple[Fraction, ...]
    children: tuple[PolicyTree, ...] = ()

    def __post_init__(self) -> None:
        if self.children and len(self.children) != len(self.codomain):
            raise NFLError("branching factor must equal codomain size")

    def child_for(self, value: Fraction) -> PolicyTree:
        try:
            i = self.codomain.index(value)
        except ValueError:
            raise CodomainMismatchError(f"value {value} outside policy codomain {self.codomain}") from None
        return self.children[i]

    def depth(self) -> int:
        d, node = 1, self
        while node.children:
            node = node.children[0]
            d += 1
        return d

    def validate(self, size: int, exhaustive: bool = True) -> None:
        """Check that every root-to-leaf path visits distinct in-range points."""

        def walk(node: PolicyTree, seen: frozenset[int]) -> None:
            if not 0 <= node.point < size:
                raise NFLError(f"policy visits out-of-range point {node.point}")
            if node.point in seen:
                raise NFLError(f"policy revisits point {node.point}")
            seen = seen | {node.point}
            if not node.children:
                if exhaustive and len(seen) != size:
                    raise NFLError("exhaustive policy ends early")
                return
            for child in node.children:
                walk(child, seen)

        walk(self, frozenset())


def policy_from_rule(
    size: int,
    codomain: Iterable[Number],
    choose: Callable[[tuple[tuple[int, Fraction], ...]], int],
) -> PolicyTree:
    """Expand a trace -> next-point rule into a full exhaustive policy tree."""
    cod = tuple(sorted({as_fraction(v) for v in codomain}))

    def build(trace: tuple[tuple[int, Fraction], ...]) -> PolicyTree:
        p = choose(trace)
        if p in {q for q, _ in trace}:
            raise NFLError(f"rule revisits point {p}")
        if len(trace) + 1 == size:
            return PolicyTree(p, cod)
        return PolicyTree(p, cod, tuple(build(trace + ((p, v),)) for v in cod))

    return build(())


def ascending_policy(size: int, codomain: Iterable[Number]) -> PolicyTree:
    return policy_from_rule(size, codomain, lambda trace: len(trace))


def descending_policy(size: int, codomain: Iterable[Number]) -> PolicyTree:
    return policy_from_rule(size, codomain, lambda trace: size - 1 - len(trace))


def run_policy(space: SearchSpace, f: ValueTable, policy: PolicyTree, m: int) -> TraceRecord:
    f.check_space(space)
    if m < 1 or m > space.size:
        raise BudgetError(f"budget {m} outside 1..{space.size}")
    steps: list[tuple[int, Fraction]] = []
    node: PolicyTree | None = policy
    while len(steps) < m:
        if node is None:
            raise BudgetError(f"policy ends after {len(steps)} steps, budget is {m}")
        v = f[node.point]
        steps.append((node.point, v))
        if len(steps) == m:
            # still enforce the declared codomain on the last observation
            if v not in node.codomain:
                raise CodomainMismatchError(f"value {v} outside policy codomain {node.codomain}")
            break
        node = node.child_for(v) if node.children else None
    return TraceRecord(tuple(steps), m)


class MeasureKind(str, enum.Enum):
    BEST_SO_FAR = "best"
    MEAN_OF_TRACE = "mean"


@dataclass(frozen=True)
class Measure:
    kind: MeasureKind
    horizon: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "kind", MeasureKind(self.kind))
        if self.horizon < 1:
            raise NFLError("measure horizon must be >= 1")

    @classmethod
    def parse(cls, text: str) -> Measure:
        """Parse ``"best:2"`` or ``"mean:3"``."""
        kind, _, m = text.partition(":")
        if not m:
            raise NFLError(f"measure {text!r} must look like best:<m> or mean:<m>")
        return cls(MeasureKind(kind), int(m))

    def __str__(self) -> str:
        return f"{self.kind.value}:{self.horizon}"


def apply_measure(measure: Measure, trace: TraceRecord | Sequence[Fraction],
                  orientation: Orientation | str = Orientation.MAXIMIZE) -> Fraction:
    values = trace.values if isinstance(trace, TraceRecord) else tuple(trace)
    if not values:
        raise EmptyTraceError("cannot measure an empty trace")
    values = values[: measure.horizon]
    if measure.kind is MeasureKind.BEST_SO_FAR:
        return Orientation(orientation).best(values)
    return Fraction(sum(values, Fraction(0)), len(values))

