"""Seeded non-repeating search algorithms used as demonstration subjects.

A seed turns each stochastic algorithm into one deterministic policy, so a
set of seeds is a finite policy family that can be averaged exactly.

Budget accounting: every objective query consumes one step, including the
neighbor probes a local search makes before it moves. Already-evaluated
points are memoized and cost nothing.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import perm
from typing import Iterable, Protocol

from .core import Measure, SearchSpace, TraceRecord, ValueTable, apply_measure
from .errors import BudgetError, NFLError

MASK64 = (1 << 64) - 1
# Knuth's MMIX multiplier and increment
LCG_MULTIPLIER = 6364136223846793005
LCG_INCREMENT = 1442695040888963407


class ChoiceSource(Protocol):
    def below(self, n: int) -> int: ...


class Lcg64:
    """64-bit linear congruential generator.

    ``below(n)`` maps the upper 32 bits of the new state onto ``0 .. n-1``
    by multiply-and-shift, so the stream is identical on every platform.
    """

    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next64(self) -> int:
        self.state = (self.state * LCG_MULTIPLIER + LCG_INCREMENT) & MASK64
        return self.state

    def below(self, n: int) -> int:
        if n < 1:
            raise ValueError("n must be positive")
        return ((self.next64() >> 32) * n) >> 32


class Enumerative:
    """Reads the seed as a mixed-radix number, one digit per choice.

    Seeds ``0 .. N*(N-1)*...*(N-m+1) - 1`` then enumerate every ordered
    sequence of ``m`` choices among ``N`` shrinking options exactly once,
    which makes seed averages equal exact expectations.
    """

    def __init__(self, seed: int):
        self.rest = seed

    def below(self, n: int) -> int:
        self.rest, digit = divmod(self.rest, n)
        return digit


class AlgorithmKind(str, enum.Enum):
    RANDOM_SEARCH = "random-search"
    BEST_FIRST = "best-first"
    WORST_FIRST = "worst-first"


class RngKind(str, enum.Enum):
    LCG = "lcg"
    ENUMERATIVE = "enumerative"


@dataclass(frozen=True)
class SeededAlgorithm:
    kind: AlgorithmKind
    seed: int
    rng: RngKind = RngKind.LCG

    def __post_init__(self) -> None:
        object.__setattr__(self, "kind", AlgorithmKind(self.kind))
        object.__setattr__(self, "rng", RngKind(self.rng))

    def source(self) -> ChoiceSource:
        return Lcg64(self.seed) if self.rng is RngKind.LCG else Enumerative(self.seed)


def run_algorithm(alg: SeededAlgorithm, space: SearchSpace, f: ValueTable, m: int) -> TraceRecord:
    f.check_space(space)
    if m < 1 or m > space.size:
        raise BudgetError(f"budget {m} outside 1..{space.size}")
    rng = alg.source()
    if alg.kind is AlgorithmKind.RANDOM_SEARCH:
        return _random_search(space, f, m, rng)
    if space.neighborhood is None:
        raise NFLError(f"{alg.kind.value} needs a neighborhood")
    return _local_search(space, f, m, rng, worst=alg.kind is AlgorithmKind.WORST_FIRST)


def _random_search(space: SearchSpace, f: ValueTable, m: int, rng: ChoiceSource) -> TraceRecord:
    unvisited = list(range(space.size))
    steps = []
    while len(steps) < m:
        p = unvisited.pop(rng.below(len(unvisited)))
        steps.append((p, f[p]))
    return TraceRecord(tuple(steps), m)


def _local_search(space: SearchSpace, f: ValueTable, m: int, rng: ChoiceSource, worst: bool) -> TraceRecord:
    """Steepest-move local search with random restarts.

    Probes every unevaluated neighbor of the current point (lowest index
    first), then moves to the strictly best neighbor, ties to the lowest
    index. With no strictly better neighbor it restarts from a uniformly
    chosen unvisited point. ``worst`` runs the same search on the negated
    objective while recording the true values.
    """
    sign = -1 if worst else 1
    better = f.orientation.better
    seen: dict[int, Fraction] = {}
    steps: list[tuple[int, Fraction]] = []

    def evaluate(p: int) -> Fraction:
        if p not in seen:
            seen[p] = f[p]
            steps.append((p, f[p]))
        return seen[p]

    current: int | None = None
    while len(steps) < m:
        if current is None:
            unvisited = [p for p in range(space.size) if p not in seen]
            current = unvisited[rng.below(len(unvisited))]
            evaluate(current)
            continue
        for q in space.neighborhood[current]:
            if len(steps) == m:
                break
            evaluate(q)
        if len(steps) == m:
            break
        best = current
        for q in space.neighborhood[current]:
            if better(sign * seen[q], sign * seen[best]):
                best = q
        current = best if best != current else None
    return TraceRecord(tuple(steps), m)


@dataclass(frozen=True)
class SeedFamily:
    """A stochastic algorithm viewed as the uniform mixture of its seeded runs."""

    kind: AlgorithmKind
    seeds: tuple[int, ...]
    rng: RngKind = RngKind.LCG

    def __post_init__(self) -> None:
        object.__setattr__(self, "kind", AlgorithmKind(self.kind))
        object.__setattr__(self, "rng", RngKind(self.rng))
        object.__setattr__(self, "seeds", tuple(self.seeds))
        if not self.seeds:
            raise NFLError("seed set must be nonempty")

    @classmethod
    def all_starts(cls, kind: AlgorithmKind | str, space: SearchSpace) -> SeedFamily:
        """One run per start point; later choices take the lowest unvisited point."""
        return cls(AlgorithmKind(kind), tuple(range(space.size)), RngKind.ENUMERATIVE)

    @classmethod
    def all_orderings(cls, kind: AlgorithmKind | str, space: SearchSpace, m: int) -> SeedFamily:
        """Every ordered sequence of the first ``m`` random choices."""
        return cls(AlgorithmKind(kind), tuple(range(perm(space.size, m))), RngKind.ENUMERATIVE)

    def average(self, space: SearchSpace, f: ValueTable, measure: Measure) -> Fraction:
        return seed_average(self.kind, space, f, measure, self.seeds, self.rng)


def seed_average(kind: AlgorithmKind | str, space: SearchSpace, f: ValueTable, measure: Measure,
                 seeds: Iterable[int], rng: RngKind | str = RngKind.LCG) -> Fraction:
    seeds = tuple(seeds)
    if not seeds:
        raise NFLError("seed set must be nonempty")
    m = min(measure.horizon, space.size)
    total = Fraction(0)
    for s in seeds:
        trace = run_algorithm(SeededAlgorithm(AlgorithmKind(kind), s, RngKind(rng)), space, f, m)
        total += apply_measure(measure, trace, f.orientation)
    return total / len(seeds)
