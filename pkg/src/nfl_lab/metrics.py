"""Landscape structure measures that certify a function set is not CUP.

All quantities are exact rationals except fitness-distance correlation,
which needs a square root and is returned as a float.
"""

from __future__ import annotations

import statistics
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from .core import Number, SearchSpace, ValueTable, as_fraction
from .enumeration import FunctionSet
from .errors import MetricError, PreconditionError

FDC_TOLERANCE = 1e-9


@dataclass(frozen=True)
class Comparison:
    """A structured quantity against its baseline; ``holds`` is the strict inequality."""

    structured: Fraction
    baseline: Fraction

    @property
    def holds(self) -> bool:
        return self.structured < self.baseline

    def __iter__(self):
        return iter((self.structured, self.baseline))


def _neighbors(space: SearchSpace) -> tuple[tuple[int, ...], ...]:
    if space.neighborhood is None:
        raise MetricError("space has no neighborhood")
    for x, adj in enumerate(space.neighborhood):
        if not adj:
            raise MetricError(f"point {x} has no neighbors")
    return space.neighborhood


def random_pair_expectation(f: ValueTable) -> Fraction:
    """Mean |f(x) - f(y)| over ordered pairs with x != y."""
    n = len(f)
    if n < 2:
        return Fraction(0)
    total = sum(abs(f[x] - f[y]) for x in range(n) for y in range(n) if x != y)
    return Fraction(total, n * (n - 1))


def locality(space: SearchSpace, f: ValueTable, steps: int = 1) -> Comparison:
    """Neighbor value difference against the random-pair baseline.

    With ``steps > 1`` the structured side averages over every walk of that
    many neighbor moves (x -> N(x) -> N(N(x)) ...). No threshold is implied
    for the multi-step variant.
    """
    nbrs = _neighbors(space)
    f.check_space(space)
    total, count = Fraction(0), 0
    for x in range(space.size):
        walks = [[x]]
        for _ in range(steps):
            walks = [w + [y] for w in walks for y in nbrs[w[-1]]]
        for w in walks:
            total += abs(f[x] - f[w[-1]])
            count += 1
    return Comparison(total / count, random_pair_expectation(f))


@dataclass(frozen=True)
class CrossoverOperator:
    """Deterministic crossover, possibly averaged over a fixed set of masks.

    ``offspring(x, y)`` returns the equally weighted children; a plain
    one-child operator returns a single-element tuple.
    """

    name: str
    offspring: Callable[[int, int], tuple[int, ...]]

    @classmethod
    def first_parent(cls) -> CrossoverOperator:
        return cls("first-parent", lambda x, y: (x,))

    @classmethod
    def uniform_mask(cls, n: int) -> CrossoverOperator:
        """Uniform crossover on n-bit points, averaged over all 2**n masks."""
        full = (1 << n) - 1
        return cls("uniform-mask", lambda x, y: tuple((x & m) | (y & ~m & full) for m in range(1 << n)))

    @classmethod
    def one_point(cls, n: int) -> CrossoverOperator:
        """Head of the first parent, tail of the second, over every cut 1..n-1."""
        def cut(x: int, y: int) -> tuple[int, ...]:
            out = []
            for c in range(1, n):
                tail = (1 << (n - c)) - 1
                out.append((x & ~tail) | (y & tail))
            return tuple(out)
        return cls("one-point", cut)

    @classmethod
    def from_table(cls, table: Sequence[Sequence[int]]) -> CrossoverOperator:
        return cls("table", lambda x, y: (table[x][y],))


def crossover_locality(space: SearchSpace, f: ValueTable, cx: CrossoverOperator) -> Comparison:
    """Mean |f(x) - f(C(x, y))| against the random-pair baseline.

    Both sides average over ordered pairs with x != y.
    """
    f.check_space(space)
    total, count = Fraction(0), 0
    for x in range(space.size):
        for y in range(space.size):
            if x == y:
                continue
            kids = cx.offspring(x, y)
            for c in kids:
                if not 0 <= c < space.size:
                    raise MetricError(f"crossover produced out-of-range point {c}")
            total += Fraction(sum(abs(f[x] - f[c]) for c in kids), len(kids))
            count += 1
    if count == 0:
        return Comparison(Fraction(0), Fraction(0))
    return Comparison(total / count, random_pair_expectation(f))


def steepness(space: SearchSpace, f: ValueTable) -> Comparison:
    """Largest neighbor difference against the full value range.

    ``holds`` means no maximal steepness (discrete-Lipschitz).
    """
    nbrs = _neighbors(space)
    f.check_space(space)
    local = max(abs(f[x] - f[y]) for x in range(space.size) for y in nbrs[x])
    return Comparison(local, max(f.values) - min(f.values))


def _optima(f: ValueTable) -> list[int]:
    best = f.orientation.best(f.values)
    return [x for x, v in enumerate(f.values) if v == best]


def fdc(space: SearchSpace, f: ValueTable, closest_optimum: bool = False) -> float:
    """Pearson correlation between distance to the global optimum and value."""
    if space.distance is None:
        raise MetricError("space has no distance")
    f.check_space(space)
    optima = _optima(f)
    if len(optima) > 1 and not closest_optimum:
        raise MetricError(f"global optimum is tied across points {optima}")
    dists = [float(min(space.distance[x][o] for o in optima)) for x in range(space.size)]
    try:
        return statistics.correlation(dists, [float(v) for v in f.values])
    except statistics.StatisticsError as exc:
        raise MetricError(f"correlation undefined: {exc}") from None


def is_local_optimum(space: SearchSpace, f: ValueTable, x: int) -> bool:
    return not any(f.orientation.better(f[y], f[x]) for y in _neighbors(space)[x])


def count_local_optima(space: SearchSpace, f: ValueTable) -> int:
    if space.neighborhood is None:
        raise MetricError("space has no neighborhood")
    f.check_space(space)
    return sum(is_local_optimum(space, f, x) for x in range(space.size))


def local_optima_counts(fs: FunctionSet) -> set[int]:
    """The local-optima counts achieved across a set.

    A count that is possible on the space but absent here shows the set is
    not CUP.
    """
    return {count_local_optima(fs.space, f) for f in fs}


def modularity_score(space: SearchSpace, f: ValueTable) -> Fraction:
    """Simplified modularity: mean degree of monotonicity of each bit.

    For position j the toggle effect d = f(x | j=1) - f(x | j=0) is taken in
    every context of the other bits, and the position scores
    |sum d| / sum |d| (1 when all effects share a sign, or are all zero).
    The result is the mean over positions.
    """
    if space.encoding is None or space.encoding.kind != "bits":
        raise MetricError("modularity needs a bitstring encoding")
    f.check_space(space)
    n = space.encoding.length
    scores = []
    for j in range(n):
        bit = 1 << (n - 1 - j)
        deltas = [f[x | bit] - f[x] for x in range(space.size) if not x & bit]
        mass = sum(abs(d) for d in deltas)
        scores.append(Fraction(1) if mass == 0 else abs(sum(deltas)) / mass)
    return sum(scores, Fraction(0)) / n


def trap_transform(f: ValueTable) -> ValueTable:
    """Swap the values of the unique global optimum and unique global pessimum."""
    hi, lo = max(f.values), min(f.values)
    tops = [x for x, v in enumerate(f.values) if v == hi]
    bottoms = [x for x, v in enumerate(f.values) if v == lo]
    if len(tops) != 1 or len(bottoms) != 1 or tops == bottoms:
        raise PreconditionError("trap needs a unique optimum and a unique pessimum")
    vals = list(f.values)
    a, b = tops[0], bottoms[0]
    vals[a], vals[b] = vals[b], vals[a]
    return f.with_values(vals)


def penalty_composite(f: ValueTable, g: ValueTable, lam: Number) -> ValueTable:
    """Pointwise f - lam * g; the penalty g must take at least two values."""
    if len(f) != len(g):
        raise PreconditionError("objective and penalty tables differ in length")
    if len(set(g.values)) < 2:
        raise PreconditionError("penalty must take at least two distinct values")
    lam = as_fraction(lam)
    return f.with_values(a - lam * b for a, b in zip(f.values, g.values))


@dataclass
class StructureReport:
    locality: Comparison | None = None
    crossover_locality: Comparison | None = None
    steepness: Comparison | None = None
    fdc: float | None = None
    local_optima: int | None = None
    modularity: Fraction | None = None
    notes: list[str] = field(default_factory=list)

    def verdicts(self) -> dict[str, bool]:
        out = {}
        if self.locality is not None:
            out["locality"] = self.locality.holds
        if self.crossover_locality is not None:
            out["crossover_locality"] = self.crossover_locality.holds
        if self.steepness is not None:
            out["no_maximal_steepness"] = self.steepness.holds
        if self.local_optima is not None:
            out["unimodal"] = self.local_optima == 1
        return out


def structure_report(space: SearchSpace, f: ValueTable, cx: CrossoverOperator | None = None) -> StructureReport:
    """Compute every metric the space supports; skipped ones are noted."""
    rep = StructureReport()
    if space.neighborhood is not None:
        rep.locality = locality(space, f)
        rep.steepness = steepness(space, f)
        rep.local_optima = count_local_optima(space, f)
    else:
        rep.notes.append("no neighborhood: locality, steepness, local optima skipped")
    if cx is not None:
        rep.crossover_locality = crossover_locality(space, f, cx)
    if space.distance is not None:
        try:
            rep.fdc = fdc(space, f)
        except MetricError as exc:
            rep.notes.append(f"fdc skipped: {exc}")
    if space.encoding is not None and space.encoding.kind == "bits":
        rep.modularity = modularity_score(space, f)
        rep.notes.append("modularity (simplified): mean per-bit monotonicity of toggle effects")
    return rep


def set_verdicts(fs: FunctionSet, metric: Callable[[SearchSpace, ValueTable], Comparison]) -> list[bool]:
    """Per-member verdicts of one comparison metric across a set."""
    return [metric(fs.space, f).holds for f in fs]
