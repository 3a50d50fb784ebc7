"""Exhaustive checks of the NFL family of identities.

Every average is an exact :class:`~fractions.Fraction`; "equal" always means
exact equality.
"""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Iterable, Mapping, Sequence

from .algorithms import SeedFamily
from .core import (
    Measure,
    Number,
    PolicyTree,
    SearchSpace,
    ValueTable,
    apply_measure,
    as_fraction,
    run_policy,
)
from .enumeration import (
    DEFAULT_CAP,
    FunctionSet,
    cup_class,
    cup_signature,
    enumerate_functions,
    enumerate_policies,
    is_cup,
    multinomial,
)
from .errors import DistributionError, NFLError, PreconditionError


@dataclass(frozen=True)
class ProblemDistribution:
    """A probability distribution over functions on one space."""

    space: SearchSpace
    weights: tuple[tuple[ValueTable, Fraction], ...]

    def __post_init__(self) -> None:
        merged: dict[tuple[Fraction, ...], tuple[ValueTable, Fraction]] = {}
        for f, w in self.weights:
            f.check_space(self.space)
            w = as_fraction(w)
            if w < 0:
                raise DistributionError(f"negative weight {w}")
            prev = merged.get(f.values)
            merged[f.values] = (f, w + (prev[1] if prev else 0))
        total = sum((w for _, w in merged.values()), Fraction(0))
        if total != 1:
            raise DistributionError(f"weights sum to {total}, not 1")
        object.__setattr__(self, "weights", tuple(merged[k] for k in sorted(merged)))

    @classmethod
    def uniform(cls, fs: FunctionSet) -> ProblemDistribution:
        w = Fraction(1, len(fs))
        return cls(fs.space, tuple((f, w) for f in fs))

    @classmethod
    def of(cls, space: SearchSpace, weights: Mapping[tuple, Number] | Iterable[tuple[Any, Number]]) -> ProblemDistribution:
        items = weights.items() if isinstance(weights, Mapping) else weights
        return cls(space, tuple((f if isinstance(f, ValueTable) else ValueTable.of(f), as_fraction(w))
                                for f, w in items))

    def support(self) -> FunctionSet:
        return FunctionSet(self.space, tuple(f for f, w in self.weights if w > 0))

    def weight(self, f: ValueTable) -> Fraction:
        for g, w in self.weights:
            if g.values == f.values:
                return w
        return Fraction(0)


@dataclass(frozen=True)
class PolicyPairWitness:
    policy_a: int
    policy_b: int
    average_a: Fraction
    average_b: Fraction


@dataclass(frozen=True)
class VerificationReport:
    claim: str
    averages: tuple[Fraction, ...]
    verdict: str  # "verified" | "refuted"
    witness: PolicyPairWitness | None = None
    details: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if (self.verdict == "refuted") != (self.witness is not None):
            raise NFLError("a refuted report must carry a witness and a verified one must not")

    @property
    def verified(self) -> bool:
        return self.verdict == "verified"

    @property
    def common_average(self) -> Fraction | None:
        return self.averages[0] if self.verified and self.averages else None


Source = FunctionSet | ProblemDistribution


def _weighted(source: Source) -> tuple[SearchSpace, list[tuple[ValueTable, Fraction]]]:
    if isinstance(source, ProblemDistribution):
        return source.space, [(f, w) for f, w in source.weights if w > 0]
    if not len(source):
        raise NFLError("cannot average over an empty function set")
    w = Fraction(1, len(source))
    return source.space, [(f, w) for f in source]


def performance(entity: PolicyTree | SeedFamily, space: SearchSpace, f: ValueTable, measure: Measure) -> Fraction:
    """Measure of one policy on one function; seed families average over seeds."""
    if isinstance(entity, PolicyTree):
        m = min(measure.horizon, space.size)
        return apply_measure(measure, run_policy(space, f, entity, m), f.orientation)
    return entity.average(space, f, measure)


def average_performance(source: Source, policy: PolicyTree | SeedFamily, measure: Measure) -> Fraction:
    space, items = _weighted(source)
    return sum((w * performance(policy, space, f, measure) for f, w in items), Fraction(0))


def _averages(source: Source, policies: Sequence[PolicyTree], measure: Measure, workers: int) -> list[Fraction]:
    job: Callable[[PolicyTree], Fraction] = lambda p: average_performance(source, p, measure)
    if workers > 1:
        with ThreadPoolExecutor(workers) as pool:
            return list(pool.map(job, policies))
    return [job(p) for p in policies]


def _report(claim: str, averages: list[Fraction], details: dict[str, Any]) -> VerificationReport:
    for i, a in enumerate(averages):
        if a != averages[0]:
            w = PolicyPairWitness(0, i, averages[0], a)
            return VerificationReport(claim, tuple(averages), "refuted", w, details)
    return VerificationReport(claim, tuple(averages), "verified", None, details)


def verify_nfl(space: SearchSpace, codomain: Iterable[Number], measure: Measure,
               cap: int = DEFAULT_CAP, workers: int = 1) -> VerificationReport:
    cod = sorted({as_fraction(v) for v in codomain})
    fs = enumerate_functions(space, cod, cap=cap)
    policies = enumerate_policies(space, cod, cap=cap)
    details = {"functions": len(fs), "policies": len(policies), "measure": str(measure)}
    return _report("nfl", _averages(fs, policies, measure, workers), details)


def verify_snfl(cup: FunctionSet, measure: Measure, cap: int = DEFAULT_CAP, workers: int = 1) -> VerificationReport:
    check = is_cup(cup)
    if not check:
        raise PreconditionError("function set is not closed under permutation", check.witness)
    policies = enumerate_policies(cup.space, cup.codomain(), cap=cap)
    details = {"functions": len(cup), "policies": len(policies), "measure": str(measure)}
    return _report("snfl", _averages(cup, policies, measure, workers), details)


def is_block_uniform(dist: ProblemDistribution) -> bool:
    """Equal weight on every member of each CUP class meeting the support."""
    seen = set()
    for f, w in dist.weights:
        if w == 0:
            continue
        sig = cup_signature(f)
        if sig in seen:
            continue
        seen.add(sig)
        members = [g for g, gw in dist.weights if gw > 0 and cup_signature(g) == sig]
        if len(members) != multinomial(sig):
            return False
        if any(dist.weight(g) != w for g in members):
            return False
    return True


def verify_nunfl(dist: ProblemDistribution, measure: Measure, cap: int = DEFAULT_CAP,
                 workers: int = 1) -> VerificationReport:
    """Check block-uniformity, then compare every policy's weighted average.

    For a non-block-uniform distribution a differing policy pair is reported
    as a refutation of equal performance, i.e. evidence for the "only if"
    direction on this instance.
    """
    uniform = is_block_uniform(dist)
    policies = enumerate_policies(dist.space, dist.support().codomain(), cap=cap)
    details = {"block_uniform": uniform, "policies": len(policies), "measure": str(measure)}
    return _report("nunfl", _averages(dist, policies, measure, workers), details)


@dataclass(frozen=True)
class TraceMultisetReport:
    equal: bool
    multisets: tuple[Counter, ...]


def trace_multiset_equal(cup: FunctionSet, policies: Sequence[PolicyTree]) -> TraceMultisetReport:
    check = is_cup(cup)
    if not check:
        raise PreconditionError("function set is not closed under permutation", check.witness)
    space = cup.space
    multisets = tuple(
        Counter(run_policy(space, f, p, space.size).values for f in cup) for p in policies
    )
    return TraceMultisetReport(all(ms == multisets[0] for ms in multisets), multisets)


def focus_pair(a1: PolicyTree, a2: PolicyTree, f1: ValueTable, m: int | None = None) -> ValueTable:
    """Build f2 so that running ``a2`` on it reproduces ``a1``'s trace on ``f1``.

    ``a2`` is walked while feeding it the values of that trace in order; each
    point it visits is assigned the next value. With a truncated budget the
    points ``a2`` never reaches receive the unused values of ``f1`` in
    ascending order.
    """
    space = SearchSpace(len(f1))
    m = space.size if m is None else m
    target = run_policy(space, f1, a1, m).values
    assigned: dict[int, Fraction] = {}
    node: PolicyTree | None = a2
    for v in target:
        if node is None:
            raise NFLError("second policy ends before the trace does")
        assigned[node.point] = v
        node = node.child_for(v) if node.children else None
    leftover = Counter(f1.values)
    leftover.subtract(target)
    rest = iter(sorted(leftover.elements()))
    values = [assigned[x] if x in assigned else next(rest) for x in range(space.size)]
    return f1.with_values(values)


@dataclass(frozen=True)
class GapReport:
    average_a: Fraction
    average_b: Fraction

    @property
    def difference(self) -> Fraction:
        return self.average_a - self.average_b

    @property
    def has_gap(self) -> bool:
        return self.difference != 0


def demonstrate_gap(fs: FunctionSet, policy_a: PolicyTree | SeedFamily, policy_b: PolicyTree | SeedFamily,
                    measure: Measure) -> GapReport:
    """Average two algorithms over a non-CUP set; a zero gap is a valid outcome."""
    if is_cup(fs):
        raise PreconditionError("function set is closed under permutation; no gap is possible")
    return GapReport(average_performance(fs, policy_a, measure), average_performance(fs, policy_b, measure))


def snfl_fixture(values: Sequence[Number]) -> FunctionSet:
    """The CUP class of the given value table on a plain space."""
    f = ValueTable.of(values)
    return cup_class(f, SearchSpace(len(f)))
