"""Exhaustive generation of functions, CUP classes and policies on small spaces."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import factorial, prod
from typing import Iterable, Iterator, Sequence

from .core import CupSignature, Number, Orientation, PolicyTree, SearchSpace, ValueTable, as_fraction
from .errors import EnumerationTooLargeError, NFLError

DEFAULT_CAP = 10**6


@dataclass(frozen=True)
class FunctionSet:
    """Functions on one space, deduplicated and sorted by value sequence."""

    space: SearchSpace
    members: tuple[ValueTable, ...]

    def __post_init__(self) -> None:
        seen: dict[tuple[Fraction, ...], ValueTable] = {}
        for f in self.members:
            f.check_space(self.space)
            seen.setdefault(f.values, f)
        object.__setattr__(self, "members", tuple(seen[k] for k in sorted(seen)))

    @classmethod
    def of(cls, space: SearchSpace, tables: Iterable[ValueTable | Sequence[Number]]) -> FunctionSet:
        return cls(space, tuple(t if isinstance(t, ValueTable) else ValueTable.of(t) for t in tables))

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[ValueTable]:
        return iter(self.members)

    def __contains__(self, f: object) -> bool:
        values = f.values if isinstance(f, ValueTable) else tuple(f)  # type: ignore[arg-type]
        return values in self._index

    @property
    def _index(self) -> frozenset[tuple[Fraction, ...]]:
        idx = self.__dict__.get("_idx")
        if idx is None:
            idx = frozenset(f.values for f in self.members)
            object.__setattr__(self, "_idx", idx)
        return idx

    def codomain(self) -> tuple[Fraction, ...]:
        return tuple(sorted({v for f in self.members for v in f.values}))


def _check_cap(what: str, count: int, cap: int) -> None:
    if count > cap:
        raise EnumerationTooLargeError(what, count, cap)


def enumerate_functions(space: SearchSpace, codomain: Iterable[Number],
                        orientation: Orientation | str = Orientation.MAXIMIZE,
                        cap: int = DEFAULT_CAP) -> FunctionSet:
    cod = sorted({as_fraction(v) for v in codomain})
    _check_cap("functions", len(cod) ** space.size, cap)
    tables = (ValueTable(values, Orientation(orientation)) for values in product(cod, repeat=space.size))
    return FunctionSet(space, tuple(tables))


def cup_signature(f: ValueTable) -> CupSignature:
    return tuple(sorted(f.values))


def multinomial(signature: Sequence[Fraction]) -> int:
    """Number of distinct arrangements of a multiset."""
    return factorial(len(signature)) // prod(factorial(c) for c in Counter(signature).values())


def distinct_permutations(items: Sequence[Fraction]) -> Iterator[tuple[Fraction, ...]]:
    """Distinct orderings of a multiset in lexicographic order."""
    a = sorted(items)
    n = len(a)
    while True:
        yield tuple(a)
        i = n - 2
        while i >= 0 and a[i] >= a[i + 1]:
            i -= 1
        if i < 0:
            return
        j = n - 1
        while a[j] <= a[i]:
            j -= 1
        a[i], a[j] = a[j], a[i]
        a[i + 1:] = reversed(a[i + 1:])


def cup_class(f: ValueTable, space: SearchSpace | None = None, cap: int = DEFAULT_CAP) -> FunctionSet:
    space = space or SearchSpace(len(f))
    sig = cup_signature(f)
    _check_cap("functions in CUP class", multinomial(sig), cap)
    return FunctionSet(space, tuple(f.with_values(p) for p in distinct_permutations(sig)))


def partition_cup(fs: FunctionSet) -> list[FunctionSet]:
    groups: dict[CupSignature, list[ValueTable]] = {}
    for f in fs:
        groups.setdefault(cup_signature(f), []).append(f)
    return [FunctionSet(fs.space, tuple(groups[sig])) for sig in sorted(groups)]


@dataclass(frozen=True)
class CupCheck:
    is_cup: bool
    witness: tuple[ValueTable, ValueTable] | None = None  # (member, permuted table not in set)

    def __bool__(self) -> bool:
        return self.is_cup


def _swap(values: tuple[Fraction, ...], i: int, j: int) -> tuple[Fraction, ...]:
    v = list(values)
    v[i], v[j] = v[j], v[i]
    return tuple(v)


def _transpositions(f: ValueTable) -> Iterator[tuple[int, int]]:
    # optimum <-> pessimum first: the most informative witness for structured functions
    vals = f.values
    hi = vals.index(max(vals))
    lo = vals.index(min(vals))
    if hi != lo:
        yield (min(hi, lo), max(hi, lo))
    n = len(vals)
    for i in range(n):
        for j in range(i + 1, n):
            if vals[i] != vals[j]:
                yield (i, j)


def is_cup(fs: FunctionSet) -> CupCheck:
    """Decide closure under permutation by signature completeness.

    The set is CUP iff every signature it touches is present with all of its
    arrangements. When it is not, a single transposition of some member
    lands outside the set (transpositions generate every permutation), and
    that pair is returned as the witness.
    """
    complete = all(len(part) == multinomial(cup_signature(part.members[0])) for part in partition_cup(fs))
    if complete:
        return CupCheck(True)
    for f in fs:
        for i, j in _transpositions(f):
            g = _swap(f.values, i, j)
            if g not in fs:
                return CupCheck(False, (f, f.with_values(g)))
    raise AssertionError("incomplete signature class without a transposition witness")


def policy_count(size: int, k: int) -> int:
    """C(s) = s * C(s-1)**k with C(0) = C(1) = 1."""
    c = 1
    for s in range(2, size + 1):
        c = s * c**k
    return c


def enumerate_policies(space: SearchSpace | int, codomain: Iterable[Number],
                       cap: int = DEFAULT_CAP) -> list[PolicyTree]:
    """Every exhaustive deterministic non-repeating policy, each exactly once.

    Subtrees over the same set of remaining points are shared between
    policies, so memory grows with the number of roots rather than nodes.
    """
    size = space if isinstance(space, int) else space.size
    cod = tuple(sorted({as_fraction(v) for v in codomain}))
    if not cod:
        raise NFLError("codomain must be nonempty")
    _check_cap("policies", policy_count(size, len(cod)), cap)

    @lru_cache(maxsize=None)
    def over(remaining: frozenset[int]) -> tuple[PolicyTree, ...]:
        if len(remaining) == 1:
            (p,) = remaining
            return (PolicyTree(p, cod),)
        out = []
        for p in sorted(remaining):
            subs = over(remaining - {p})
            out.extend(PolicyTree(p, cod, combo) for combo in product(subs, repeat=len(cod)))
        return tuple(out)

    return list(over(frozenset(range(size))))
