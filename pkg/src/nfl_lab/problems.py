"""Problem definitions: named generators and the JSON file format."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from .core import Encoding, Orientation, SearchSpace, ValueTable, as_fraction
from .counterexamples import Max2SatInstance, TspInstance, all_tours, max2sat_table, tour_length, two_opt_neighbors
from .errors import NFLError, ProblemError

GENERATORS = ("onemax", "zeromax", "parity", "max2sat", "tsp")
NEIGHBORHOODS = ("bit-flip", "2-opt", "none")


def onemax(n: int, orientation: Orientation | str = Orientation.MAXIMIZE) -> ValueTable:
    """f(x) = number of ones."""
    return ValueTable.of([bin(i).count("1") for i in range(1 << n)], orientation)


def zeromax(n: int) -> ValueTable:
    return ValueTable.of([n - bin(i).count("1") for i in range(1 << n)])


def parity(n: int) -> ValueTable:
    return ValueTable.of([bin(i).count("1") % 2 for i in range(1 << n)])


def tsp_space(cities: int) -> tuple[SearchSpace, list[tuple[int, ...]]]:
    """Canonical undirected tours as points, linked by 2-opt moves."""
    tours = all_tours(cities)
    index = {t: k for k, t in enumerate(tours)}
    nbrs = tuple(tuple(sorted(index[u] for u in two_opt_neighbors(t))) for t in tours)
    return SearchSpace(len(tours), Encoding("perm", cities), nbrs), tours


@dataclass
class ProblemDefinition:
    space: SearchSpace
    table: ValueTable
    source: str
    labels: list[str] = field(default_factory=list)  # human-readable point names, when meaningful


def _require(doc: dict, key: str, kind: type, where: str) -> Any:
    if key not in doc:
        raise ProblemError(f"{where}.{key}", "missing")
    val = doc[key]
    if kind is int and (isinstance(val, bool) or not isinstance(val, int)):
        raise ProblemError(f"{where}.{key}", f"expected integer, got {val!r}")
    if kind is not int and not isinstance(val, kind):
        raise ProblemError(f"{where}.{key}", f"expected {kind.__name__}, got {type(val).__name__}")
    return val


def _values(raw: list, where: str) -> list:
    out = []
    for i, v in enumerate(raw):
        if isinstance(v, (bool, float)) or not isinstance(v, (int, str)):
            raise ProblemError(f"{where}[{i}]", f"value must be an integer or a 'p/q' string, got {v!r}")
        try:
            out.append(as_fraction(v))
        except (ValueError, ZeroDivisionError):
            raise ProblemError(f"{where}[{i}]", f"not a rational: {v!r}") from None
    return out


def _space_from(doc: dict) -> SearchSpace | None:
    spec = doc.get("space")
    if spec is None:
        if "bits" in doc:
            return SearchSpace.bitstrings(_require(doc, "bits", int, "$"))
        return None
    if isinstance(spec, int) and not isinstance(spec, bool):
        return SearchSpace(spec)
    if not isinstance(spec, dict):
        raise ProblemError("$.space", "expected an object or an integer size")
    if "bits" in spec:
        return SearchSpace.bitstrings(_require(spec, "bits", int, "$.space"))
    if "cities" in spec:
        return tsp_space(_require(spec, "cities", int, "$.space"))[0]
    if "size" in spec:
        return SearchSpace(_require(spec, "size", int, "$.space"))
    raise ProblemError("$.space", "needs one of size, bits, cities")


def _with_neighborhood(space: SearchSpace, doc: dict) -> SearchSpace:
    sel = doc.get("neighborhood")
    if sel is None:
        return space
    if isinstance(sel, dict):
        edges = _require(sel, "edges", list, "$.neighborhood")
        try:
            pairs = [(int(a), int(b)) for a, b in edges]
            built = SearchSpace.from_edges(space.size, pairs)
        except (TypeError, ValueError) as exc:
            raise ProblemError("$.neighborhood.edges", f"expected [[a, b], ...]: {exc}") from None
        except NFLError as exc:
            raise ProblemError("$.neighborhood.edges", str(exc)) from None
        return SearchSpace(space.size, space.encoding, built.neighborhood, space.distance)
    if sel == "none":
        return SearchSpace(space.size, space.encoding, None, space.distance)
    if sel == "bit-flip":
        if space.encoding is None or space.encoding.kind != "bits":
            raise ProblemError("$.neighborhood", "bit-flip needs a bitstring space")
        return space
    if sel == "2-opt":
        if space.encoding is None or space.encoding.kind != "perm":
            raise ProblemError("$.neighborhood", "2-opt needs a tour space")
        return space
    raise ProblemError("$.neighborhood", f"unknown selector {sel!r}; use one of {NEIGHBORHOODS} or {{'edges': ...}}")


def problem_from_dict(doc: Any) -> ProblemDefinition:
    if not isinstance(doc, dict):
        raise ProblemError("$", "problem definition must be a JSON object")
    orientation = doc.get("orientation")
    if orientation is not None and orientation not in ("max", "min"):
        raise ProblemError("$.orientation", "must be 'max' or 'min'")

    gen = doc.get("generator")
    labels: list[str] = []
    if gen is None:
        raw = _require(doc, "values", list, "$")
        space = _space_from(doc) or SearchSpace(len(raw))
        values = _values(raw, "$.values")
        if len(values) != space.size:
            raise ProblemError("$.values", f"has {len(values)} entries but the space has {space.size} points")
        table = ValueTable.of(values, orientation or "max")
        source = "inline"
    elif gen in ("onemax", "zeromax", "parity"):
        n = _require(doc, "bits", int, "$")
        space = SearchSpace.bitstrings(n)
        table = {"onemax": onemax, "zeromax": zeromax, "parity": parity}[gen](n)
        table = ValueTable(table.values, Orientation(orientation or "max"))
        source = gen
    elif gen == "max2sat":
        n = _require(doc, "bits", int, "$")
        clauses = _require(doc, "clauses", list, "$")
        try:
            inst = Max2SatInstance.from_dimacs(n, clauses)
        except (NFLError, TypeError) as exc:
            raise ProblemError("$.clauses", str(exc)) from None
        space = SearchSpace.bitstrings(n)
        table = ValueTable(max2sat_table(inst).values, Orientation(orientation or "max"))
        source = f"max2sat {inst}"
    elif gen == "tsp":
        matrix = _require(doc, "matrix", list, "$")
        try:
            inst = TspInstance(tuple(tuple(_values(row, f"$.matrix[{i}]")) for i, row in enumerate(matrix)))
        except NFLError as exc:
            raise ProblemError("$.matrix", str(exc)) from None
        space, tours = tsp_space(inst.cities)
        table = ValueTable.of([tour_length(inst, t) for t in tours], orientation or "min")
        labels = ["".join(str(c + 1) for c in t) for t in tours]
        source = "tsp"
    else:
        raise ProblemError("$.generator", f"unknown generator {gen!r}; use one of {GENERATORS}")

    space = _with_neighborhood(space, doc)
    return ProblemDefinition(space, table, source, labels)


def load_problem(path: str | Path) -> ProblemDefinition:
    text = Path(path).read_text()
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ProblemError(f"line {exc.lineno} column {exc.colno}", exc.msg) from None
    return problem_from_dict(doc)
