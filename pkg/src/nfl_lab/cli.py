"""Command-line front end.

Every subcommand prints one JSON report to stdout. Exit status: 0 when a
claim is verified or a question is answered, 2 when a verification is
refuted or a precondition fails (the report then carries the witness), 1 for
usage and input errors.
"""

from __future__ import annotations

import argparse
import csv
import dataclasses
import json
import os
import sys
from datetime import datetime, timezone
from fractions import Fraction
from pathlib import Path
from typing import Any, Sequence

from . import counterexamples as cx
from .algorithms import AlgorithmKind, RngKind, SeedFamily
from .core import (
    Measure,
    PolicyTree,
    SearchSpace,
    ValueTable,
    ascending_policy,
    descending_policy,
    policy_from_rule,
    run_policy,
)
from .enumeration import DEFAULT_CAP, FunctionSet, cup_class, enumerate_policies, is_cup
from .errors import NFLError, PreconditionError, ProblemError
from .metrics import CrossoverOperator, local_optima_counts, structure_report, trap_transform
from .problems import ProblemDefinition, load_problem, problem_from_dict
from .verifier import (
    ProblemDistribution,
    VerificationReport,
    average_performance,
    demonstrate_gap,
    focus_pair,
    trace_multiset_equal,
    verify_nfl,
    verify_nunfl,
    verify_snfl,
)

EXIT_OK, EXIT_USAGE, EXIT_REFUTED = 0, 1, 2


class UsageError(Exception):
    pass


def rational(q: Fraction | int) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def jsonable(obj: Any) -> Any:
    if isinstance(obj, bool) or obj is None or isinstance(obj, (str, int)):
        return obj
    if isinstance(obj, Fraction):
        return rational(obj)
    if isinstance(obj, float):
        return obj
    if isinstance(obj, ValueTable):
        return [rational(v) for v in obj.values]
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        items = sorted(obj) if isinstance(obj, (set, frozenset)) else obj
        return [jsonable(v) for v in items]
    if dataclasses.is_dataclass(obj):
        return {f.name: jsonable(getattr(obj, f.name)) for f in dataclasses.fields(obj)}
    if hasattr(obj, "value"):  # enums
        return obj.value
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def parse_values(text: str) -> list[Fraction]:
    try:
        return [Fraction(v.strip()) for v in text.split(",") if v.strip()]
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"cannot parse value list {text!r}") from None


def parse_measure(text: str) -> Measure:
    try:
        return Measure.parse(text)
    except (ValueError, NFLError):
        raise UsageError(f"bad measure {text!r}; use best:<m> or mean:<m>") from None


def _report(claim: str, verdict: str, witness: Any = None, tables: dict | None = None,
            inputs: dict | None = None) -> dict:
    return {"claim": claim, "verdict": verdict, "witness": witness, "tables": tables or {}, "input": inputs or {}}


def describe_policy(p: PolicyTree, depth: int = 2) -> dict:
    out: dict[str, Any] = {"visit": p.point}
    if depth > 1 and p.children:
        out["then"] = {rational(v): describe_policy(c, depth - 1) for v, c in zip(p.codomain, p.children)}
    return out


def verification_doc(rep: VerificationReport, policies: Sequence[PolicyTree], inputs: dict) -> dict:
    witness = None
    if rep.witness is not None:
        w = rep.witness
        witness = {
            "policy_a": w.policy_a, "policy_b": w.policy_b,
            "average_a": w.average_a, "average_b": w.average_b,
            "policy_a_tree": describe_policy(policies[w.policy_a]),
            "policy_b_tree": describe_policy(policies[w.policy_b]),
        }
    tables: dict[str, Any] = {"per_policy_average": list(rep.averages)}
    if rep.common_average is not None:
        tables["common_average"] = rep.common_average
    tables.update(rep.details)
    return _report(rep.claim, rep.verdict, witness, tables, inputs)


# ------------------------------------------------------------------ verify

def _distribution(args: argparse.Namespace) -> tuple[ProblemDistribution, dict]:
    if args.dist:
        doc = json.loads(Path(args.dist).read_text())
        size = doc["space"]
        pairs = [(item["values"], item["weight"]) for item in doc["weights"]]
    else:
        if not args.weight:
            raise UsageError("nunfl needs --dist or at least one --weight VALUES=W")
        size = args.space
        pairs = []
        for spec in args.weight:
            vals, _, w = spec.partition("=")
            if not w:
                raise UsageError(f"--weight expects VALUES=W, got {spec!r}")
            pairs.append((vals.split(","), w))
    space = SearchSpace(int(size))
    dist = ProblemDistribution.of(space, [(ValueTable.of(parse_values(",".join(map(str, v)))), Fraction(w))
                                          for v, w in pairs])
    inputs = {"space": space.size, "weights": [[f, w] for f, w in dist.weights]}
    return dist, inputs


def cmd_verify(args: argparse.Namespace) -> tuple[dict, int]:
    measure = parse_measure(args.measure)
    cap, workers = args.cap, args.threads
    if args.claim == "nfl":
        if args.space is None:
            raise UsageError("verify nfl needs --space")
        space = SearchSpace(args.space)
        cod = parse_values(args.codomain)
        rep = verify_nfl(space, cod, measure, cap, workers)
        inputs = {"command": "verify", "claim": "nfl", "space": args.space, "codomain": cod, "measure": str(measure)}
        policies = enumerate_policies(space, cod, cap) if rep.witness else []
    elif args.claim == "snfl":
        if args.values is None:
            raise UsageError("verify snfl needs --values")
        values = parse_values(args.values)
        size = args.space or len(values)
        if size != len(values):
            raise UsageError(f"--space {size} does not match {len(values)} values")
        space = SearchSpace(size)
        cup = cup_class(ValueTable.of(values), space, cap)
        rep = verify_snfl(cup, measure, cap, workers)
        inputs = {"command": "verify", "claim": "snfl", "space": size, "values": values, "measure": str(measure)}
        policies = enumerate_policies(space, cup.codomain(), cap) if rep.witness else []
    else:
        dist, inputs = _distribution(args)
        inputs.update({"command": "verify", "claim": "nunfl", "measure": str(measure)})
        rep = verify_nunfl(dist, measure, cap, workers)
        policies = enumerate_policies(dist.space, dist.support().codomain(), cap) if rep.witness else []
    doc = verification_doc(rep, policies, inputs)
    return doc, EXIT_OK if rep.verified else EXIT_REFUTED


def replay_witness(doc: dict, cap: int = DEFAULT_CAP) -> bool:
    """Recompute a refuted verification's witness pair from the report inputs."""
    inp, w = doc["input"], doc["witness"]
    measure = Measure.parse(inp["measure"])
    space = SearchSpace(int(inp["space"]))
    if inp["claim"] == "nfl":
        from .enumeration import enumerate_functions

        cod = [Fraction(v) for v in inp["codomain"]]
        source: FunctionSet | ProblemDistribution = enumerate_functions(space, cod, cap=cap)
    elif inp["claim"] == "snfl":
        source = cup_class(ValueTable.of([Fraction(v) for v in inp["values"]]), space, cap)
        cod = source.codomain()
    elif inp["claim"] == "nunfl":
        source = ProblemDistribution.of(space, [([Fraction(v) for v in f], Fraction(wt)) for f, wt in inp["weights"]])
        cod = source.support().codomain()
    else:
        raise UsageError(f"no replay for claim {inp['claim']!r}")
    policies = enumerate_policies(space, cod, cap)
    a = average_performance(source, policies[w["policy_a"]], measure)
    b = average_performance(source, policies[w["policy_b"]], measure)
    return a != b and a == Fraction(w["average_a"]) and b == Fraction(w["average_b"])


def cmd_check_witness(args: argparse.Namespace) -> tuple[dict, int]:
    try:
        doc = json.loads(Path(args.report).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read report: {exc}") from None
    if doc.get("witness") is None:
        raise UsageError("report carries no witness to check")
    ok = replay_witness(doc, args.cap)
    return _report("witness-replay", "verified" if ok else "refuted", None, {"claim_checked": doc["claim"]},
                   {"report": str(args.report)}), EXIT_OK if ok else EXIT_REFUTED


# ---------------------------------------------------------- problem input

def _problem(args: argparse.Namespace) -> ProblemDefinition:
    if getattr(args, "problem", None):
        return load_problem(args.problem)
    if getattr(args, "onemax", None) is not None:
        return problem_from_dict({"generator": "onemax", "bits": args.onemax})
    raise UsageError("give --problem FILE or --onemax N")


def _function_set(args: argparse.Namespace) -> FunctionSet:
    if args.function:
        tables = [ValueTable.of(parse_values(v)) for v in args.function]
        size = args.space or len(tables[0])
        if any(len(t) != size for t in tables):
            raise UsageError("all --function tables must have the space's length")
        return FunctionSet(SearchSpace(size), tuple(tables))
    prob = _problem(args)
    tables = [prob.table]
    if args.with_trap:
        tables.append(trap_transform(prob.table))
    return FunctionSet(prob.space, tuple(tables))


def cmd_cup_check(args: argparse.Namespace) -> tuple[dict, int]:
    fs = _function_set(args)
    check = is_cup(fs)
    witness = None if check.is_cup else {"member": check.witness[0], "missing_permutation": check.witness[1]}
    return _report("cup", "cup" if check.is_cup else "not-cup", witness, {"members": list(fs)},
                   {"size": fs.space.size}), EXIT_OK


def cmd_trace_multisets(args: argparse.Namespace) -> tuple[dict, int]:
    values = parse_values(args.values)
    space = SearchSpace(args.space or len(values))
    cup = cup_class(ValueTable.of(values), space, args.cap)
    policies = enumerate_policies(space, cup.codomain(), args.cap)
    rep = trace_multiset_equal(cup, policies)
    first = sorted(rep.multisets[0].elements())
    tables = {"policies": len(policies), "functions": len(cup), "common_multiset": first if rep.equal else None}
    witness = None
    if not rep.equal:
        bad = next(i for i, m in enumerate(rep.multisets) if m != rep.multisets[0])
        witness = {"policy_a": 0, "policy_b": bad}
    return _report("trace-multisets", "verified" if rep.equal else "refuted", witness, tables,
                   {"values": values}), EXIT_OK if rep.equal else EXIT_REFUTED


def _named_policy(name: str, size: int, codomain: Sequence[Fraction]) -> PolicyTree:
    if name == "asc":
        return ascending_policy(size, codomain)
    if name == "desc":
        return descending_policy(size, codomain)
    if name.startswith("index:"):
        k = int(name.split(":", 1)[1])
        policies = enumerate_policies(size, codomain)
        if not 0 <= k < len(policies):
            raise UsageError(f"policy index {k} out of range 0..{len(policies) - 1}")
        return policies[k]
    if name.startswith("adaptive:"):
        # start at the given point, then jump by the last value (mod remaining)
        start = int(name.split(":", 1)[1]) % size

        def choose(trace):
            if not trace:
                return start
            rest = [p for p in range(size) if p not in {q for q, _ in trace}]
            return rest[int(trace[-1][1] * len(codomain)) % len(rest)]

        return policy_from_rule(size, codomain, choose)
    raise UsageError(f"unknown policy {name!r}; use asc, desc, index:K or adaptive:S")


def cmd_focus_pair(args: argparse.Namespace) -> tuple[dict, int]:
    values = parse_values(args.values)
    f1 = ValueTable.of(values)
    cod = sorted(set(values))
    a1 = _named_policy(args.a1, len(f1), cod)
    a2 = _named_policy(args.a2, len(f1), cod)
    f2 = focus_pair(a1, a2, f1)
    space = SearchSpace(len(f1))
    t1 = run_policy(space, f1, a1, space.size).values
    t2 = run_policy(space, f2, a2, space.size).values
    ok = t1 == t2
    tables = {"f1": f1, "f2": f2, "trace_a1_f1": list(t1), "trace_a2_f2": list(t2)}
    return _report("focus-pair", "verified" if ok else "refuted", None if ok else {"traces": [t1, t2]}, tables,
                   {"a1": args.a1, "a2": args.a2}), EXIT_OK if ok else EXIT_REFUTED


def _family(name: str, space: SearchSpace, m: int) -> SeedFamily:
    kind = AlgorithmKind(name)
    if kind is AlgorithmKind.RANDOM_SEARCH:
        return SeedFamily.all_orderings(kind, space, m)
    return SeedFamily.all_starts(kind, space)


def cmd_gap(args: argparse.Namespace) -> tuple[dict, int]:
    fs = _function_set(args)
    measure = parse_measure(args.measure)
    m = min(measure.horizon, fs.space.size)
    a, b = _family(args.a, fs.space, m), _family(args.b, fs.space, m)
    rep = demonstrate_gap(fs, a, b, measure)
    tables = {"average_a": rep.average_a, "average_b": rep.average_b, "difference": rep.difference,
              "gap": rep.has_gap, "accounting": "every evaluation including neighbor probes costs one step"}
    return _report("gap", "answered", None, tables, {"a": args.a, "b": args.b, "measure": str(measure),
                                                     "functions": list(fs)}), EXIT_OK


def cmd_tournament(args: argparse.Namespace) -> tuple[dict, int]:
    prob = _problem(args)
    measure = parse_measure(args.measure)
    m = min(measure.horizon, prob.space.size)
    rows = {}
    for kind in AlgorithmKind:
        if kind is not AlgorithmKind.RANDOM_SEARCH and prob.space.neighborhood is None:
            continue
        if kind is AlgorithmKind.RANDOM_SEARCH and args.seeds:
            fam = SeedFamily(kind, tuple(range(args.seeds)), RngKind.LCG)
        else:
            fam = _family(kind.value, prob.space, m)
        rows[kind.value] = fam.average(prob.space, prob.table, measure)
    return _report("tournament", "answered", None, {"seed_average": rows},
                   {"source": prob.source, "measure": str(measure)}), EXIT_OK


def cmd_metrics(args: argparse.Namespace) -> tuple[dict, int]:
    prob = _problem(args)
    op = None
    if prob.space.encoding is not None and prob.space.encoding.kind == "bits":
        op = CrossoverOperator.uniform_mask(prob.space.encoding.length)
    rep = structure_report(prob.space, prob.table, op)
    tables: dict[str, Any] = {
        "locality": list(rep.locality) if rep.locality else None,
        "crossover_locality": list(rep.crossover_locality) if rep.crossover_locality else None,
        "steepness": list(rep.steepness) if rep.steepness else None,
        "fdc": rep.fdc,
        "local_optima": rep.local_optima,
        "modularity_simplified": rep.modularity,
        "verdicts": rep.verdicts(),
        "notes": rep.notes,
    }
    if args.with_trap:
        fs = FunctionSet(prob.space, (prob.table, trap_transform(prob.table)))
        tables["set_local_optima_counts"] = local_optima_counts(fs)
    return _report("metrics", "answered", None, tables, {"source": prob.source}), EXIT_OK


# ---------------------------------------------------------- counterexamples

def ce_max2sat() -> dict:
    inst = cx.Max2SatInstance.from_dimacs(3, [[1, 2]])
    table = cx.max2sat_table(inst)
    permuted = [0, 1, 1, 0, 1, 1, 1, 1]
    forward = cx.max2sat_realizable(table, 3)
    back = cx.max2sat_realizable(permuted, 3)
    steep4 = cx.max2sat_table(cx.Max2SatInstance.from_dimacs(4, [[1, 2], [1, 3], [1, 4]]))
    return {
        "formula": str(inst),
        "table": table,
        "table_realized_by": str(forward.instance),
        "permuted_table": [Fraction(v) for v in permuted],
        "permuted_realizable": back.realizable,
        "certificate": back.certificate,
        "four_variable_min_max": [min(steep4.values), max(steep4.values)],
        "four_variable_neighbors_0000_1000": [steep4[0], steep4[8]],
    }


def ce_tsp() -> dict:
    inst = cx.TspInstance(cx.HEXAGON_MATRIX)
    lengths = {t: tour_len for t, tour_len in
               ((t, cx.tour_length(inst, cx.parse_tour(t))) for t in ("123456", "142536", "123465"))}
    best, worst = cx.parse_tour("123456"), cx.parse_tour("142536")
    cons = cx.swapped_optimum_constraints(inst, best, worst)
    plain = cx.tsp_realizable(cons, 6)
    nonneg = cx.tsp_realizable(cons, 6, nonnegative=True)
    return {
        "tour_lengths": lengths,
        "constraints": [[cx.format_tour(t), v] for t, v in cons],
        "equations_consistent": plain.realizable,
        "equation_solution": [list(r) for r in plain.matrix.costs] if plain.matrix else None,
        "inconsistency_certificate": plain.inconsistency,
        "nonnegative_realizable": nonneg.realizable,
        "nonnegative_farkas_certificate": nonneg.farkas,
        "note": "the plain equations admit solutions with negative costs; "
                "no matrix with nonnegative costs satisfies them",
    }


def ce_boolgp() -> dict:
    progs = list(cx.EXAMPLE_PROGRAMS.values())
    t = (0, 0, 0, 1)
    values = cx.boolgp_objective(progs, t)
    ok = cx.boolgp_realizable(progs, values)
    bad = cx.boolgp_realizable(progs, [4, 1, 2])
    return {
        "programs": dict(zip(cx.EXAMPLE_PROGRAMS, progs)),
        "target": list(t),
        "objective": [Fraction(v) for v in values],
        "realizing_target": ok.target,
        "permuted_objective": [Fraction(v) for v in (4, 1, 2)],
        "permuted_realizable": bad.realizable,
        "candidates_checked": bad.candidates,
    }


def ce_symreg() -> dict:
    centers = [(0, 0), (4, 0), (0, 2)]
    target = (1, 1)
    radii = [sum((Fraction(a) - b) ** 2 for a, b in zip(c, target)) for c in centers]
    swapped = [radii[1], radii[0], radii[2]]
    genuine = cx.spheres_intersect(centers, radii)
    permuted = cx.spheres_intersect(centers, swapped)
    dup = cx.duplicated_semantics_check([[0, 1]], [5, 7, 3])
    return {
        "centers": centers,
        "squared_radii": radii,
        "genuine": genuine,
        "swapped_squared_radii": swapped,
        "swapped": permuted,
        "duplicate_semantics_points": ["(* x 2)", "(+ x x)", "x"],
        "duplicate_semantics_values": [Fraction(v) for v in (5, 7, 3)],
        "duplicate_semantics_consistent": dup.consistent,
    }


def cmd_counterexample(args: argparse.Namespace) -> tuple[dict, int]:
    fn = {"max2sat": ce_max2sat, "tsp": ce_tsp, "boolgp": ce_boolgp, "symreg": ce_symreg}[args.family]
    return _report(f"counterexample-{args.family}", "answered", None, fn(), {}), EXIT_OK


# ---------------------------------------------------------------- plumbing

def write_csv(doc: dict, path: str) -> None:
    tables = doc.get("tables", {})
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        if "per_policy_average" in tables:
            w.writerow(["policy", "average"])
            for i, v in enumerate(tables["per_policy_average"]):
                w.writerow([i, v])
            return
        w.writerow(["key", "value"])
        for k in sorted(tables):
            v = tables[k]
            w.writerow([k, v if isinstance(v, (str, int, float)) or v is None else json.dumps(v, sort_keys=True)])


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="also write a CSV export here")
    common.add_argument("--threads", type=int, default=int(os.environ.get("NFL_THREADS", "1")),
                        help="worker threads (default: $NFL_THREADS or 1); output does not depend on it")
    common.add_argument("--cap", type=int, default=DEFAULT_CAP, help="enumeration cap")
    common.add_argument("--timestamps", action="store_true", help="add a generation timestamp to the report")

    p = argparse.ArgumentParser(prog="nfl-lab", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", parents=[common], help="exhaustively verify NFL, SNFL or NUNFL")
    v.add_argument("claim", choices=["nfl", "snfl", "nunfl"])
    v.add_argument("--space", type=int)
    v.add_argument("--codomain", default="0,1")
    v.add_argument("--values", help="a value table whose CUP class is checked (snfl)")
    v.add_argument("--weight", action="append", help="VALUES=W, repeatable (nunfl)")
    v.add_argument("--dist", help="JSON distribution file (nunfl)")
    v.add_argument("--measure", default="best:1")
    v.set_defaults(func=cmd_verify)

    def add_fset(sp: argparse.ArgumentParser) -> None:
        sp.add_argument("--function", action="append", help="comma-separated value table, repeatable")
        sp.add_argument("--space", type=int)
        sp.add_argument("--problem", help="problem definition JSON")
        sp.add_argument("--onemax", type=int, help="use Onemax on N bits")
        sp.add_argument("--with-trap", action="store_true", help="add the trap transform of the problem")

    c = sub.add_parser("cup-check", parents=[common], help="is a function set closed under permutation?")
    add_fset(c)
    c.set_defaults(func=cmd_cup_check)

    t = sub.add_parser("trace-multisets", parents=[common], help="compare full-trace multisets over a CUP class")
    t.add_argument("--values", required=True)
    t.add_argument("--space", type=int)
    t.set_defaults(func=cmd_trace_multisets)

    fp = sub.add_parser("focus-pair", parents=[common], help="build f2 replaying a1's trace on f1 under a2")
    fp.add_argument("--values", required=True)
    fp.add_argument("--a1", default="asc")
    fp.add_argument("--a2", default="desc")
    fp.set_defaults(func=cmd_focus_pair)

    g = sub.add_parser("gap", parents=[common], help="compare two algorithms on a non-CUP set")
    add_fset(g)
    g.add_argument("--a", default="best-first", choices=[k.value for k in AlgorithmKind])
    g.add_argument("--b", default="random-search", choices=[k.value for k in AlgorithmKind])
    g.add_argument("--measure", default="best:4")
    g.set_defaults(func=cmd_gap)

    mt = sub.add_parser("metrics", parents=[common], help="landscape structure report")
    mt.add_argument("--problem")
    mt.add_argument("--onemax", type=int)
    mt.add_argument("--with-trap", action="store_true")
    mt.set_defaults(func=cmd_metrics)

    ce = sub.add_parser("counterexample", parents=[common], help="reproduce a non-CUP counter-example")
    ce.add_argument("family", choices=["max2sat", "tsp", "boolgp", "symreg"])
    ce.set_defaults(func=cmd_counterexample)

    tn = sub.add_parser("tournament", parents=[common], help="seed-averaged performance of every algorithm")
    tn.add_argument("--problem")
    tn.add_argument("--onemax", type=int)
    tn.add_argument("--measure", default="best:4")
    tn.add_argument("--seeds", type=int, default=0, help="use LCG seeds 0..N-1 for random search")
    tn.set_defaults(func=cmd_tournament)

    cw = sub.add_parser("check-witness", parents=[common], help="replay the witness of a refuted report")
    cw.add_argument("report")
    cw.set_defaults(func=cmd_check_witness)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    argv = list(sys.argv[1:] if argv is None else argv)
    if argv and argv[0] == "--check-witness":  # flag spelling of the replay subcommand
        argv[0] = "check-witness"
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        doc, code = args.func(args)
    except (UsageError, ProblemError, OSError, json.JSONDecodeError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except PreconditionError as exc:
        doc = _report(args.command, "precondition-failed", jsonable_witness(exc.witness), {"error": str(exc)})
        code = EXIT_REFUTED
    except NFLError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.timestamps:
        doc["generated_at"] = datetime.now(timezone.utc).isoformat()
    doc = jsonable(doc)
    print(json.dumps(doc, indent=2, sort_keys=True))
    if args.out:
        write_csv(doc, args.out)
    return code


def jsonable_witness(w: Any) -> Any:
    if isinstance(w, tuple) and len(w) == 2 and all(isinstance(x, ValueTable) for x in w):
        return {"member": w[0], "missing_permutation": w[1]}
    return w


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
