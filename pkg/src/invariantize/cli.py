"""Command-line entry point emitting JSON run reports with stable exit codes.

Every subcommand writes one ``RunReport`` as UTF-8 JSON (to stdout or
``--output``) and returns 0 on success, 1 when a precondition fails, 2 on
unparseable input, 3 when a configured cap is exceeded and 4 when an internal
re-verification fails.  Reports embed SHA-256 digests of every input consumed,
so identical inputs and ``--seed`` reproduce identical reports; ``--verify``
re-runs the whole command and checks exactly that.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from dataclasses import asdict, dataclass
from fractions import Fraction
from pathlib import Path
from typing import Any, Callable, Sequence

from .engine import DEFAULT_ORBIT_CAP, EngineTrace
from .errors import (
    ArityMismatch,
    CapExceeded,
    DuplicatePoints,
    InvariantViolation,
    NotAGroup,
    NotNormal,
    ParseError,
    PreconditionViolated,
)
from .graphs.automorphisms import automorphism_group, is_automorphism
from .graphs.embed import Embedding
from .graphs.families import complete_graph, ring_rotation, subdivided_k5_ring, triangle
from .graphs.invariant import (
    DEFAULT_SIZE_CAP,
    ForbiddenFamily,
    ForbidReport,
    family_predicate,
    forbid_invariant,
    invariant_under_group,
    local_embed_invariant,
    planarize_invariant,
)
from .graphs.model import Graph, graph_from_json, graph_to_json
from .graphs.planarity import planarity_test
from .groups.automorphisms import DEFAULT_ORDER_CAP
from .groups.classes import ClassTester
from .groups.invariant import (
    DEFAULT_GROUP_ENUM_CAP,
    NormalSubgroupLattice,
    dual_size_codim,
    law_invariant_run,
    series_predicate,
    spectrum_of_quotient,
    spectrum_predicate,
    spectrum_run,
)
from .groups.library import dihedral, symmetric
from .groups.model import FiniteGroup, index, load_group, normal_subgroups
from .groups.words import parse_ocw
from .lattice import CofiniteLattice, SubsetLattice, dualize
from .numerics import iterate_bound
from .oracle import LawReport, check_lattice, check_monotone, check_multilinear
from .predicates import even_size_predicate, small_first_predicate
from .sets.invariant import sphere_invariant_run, sphere_predicate, team_invariant_run, team_predicate
from .sets.points import PointSet, load_points
from .sets.teams import Relation, load_relation

EXIT_OK = 0
EXIT_PRECONDITION = 1
EXIT_PARSE = 2
EXIT_CAP = 3
EXIT_INVARIANT = 4

_STATUS = {
    EXIT_OK: "ok",
    EXIT_PRECONDITION: "precondition-violated",
    EXIT_PARSE: "parse-error",
    EXIT_CAP: "cap-exceeded",
    EXIT_INVARIANT: "invariant-violation",
}


@dataclass(frozen=True)
class RunReport:
    """One run's JSON-ready record: what ran, on what, and what held."""

    command: str
    inputs: dict[str, Any]
    result: dict[str, Any]
    codim: dict[str, str]
    bound: dict[str, Any]
    clauses: dict[str, Any]
    trace: dict[str, Any]
    status: str
    exit_code: int
    error: dict[str, Any] | None = None

    def to_json(self) -> str:
        return json.dumps(asdict(self), indent=2) + "\n"


def _plain(value: Any) -> Any:
    """Recursively convert to JSON-serializable plain data."""
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, Embedding):
        return {
            "vertex_map": {str(k): v for k, v in sorted(value.vertex_map.items())},
            "edge_map": {str(k): v for k, v in sorted(value.edge_map.items())},
        }
    if isinstance(value, (frozenset, set)):
        return sorted(_plain(v) for v in value)
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if value is None or isinstance(value, (bool, int, str)):
        return value
    return str(value)


def _digest(text: str) -> str:
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


def _read_file(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc


def _read_source(arg: str) -> tuple[str, str]:
    """Text plus source label; a leading '[' means inline JSON."""
    stripped = arg.strip()
    if stripped.startswith("["):
        return stripped, "inline"
    return _read_file(arg), arg


def _record(inputs: dict[str, Any], label: str, source: str, text: str) -> None:
    inputs[label] = {"source": source, "sha256": _digest(text)}


def _ids_input(inputs: dict[str, Any], label: str, arg: str) -> frozenset[int]:
    text, source = _read_source(arg)
    _record(inputs, label, source, text)
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"bad id set for --{label}: {exc}") from exc
    if not isinstance(data, list) or not all(isinstance(x, int) for x in data):
        raise ParseError(f"--{label} must be a JSON array of integer ids")
    return frozenset(data)


def _graph_input(inputs: dict[str, Any], path: str) -> Graph:
    text = _read_file(path)
    _record(inputs, "input", path, text)
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid graph JSON in {path}: {exc}") from exc
    return graph_from_json(data)


def _family_input(inputs: dict[str, Any], arg: str) -> ForbiddenFamily:
    text, source = _read_source(arg)
    _record(inputs, "forbidden", source, text)
    return ForbiddenFamily.from_json(text)


def _group_input(inputs: dict[str, Any], path: str) -> FiniteGroup:
    text = _read_file(path)
    _record(inputs, "input", path, text)
    return load_group(text)


def _points_input(inputs: dict[str, Any], path: str) -> PointSet:
    text = _read_file(path)
    _record(inputs, "input", path, text)
    return load_points(text)


def _relation_input(inputs: dict[str, Any], path: str) -> Relation:
    text = _read_file(path)
    _record(inputs, "input", path, text)
    return load_relation(text)


def _check_member_ids(g: FiniteGroup, ids: frozenset[int], label: str) -> None:
    bad = {x for x in ids if not 0 <= x < g.order}
    if bad:
        raise PreconditionViolated(
            f"--{label} ids {sorted(bad)} are outside the group", witness=bad
        )


def _parse_class(text: str) -> ClassTester:
    tag, _, rest = text.partition(":")
    tag = tag.strip()
    if tag == "pi-group":
        try:
            primes = frozenset(int(tok) for tok in rest.replace(",", " ").split())
        except ValueError as exc:
            raise ParseError(f"bad prime list in {text!r}") from exc
        if not primes:
            raise ParseError("pi-group needs primes, e.g. pi-group:2,3")
        return ClassTester("pi-group", primes=primes)
    if rest:
        raise ParseError(f"class {tag!r} takes no arguments")
    try:
        return ClassTester(tag)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def _parse_layer(text: str):
    kind, sep, rest = text.partition(":")
    if not sep:
        raise ParseError(f"layer must be word:... or class:..., got {text!r}")
    if kind == "word":
        return parse_ocw(rest)
    if kind == "class":
        return _parse_class(rest)
    raise ParseError(f"unknown layer kind {kind!r}")


def _trace_summary(trace: EngineTrace, detail: bool) -> dict[str, Any]:
    steps = []
    for s in trace.steps:
        entry: dict[str, Any] = {
            "orbit_size": s.orbit_size,
            "selected": len(s.selected),
            "codim_sup": str(s.codim_sup),
            "codim_inf": str(s.codim_inf),
        }
        if detail:
            entry["selected_elements"] = [_plain(e) for e in s.selected]
            entry["sup"] = _plain(s.sup)
            entry["inf"] = _plain(s.inf)
        steps.append(entry)
    out: dict[str, Any] = {
        "seed_codim": str(trace.seed_codim),
        "rounds": len(trace.steps),
        "steps": steps,
    }
    if detail:
        out["seed"] = _plain(trace.seed)
    return out


def _result_codims(trace: EngineTrace) -> dict[str, str]:
    final = trace.steps[-1].codim_sup if trace.steps else trace.seed_codim
    return {"seed": str(trace.seed_codim), "result": str(final)}


# ---------------------------------------------------------------- handlers


def _cmd_bound(args: argparse.Namespace, inputs: dict[str, Any]) -> RunReport:
    if args.x < 0 or args.k < 0:
        raise ParseError("--x and --k must be nonnegative")
    value = iterate_bound(args.x, args.k)
    closed_form = Fraction(args.x) * (Fraction(args.x) + 1) ** (2**args.k - 1)
    relation = "<" if value < closed_form else ("=" if value == closed_form else ">")
    ok = value <= closed_form
    if not ok:
        raise InvariantViolation("iterate exceeded its closed-form majorant")
    return RunReport(
        command="bound",
        inputs=inputs,
        result={
            "x": args.x,
            "rounds": args.k,
            "iterate": str(value),
            "closed_form": str(closed_form),
            "relation": relation,
        },
        codim={},
        bound={"value": str(value), "closed_form": str(closed_form), "ok": ok},
        clauses={"within_closed_form": ok},
        trace={},
        status=_STATUS[EXIT_OK],
        exit_code=EXIT_OK,
    )


def _forbid_sections(
    rep: ForbidReport, result: frozenset[int], g: Graph, detail: bool
) -> tuple[dict, dict, dict, dict, dict]:
    result_part = {
        "removed_ids": sorted(result),
        "size": len(result),
        "kept_edges": len(g.edges) - len(result),
        "seed_ids": sorted(rep.removed_n),
        "arity": rep.arity,
        "automorphism_order": rep.group_order,
    }
    bound_value = iterate_bound(len(rep.removed_n), rep.arity - 1)
    bound_part = {"value": str(bound_value), "ok": rep.bound_ok}
    return (
        result_part,
        _result_codims(rep.trace),
        bound_part,
        dict(rep.clauses()),
        _trace_summary(rep.trace, detail),
    )


def _cmd_graph_forbid(args: argparse.Namespace, inputs: dict[str, Any]) -> RunReport:
    g = _graph_input(inputs, args.input)
    removed = _ids_input(inputs, "removed", args.removed)
    family = _family_input(inputs, args.forbidden)
    result, rep = forbid_invariant(
        g, removed, family, orbit_cap=args.cap or DEFAULT_ORBIT_CAP
    )
    result_part, codim, bound, clauses, trace = _forbid_sections(
        rep, result, g, args.trace
    )
    return RunReport(
        command="graph-forbid",
        inputs=inputs,
        result=result_part,
        codim=codim,
        bound=bound,
        clauses=clauses,
        trace=trace,
        status=_STATUS[EXIT_OK],
        exit_code=EXIT_OK,
    )


def _layered_graph_report(
    command: str,
    inputs: dict[str, Any],
    g: Graph,
    seed: frozenset[int],
    result: frozenset[int],
    layer_reports: list[ForbidReport],
    extra_clauses: dict[str, bool],
    detail: bool,
    extra_result: dict[str, Any] | None = None,
) -> RunReport:
    aut = automorphism_group(g)
    clauses = {
        "invariant": invariant_under_group(g, result, aut),
        "layers_ok": all(r.ok for r in layer_reports),
        "meets_seed": bool(result & seed) or not result,
        **extra_clauses,
    }
    per_layer = [
        {
            "value": str(iterate_bound(len(r.removed_n), r.arity - 1)),
            "ok": r.bound_ok,
        }
        for r in layer_reports
    ]
    result_part = {
        "removed_ids": sorted(result),
        "size": len(result),
        "kept_edges": len(g.edges) - len(result),
        "seed_ids": sorted(seed),
        "layers": len(layer_reports),
        "automorphism_order": aut.order,
    }
    if extra_result:
        result_part.update(extra_result)
    ok = all(clauses.values())
    code = EXIT_OK if ok else EXIT_INVARIANT
    return RunReport(
        command=command,
        inputs=inputs,
        result=result_part,
        codim={"seed": str(len(seed)), "result": str(len(result))},
        bound={"per_layer": per_layer, "ok": all(p["ok"] for p in per_layer)},
        clauses=clauses,
        trace={"layers": [_trace_summary(r.trace, detail) for r in layer_reports]},
        status=_STATUS[code],
        exit_code=code,
    )


def _check_known_edges(g: Graph, seed: frozenset[int]) -> None:
    unknown = seed - set(g.edge_ids)
    if unknown:
        raise PreconditionViolated(
            f"removed set names missing edges {sorted(unknown)}", witness=unknown
        )


def _cmd_graph_planarize(args: argparse.Namespace, inputs: dict[str, Any]) -> RunReport:
    g = _graph_input(inputs, args.input)
    seed = _ids_input(inputs, "removed", args.removed)
    _check_known_edges(g, seed)
    layer_reports: list[ForbidReport] = []
    result = planarize_invariant(
        g, seed, orbit_cap=args.cap or DEFAULT_ORBIT_CAP, reports=layer_reports
    )
    planar = planarity_test(g.delete_edges(result))
    return _layered_graph_report(
        "graph-planarize",
        inputs,
        g,
        seed,
        result,
        layer_reports,
        {"planar_complement": planar},
        args.trace,
    )


def _cmd_graph_local_embed(args: argparse.Namespace, inputs: dict[str, Any]) -> RunReport:
    g = _graph_input(inputs, args.input)
    seed = _ids_input(inputs, "removed", args.removed)
    layer_reports: list[ForbidReport] = []
    result = local_embed_invariant(
        g, seed, size_cap=args.cap or DEFAULT_SIZE_CAP, reports=layer_reports
    )
    return _layered_graph_report(
        "graph-local-embed",
        inputs,
        g,
        seed,
        result,
        layer_reports,
        {"locally_embeddable_complement": True},  # re-verified exhaustively above
        args.trace,
    )


def _cmd_graph_gn(args: argparse.Namespace, inputs: dict[str, Any]) -> RunReport:
    if args.n < 1:
        raise ParseError("--n must be at least 1")
    g, designated = subdivided_k5_ring(args.n)
    base_result = {
        "n": args.n,
        "vertices": len(g.vertices),
        "edges": len(g.edges),
        "designated_edges": sorted(designated),
        "nonplanar": not planarity_test(g),
        "designated_planarizes": planarity_test(g.delete_edges(designated)),
        "rotation_is_automorphism": is_automorphism(g, ring_rotation(args.n)),
    }
    if not args.planarize:
        base_result["graph"] = graph_to_json(g)
        clauses = {
            "nonplanar": base_result["nonplanar"],
            "designated_planarizes": base_result["designated_planarizes"],
            "rotation_is_automorphism": base_result["rotation_is_automorphism"],
        }
        ok = all(clauses.values())
        code = EXIT_OK if ok else EXIT_INVARIANT
        return RunReport(
            command="graph-gn",
            inputs=inputs,
            result=base_result,
            codim={},
            bound={},
            clauses=clauses,
            trace={},
            status=_STATUS[code],
            exit_code=code,
        )
    layer_reports: list[ForbidReport] = []
    result = planarize_invariant(
        g, designated, orbit_cap=args.cap or DEFAULT_ORBIT_CAP, reports=layer_reports
    )
    planar = planarity_test(g.delete_edges(result))
    return _layered_graph_report(
        "graph-gn",
        inputs=inputs,
        g=g,
        seed=designated,
        result=result,
        layer_reports=layer_reports,
        extra_clauses={
            "planar_complement": planar,
            "nonplanar_before": base_result["nonplanar"],
            "rotation_is_automorphism": base_result["rotation_is_automorphism"],
            "nonempty": bool(result),
        },
        detail=args.trace,
        extra_result={"n": args.n},
    )


def _cmd_group_law(args: argparse.Namespace, inputs: dict[str, Any]) -> RunReport:
    g = _group_input(inputs, args.input)
    seed = _ids_input(inputs, "removed", args.removed)
    _check_member_ids(g, seed, "removed")
    words = [parse_ocw(w) for w in args.word]
    testers = [_parse_class(c) for c in args.tester]
    if not words or len(words) != len(testers):
        raise ParseError("group-law needs equally many --word and --class flags")
    subgroup, rep = law_invariant_run(
        g, seed, list(zip(words, testers)), aut_cap=args.cap or DEFAULT_ORDER_CAP
    )
    bound_value = iterate_bound(rep.trace.seed_codim, rep.arity - 1)
    return RunReport(
        command="group-law",
        inputs=inputs,
        result={
            "subgroup_ids": sorted(subgroup),
            "order": len(subgroup),
            "group_index": index(g, subgroup),
            "seed_ids": sorted(seed),
            "arity": rep.arity,
            "automorphism_order": rep.aut_order,
            "conditions": [
                {"word": w, "class": label, "ok": ok}
                for w, label, ok in rep.condition_results
            ],
        },
        codim=_result_codims(rep.trace),
        bound={"value": str(bound_value), "ok": rep.bound_ok},
        clauses={
            "characteristic": rep.characteristic,
            "conditions": all(ok for _, _, ok in rep.condition_results),
            "bound": rep.bound_ok,
        },
        trace=_trace_summary(rep.trace, args.trace),
        status=_STATUS[EXIT_OK],
        exit_code=EXIT_OK,
    )


def _cmd_group_spectrum(args: argparse.Namespace, inputs: dict[str, Any]) -> RunReport:
    g = _group_input(inputs, args.input)
    seed = _ids_input(inputs, "removed", args.removed)
    _check_member_ids(g, seed, "removed")
    subgroup, rep = spectrum_run(g, seed, aut_cap=args.cap or DEFAULT_ORDER_CAP)
    rounds = len(rep.trace.steps)
    bound_value = iterate_bound(rep.trace.seed_codim, max(rounds - 1, 0))
    return RunReport(
        command="group-spectrum",
        inputs=inputs,
        result={
            "subgroup_ids": sorted(subgroup),
            "order": len(subgroup),
            "seed_ids": sorted(seed),
            "spectrum_seed": list(rep.spectrum_seed),
            "spectrum_result": list(rep.spectrum_result),
            "automorphism_order": rep.aut_order,
        },
        codim=_result_codims(rep.trace),
        bound={"value": str(bound_value), "ok": rep.bound_ok},
        clauses={
            "characteristic": rep.characteristic,
            "contained": rep.contained,
            "bound": rep.bound_ok,
        },
        trace=_trace_summary(rep.trace, args.trace),
        status=_STATUS[EXIT_OK],
        exit_code=EXIT_OK,
    )


def _cmd_group_series(args: argparse.Namespace, inputs: dict[str, Any]) -> RunReport:
    g = _group_input(inputs, args.input)
    seed = _ids_input(inputs, "removed", args.removed)
    _check_member_ids(g, seed, "removed")
    layers = [_parse_layer(spec) for spec in args.layer]
    holds = series_predicate(g, seed, layers, cap=args.cap or DEFAULT_GROUP_ENUM_CAP)
    labels = [
        layer.text() if hasattr(layer, "text") else layer.label for layer in layers
    ]
    return RunReport(
        command="group-series",
        inputs=inputs,
        result={"holds": holds, "layers": labels, "seed_ids": sorted(seed)},
        codim={},
        bound={},
        clauses={"series": holds},
        trace={},
        status=_STATUS[EXIT_OK],
        exit_code=EXIT_OK,
    )


def _cmd_set_sphere(args: argparse.Namespace, inputs: dict[str, Any]) -> RunReport:
    ps = _points_input(inputs, args.input)
    seed = _ids_input(inputs, "removed", args.removed)
    result, rep = sphere_invariant_run(
        ps,
        seed,
        args.arity,
        allow_planes=args.allow_planes,
        orbit_cap=args.cap or DEFAULT_ORBIT_CAP,
    )
    bound_value = iterate_bound(len(seed), rep.arity - 1)
    return RunReport(
        command="set-sphere",
        inputs=inputs,
        result={
            "removed_ids": sorted(result),
            "size": len(result),
            "kept_points": rep.kept_size,
            "seed_ids": sorted(seed),
            "arity": rep.arity,
            "allow_planes": args.allow_planes,
            "automorphism_order": rep.group_order,
        },
        codim=_result_codims(rep.trace),
        bound={"value": str(bound_value), "ok": rep.bound_ok},
        clauses=dict(rep.clauses()),
        trace=_trace_summary(rep.trace, args.trace),
        status=_STATUS[EXIT_OK],
        exit_code=EXIT_OK,
    )


def _cmd_set_team(args: argparse.Namespace, inputs: dict[str, Any]) -> RunReport:
    rel = _relation_input(inputs, args.input)
    seed = _ids_input(inputs, "expel", args.expel)
    result, rep = team_invariant_run(
        rel,
        seed,
        args.arity,
        self_respect=args.self_respect,
        orbit_cap=args.cap or DEFAULT_ORBIT_CAP,
    )
    bound_value = iterate_bound(len(seed), rep.arity - 1)
    return RunReport(
        command="set-team",
        inputs=inputs,
        result={
            "expelled_ids": sorted(result),
            "size": len(result),
            "remaining_team": rep.kept_size,
            "seed_ids": sorted(seed),
            "arity": rep.arity,
            "self_respect": args.self_respect,
            "automorphism_order": rep.group_order,
        },
        codim=_result_codims(rep.trace),
        bound={"value": str(bound_value), "ok": rep.bound_ok},
        clauses=dict(rep.clauses()),
        trace=_trace_summary(rep.trace, args.trace),
        status=_STATUS[EXIT_OK],
        exit_code=EXIT_OK,
    )


def _law_entry(name: str, report: LawReport, expect_pass: bool = True) -> dict[str, Any]:
    met = report.ok if expect_pass else not report.ok
    return {
        "name": name,
        "law": report.law,
        "predicate": report.predicate,
        "exhaustive": report.exhaustive,
        "cases": report.checks,
        "expect": "pass" if expect_pass else "counterexample",
        "ok": met,
        "counterexample": _plain(report.counterexample),
    }


def _verify_law_suite(seed: int) -> list[dict[str, Any]]:
    entries: list[dict[str, Any]] = []

    def both(name: str, lattice, pred, elements, **kw) -> None:
        entries.append(_law_entry(f"monotone:{name}", check_monotone(lattice, pred, elements, **kw)))
        entries.append(_law_entry(f"multilinear:{name}", check_multilinear(lattice, pred, elements, **kw)))

    def powerset(items) -> list[frozenset[int]]:
        out = [frozenset()]
        for x in sorted(items):
            out += [s | {x} for s in out]
        return out

    ground4 = frozenset(range(4))
    entries.append(
        _law_entry("lattice-axioms:subsets-of-4", check_lattice(SubsetLattice(ground4), powerset(ground4)))
    )
    k3 = triangle()
    k3_lattice = CofiniteLattice(frozenset(k3.edge_ids))
    k3_elements = powerset(k3.edge_ids)
    entries.append(
        _law_entry("lattice-axioms:cofinite-triangle", check_lattice(k3_lattice, k3_elements))
    )
    s3 = symmetric(3)
    entries.append(
        _law_entry(
            "lattice-axioms:normal-subgroups-S3",
            check_lattice(NormalSubgroupLattice(s3), normal_subgroups(s3)),
        )
    )

    tri_family = ForbiddenFamily((triangle(),))
    both(
        "triangle-free(K3)",
        k3_lattice,
        family_predicate(k3, tri_family),
        k3_elements,
        exhaustive=True,
    )
    k4 = complete_graph(4)
    both(
        "triangle-free(K4)",
        CofiniteLattice(frozenset(k4.edge_ids)),
        family_predicate(k4, tri_family),
        powerset(k4.edge_ids),
        samples=200,
        seed=seed,
        exhaustive=False,
    )

    for g in (s3, dihedral(4)):
        base = NormalSubgroupLattice(g)
        dual = dualize(base, dual_size_codim, top=g.trivial)
        spectrum = tuple(sorted(spectrum_of_quotient(g, g.trivial)))
        both(
            f"order-spectrum({g.name})",
            dual,
            spectrum_predicate(g, spectrum),
            normal_subgroups(g),
            exhaustive=True,
        )

    rel = Relation.of([[1 if j in (0, 1) else 0 for j in range(7)] for _ in range(7)])
    team_elements = [
        frozenset(),
        frozenset({0}),
        frozenset({1}),
        frozenset({4}),
        frozenset({5}),
        frozenset({6}),
        frozenset({4, 5}),
        frozenset({5, 6}),
    ]
    both(
        "efficient-team(n=7)",
        CofiniteLattice(rel.candidates),
        team_predicate(rel),
        team_elements,
        exhaustive=True,
    )

    ps = PointSet.of([(0, 0, 0), (1, 0, 0), (1, 1, 0), (0, 1, 0), (2, 0, 0)])
    sphere_elements = [
        frozenset(),
        frozenset({0}),
        frozenset({1}),
        frozenset({3}),
        frozenset({0, 1}),
        frozenset({3, 4}),
    ]
    both(
        "sphere-free(planar-5)",
        CofiniteLattice(ps.ids),
        sphere_predicate(ps, k=4),
        sphere_elements,
        exhaustive=True,
    )

    ground3 = frozenset(range(3))
    subsets3 = powerset(ground3)
    lattice3 = SubsetLattice(ground3)
    entries.append(
        _law_entry(
            "counterexample:first-arg-even-size",
            check_monotone(lattice3, even_size_predicate(2), subsets3, exhaustive=True),
            expect_pass=False,
        )
    )
    entries.append(
        _law_entry(
            "counterexample:first-arg-small",
            check_multilinear(lattice3, small_first_predicate(2), subsets3, exhaustive=True),
            expect_pass=False,
        )
    )
    return entries


def _cmd_verify_laws(args: argparse.Namespace, inputs: dict[str, Any]) -> RunReport:
    entries = _verify_law_suite(args.seed)
    clauses = {e["name"]: e["ok"] for e in entries}
    ok = all(clauses.values())
    code = EXIT_OK if ok else EXIT_INVARIANT
    return RunReport(
        command="verify-laws",
        inputs=inputs,
        result={"suite": entries, "passed": sum(e["ok"] for e in entries), "total": len(entries)},
        codim={},
        bound={},
        clauses=clauses,
        trace={},
        status=_STATUS[code],
        exit_code=code,
    )


# ---------------------------------------------------------------- plumbing

_HANDLERS: dict[str, Callable[[argparse.Namespace, dict[str, Any]], RunReport]] = {
    "graph-forbid": _cmd_graph_forbid,
    "graph-planarize": _cmd_graph_planarize,
    "graph-local-embed": _cmd_graph_local_embed,
    "graph-gn": _cmd_graph_gn,
    "group-law": _cmd_group_law,
    "group-spectrum": _cmd_group_spectrum,
    "group-series": _cmd_group_series,
    "set-sphere": _cmd_set_sphere,
    "set-team": _cmd_set_team,
    "bound": _cmd_bound,
    "verify-laws": _cmd_verify_laws,
}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="invariantize",
        description="Symmetry-invariant removal constructions with re-verified reports.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--cap", type=int, default=None, help="override the command's primary size cap")
    common.add_argument("--seed", type=int, default=0, help="seed for any randomized checking path")
    common.add_argument("--trace", action="store_true", help="include full per-round elements in the trace")
    common.add_argument("--verify", action="store_true", help="re-run the command and require an identical report")
    common.add_argument("--output", default=None, help="write the JSON report here instead of stdout")

    sub = parser.add_subparsers(dest="command_name", required=True)

    p = sub.add_parser("graph-forbid", parents=[common], help="invariant edge removal avoiding a forbidden family")
    p.add_argument("--input", required=True, help="graph JSON file")
    p.add_argument("--removed", required=True, help="seed removed edge ids: JSON array or file")
    p.add_argument("--forbidden", required=True, help="forbidden family: JSON array of graphs or file")

    p = sub.add_parser("graph-planarize", parents=[common], help="invariant edge removal to planarity")
    p.add_argument("--input", required=True, help="graph JSON file")
    p.add_argument("--removed", required=True, help="seed removed edge ids: JSON array or file")

    p = sub.add_parser("graph-local-embed", parents=[common], help="invariant removal to piecewise embeddability")
    p.add_argument("--input", required=True, help="graph JSON file")
    p.add_argument("--removed", required=True, help="seed removed edge ids: JSON array or file")

    p = sub.add_parser("graph-gn", parents=[common], help="generate the rotating nonplanar ring family")
    p.add_argument("--n", type=int, required=True, help="number of interleaved copies")
    p.add_argument("--planarize", action="store_true", help="also run the invariant planarization")

    p = sub.add_parser("group-law", parents=[common], help="characteristic subgroup inheriting verbal conditions")
    p.add_argument("--input", required=True, help="group multiplication table file")
    p.add_argument("--removed", required=True, help="normal subgroup member ids: JSON array or file")
    p.add_argument("--word", action="append", default=[], help="outer commutator word, e.g. [x1,x2]")
    p.add_argument("--class", dest="tester", action="append", default=[],
                   help="class tester per word: trivial|solvable|nilpotent|pi-group:2,3")

    p = sub.add_parser("group-spectrum", parents=[common], help="characteristic subgroup shrinking the quotient spectrum")
    p.add_argument("--input", required=True, help="group multiplication table file")
    p.add_argument("--removed", required=True, help="normal subgroup member ids: JSON array or file")

    p = sub.add_parser("group-series", parents=[common], help="test for a normal series with prescribed layers")
    p.add_argument("--input", required=True, help="group multiplication table file")
    p.add_argument("--removed", required=True, help="normal subgroup member ids: JSON array or file")
    p.add_argument("--layer", action="append", required=True,
                   help="layer requirement, word:[x1,x2] or class:solvable (repeatable, bottom-up)")

    p = sub.add_parser("set-sphere", parents=[common], help="invariant point removal avoiding co-spherical tuples")
    p.add_argument("--input", required=True, help="points file, one 'x y z' rational triple per line")
    p.add_argument("--removed", required=True, help="seed removed point ids: JSON array or file")
    p.add_argument("--arity", type=int, default=4, help="forbidden tuple size (default 4)")
    p.add_argument("--allow-planes", action="store_true", help="treat co-planar circles as spheres too")

    p = sub.add_parser("set-team", parents=[common], help="invariant expulsion keeping every five efficient")
    p.add_argument("--input", required=True, help="relation file: n then n rows of 0/1")
    p.add_argument("--expel", required=True, help="seed expelled candidate ids: JSON array or file")
    p.add_argument("--arity", type=int, default=5, help="checked subset size (default 5)")
    p.add_argument("--self-respect", action=argparse.BooleanOptionalAction, default=True,
                   help="count a candidate's self-respect vote (default: counted)")

    p = sub.add_parser("bound", parents=[common], help="evaluate the iterated growth bound exactly")
    p.add_argument("--x", type=int, required=True, help="starting value")
    p.add_argument("--k", type=int, required=True, help="number of iterations")

    sub.add_parser("verify-laws", parents=[common], help="run the shipped lattice and predicate law suite")

    return parser


def _error_report(
    command: str, code: int, exc: Exception, inputs: dict[str, Any]
) -> RunReport:
    error: dict[str, Any] = {"type": type(exc).__name__, "message": str(exc)}
    witness = getattr(exc, "witness", None)
    if witness is not None:
        error["witness"] = _plain(witness)
    axiom = getattr(exc, "axiom", None)
    if axiom is not None:
        error["axiom"] = axiom
    return RunReport(
        command=command,
        inputs=inputs,
        result={},
        codim={},
        bound={},
        clauses={},
        trace={},
        status=_STATUS[code],
        exit_code=code,
        error=error,
    )


def _emit(report: RunReport, output: str | None) -> None:
    text = report.to_json()
    if output is None:
        sys.stdout.write(text)
        return
    try:
        with open(output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        sys.stderr.write(f"cannot write {output}: {exc}\n")
        sys.stdout.write(text)


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(list(argv) if argv is not None else None)
    except SystemExit as exc:
        code = exc.code if isinstance(exc.code, int) else EXIT_PARSE
        return EXIT_OK if code == 0 else EXIT_PARSE
    handler = _HANDLERS[args.command_name]
    inputs: dict[str, Any] = {}
    try:
        report = handler(args, inputs)
        if args.verify:
            rerun = handler(args, {})
            if asdict(rerun) != asdict(report):
                raise InvariantViolation("re-run produced a different report")
            report.clauses["stable_rerun"] = True
    except (ParseError, NotAGroup, DuplicatePoints, ValueError) as exc:
        report = _error_report(args.command_name, EXIT_PARSE, exc, inputs)
    except (PreconditionViolated, NotNormal, ArityMismatch) as exc:
        report = _error_report(args.command_name, EXIT_PRECONDITION, exc, inputs)
    except CapExceeded as exc:
        report = _error_report(args.command_name, EXIT_CAP, exc, inputs)
    except InvariantViolation as exc:
        report = _error_report(args.command_name, EXIT_INVARIANT, exc, inputs)
    _emit(report, args.output)
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
