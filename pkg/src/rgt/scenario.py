"""Scenario files: loading, validation and task execution.

A scenario is a JSON document describing a group (actions, subjects,
relations or polynomial, influences) and a list of tasks. Running it yields
a report: a plain dict of JSON-native values that the CLI renders as tables
or dumps as JSON.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Any, Mapping

from . import __version__
from .agents import (
    AsimovPolicy,
    compute_U,
    first,
    frustration_strategies,
    interaction1,
    interaction2,
    suggest_relation_change,
)
from .algebra import Alternative, AlternativeSyntaxError, Universe
from .decision import InfluenceMatrix, canonicalize, forward_solve, is_super_active
from .group import Relation, RelationshipGraph, exclude_until_decomposable, graph_of
from .influence import (
    InfluenceSystem,
    Strategy,
    TargetChoice,
    effective_variables,
    feasible_targets,
    joint_influences,
    solve_influence_equation,
    solve_system,
)
from .polynomial import Polynomial, diagonal_form, fold, fold_expression, parse

TASK_TYPES = (
    "fold",
    "super-active-check",
    "forward",
    "inverse",
    "feasible-targets",
    "frustration",
    "agent-step",
    "control-plan",
    "relation-change",
)


class ScenarioError(ValueError):
    """Invalid scenario content; ``field`` names the offending location."""

    def __init__(self, field: str, message: str) -> None:
        super().__init__(f"{field}: {message}")
        self.field = field


def bundled_scenarios() -> list[str]:
    root = resources.files("rgt") / "scenarios"
    return sorted(p.name for p in root.iterdir() if p.name.endswith(".json"))


def resolve_path(path: str | Path) -> Path:
    """Filesystem path, or the name of a bundled scenario."""
    p = Path(path)
    if p.exists():
        return p
    bundled = resources.files("rgt") / "scenarios" / p.name
    if bundled.is_file():
        return Path(str(bundled))
    raise FileNotFoundError(f"no scenario file {str(path)!r}")


# -- loading ----------------------------------------------------------------


def _get(obj: Mapping, key: str, kind, where: str, default: Any = ...) -> Any:
    if key not in obj:
        if default is ...:
            raise ScenarioError(f"{where}.{key}" if where else key, "missing field")
        return default
    value = obj[key]
    if not isinstance(value, kind) or (kind is int and isinstance(value, bool)):
        names = kind.__name__ if isinstance(kind, type) else "/".join(k.__name__ for k in kind)
        raise ScenarioError(f"{where}.{key}" if where else key, f"expected {names}")
    return value


@dataclass
class Scenario:
    name: str
    universe: Universe
    policy: AsimovPolicy
    subjects: dict[str, str]
    graph: RelationshipGraph
    polynomial: Polynomial
    excluded: list[str]
    influences: InfluenceMatrix
    tasks: list[dict]
    importance: list[str] | None = None
    raw: dict = field(default_factory=dict, repr=False)

    def alternative(self, text: Any, where: str) -> Alternative:
        if not isinstance(text, str):
            raise ScenarioError(where, "alternative must be a string")
        try:
            return self.universe.parse(text)
        except AlternativeSyntaxError as exc:
            raise ScenarioError(where, str(exc)) from None

    def polynomial_subjects(self) -> tuple[str, ...]:
        """Declared subjects that survived exclusion."""
        return tuple(s for s in self.subjects if s not in self.excluded)

    def set_group(self, graph: RelationshipGraph) -> None:
        self.graph = graph
        self.polynomial, self.excluded = exclude_until_decomposable(
            graph, [s for s in (self.importance or ()) if s in graph.subjects] or None
        )


def loads(text: str, name: str = "scenario") -> Scenario:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ScenarioError(f"json line {exc.lineno} column {exc.colno}", exc.msg) from None
    if not isinstance(doc, dict):
        raise ScenarioError("$", "top level must be an object")
    return from_dict(doc, name)


def load(path: str | Path) -> Scenario:
    p = resolve_path(path)
    return loads(p.read_text(encoding="utf-8"), p.stem)


def from_dict(doc: Mapping[str, Any], name: str = "scenario") -> Scenario:
    name = _get(doc, "name", str, "", name)
    actions = _get(doc, "actions", list, "")
    names, risky = [], set()
    for i, a in enumerate(actions):
        where = f"actions[{i}]"
        if isinstance(a, str):
            names.append(a)
            continue
        if not isinstance(a, dict):
            raise ScenarioError(where, "expected object or string")
        names.append(_get(a, "name", str, where))
        if _get(a, "risky", bool, where, False):
            risky.add(names[-1])
    try:
        universe = Universe(tuple(names), frozenset(risky))
    except ValueError as exc:
        raise ScenarioError("actions", str(exc)) from None
    policy = AsimovPolicy(frozenset(risky), _get(doc, "inaction_forbidden", bool, "", False))

    subjects: dict[str, str] = {}
    for i, s in enumerate(_get(doc, "subjects", list, "")):
        where = f"subjects[{i}]"
        if isinstance(s, str):
            s = {"id": s}
        if not isinstance(s, dict):
            raise ScenarioError(where, "expected object or string")
        sid = _get(s, "id", str, where)
        kind = _get(s, "kind", str, where, "human")
        if kind not in ("human", "robot"):
            raise ScenarioError(f"{where}.kind", "must be 'human' or 'robot'")
        if sid in subjects:
            raise ScenarioError(f"{where}.id", f"duplicate subject {sid!r}")
        subjects[sid] = kind

    graph = None
    if "relations" in doc:
        edges = []
        for i, r in enumerate(_get(doc, "relations", list, "")):
            where = f"relations[{i}]"
            if not isinstance(r, dict):
                raise ScenarioError(where, "expected object")
            pair = _get(r, "pair", list, where)
            kind = _get(r, "kind", str, where)
            if len(pair) != 2 or not all(isinstance(x, str) for x in pair):
                raise ScenarioError(f"{where}.pair", "expected two subject ids")
            if kind not in ("alliance", "conflict"):
                raise ScenarioError(f"{where}.kind", "must be 'alliance' or 'conflict'")
            edges.append((pair, Relation(kind)))
        try:
            graph = RelationshipGraph(tuple(subjects), edges)
        except ValueError as exc:
            raise ScenarioError("relations", str(exc)) from None
    if "polynomial" in doc:
        text = _get(doc, "polynomial", str, "")
        try:
            poly = parse(text, names=list(subjects))
        except ValueError as exc:
            raise ScenarioError("polynomial", str(exc)) from None
        from_poly = graph_of(poly)
        if set(from_poly.subjects) != set(subjects):
            raise ScenarioError("polynomial", "variables do not match the declared subjects")
        if graph is not None and graph != from_poly:
            raise ScenarioError("polynomial", "disagrees with the relations list")
        graph = graph or from_poly
    if graph is None:
        raise ScenarioError("relations", "either 'relations' or 'polynomial' is required")

    importance = None
    if "importance" in doc:
        importance = _get(doc, "importance", list, "")
        if sorted(importance) != sorted(subjects):
            raise ScenarioError("importance", "must rank every subject exactly once")

    values = {}
    for src, row in _get(doc, "influences", dict, "", {}).items():
        if src not in subjects:
            raise ScenarioError(f"influences.{src}", "unknown subject")
        if not isinstance(row, dict):
            raise ScenarioError(f"influences.{src}", "expected object")
        for dst, text in row.items():
            where = f"influences.{src}.{dst}"
            if dst not in subjects or dst == src:
                raise ScenarioError(where, "unknown or identical target subject")
            if not isinstance(text, str):
                raise ScenarioError(where, "alternative must be a string")
            try:
                values[(src, dst)] = universe.parse(text)
            except AlternativeSyntaxError as exc:
                raise ScenarioError(where, str(exc)) from None
    influences = InfluenceMatrix(universe, tuple(subjects), values)

    tasks = _get(doc, "tasks", list, "", [])
    for i, t in enumerate(tasks):
        if not isinstance(t, dict):
            raise ScenarioError(f"tasks[{i}]", "expected object")
        kind = _get(t, "type", str, f"tasks[{i}]")
        if kind not in TASK_TYPES:
            raise ScenarioError(f"tasks[{i}].type", f"unknown task type {kind!r}")

    scenario = Scenario(
        name, universe, policy, subjects, graph, None, [], influences, list(tasks), importance, dict(doc)
    )
    scenario.set_group(graph)
    return scenario


# -- execution --------------------------------------------------------------


def _alts(alts) -> list[str]:
    return [str(a) for a in alts]


def _strategy(s: Strategy) -> dict[str, str]:
    return {v: str(x) for v, x in zip(s.variables, s.values)}


def _subject(sc: Scenario, task: Mapping, where: str, key: str = "subject") -> str:
    sid = _get(task, key, str, where)
    if sid not in sc.polynomial_subjects():
        raise ScenarioError(f"{where}.{key}", f"unknown or excluded subject {sid!r}")
    return sid


def _fixed(sc: Scenario, task: Mapping, where: str) -> dict[str, Alternative]:
    fixed = _get(task, "fix", dict, where, {})
    return {k: sc.alternative(v, f"{where}.fix.{k}") for k, v in fixed.items()}


def _equation(sc: Scenario, subject: str) -> dict:
    eq = canonicalize(fold(sc.polynomial), subject)
    return {
        "equation": str(eq),
        "A": eq.A.to_expression(),
        "B": eq.B.to_expression(),
        "effective_variables": list(effective_variables(eq.A, eq.B)),
    }


def _check_fixed(fixed: Mapping[str, Alternative], eq, where: str) -> None:
    known = set(eq.A.variables) | set(eq.B.variables)
    for k in fixed:
        if k not in known:
            raise ScenarioError(f"{where}.fix.{k}", "not an effective variable of this equation")


def run_task(sc: Scenario, task: Mapping, index: int) -> dict:
    where = f"tasks[{index}]"
    kind = task["type"]
    out: dict[str, Any] = {"type": kind}
    if "label" in task:
        out["label"] = str(task["label"])
    w = fold(sc.polynomial)

    if kind in ("fold", "super-active-check"):
        out.update(
            polynomial=str(sc.polynomial),
            diagonal_form=diagonal_form(sc.polynomial),
            folded=fold_expression(sc.polynomial),
            simplified=w.to_expression(),
            variables=list(w.variables),
            super_active=is_super_active(w),
        )
        return out

    if kind == "forward":
        if "subject" in task:
            subjects = [_subject(sc, task, where)]
        else:
            subjects = list(sc.polynomial_subjects())
        out["matrix"] = sc.influences.rows()
        rows = []
        for s in subjects:
            eq = canonicalize(w, s)
            received = sc.influences.on(s)
            missing = [v for v in eq.influence_variables if v not in received]
            if missing:
                raise ScenarioError("influences", f"no influence of {missing[0]!r} on {s!r}")
            outcome = forward_solve(eq, received, sc.universe)
            rows.append(
                {
                    "subject": s,
                    "equation": str(eq),
                    "A": str(outcome.upper),
                    "B": str(outcome.lower),
                    "frustrated": outcome.frustrated,
                    "choices": _alts(outcome.choices),
                }
            )
        out["results"] = rows
        return out

    if kind == "inverse":
        subject = _subject(sc, task, where)
        eq = canonicalize(w, subject)
        fixed = _fixed(sc, task, where)
        _check_fixed(fixed, eq, where)
        mode = _get(task, "mode", str, where, "system")
        if mode not in ("system", "equation"):
            raise ScenarioError(f"{where}.mode", "must be 'system' or 'equation'")
        if "target" in task:
            upper = lower = sc.alternative(task["target"], f"{where}.target")
        else:
            upper = sc.alternative(_get(task, "upper", str, where), f"{where}.upper")
            lower = sc.alternative(_get(task, "lower", str, where), f"{where}.lower")
        if not lower <= upper:
            raise ScenarioError(f"{where}.lower", "lower bound is not contained in upper bound")
        if mode == "equation":
            if upper != lower:
                raise ScenarioError(f"{where}.mode", "equation mode needs a single target")
            found = solve_influence_equation(eq.A, eq.B, upper, fixed)
        else:
            found = solve_system(InfluenceSystem(eq.A, eq.B, TargetChoice(upper, lower), fixed))
        free = tuple(v for v in effective_variables(eq.A, eq.B) if v not in fixed)
        out.update(
            subject=subject,
            mode=mode,
            upper=str(upper),
            lower=str(lower),
            fixed={k: str(v) for k, v in sorted(fixed.items())},
            variables=list(free),
            strategies=[_strategy(s) for s in found],
            **_equation(sc, subject),
        )
        if "group_by" in task:
            out["group_by"] = _get(task, "group_by", str, where)
            if out["group_by"] not in free:
                raise ScenarioError(f"{where}.group_by", "not a free variable")
        return out

    if kind in ("feasible-targets", "frustration"):
        subject = _subject(sc, task, where)
        eq = canonicalize(w, subject)
        fixed = _fixed(sc, task, where)
        _check_fixed(fixed, eq, where)
        free = tuple(v for v in effective_variables(eq.A, eq.B) if v not in fixed)
        out.update(subject=subject, variables=list(free), **_equation(sc, subject))
        if kind == "feasible-targets":
            ft = feasible_targets(eq.A, eq.B, fixed, sc.universe)
            out["targets"] = [
                {"alternative": str(chi), "strategies": [_strategy(s) for s in z]}
                for chi, z in zip(ft.alternatives, ft.strategies)
            ]
        else:
            found = frustration_strategies(eq.A, eq.B, fixed, sc.universe)
            out["strategies"] = [_strategy(s) for s in found]
            out["total"] = len(sc.universe) ** len(free)
        return out

    approved = compute_U(sc.universe, sc.policy)

    if kind == "agent-step":
        robot = _subject(sc, task, where, "robot")
        if sc.subjects.get(robot) != "robot":
            raise ScenarioError(f"{where}.robot", f"{robot!r} is not declared as a robot")
        eq = canonicalize(w, robot)
        out.update(robot=robot, approved=_alts(approved), **_equation(sc, robot))
        if _get(task, "sweep", bool, where, False):
            variables = list(eq.influence_variables)
            envs = [dict(zip(variables, values)) for values in joint_influences(variables, sc.universe)]
        else:
            variables = list(eq.influence_variables)
            envs = [sc.influences.on(robot)]
        rows = []
        for env in envs:
            outcome = forward_solve(eq, env, sc.universe)
            decision = interaction1(outcome, approved)
            rows.append(
                {
                    "influences": {v: str(env[v]) for v in variables},
                    "choices": _alts(outcome.choices),
                    "du": _alts(decision.du),
                    "chosen": str(decision.chosen),
                    "source": decision.source.value,
                }
            )
        out["variables"] = variables
        out["rows"] = rows
        return out

    if kind == "control-plan":
        target = _subject(sc, task, where, "target")
        eq = canonicalize(w, target)
        fixed = _fixed(sc, task, where)
        _check_fixed(fixed, eq, where)
        select = _get(task, "select", str, where, "first")
        if select not in ("first", "last"):
            raise ScenarioError(f"{where}.select", "must be 'first' or 'last'")
        pick = first if select == "first" else (lambda items: items[-1])
        ft = feasible_targets(eq.A, eq.B, fixed, sc.universe)
        plan = interaction2(eq, ft, approved, fixed, select_target=pick)
        out.update(
            target=target,
            approved=_alts(approved),
            reachable=_alts(ft.alternatives),
            kind=plan.kind,
            **_equation(sc, target),
        )
        if plan.kind == "strategy":
            out.update(alternative=str(plan.alternative), strategy=_strategy(plan.strategy))
        else:
            out["frustration"] = [_strategy(s) for s in plan.frustration]
        return out

    if kind == "relation-change":
        actor = _subject(sc, task, where, "actor")
        before = str(sc.polynomial)
        try:
            changes = suggest_relation_change(sc.graph, actor)
        except ValueError as exc:
            raise ScenarioError(where, str(exc)) from None
        out.update(
            actor=actor,
            polynomial=before,
            super_active=is_super_active(w),
            suggestions=[
                {"edge": list(c.edge), "relation": c.relation.value, "polynomial": str(c.polynomial)}
                for c in changes
            ],
        )
        if "apply" in task:
            edge = sorted(_get(task, "apply", list, where))
            match = [c for c in changes if list(c.edge) == edge]
            if not match:
                raise ScenarioError(f"{where}.apply", f"edge {edge} is not among the suggestions")
            sc.set_group(sc.graph.with_relation(*edge, match[0].relation))
            out["applied"] = {"edge": edge, "polynomial": str(sc.polynomial)}
        return out

    raise ScenarioError(f"{where}.type", f"unknown task type {kind!r}")


def run(sc: Scenario) -> dict:
    """Execute every task in order and return the report."""
    report: dict[str, Any] = {
        "scenario": sc.name,
        "engine": f"rgt {__version__}",
        "universe": list(sc.universe.actions),
        "risky": sorted(sc.universe.risky),
        "polynomial": str(sc.polynomial),
        "excluded": list(sc.excluded),
        "results": [],
    }
    for i, task in enumerate(sc.tasks):
        report["results"].append(run_task(sc, task, i))
    return report
