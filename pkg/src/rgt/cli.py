"""Command-line front end.

    rgt run SCENARIO [--format table|json]
    rgt scenarios
    rgt fold POLY
    rgt forward --poly P --subject S --inf b={beta},c={beta}
    rgt inverse --poly P --subject S --upper ALT --lower ALT [--fix v=ALT] [--equation]
    rgt feasible --poly P --subject S [--fix v=ALT]

Exit codes: 0 success, 2 invalid input, 3 non-decomposable group without
an importance ranking, 4 approval filter leaves nothing.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Any, Sequence

from .agents import UnsatisfiablePolicy
from .group import NotDecomposable
from .polynomial import parse, variables
from .scenario import ScenarioError, bundled_scenarios, from_dict, load, run

FORMAT_ENV = "RGT_FORMAT"


# -- rendering ---------------------------------------------------------------


def _table(headers: Sequence[str], rows: Sequence[Sequence[Any]]) -> list[str]:
    cells = [[str(h) for h in headers]] + [[str(c) for c in r] for r in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(headers))]
    lines = []
    for n, r in enumerate(cells):
        lines.append("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip())
        if n == 0:
            lines.append("  ".join("-" * w for w in widths))
    return lines


def _tuple(strategy: dict[str, str], variables: Sequence[str]) -> str:
    return "(" + ",".join(strategy[v] for v in variables) + ")"


def _equation_lines(r: dict) -> list[str]:
    return [
        f"equation: {r['equation']}",
        f"effective variables: {', '.join(r['effective_variables']) or '-'}",
    ]


def _pivot(r: dict) -> list[str]:
    """Strategies grouped by one variable, one column per value."""
    key = r["group_by"]
    order = list(dict.fromkeys(s[key] for s in r["strategies"]))
    columns = {v: [s for s in r["strategies"] if s[key] == v] for v in order}
    depth = max((len(c) for c in columns.values()), default=0)
    rows = []
    for i in range(depth):
        label = f"pairs ({','.join(r['variables'])})" if i == 0 else ""
        rows.append(
            [label]
            + [_tuple(columns[v][i], r["variables"]) if i < len(columns[v]) else "" for v in order]
        )
    return _table([f"values of {key}"] + order, rows)


def render_result(r: dict) -> list[str]:
    kind = r["type"]
    title = f"== {kind}" + (f": {r['label']}" if "label" in r else "") + " =="
    lines = [title]
    if kind in ("fold", "super-active-check"):
        lines += [
            f"polynomial:    {r['polynomial']}",
            f"diagonal form: {r['diagonal_form']}",
            f"folded:        {r['folded']}",
            f"simplified:    {r['simplified']}",
            f"variables:     {', '.join(r['variables']) or '-'}",
            f"super-active:  {'yes' if r['super_active'] else 'no'}",
        ]
    elif kind == "forward":
        names = [row[0] for row in r["matrix"]]
        lines.append("influence matrix (row influences column):")
        lines += ["  " + s for s in _table([""] + names, r["matrix"])]
        lines += _table(
            ["subject", "equation", "A", "B", "D"],
            [
                [x["subject"], x["equation"], x["A"], x["B"],
                 "frustration" if x["frustrated"] else "{" + ", ".join(x["choices"]) + "}"]
                for x in r["results"]
            ],
        )
    elif kind == "inverse":
        target = r["upper"] if r["upper"] == r["lower"] else f"{r['upper']} >= x >= {r['lower']}"
        lines.append(f"subject: {r['subject']}  target: {target}  mode: {r['mode']}")
        lines += _equation_lines(r)
        if r["fixed"]:
            lines.append("fixed: " + ", ".join(f"{k}={v}" for k, v in r["fixed"].items()))
        lines.append(f"solutions: {len(r['strategies'])}")
        if r.get("group_by"):
            lines += _pivot(r)
        else:
            lines += _table(
                ["#"] + r["variables"],
                [[i + 1] + [s[v] for v in r["variables"]] for i, s in enumerate(r["strategies"])],
            )
    elif kind == "feasible-targets":
        lines.append(f"subject: {r['subject']}")
        lines += _equation_lines(r)
        lines.append("D_h: {" + ", ".join(t["alternative"] for t in r["targets"]) + "}")
        for t in r["targets"]:
            tuples = [_tuple(s, r["variables"]) for s in t["strategies"]]
            lines.append(
                f"Z[{t['alternative']}] ({len(tuples)}) ({','.join(r['variables'])}): " + " ".join(tuples)
            )
    elif kind == "frustration":
        lines.append(f"subject: {r['subject']}")
        lines += _equation_lines(r)
        tuples = [_tuple(s, r["variables"]) for s in r["strategies"]]
        lines.append(f"frustrating joint influences: {len(tuples)} of {r['total']}")
        lines.append(f"({','.join(r['variables'])}): " + " ".join(tuples))
    elif kind == "agent-step":
        lines.append(f"robot: {r['robot']}  U: {{{', '.join(r['approved'])}}}")
        lines += _equation_lines(r)
        lines += _table(
            [f"({','.join(r['variables'])})", "D", "DU", "chosen", "from"],
            [
                [
                    "(" + ",".join(x["influences"][v] for v in r["variables"]) + ")",
                    "{" + ", ".join(x["choices"]) + "}" if x["choices"] else "frustration",
                    "{" + ", ".join(x["du"]) + "}",
                    x["chosen"],
                    x["source"],
                ]
                for x in r["rows"]
            ],
        )
    elif kind == "control-plan":
        lines.append(f"target: {r['target']}  U: {{{', '.join(r['approved'])}}}")
        lines += _equation_lines(r)
        lines.append("D_h: {" + ", ".join(r["reachable"]) + "}")
        if r["kind"] == "strategy":
            vs = list(r["strategy"])
            lines.append(
                f"plan: steer to {r['alternative']} with ({','.join(vs)}) = {_tuple(r['strategy'], vs)}"
            )
        else:
            vs = list(r["frustration"][0])
            tuples = [_tuple(s, vs) for s in r["frustration"]]
            lines.append(f"plan: frustration, any of {len(tuples)} joint influences ({','.join(vs)}):")
            lines.append("  " + " ".join(tuples))
    elif kind == "relation-change":
        lines.append(f"actor: {r['actor']}  polynomial: {r['polynomial']}")
        lines.append(f"super-active: {'yes' if r['super_active'] else 'no'}")
        lines += _table(
            ["edge", "new relation", "polynomial"],
            [["-".join(s["edge"]), s["relation"], s["polynomial"]] for s in r["suggestions"]],
        )
        if "applied" in r:
            a = r["applied"]
            lines.append(f"applied: {'-'.join(a['edge'])} -> new polynomial {a['polynomial']}")
    return lines


def render_table(report: dict) -> str:
    lines = [
        f"scenario: {report['scenario']}  ({report['engine']})",
        f"actions: {', '.join(report['universe'])}"
        + (f"  risky: {', '.join(report['risky'])}" if report["risky"] else ""),
        f"polynomial: {report['polynomial']}",
    ]
    if report["excluded"]:
        lines.append(f"excluded: {', '.join(report['excluded'])}")
    for r in report["results"]:
        lines.append("")
        lines += render_result(r)
    return "\n".join(lines) + "\n"


def render(report: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report, indent=2, sort_keys=True, ensure_ascii=False) + "\n"
    return render_table(report)


def run_scenario(path: str, fmt: str = "table") -> str:
    """Load a scenario file (or bundled name), run every task and render the report."""
    return render(run(load(path)), fmt)


# -- argument handling ---------------------------------------------------------


def split_assignments(text: str) -> dict[str, str]:
    """``b={alpha,beta},c=0`` -> ``{'b': '{alpha,beta}', 'c': '0'}``."""
    out, depth, start = {}, 0, 0
    parts = []
    for i, ch in enumerate(text):
        if ch == "{":
            depth += 1
        elif ch == "}":
            depth -= 1
        elif ch == "," and depth == 0:
            parts.append(text[start:i])
            start = i + 1
    parts.append(text[start:])
    for part in parts:
        if not part.strip():
            continue
        if "=" not in part:
            raise ValueError(f"expected name=alternative, got {part!r}")
        name, value = part.split("=", 1)
        out[name.strip()] = value.strip()
    return out


def _assignments(values: Sequence[str] | None) -> dict[str, str]:
    out: dict[str, str] = {}
    for v in values or ():
        out.update(split_assignments(v))
    return out


def _oneshot(args: argparse.Namespace, task: dict, influences: dict | None = None) -> dict:
    poly = parse(args.poly)
    subjects = sorted(variables(poly))
    doc = {
        "name": args.command,
        "actions": args.actions.split(","),
        "subjects": subjects,
        "polynomial": args.poly,
        "influences": influences or {},
        "tasks": [task],
    }
    return run(from_dict(doc, args.command))


def build_parser() -> argparse.ArgumentParser:
    fmt_default = os.environ.get(FORMAT_ENV, "table")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format",
        choices=("table", "json"),
        default=fmt_default if fmt_default in ("table", "json") else "table",
        help=f"output format (default from ${FORMAT_ENV}, else table)",
    )
    common.add_argument("--actions", default="alpha,beta", help="comma-separated action names")

    ap = argparse.ArgumentParser(prog="rgt", description="Reflexive game theory engine")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("run", parents=[common], help="run a scenario file or bundled scenario")
    p.add_argument("scenario")
    sub.add_parser("scenarios", help="list bundled scenarios")

    p = sub.add_parser("fold", parents=[common], help="fold a polynomial")
    p.add_argument("poly")

    p = sub.add_parser("forward", parents=[common], help="forward task for one subject")
    p.add_argument("--poly", required=True)
    p.add_argument("--subject", required=True)
    p.add_argument("--inf", action="append", help="influences on the subject, v=alt,...")

    p = sub.add_parser("inverse", parents=[common], help="inverse task for one subject")
    p.add_argument("--poly", required=True)
    p.add_argument("--subject", required=True)
    p.add_argument("--upper", required=True)
    p.add_argument("--lower", required=True)
    p.add_argument("--fix", action="append", help="fixed influences, v=alt,...")
    p.add_argument(
        "--equation",
        action="store_true",
        help="solve the single influence equation instead of the exact-bounds system",
    )
    p.add_argument("--group-by", help="pivot the solutions on one variable")

    p = sub.add_parser("feasible", parents=[common], help="reachable alternatives and strategies")
    p.add_argument("--poly", required=True)
    p.add_argument("--subject", required=True)
    p.add_argument("--fix", action="append")
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "scenarios":
            print("\n".join(bundled_scenarios()))
            return 0
        if args.command == "run":
            sys.stdout.write(run_scenario(args.scenario, args.format))
            return 0
        if args.command == "fold":
            report = _oneshot(args, {"type": "fold"})
        elif args.command == "forward":
            inf = _assignments(args.inf)
            report = _oneshot(
                args,
                {"type": "forward", "subject": args.subject},
                {src: {args.subject: alt} for src, alt in inf.items()},
            )
        elif args.command == "inverse":
            task = {
                "type": "inverse",
                "subject": args.subject,
                "upper": args.upper,
                "lower": args.lower,
                "fix": _assignments(args.fix),
                "mode": "equation" if args.equation else "system",
            }
            if args.group_by:
                task["group_by"] = args.group_by
            report = _oneshot(args, task)
        else:
            report = _oneshot(
                args, {"type": "feasible-targets", "subject": args.subject, "fix": _assignments(args.fix)}
            )
    except NotDecomposable as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except UnsatisfiablePolicy as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except (ScenarioError, ValueError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(render(report, args.format))
    return 0


if __name__ == "__main__":
    sys.exit(main())
