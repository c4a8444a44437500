"""``expdomain`` command line: run engine queries on ``.exd`` documents.

Exit status is 0 on success, 1 on domain errors (bad documents, failed
engine preconditions) and 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Any, Sequence

from . import __version__
from .domains import classify, dnf
from .dsl import And, ContextSpec, Not, Scenario, format_expr, parse_expr, parse_scenario, parse_spec
from .errors import ExpDomainError
from .model import Model, context_from_spec, load_model
from .simulation import TestProcess, simulate
from .spaces import (DEFAULT_ENUMERATION_CAP, canonical, check_properties, natural_sigma_algebra,
                     natural_topology)
from .statements import poss_of, relation

SCHEMA = "expdomain.report/1"
COMMANDS = ("check", "possibilities", "classify", "relate", "topology", "sigma", "properties", "dnf",
            "simulate")
_ARITY = {"classify": 1, "dnf": 1, "relate": 2}
CONVENTION_NOTE = "tautology and contradiction are classified Decidable by convention"


def _sets(model: Model, family) -> list[list[str]]:
    return [[model.space.label_of(i) for i in range(len(model.space)) if (m >> i) & 1]
            for m in canonical(family)]


def _minterm(model: Model, label: tuple[bool, ...]) -> str:
    tree = None
    for expr, value in zip(model.spec.basis, label):
        lit = expr if value else Not(expr)
        tree = lit if tree is None else And(tree, lit)
    return format_expr(tree)


def _poss_name(value) -> list[bool]:
    return sorted(value.value)


def _check(spec: ContextSpec) -> dict:
    ctx = context_from_spec(spec)
    return {
        "context": spec.name,
        "atoms": len(spec.atoms),
        "assignments": 1 << len(spec.atoms),
        "admissible": ctx.count(),
        "satisfiable": True,
        "constraints": len(spec.constraints),
        "basis_size": len(spec.basis),
        "actual": {k: v for k, v in spec.actual} if spec.actual else None,
    }


def _possibilities(model: Model) -> dict:
    space = model.space
    entries = [
        {"label": space.label_of(i), "minterm": _minterm(model, space.labels[i]),
         "assignments": p.bits.bit_count()}
        for i, p in enumerate(space.possibilities)
    ]
    return {
        "basis": [format_expr(b) for b in model.spec.basis],
        "count": len(space),
        "bound": 1 << len(model.basis),
        "possibilities": entries,
    }


def _classify(model: Model, expr: str) -> dict:
    stmt = model.statement(parse_expr(expr))
    result = {"statement": format_expr(parse_expr(expr)), "class": classify(model.theoretical, stmt).value}
    if stmt.is_tautology or stmt.is_contradiction:
        result["note"] = CONVENTION_NOTE
    return result


def _relate(model: Model, e1: str, e2: str) -> dict:
    s1, s2 = model.statement(parse_expr(e1)), model.statement(parse_expr(e2))
    rel = relation(s1, s2)
    return {
        "s1": format_expr(parse_expr(e1)),
        "s2": format_expr(parse_expr(e2)),
        "equivalent": rel.equivalent,
        "narrower": rel.narrower,
        "broader": rel.broader,
        "compatible": rel.compatible,
        "independent": rel.independent,
        "poss_s1": _poss_name(poss_of(s1)),
        "poss_s2": _poss_name(poss_of(s2)),
    }


def _topology(model: Model, cap: int) -> dict:
    top = natural_topology(model.space, cap)
    return {
        "points": [model.space.label_of(i) for i in range(len(model.space))],
        "count": len(top.opens),
        "opens": _sets(model, top.opens),
        "subbasis": _sets(model, top.subbasis),
    }


def _sigma(model: Model, cap: int) -> dict:
    sigma = natural_sigma_algebra(model.space, cap)
    return {
        "points": [model.space.label_of(i) for i in range(len(model.space))],
        "count": len(sigma.sets),
        "sets": _sets(model, sigma.sets),
    }


def _properties(model: Model, cap: int) -> dict:
    report = check_properties(model.space, cap)
    return {
        "is_topology": report.is_topology,
        "is_t0": report.is_t0,
        "is_second_countable": report.is_second_countable,
        "subbasis": _sets(model, report.subbasis),
        "is_hausdorff": report.is_hausdorff,
        "is_discrete": report.is_discrete,
        "all_approx_verifiable": report.all_approx_verifiable,
        "approx_verifiable": dict(sorted(report.approx_verifiable.items())),
        "sigma_is_algebra": report.sigma_is_algebra,
        "sigma_is_borel": report.sigma_is_borel,
    }


def _dnf(model: Model, expr: str) -> dict:
    stmt = model.statement(parse_expr(expr))
    parts = dnf(model.space, stmt)
    joined = 0
    for p in parts:
        joined |= p.bits
    return {
        "statement": format_expr(parse_expr(expr)),
        "possibilities": sorted(model.space.label_of(model.space.index(p)) for p in parts),
        "disjunction_equivalent": joined == stmt.bits,
    }


def _simulate(scenario: Scenario) -> dict:
    by_name = {t.name: TestProcess(t.terminates_at, t.name) for t in scenario.tests}
    components = [by_name[name] for name in scenario.operands]
    result = simulate(components, scenario.goal, scenario.budget)
    result["tests"] = [{"name": name, "terminates_at": by_name[name].terminates_at}
                       for name in scenario.operands]
    return result


def run_command(command: str, args: Sequence[str], spec: ContextSpec | Scenario, *,
                cap: int = DEFAULT_ENUMERATION_CAP, seed: int | None = None,
                source: str | None = None) -> dict[str, Any]:
    """Dispatch one command and wrap its results in a versioned report."""
    if command not in COMMANDS:
        raise ValueError(f"unknown command {command!r}")
    if len(args) != _ARITY.get(command, 0):
        raise ValueError(f"{command} takes {_ARITY.get(command, 0)} argument(s), got {len(args)}")
    if command == "simulate":
        if not isinstance(spec, Scenario):
            raise TypeError("simulate needs a scenario")
        results = _simulate(spec)
    elif command == "check":
        results = _check(spec)
    else:
        model = load_model(spec)
        if command == "possibilities":
            results = _possibilities(model)
        elif command == "classify":
            results = _classify(model, *args)
        elif command == "relate":
            results = _relate(model, *args)
        elif command == "topology":
            results = _topology(model, cap)
        elif command == "sigma":
            results = _sigma(model, cap)
        elif command == "properties":
            results = _properties(model, cap)
        else:
            results = _dnf(model, *args)
    return {
        "schema": SCHEMA,
        "engine": {"name": "expdomain", "version": __version__},
        "command": {"name": command, "args": list(args), "file": source, "cap": cap, "seed": seed},
        "results": results,
    }


def render_json(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True) + "\n"


def _scalar(value: Any) -> str:
    return json.dumps(value)


def _render_lines(value: Any, indent: int, out: list[str]) -> None:
    pad = "  " * indent
    if isinstance(value, dict):
        for key in sorted(value):
            item = value[key]
            if isinstance(item, (dict, list)) and item:
                out.append(f"{pad}{key}:")
                _render_lines(item, indent + 1, out)
            else:
                out.append(f"{pad}{key}: {_scalar(item)}")
    else:
        for item in value:
            if isinstance(item, dict) and item:
                out.append(f"{pad}-")
                _render_lines(item, indent + 1, out)
            else:
                out.append(f"{pad}- {_scalar(item)}")


def render_text(report: dict) -> str:
    out: list[str] = []
    _render_lines(report, 0, out)
    return "\n".join(out) + "\n"


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="expdomain", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"expdomain {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")
    helps = {
        "check": "validate the context and report assignment counts",
        "possibilities": "list the possibilities with their basis labels",
        "classify": "classify a statement (Decidable, VerifiableOnly, TheoreticalOnly, Outside)",
        "relate": "semantic relations between two statements",
        "topology": "open sets of the natural topology",
        "sigma": "sets of the natural sigma-algebra",
        "properties": "T0, second countability, Hausdorff, approximate verifiability, Borel equality",
        "dnf": "possibilities whose disjunction is the given experimental statement",
        "simulate": "run a test scenario through the verification simulator",
    }
    for name in COMMANDS:
        cmd = sub.add_parser(name, help=helps[name])
        cmd.add_argument("file", help="scenario file" if name == "simulate" else ".exd document")
        for i in range(_ARITY.get(name, 0)):
            cmd.add_argument(f"expr{i + 1}", metavar="EXPR")
        cmd.add_argument("--json", action="store_true", help="emit the JSON report")
        cmd.add_argument("--cap", type=int, default=DEFAULT_ENUMERATION_CAP,
                         help="largest possibility count to enumerate (default %(default)s)")
        cmd.add_argument("--seed", type=int, default=None, help="recorded in the report")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    args = [getattr(ns, f"expr{i + 1}") for i in range(_ARITY.get(ns.command, 0))]
    path = Path(ns.file)
    try:
        data = path.read_bytes()
    except OSError as exc:
        print(f"expdomain: error: cannot read {ns.file}: {exc.strerror}", file=sys.stderr)
        return 2
    try:
        doc = parse_scenario(data) if ns.command == "simulate" else parse_spec(data)
        report = run_command(ns.command, args, doc, cap=ns.cap, seed=ns.seed, source=ns.file)
    except ExpDomainError as exc:
        print(f"expdomain: {ns.command}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    sys.stdout.write(render_json(report) if ns.json else render_text(report))
    return 0


if __name__ == "__main__":
    sys.exit(main())
