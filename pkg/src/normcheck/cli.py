"""Command line surface: check compliance at a horizon, validate inputs,
and explain individual judgments.

Reports go to stdout, diagnostics to stderr. Exit status for `check`:
0 when no violations, 1 when violations exist, 2 on load errors.
"""

from __future__ import annotations

import argparse
import sys

from .dsl import print_rule, print_tc
from .engine import (
    ComplianceReport,
    Outcome,
    ReportEntry,
    Verdict,
    format_records,
    instantiate,
    judge,
    literal_holds,
    match_body,
    run_report,
    substitute,
    window_upper_bound,
)
from .loader import LoadResult, load_paths
from .norms import NormRule, NormToken
from .ontology import KnowledgeBase, check_consistency
from .temporal import basic_atoms, resolve_tpi


def _target(value: str) -> tuple[str, str, str]:
    parts = value.split(":")
    if len(parts) != 3 or not all(parts):
        raise argparse.ArgumentTypeError(
            "explain target must look like <agent>:<norm-id>:<situation>"
        )
    return parts[0], parts[1], parts[2]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="normcheck",
        description="Infer which norms each agent conformed to, violated, or is pending on.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--norms", nargs="+", required=True, metavar="PATH",
                        help="norm definition files (.norm)")
    common.add_argument("--facts", nargs="+", required=True, metavar="PATH",
                        help="fact files (.facts)")
    sub = parser.add_subparsers(dest="command", required=True)

    check = sub.add_parser("check", parents=[common],
                           help="run a compliance report at a horizon")
    check.add_argument("--horizon", type=int, required=True,
                       help="query-time now, in ticks")
    check.add_argument("--format", choices=("human", "records"), default="human",
                       help="report rendering (default: human)")

    sub.add_parser("validate", parents=[common],
                   help="report consistency findings and parse diagnostics")

    explain = sub.add_parser("explain", parents=[common],
                             help="trace one judgment in detail")
    explain.add_argument("--horizon", type=int, required=True)
    explain.add_argument("--explain", type=_target, required=True,
                         metavar="AGENT:NORM:SITUATION", dest="target")
    return parser


def _print_diagnostics(result: LoadResult) -> None:
    for diag in result.diagnostics:
        print(diag, file=sys.stderr)


def _human_entry(entry: ReportEntry) -> str:
    token, outcome = entry.token, entry.outcome
    where = f"with regard to situation {token.situation}"
    if outcome.verdict is Verdict.INAPPLICABLE:
        return f"norm {token.norm_id} does not apply to {token.agent} {where} (not in force)"
    subject = f"{token.agent}"
    if outcome.verdict is Verdict.CONFORMED:
        if token.fluent.is_permission:
            detail = "permission; no action required"
        elif outcome.actions:
            detail = "action " + ", ".join(outcome.actions)
        else:
            detail = f"no prohibited action; window closed at {outcome.window}"
        return f"{subject} conformed to {token.norm_id} {where} ({detail})"
    if outcome.verdict is Verdict.VIOLATED:
        if outcome.actions:
            detail = "prohibited action " + ", ".join(outcome.actions)
        else:
            detail = f"no conforming action; window closed at {outcome.window}"
        return f"{subject} violated {token.norm_id} {where} ({detail})"
    detail = (
        "window unbounded; conforming so far"
        if outcome.provisional and outcome.window.unbounded
        else f"window open until {outcome.window}"
    )
    return f"{subject} is pending on {token.norm_id} {where} ({detail})"


def _render_human(report: ComplianceReport) -> list[str]:
    lines = [_human_entry(entry) for entry in report.entries]
    if not report.entries:
        lines.append("no norm tokens were inferred")
    for finding in report.findings:
        lines.append(f"finding: {finding}")
    for note in report.notes:
        lines.append(f"note: {note}")
    counts = report.counts()
    lines.append(
        "{conformed} conformed, {violated} violated, {pending} pending, "
        "{inapplicable} inapplicable".format(**counts)
    )
    return lines


def cmd_check(args: argparse.Namespace) -> int:
    result = load_paths(args.norms, args.facts)
    _print_diagnostics(result)
    if not result.ok:
        return 2
    report = run_report(result.kb, result.rules, args.horizon)
    if args.format == "records":
        for line in format_records(report):
            print(line)
        for finding in report.findings:
            print(f"finding: {finding}", file=sys.stderr)
        for note in report.notes:
            print(f"note: {note}", file=sys.stderr)
    else:
        for line in _render_human(report):
            print(line)
    return 1 if report.has_violations else 0


def cmd_validate(args: argparse.Namespace) -> int:
    result = load_paths(args.norms, args.facts)
    _print_diagnostics(result)
    findings = []
    if result.ok:
        findings = check_consistency(result.kb)
        for finding in findings:
            print(f"finding: {finding}")
    print(f"{len(findings)} findings")
    return 0 if result.ok and not findings else 1


def _explain_token(kb: KnowledgeBase, rule: NormRule, token: NormToken, horizon: int) -> list[str]:
    lines = [f"rule {rule.norm_id}" + (f" ({rule.span})" if rule.span else "")]
    lines.extend("  " + line for line in print_rule(rule).splitlines())

    binding = None
    for candidate in match_body(kb, rule.body):
        agent = substitute(rule.agent, candidate)
        situation = candidate.get(rule.situation_var)
        if agent.functor == token.agent and situation is not None and situation.functor == token.situation:
            binding = candidate
            break
    if binding is not None:
        pairs = ", ".join(f"{var}={value}" for var, value in sorted(binding.items()))
        lines.append(f"binding: {pairs}")
        lines.append("body:")
        for lit in rule.body:
            lines.append(f"  {lit}: {str(literal_holds(kb, lit, binding)).lower()}")

    situation = kb.situations[token.situation]
    lines.append(f"tc {print_tc(token.tc)} against situation {token.situation} {situation.time}")
    candidates = [
        kb.actions[aid]
        for aid in sorted(kb.actions)
        if kb.actions[aid].actor == token.agent
        and kb.actions[aid].action_type == token.fluent.action_type
    ]
    if candidates:
        for action in candidates:
            lines.append(f"  action {action.id} {action.time}:")
            for atom in basic_atoms(token.tc):
                left = resolve_tpi(atom.left, action.time)
                right = resolve_tpi(atom.right, situation.time)
                lines.append(f"    {print_tc(atom)}: {left} {atom.rel} {right}")
    else:
        lines.append(f"  no recorded action of type {token.fluent.action_type} by {token.agent}")
        for atom in basic_atoms(token.tc):
            right = resolve_tpi(atom.right, situation.time)
            lines.append(f"    {print_tc(atom)}: situation side resolves to {right}")

    outcome = judge(kb, token, horizon)
    window = window_upper_bound(token.tc, situation.time)
    lines.append(f"window upper bound: {window}; horizon: {horizon}")
    lines.append(f"outcome: {_outcome_reason(token, outcome)}")
    return lines


def _outcome_reason(token: NormToken, outcome: Outcome) -> str:
    verdict = outcome.verdict.value
    if outcome.verdict is Verdict.INAPPLICABLE:
        return f"{verdict}: the norm is not in force over the situation"
    if token.fluent.is_permission:
        return f"{verdict}: permission requires no action"
    if outcome.verdict is Verdict.CONFORMED:
        if outcome.actions:
            return f"{verdict}: action {outcome.actions[0]} satisfies the constraint"
        return f"{verdict}: no prohibited action and the window closed at {outcome.window}"
    if outcome.verdict is Verdict.VIOLATED:
        if outcome.actions:
            return f"{verdict}: action {outcome.actions[0]} breaches the prohibition"
        return f"{verdict}: no conforming action; window closed at {outcome.window}"
    return f"{verdict}: window still open at the horizon"


def cmd_explain(args: argparse.Namespace) -> int:
    result = load_paths(args.norms, args.facts)
    _print_diagnostics(result)
    if not result.ok:
        return 2
    agent, norm_id, situation = args.target
    all_tokens: list[tuple[NormRule, NormToken]] = []
    for rule in result.rules:
        for token in instantiate(result.kb, rule):
            all_tokens.append((rule, token))
    for rule, token in all_tokens:
        if (token.agent, token.norm_id, token.situation) == (agent, norm_id, situation):
            for line in _explain_token(result.kb, rule, token, args.horizon):
                print(line)
            return 0
    print(f"no token for agent={agent} norm={norm_id} situation={situation}")
    near = [
        token
        for _, token in all_tokens
        if agent == token.agent or norm_id == token.norm_id or situation == token.situation
    ]
    if near:
        print("near misses:")
        for token in near:
            print(f"  agent={token.agent} norm={token.norm_id} situation={token.situation}")
    else:
        print("no tokens share an agent, norm, or situation with the target")
    return 1


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "check":
        return cmd_check(args)
    if args.command == "validate":
        return cmd_validate(args)
    return cmd_explain(args)


if __name__ == "__main__":
    sys.exit(main())
