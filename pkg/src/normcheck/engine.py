"""Body matching, rule instantiation, and the conformance judgment.

Judgments are made against a fixed recorded trace of actions, at a query
horizon. Unprovable facts are false: an obligation is only violated once no
recorded action discharges it and no conforming action could still end
after the horizon; while the window is open the token is pending.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterator

from .norms import (
    BodyLiteral,
    DomainLit,
    EventTypeLit,
    HoldsLit,
    IntervalLit,
    NegatedLit,
    NormRule,
    NormToken,
    NormativeFluent,
    ProcessTypeLit,
    RuleSafetyError,
    literal_variables,
    rule_safety_errors,
    valid_wrt,
)
from .ontology import ActionToken, Finding, KnowledgeBase, Term, check_consistency
from .temporal import (
    And,
    Basic,
    Instant,
    Interval,
    Not,
    Or,
    TemporalConstraint,
    eval_constraint,
    interval_pred,
    resolve_tpi,
)

Binding = dict[str, Term]


class JudgmentError(Exception):
    """Token handed to the wrong judgment (e.g. a permission to the
    obligation judge)."""


# -- pattern matching ------------------------------------------------------


def match_term(pattern: Term, value: Term, binding: Binding) -> Binding | None:
    """One-way matching of a pattern against a ground term. Returns an
    extended binding, or None when the match fails."""
    if pattern.is_variable:
        seen = binding.get(pattern.functor)
        if seen is None:
            out = dict(binding)
            out[pattern.functor] = value
            return out
        return binding if seen == value else None
    if pattern.functor != value.functor or len(pattern.args) != len(value.args):
        return None
    current = binding
    for p, v in zip(pattern.args, value.args):
        current = match_term(p, v, current)
        if current is None:
            return None
    return current


def substitute(term: Term, binding: Binding) -> Term:
    if term.is_variable:
        return binding.get(term.functor, term)
    if not term.args:
        return term
    return Term(term.functor, tuple(substitute(a, binding) for a in term.args))


def _bind(binding: Binding, var: str, symbol: str) -> Binding | None:
    return match_term(Term(var), Term(symbol), binding)


# -- body evaluation -------------------------------------------------------


def match_body(kb: KnowledgeBase, body: tuple[BodyLiteral, ...] | list[BodyLiteral],
               seed: Binding | None = None) -> list[Binding]:
    """All bindings extending the seed under which every positive literal is
    satisfied and every negated literal has no satisfying extension."""
    bindings: list[Binding] = [dict(seed or {})]
    for lit in body:
        extended: list[Binding] = []
        seen: set[tuple] = set()
        for binding in bindings:
            for out in _extend(kb, lit, binding):
                key = tuple(sorted((v, str(t)) for v, t in out.items()))
                if key not in seen:
                    seen.add(key)
                    extended.append(out)
        bindings = extended
        if not bindings:
            break
    return bindings


def literal_holds(kb: KnowledgeBase, lit: BodyLiteral, binding: Binding) -> bool:
    """Whether the literal is satisfiable from the given binding."""
    return any(True for _ in _extend(kb, lit, binding))


def _extend(kb: KnowledgeBase, lit: BodyLiteral, binding: Binding) -> Iterator[Binding]:
    if isinstance(lit, HoldsLit):
        yield from _extend_holds(kb, lit, binding)
    elif isinstance(lit, EventTypeLit):
        yield from _extend_typed(kb.events, "event_type", lit, binding)
    elif isinstance(lit, ProcessTypeLit):
        yield from _extend_typed(kb.processes, "process_type", lit, binding)
    elif isinstance(lit, IntervalLit):
        intervals = _resolve_time_terms(kb, lit, binding)
        if intervals is not None and interval_pred(lit.pred, intervals):
            yield binding
    elif isinstance(lit, DomainLit):
        for fact in sorted(kb.domain_facts, key=str):
            out = match_term(lit.pred, fact, binding)
            if out is not None:
                yield out
    elif isinstance(lit, NegatedLit):
        unbound = literal_variables(lit) - set(binding)
        if unbound:
            raise RuleSafetyError(
                f"negated literal {lit} evaluated with unbound variables: "
                + ", ".join(sorted(unbound))
            )
        if not literal_holds(kb, lit.literal, binding):
            yield binding
    else:
        raise TypeError(f"not a body literal: {lit!r}")


def _extend_holds(kb: KnowledgeBase, lit: HoldsLit, binding: Binding) -> Iterator[Binding]:
    bound_sit = binding.get(lit.situation_var)
    if bound_sit is not None:
        candidates = [bound_sit.functor] if bound_sit.functor in kb.situations else []
    else:
        candidates = sorted(kb.situations)
    for sid in candidates:
        if lit.fully:
            fluents = {f for (f, s) in kb.holds_fully if s == sid}
        else:
            fluents = kb.fluents_holding(sid)
        for fluent in sorted(fluents, key=str):
            out = match_term(lit.pattern, fluent, binding)
            if out is None:
                continue
            out = _bind(out, lit.situation_var, sid)
            if out is not None:
                yield out


def _extend_typed(table: dict, attr: str, lit, binding: Binding) -> Iterator[Binding]:
    bound = binding.get(lit.var)
    if bound is not None:
        token = table.get(bound.functor)
        if token is not None and getattr(token, attr) == lit.type_name:
            yield binding
        return
    for tid in sorted(table):
        if getattr(table[tid], attr) == lit.type_name:
            out = _bind(binding, lit.var, tid)
            if out is not None:
                yield out


def _resolve_time_terms(kb: KnowledgeBase, lit: IntervalLit, binding: Binding) -> list[Interval] | None:
    tables = {"timeS": kb.situations, "timeE": kb.events, "timeP": kb.processes}
    intervals = []
    for tt in lit.args:
        value = binding.get(tt.var)
        if value is None:
            raise RuleSafetyError(f"interval literal {lit} over unbound variable {tt.var}")
        table = tables.get(tt.func)
        if table is None:
            raise RuleSafetyError(f"unknown time function {tt.func}")
        token = table.get(value.functor)
        if token is None:
            return None
        intervals.append(token.time)
    return intervals


# -- instantiation ---------------------------------------------------------


def instantiate(kb: KnowledgeBase, rule: NormRule) -> list[NormToken]:
    """One token per distinct head binding under which the body is
    satisfied, deduplicated and deterministically ordered."""
    problems = rule_safety_errors(rule)
    if problems:
        raise RuleSafetyError(f"rule {rule.norm_id}: " + "; ".join(problems))
    tokens: set[NormToken] = set()
    for binding in match_body(kb, rule.body):
        agent = substitute(rule.agent, binding)
        action_type = substitute(rule.fluent.action_type, binding)
        situation = binding.get(rule.situation_var)
        if situation is None or not agent.is_ground() or not action_type.is_ground():
            raise RuleSafetyError(
                f"rule {rule.norm_id} emitted a token with unbound head variables"
            )
        if agent.args:
            raise RuleSafetyError(f"rule {rule.norm_id}: agent must be a plain id, got {agent}")
        fluent = NormativeFluent(rule.fluent.kind, action_type, rule.fluent.negated)
        tokens.add(NormToken(agent.functor, fluent, situation.functor, rule.tc, rule.norm_id))
    return sorted(tokens, key=lambda t: (t.agent, t.situation, str(t.fluent)))


# -- windows ---------------------------------------------------------------


@dataclass(frozen=True)
class WindowBound:
    """Latest instant by which an action satisfying the constraint must have
    ended; None when no finite bound exists."""

    upper: Instant | None

    @property
    def unbounded(self) -> bool:
        return self.upper is None

    def closed_at(self, horizon: Instant) -> bool:
        return self.upper is not None and horizon > self.upper

    def __str__(self) -> str:
        return "unbounded" if self.upper is None else str(self.upper)


def window_upper_bound(tc: TemporalConstraint, k: Interval) -> WindowBound:
    """Conservative window bound against the ground situation interval k,
    taken across the constraint's disjunctive normal form. End-side le/lt/eq
    atoms bound the action's end directly; begin-side ones bound it through
    the one-tick properness slack. A disjunct with no bounding atom makes
    the whole window unbounded."""
    best: int | None = None
    for conjuncts in _dnf(tc):
        bound: int | None = None
        for atom in conjuncts:
            ub = _atom_end_bound(atom, k)
            if ub is not None:
                bound = ub if bound is None else min(bound, ub)
        if bound is None:
            return WindowBound(None)
        best = bound if best is None else max(best, bound)
    return WindowBound(best)


def _atom_end_bound(atom: Basic, k: Interval) -> int | None:
    if atom.rel not in ("le", "lt", "eq"):
        return None
    limit = resolve_tpi(atom.right, k) - atom.left.offset
    if atom.rel == "lt":
        limit -= 1
    if atom.left.base == "B":
        limit += 1  # a proper action ends at least one tick after it begins
    return limit


_NEGATED_REL = {"le": "gt", "lt": "ge", "ge": "lt", "gt": "le"}


def _nnf(tc: TemporalConstraint, negated: bool) -> TemporalConstraint:
    if isinstance(tc, Basic):
        if not negated:
            return tc
        if tc.rel == "eq":
            return Or(Basic("lt", tc.left, tc.right), Basic("gt", tc.left, tc.right))
        return Basic(_NEGATED_REL[tc.rel], tc.left, tc.right)
    if isinstance(tc, And):
        left, right = _nnf(tc.left, negated), _nnf(tc.right, negated)
        return Or(left, right) if negated else And(left, right)
    if isinstance(tc, Or):
        left, right = _nnf(tc.left, negated), _nnf(tc.right, negated)
        return And(left, right) if negated else Or(left, right)
    if isinstance(tc, Not):
        return _nnf(tc.inner, not negated)
    raise TypeError(f"not a temporal constraint: {tc!r}")


def _dnf(tc: TemporalConstraint) -> list[list[Basic]]:
    def walk(node: TemporalConstraint) -> list[list[Basic]]:
        if isinstance(node, Basic):
            return [[node]]
        if isinstance(node, Or):
            return walk(node.left) + walk(node.right)
        if isinstance(node, And):
            return [a + b for a in walk(node.left) for b in walk(node.right)]
        raise TypeError(f"unexpected node after normalization: {node!r}")

    return walk(_nnf(tc, False))


# -- judgment --------------------------------------------------------------


class Verdict(Enum):
    CONFORMED = "Conformed"
    VIOLATED = "Violated"
    PENDING = "Pending"
    INAPPLICABLE = "Inapplicable"


@dataclass(frozen=True)
class Outcome:
    verdict: Verdict
    valid: bool
    actions: tuple[str, ...] = ()
    window: WindowBound = WindowBound(None)
    provisional: bool = False  # prohibition holding so far, window still open


def _matching_actions(kb: KnowledgeBase, token: NormToken) -> list[ActionToken]:
    return [
        kb.actions[aid]
        for aid in sorted(kb.actions)
        if kb.actions[aid].actor == token.agent
        and kb.actions[aid].action_type == token.fluent.action_type
    ]


def _satisfying_actions(kb: KnowledgeBase, token: NormToken) -> list[ActionToken]:
    situation = kb.situations[token.situation]
    return [
        action
        for action in _matching_actions(kb, token)
        if eval_constraint(action.time, situation.time, token.tc)
    ]


def judge_obligation(kb: KnowledgeBase, token: NormToken, horizon: Instant) -> Outcome:
    """Conformed once a recorded action of the right type by the right actor
    satisfies the constraint; violated once the horizon passes the window
    bound with no such action; pending in between."""
    if token.fluent.negated or token.fluent.kind != "obl":
        raise JudgmentError(f"not an obligation token: {token}")
    window = window_upper_bound(token.tc, kb.situations[token.situation].time)
    if not valid_wrt(kb, token.norm_id, token.situation):
        return Outcome(Verdict.INAPPLICABLE, False, (), window)
    hits = _satisfying_actions(kb, token)
    if hits:
        return Outcome(Verdict.CONFORMED, True, tuple(a.id for a in hits), window)
    if window.closed_at(horizon):
        return Outcome(Verdict.VIOLATED, True, (), window)
    return Outcome(Verdict.PENDING, True, (), window)


def judge_prohibition(kb: KnowledgeBase, token: NormToken, horizon: Instant) -> Outcome:
    """Violated as soon as any recorded matching action satisfies the
    constraint; conformed once the horizon passes the window bound; an
    unbounded window never finalizes, it stays provisionally conforming."""
    if token.fluent.negated or token.fluent.kind != "pro":
        raise JudgmentError(f"not a prohibition token: {token}")
    window = window_upper_bound(token.tc, kb.situations[token.situation].time)
    if not valid_wrt(kb, token.norm_id, token.situation):
        return Outcome(Verdict.INAPPLICABLE, False, (), window)
    hits = _satisfying_actions(kb, token)
    if hits:
        return Outcome(Verdict.VIOLATED, True, tuple(a.id for a in hits), window)
    if window.closed_at(horizon):
        return Outcome(Verdict.CONFORMED, True, (), window)
    return Outcome(Verdict.PENDING, True, (), window, provisional=True)


def judge_permission(token: NormToken) -> Outcome:
    """A permission needs no action to be conformed to."""
    if not token.fluent.negated:
        raise JudgmentError(f"not a permission token: {token}")
    return Outcome(Verdict.CONFORMED, True)


def judge(kb: KnowledgeBase, token: NormToken, horizon: Instant) -> Outcome:
    if token.fluent.negated:
        return judge_permission(token)
    if token.fluent.kind == "obl":
        return judge_obligation(kb, token, horizon)
    return judge_prohibition(kb, token, horizon)


# -- reports ---------------------------------------------------------------


@dataclass(frozen=True)
class ReportEntry:
    token: NormToken
    outcome: Outcome


@dataclass
class ComplianceReport:
    horizon: Instant
    entries: list[ReportEntry] = field(default_factory=list)
    findings: list[Finding] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def counts(self) -> dict[str, int]:
        out = {v.value.lower(): 0 for v in Verdict}
        for entry in self.entries:
            out[entry.outcome.verdict.value.lower()] += 1
        return out

    @property
    def has_violations(self) -> bool:
        return any(e.outcome.verdict is Verdict.VIOLATED for e in self.entries)


def run_report(kb: KnowledgeBase, rules: list[NormRule], horizon: Instant) -> ComplianceReport:
    """Instantiate every rule over the store and judge every token at the
    horizon. Deterministic for a given (kb, rules, horizon)."""
    report = ComplianceReport(horizon)
    noted: set[str] = set()
    for rule in rules:
        if kb.validity(rule.norm_id) is None and rule.norm_id not in noted:
            noted.add(rule.norm_id)
            report.notes.append(
                f"no enactment recorded for norm {rule.norm_id}; its tokens cannot be valid"
            )
        for token in instantiate(kb, rule):
            report.entries.append(ReportEntry(token, judge(kb, token, horizon)))
    report.findings = check_consistency(kb)
    return report


def format_record(entry: ReportEntry, horizon: Instant) -> str:
    """Machine-readable report line; field layout is part of the interface."""
    from .dsl import print_tc

    token, outcome = entry.token, entry.outcome
    evidence = outcome.actions[0] if outcome.actions else "none"
    return (
        f"outcome={outcome.verdict.value} agent={token.agent} norm={token.norm_id} "
        f"situation={token.situation} tc=\"{print_tc(token.tc)}\" "
        f"evidence={evidence} window={outcome.window} horizon={horizon}"
    )


def format_records(report: ComplianceReport) -> list[str]:
    lines = [format_record(entry, report.horizon) for entry in report.entries]
    c = report.counts()
    lines.append(
        "summary conformed={conformed} violated={violated} pending={pending} "
        "inapplicable={inapplicable}".format(**c)
    )
    return lines
