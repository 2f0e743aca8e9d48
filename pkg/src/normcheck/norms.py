"""Identified norm rules, normative fluents, ground norm tokens, and
enactment-based validity.

A norm rule is a logic-program clause: its head is a token template (agent,
normative fluent, situation, temporal constraint, norm id) and its body
describes the warranting situation. Every token inferred from a rule
carries that rule's id, so judgments can name the norm involved.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

from .diagnostics import SourceSpan
from .ontology import KnowledgeBase, KnowledgeBaseError, Term
from .temporal import Instant, TemporalConstraint


class RuleSafetyError(Exception):
    """Rule violates the binding discipline (unbound head variable, or a
    negated/interval literal over unbound variables)."""


@dataclass(frozen=True)
class NormativeFluent:
    """The effect of a norm: an obligation or prohibition over an action
    type, possibly negated. A negated fluent is a permission and can never
    be violated."""

    kind: str  # "obl" or "pro"
    action_type: Term
    negated: bool = False

    def __post_init__(self) -> None:
        if self.kind not in ("obl", "pro"):
            raise ValueError(f"normative fluent kind must be obl or pro, got {self.kind!r}")

    def negate(self) -> "NormativeFluent":
        # double negation cancels out by construction
        return NormativeFluent(self.kind, self.action_type, not self.negated)

    @property
    def is_permission(self) -> bool:
        return self.negated

    def __str__(self) -> str:
        sign = "~" if self.negated else ""
        return f"{sign}{self.kind}({self.action_type})"


@dataclass(frozen=True)
class HoldsLit:
    """Body literal: the pattern holds (or fully describes, when fully=True)
    the situation bound to the given variable."""

    pattern: Term
    situation_var: str
    fully: bool = False

    def __str__(self) -> str:
        star = "**" if self.fully else ""
        return f"holds{star}({self.pattern},{self.situation_var})"


@dataclass(frozen=True)
class EventTypeLit:
    var: str
    type_name: str

    def __str__(self) -> str:
        return f"event-type({self.var},{self.type_name})"


@dataclass(frozen=True)
class ProcessTypeLit:
    var: str
    type_name: str

    def __str__(self) -> str:
        return f"process-type({self.var},{self.type_name})"


@dataclass(frozen=True)
class TimeTerm:
    """timeS/timeE/timeP applied to a bound variable."""

    func: str  # timeS, timeE or timeP
    var: str

    def __str__(self) -> str:
        return f"{self.func}({self.var})"


@dataclass(frozen=True)
class IntervalLit:
    pred: str  # within, subinterval or cover
    args: tuple[TimeTerm, ...]

    def __str__(self) -> str:
        return f"{self.pred}({','.join(str(a) for a in self.args)})"


@dataclass(frozen=True)
class DomainLit:
    pred: Term

    def __str__(self) -> str:
        return str(self.pred)


@dataclass(frozen=True)
class NegatedLit:
    literal: "PositiveLiteral"

    def __str__(self) -> str:
        return f"not {self.literal}"


PositiveLiteral = Union[HoldsLit, EventTypeLit, ProcessTypeLit, IntervalLit, DomainLit]
BodyLiteral = Union[PositiveLiteral, NegatedLit]


def literal_variables(lit: BodyLiteral) -> set[str]:
    if isinstance(lit, NegatedLit):
        return literal_variables(lit.literal)
    if isinstance(lit, HoldsLit):
        return lit.pattern.variables() | {lit.situation_var}
    if isinstance(lit, (EventTypeLit, ProcessTypeLit)):
        return {lit.var}
    if isinstance(lit, IntervalLit):
        return {t.var for t in lit.args}
    if isinstance(lit, DomainLit):
        return lit.pred.variables()
    raise TypeError(f"not a body literal: {lit!r}")


def literal_bindable_variables(lit: BodyLiteral) -> set[str]:
    """Variables a literal can bind when evaluated. Interval predicates and
    negated literals only test, they never bind."""
    if isinstance(lit, (NegatedLit, IntervalLit)):
        return set()
    return literal_variables(lit)


@dataclass(frozen=True)
class NormRule:
    norm_id: str
    agent: Term  # a variable or a constant agent id
    fluent: NormativeFluent  # may contain variables before instantiation
    situation_var: str
    tc: TemporalConstraint
    body: tuple[BodyLiteral, ...]
    span: SourceSpan | None = field(default=None, compare=False)

    def head_variables(self) -> set[str]:
        out = set(self.fluent.action_type.variables())
        if self.agent.is_variable:
            out.add(self.agent.functor)
        out.add(self.situation_var)
        return out


def rule_safety_errors(rule: NormRule) -> list[str]:
    """Check the binding discipline: negated and interval literals may only
    use variables bound by earlier positive literals, and every head
    variable must be bound by the body."""
    errors: list[str] = []
    bound: set[str] = set()
    for lit in rule.body:
        if isinstance(lit, (NegatedLit, IntervalLit)):
            missing = literal_variables(lit) - bound
            if missing:
                kind = "negated" if isinstance(lit, NegatedLit) else "interval"
                errors.append(
                    f"{kind} literal {lit} uses variables not bound earlier: "
                    + ", ".join(sorted(missing))
                )
        bound |= literal_bindable_variables(lit)
    for var in sorted(rule.head_variables() - bound):
        errors.append(f"head variable {var} is not bound by the body")
    return errors


@dataclass(frozen=True)
class ValidityRecord:
    """External time of a norm: its enactment instant and any repeals."""

    norm_id: str
    enact: Instant | None
    repeals: frozenset[int] = frozenset()


@dataclass(frozen=True)
class NormToken:
    """Ground inference from a norm rule: the agent owes the fluent in the
    situation, within the temporal constraint, on account of the norm."""

    agent: str
    fluent: NormativeFluent
    situation: str
    tc: TemporalConstraint
    norm_id: str

    def __str__(self) -> str:
        return f"({self.agent}, {self.fluent}, {self.situation}, {self.norm_id})"


def valid_wrt(kb: KnowledgeBase, norm_id: str, situation_id: str) -> bool:
    """A norm binds a situation when it was enacted no later than the
    situation's start and no repeal falls between the enactment and the
    situation's end. A norm with no enactment record binds nothing."""
    situation = kb.situations.get(situation_id)
    if situation is None:
        raise KnowledgeBaseError(f"unknown situation {situation_id}")
    record = kb.validity(norm_id)
    if record is None or record.enact is None:
        return False
    if record.enact > situation.time.begin:
        return False
    return not any(record.enact <= r <= situation.time.end for r in record.repeals)
