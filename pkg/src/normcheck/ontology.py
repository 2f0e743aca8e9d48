"""Ground terms, situations, events, processes, actions, and the assertion
store that rule bodies and judgments are evaluated against.

Identifier convention (Prolog style): a bare symbol starting with an
uppercase letter is a variable; everything else is a constant. Asserted
facts must be ground.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Iterable, Union

from .temporal import Interval, allen_relation, AllenRelation

if TYPE_CHECKING:
    from .norms import ValidityRecord


class KnowledgeBaseError(Exception):
    """Rejected assertion: dangling reference, conflicting redeclaration,
    or a non-ground fact."""


class ProcessCheckError(Exception):
    """Process characterization cannot be decided for the given ids."""


@dataclass(frozen=True)
class Term:
    """A functional term. Atoms are terms with no arguments."""

    functor: str
    args: tuple["Term", ...] = ()

    @property
    def is_variable(self) -> bool:
        return not self.args and self.functor[:1].isupper()

    def is_ground(self) -> bool:
        if self.is_variable:
            return False
        return all(a.is_ground() for a in self.args)

    def variables(self) -> set[str]:
        if self.is_variable:
            return {self.functor}
        out: set[str] = set()
        for a in self.args:
            out |= a.variables()
        return out

    def __str__(self) -> str:
        if not self.args:
            return self.functor
        return f"{self.functor}({','.join(str(a) for a in self.args)})"


FluentTerm = Term
ActionType = Term


def atom(name: str) -> Term:
    return Term(name)


def occurring(event_id: str) -> Term:
    """Fluent stating that the given event is occurring."""
    return Term("occurring", (Term(event_id),))


def prog(process_id: str) -> Term:
    """Fluent stating that the given process is in progress."""
    return Term("prog", (Term(process_id),))


@dataclass(frozen=True)
class Situation:
    id: str
    time: Interval


@dataclass(frozen=True)
class EventToken:
    id: str
    time: Interval
    event_type: str


@dataclass(frozen=True)
class ProcessToken:
    id: str
    time: Interval
    process_type: str
    # Optional two-part split of the process situation into a head situation
    # and a tail sub-process situation; longer chains nest via sub-processes.
    decomposition: tuple[str, ...] | None = None


@dataclass(frozen=True)
class ActionToken:
    id: str
    actor: str
    action_type: Term
    time: Interval


@dataclass(frozen=True)
class HoldsFact:
    fluent: Term
    situation_id: str
    fully: bool = False  # fully=True is the "completely describes" relation


@dataclass(frozen=True)
class ImplyFact:
    antecedent: Term
    consequent: Term


@dataclass(frozen=True)
class DomainFact:
    """A situation-independent ground predicate, e.g. university(ui)."""

    pred: Term


Fact = Union[Situation, EventToken, ProcessToken, ActionToken, HoldsFact, ImplyFact, DomainFact]

_ENTITY_KINDS = (Situation, EventToken, ProcessToken, ActionToken)


@dataclass(frozen=True)
class Finding:
    """One consistency breach. Findings are data, not exceptions."""

    code: str
    subjects: tuple[str, ...]
    message: str

    def __str__(self) -> str:
        return f"{self.code} [{', '.join(self.subjects)}]: {self.message}"


# finding codes
EVENT_TIME_MISMATCH = "event-time-mismatch"
PROCESS_TIME_MISMATCH = "process-time-mismatch"
CLOSED_DESCRIPTION = "closed-description"
DANGLING_REFERENCE = "dangling-reference"


class KnowledgeBase:
    """Assertion store. Built by a single writer; queries are read-only and
    safe to run concurrently once loading is done."""

    def __init__(self) -> None:
        self.situations: dict[str, Situation] = {}
        self.events: dict[str, EventToken] = {}
        self.processes: dict[str, ProcessToken] = {}
        self.actions: dict[str, ActionToken] = {}
        self.holds: set[tuple[Term, str]] = set()
        self.holds_fully: set[tuple[Term, str]] = set()
        self.implications: set[tuple[Term, Term]] = set()
        self.domain_facts: set[Term] = set()
        self.validities: dict[str, "ValidityRecord"] = {}

    # -- loading ---------------------------------------------------------

    def assert_fact(self, fact: Fact) -> "KnowledgeBase":
        """Extend the store with one fact. Duplicate facts are no-ops;
        conflicting redeclarations and dangling references are rejected."""
        if isinstance(fact, Situation):
            self._declare(self.situations, "situation", fact)
        elif isinstance(fact, EventToken):
            self._declare(self.events, "event", fact)
        elif isinstance(fact, ProcessToken):
            self._declare(self.processes, "process", fact)
        elif isinstance(fact, ActionToken):
            if not fact.action_type.is_ground():
                raise KnowledgeBaseError(f"action {fact.id} has a non-ground type")
            self._declare(self.actions, "action", fact)
        elif isinstance(fact, HoldsFact):
            self._check_fluent(fact.fluent)
            if fact.situation_id not in self.situations:
                raise KnowledgeBaseError(
                    f"assertion about unknown situation {fact.situation_id}"
                )
            target = self.holds_fully if fact.fully else self.holds
            target.add((fact.fluent, fact.situation_id))
        elif isinstance(fact, ImplyFact):
            for side in (fact.antecedent, fact.consequent):
                if not side.is_ground():
                    raise KnowledgeBaseError(f"implication over non-ground fluent {side}")
            self.implications.add((fact.antecedent, fact.consequent))
        elif isinstance(fact, DomainFact):
            if not fact.pred.is_ground():
                raise KnowledgeBaseError(f"non-ground domain fact {fact.pred}")
            self.domain_facts.add(fact.pred)
        else:
            raise TypeError(f"not a fact: {fact!r}")
        return self

    def _declare(self, table: dict, kind: str, token) -> None:
        existing = table.get(token.id)
        if existing is None:
            table[token.id] = token
        elif existing != token:
            raise KnowledgeBaseError(
                f"{kind} {token.id} redeclared with different attributes"
            )

    def _check_fluent(self, fluent: Term) -> None:
        if not fluent.is_ground():
            raise KnowledgeBaseError(f"asserted fluent {fluent} is not ground")
        if fluent.functor == "occurring" and len(fluent.args) == 1:
            eid = fluent.args[0].functor
            if eid not in self.events:
                raise KnowledgeBaseError(f"occurring refers to unknown event {eid}")
        if fluent.functor == "prog" and len(fluent.args) == 1:
            pid = fluent.args[0].functor
            if pid not in self.processes:
                raise KnowledgeBaseError(f"prog refers to unknown process {pid}")

    def add_validity(self, record: "ValidityRecord") -> None:
        existing = self.validities.get(record.norm_id)
        if existing is not None and existing != record:
            raise KnowledgeBaseError(f"norm {record.norm_id} enacted more than once")
        self.validities[record.norm_id] = record

    def validity(self, norm_id: str) -> "ValidityRecord | None":
        return self.validities.get(norm_id)

    # -- queries ---------------------------------------------------------

    def imply_closure(self, fluent: Term) -> set[Term]:
        """Reflexive-transitive closure of the declared implication pairs.
        Cycles are fine; the declared set is finite."""
        out = {fluent}
        frontier = [fluent]
        while frontier:
            f = frontier.pop()
            for antecedent, consequent in self.implications:
                if antecedent == f and consequent not in out:
                    out.add(consequent)
                    frontier.append(consequent)
        return out

    def fluents_holding(self, situation_id: str) -> set[Term]:
        """Every fluent that holds in the situation: explicit partial
        assertions, explicit full descriptions, and whatever the full
        descriptions imply."""
        out = {f for (f, sid) in self.holds if sid == situation_id}
        for f, sid in self.holds_fully:
            if sid == situation_id:
                out |= self.imply_closure(f)
        return out

    def query_holds(self, fluent: Term, situation_id: str) -> bool:
        if situation_id not in self.situations:
            raise KnowledgeBaseError(f"unknown situation {situation_id}")
        return fluent in self.fluents_holding(situation_id)


def build_kb(facts: Iterable[Fact]) -> KnowledgeBase:
    """Assemble a knowledge base. Entity declarations are asserted before
    other assertions so that record order in fact files does not matter."""
    kb = KnowledgeBase()
    deferred = []
    for fact in facts:
        if isinstance(fact, _ENTITY_KINDS):
            kb.assert_fact(fact)
        else:
            deferred.append(fact)
    for fact in deferred:
        kb.assert_fact(fact)
    return kb


def check_consistency(kb: KnowledgeBase) -> list[Finding]:
    """Report every breach of the store's own laws: occurrence fluents must
    agree with their situation's time; a fully describing fluent closes the
    set of explicitly asserted fluents to its implication closure; all
    referenced ids must resolve."""
    findings: list[Finding] = []

    def described_time(fluent: Term, sid: str) -> None:
        if fluent.functor == "occurring" and len(fluent.args) == 1:
            eid = fluent.args[0].functor
            event = kb.events.get(eid)
            if event is None:
                findings.append(Finding(DANGLING_REFERENCE, (eid, sid), f"occurring({eid}) in {sid} names an unknown event"))
            elif event.time != kb.situations[sid].time:
                findings.append(
                    Finding(
                        EVENT_TIME_MISMATCH,
                        (eid, sid),
                        f"event {eid} spans {event.time} but situation {sid} spans {kb.situations[sid].time}",
                    )
                )
        elif fluent.functor == "prog" and len(fluent.args) == 1:
            pid = fluent.args[0].functor
            process = kb.processes.get(pid)
            if process is None:
                findings.append(Finding(DANGLING_REFERENCE, (pid, sid), f"prog({pid}) in {sid} names an unknown process"))
            elif process.time != kb.situations[sid].time:
                findings.append(
                    Finding(
                        PROCESS_TIME_MISMATCH,
                        (pid, sid),
                        f"process {pid} spans {process.time} but situation {sid} spans {kb.situations[sid].time}",
                    )
                )

    assertions = sorted(kb.holds | kb.holds_fully, key=lambda pair: (pair[1], str(pair[0])))
    for fluent, sid in assertions:
        if sid not in kb.situations:
            findings.append(Finding(DANGLING_REFERENCE, (sid,), f"assertion about unknown situation {sid}"))
            continue
        described_time(fluent, sid)

    for fluent, sid in sorted(kb.holds_fully, key=lambda pair: (pair[1], str(pair[0]))):
        if sid not in kb.situations:
            continue
        closure = kb.imply_closure(fluent)
        for other, other_sid in sorted(kb.holds, key=lambda pair: (pair[1], str(pair[0]))):
            if other_sid == sid and other != fluent and other not in closure:
                findings.append(
                    Finding(
                        CLOSED_DESCRIPTION,
                        (sid, str(fluent), str(other)),
                        f"{fluent} fully describes {sid} but does not imply the asserted {other}",
                    )
                )

    for pid in sorted(kb.processes):
        for sid in kb.processes[pid].decomposition or ():
            if sid not in kb.situations:
                findings.append(
                    Finding(
                        DANGLING_REFERENCE,
                        (pid, sid),
                        f"decomposition of process {pid} names unknown situation {sid}",
                    )
                )

    return findings


def check_process(kb: KnowledgeBase, process_id: str, situation_id: str) -> bool:
    """Decide whether the situation is fully characterized by the process:
    either a single event occurrence fully describes it, or the recorded
    head/tail decomposition gives an event-or-fluent head meeting a
    sub-process tail such that the two cover the situation, recursively."""
    process = kb.processes.get(process_id)
    if process is None:
        raise ProcessCheckError(f"unknown process {process_id}")
    situation = kb.situations.get(situation_id)
    if situation is None:
        raise ProcessCheckError(f"unknown situation {situation_id}")
    if (prog(process_id), situation_id) not in kb.holds_fully:
        raise ProcessCheckError(
            f"prog({process_id}) is not asserted to fully describe {situation_id}"
        )
    return _characterized(kb, process, situation, set())


def _event_described(kb: KnowledgeBase, situation_id: str) -> bool:
    return any(
        sid == situation_id and f.functor == "occurring" and len(f.args) == 1
        for f, sid in kb.holds_fully
    )


def _characterized(
    kb: KnowledgeBase, process: ProcessToken, situation: Situation, seen: set[tuple[str, str]]
) -> bool:
    key = (process.id, situation.id)
    if key in seen:
        return False
    seen = seen | {key}

    if _event_described(kb, situation.id):
        return True
    if process.decomposition is None:
        raise ProcessCheckError(
            f"process {process.id} has no decomposition and no single event describes {situation.id}"
        )
    if len(process.decomposition) != 2:
        raise ProcessCheckError(
            f"decomposition of {process.id} must name a head and a tail situation; "
            "longer chains nest via sub-processes"
        )
    head_id, tail_id = process.decomposition
    head = kb.situations.get(head_id)
    tail = kb.situations.get(tail_id)
    if head is None or tail is None:
        raise ProcessCheckError(f"decomposition of {process.id} names unknown situations")

    # head must be fully described by an event occurrence or a plain fluent
    if not any(sid == head_id for _, sid in kb.holds_fully):
        return False
    if not _covers(head.time, tail.time, situation.time):
        return False

    # tail must carry a sub-process that recursively characterizes it
    sub_ids = {
        f.args[0].functor
        for f, sid in (kb.holds | kb.holds_fully)
        if sid == tail_id and f.functor == "prog" and len(f.args) == 1
    }
    for sub_id in sorted(sub_ids):
        sub = kb.processes.get(sub_id)
        if sub is not None and _characterized(kb, sub, tail, seen):
            return True
    return False


def _covers(head: Interval, tail: Interval, whole: Interval) -> bool:
    return (
        allen_relation(head, whole) is AllenRelation.STARTS
        and allen_relation(tail, whole) is AllenRelation.FINISHES
        and allen_relation(head, tail) is AllenRelation.MEETS
    )
