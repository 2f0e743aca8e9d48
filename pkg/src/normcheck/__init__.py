"""normcheck: a compliance engine for timed norms.

Norms are identified rules whose effects are obligations, prohibitions, or
permissions over action types, constrained in time relative to a warranting
situation. Given a knowledge base of situations, events, processes, and
recorded agent actions, the engine infers which named norm each agent
conformed to, violated, or is still pending on at a query horizon.
"""

from .diagnostics import ParseDiagnostic, SourceSpan
from .dsl import (
    parse_facts,
    parse_norms,
    parse_tc,
    print_fact,
    print_fact_file,
    print_norm_file,
    print_rule,
    print_tc,
)
from .engine import (
    Binding,
    ComplianceReport,
    JudgmentError,
    Outcome,
    ReportEntry,
    Verdict,
    WindowBound,
    format_record,
    format_records,
    instantiate,
    judge,
    judge_obligation,
    judge_permission,
    judge_prohibition,
    match_body,
    match_term,
    run_report,
    substitute,
    window_upper_bound,
)
from .loader import LoadResult, load_paths, load_texts
from .norms import (
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
    TimeTerm,
    ValidityRecord,
    rule_safety_errors,
    valid_wrt,
)
from .ontology import (
    ActionToken,
    DomainFact,
    EventToken,
    Finding,
    HoldsFact,
    ImplyFact,
    KnowledgeBase,
    KnowledgeBaseError,
    ProcessCheckError,
    ProcessToken,
    Situation,
    Term,
    atom,
    build_kb,
    check_consistency,
    check_process,
    occurring,
    prog,
)
from .temporal import (
    AllenRelation,
    And,
    B,
    Basic,
    E,
    Instant,
    Interval,
    Not,
    Or,
    PredicateArityError,
    TemporalConstraint,
    TemporalError,
    TimePointImage,
    UnsupportedRelationError,
    allen_relation,
    allen_to_tc,
    and_,
    eq,
    eval_constraint,
    ge,
    gt,
    interval_pred,
    le,
    lt,
    not_,
    or_,
    resolve_tpi,
    tdisp,
)

__version__ = "0.1.0"
