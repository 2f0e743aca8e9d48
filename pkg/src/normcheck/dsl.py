"""Parser and serializer for the norm definition language and the fact
format.

Norm files (.norm) hold rules plus enact/repeal directives:

    norm OB101 {
      agent A;
      effect obl(arrive-at(V));
      situation S;
      tc and(le(E,tdisp(B,10)),ge(E,B));
      when {
        holds**(occurring(Ev), S);
        event-type(Ev, class);
        holds(venue(Ev, V), S);
        holds(role(A, teach), S);
      }
    }
    enact OB101 0;

Fact files (.facts) hold one record per line:

    situation s1 [600,660]
    event e1 [600,660] type class
    process sem1 [100,220] type semester
    action a1 actor bob type arrive-at(room5) [598,605]
    holds** occurring(e1) s1
    holds venue(e1,room5) s1
    imply occurring(e1) venue(e1,room5)
    fact university(ui)

Identifiers starting with an uppercase letter are variables; `#` starts a
comment. Parsers recover at `;` and `}` so several errors can be reported
per file, and every diagnostic carries a source span.
"""

from __future__ import annotations

from dataclasses import dataclass

from .diagnostics import ParseDiagnostic, SourceSpan, sort_diagnostics
from .norms import (
    BodyLiteral,
    DomainLit,
    EventTypeLit,
    HoldsLit,
    IntervalLit,
    NegatedLit,
    NormRule,
    NormativeFluent,
    ProcessTypeLit,
    TimeTerm,
    ValidityRecord,
    rule_safety_errors,
)
from .ontology import (
    ActionToken,
    DomainFact,
    EventToken,
    Fact,
    HoldsFact,
    ImplyFact,
    ProcessToken,
    Situation,
    Term,
)
from .temporal import (
    And,
    Basic,
    Interval,
    Not,
    Or,
    TemporalConstraint,
    TemporalError,
    TimePointImage,
)

_RELS = ("eq", "ge", "gt", "le", "lt")
_TIME_FUNCS = ("timeS", "timeE", "timeP")
_INTERVAL_PREDS = {"within": 2, "subinterval": 2, "cover": 3}


# -- lexer -------------------------------------------------------------------


@dataclass(frozen=True)
class _Token:
    kind: str  # ident, int, punct, eof
    text: str
    line: int
    col: int

    def span(self, file: str) -> SourceSpan:
        return SourceSpan(file, self.line, self.col, self.col + max(len(self.text), 1))


_PUNCT = set("{}()[],;~")


def _tokenize(text: str, file: str, first_line: int = 1) -> tuple[list[_Token], list[ParseDiagnostic]]:
    tokens: list[_Token] = []
    diags: list[ParseDiagnostic] = []
    line, col = first_line, 1
    i, n = 0, len(text)

    def is_ident_start(c: str) -> bool:
        return c.isalpha() or c == "_"

    def is_ident_char(c: str) -> bool:
        return c.isalnum() or c == "_"

    while i < n:
        c = text[i]
        if c == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if c in " \t\r":
            i += 1
            col += 1
            continue
        if c == "#":
            while i < n and text[i] != "\n":
                i += 1
            continue
        start_col = col
        if is_ident_start(c):
            j = i + 1
            while j < n:
                if is_ident_char(text[j]):
                    j += 1
                elif text[j] == "-" and j + 1 < n and is_ident_char(text[j + 1]):
                    j += 2
                else:
                    break
            word = text[i:j]
            if word == "holds" and text[j : j + 2] == "**":
                word = "holds**"
                j += 2
            tokens.append(_Token("ident", word, line, start_col))
            col += j - i
            i = j
            continue
        if c.isdigit() or (c == "-" and i + 1 < n and text[i + 1].isdigit()):
            j = i + 1
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(_Token("int", text[i:j], line, start_col))
            col += j - i
            i = j
            continue
        if c in _PUNCT:
            tokens.append(_Token("punct", c, line, start_col))
            i += 1
            col += 1
            continue
        diags.append(
            ParseDiagnostic(
                "error",
                SourceSpan(file, line, start_col, start_col + 1),
                f"unexpected character {c!r}",
            )
        )
        i += 1
        col += 1
    tokens.append(_Token("eof", "", line, col))
    return tokens, diags


# -- token cursor ------------------------------------------------------------


class _ParseError(Exception):
    def __init__(self, diag: ParseDiagnostic):
        super().__init__(str(diag))
        self.diag = diag


class _Cursor:
    def __init__(self, tokens: list[_Token], file: str):
        self.tokens = tokens
        self.file = file
        self.i = 0

    def peek(self) -> _Token:
        return self.tokens[self.i]

    def at(self, kind: str, text: str | None = None) -> bool:
        tok = self.peek()
        return tok.kind == kind and (text is None or tok.text == text)

    def at_eof(self) -> bool:
        return self.peek().kind == "eof"

    def take(self) -> _Token:
        tok = self.tokens[self.i]
        if tok.kind != "eof":
            self.i += 1
        return tok

    def error(self, message: str, expected: tuple[str, ...] = ()) -> _ParseError:
        tok = self.peek()
        return _ParseError(ParseDiagnostic("error", tok.span(self.file), message, expected))

    def expect(self, kind: str, text: str | None = None, what: str | None = None) -> _Token:
        if self.at(kind, text):
            return self.take()
        wanted = text if text is not None else (what or kind)
        got = self.peek().text or "end of input"
        raise self.error(f"expected {wanted}, got {got!r}", (wanted,))

    def expect_ident(self, what: str = "identifier") -> _Token:
        return self.expect("ident", None, what)

    def expect_variable(self, what: str = "variable") -> _Token:
        tok = self.expect_ident(what)
        if not tok.text[:1].isupper():
            raise _ParseError(
                ParseDiagnostic(
                    "error",
                    tok.span(self.file),
                    f"expected a variable (uppercase identifier), got {tok.text!r}",
                )
            )
        return tok


# -- shared term / tc parsing -------------------------------------------------


def _parse_term(cur: _Cursor) -> Term:
    tok = cur.peek()
    if tok.kind == "int":
        cur.take()
        return Term(tok.text)
    head = cur.expect_ident("term")
    if not cur.at("punct", "("):
        return Term(head.text)
    cur.take()
    args = [_parse_term(cur)]
    while cur.at("punct", ","):
        cur.take()
        args.append(_parse_term(cur))
    cur.expect("punct", ")")
    return Term(head.text, tuple(args))


def _parse_tpi(cur: _Cursor) -> TimePointImage:
    tok = cur.expect_ident("B, E or tdisp")
    if tok.text in ("B", "E"):
        return TimePointImage(tok.text)
    if tok.text == "tdisp":
        cur.expect("punct", "(")
        inner = _parse_tpi(cur)
        cur.expect("punct", ",")
        amount = int(cur.expect("int").text)
        cur.expect("punct", ")")
        return TimePointImage(inner.base, inner.offset + amount)
    raise _ParseError(
        ParseDiagnostic(
            "error", tok.span(cur.file), f"expected an endpoint image, got {tok.text!r}",
            ("B", "E", "tdisp"),
        )
    )


def _parse_tc_node(cur: _Cursor) -> TemporalConstraint:
    tok = cur.expect_ident("temporal constraint")
    if tok.text in ("and", "or"):
        cur.expect("punct", "(")
        left = _parse_tc_node(cur)
        cur.expect("punct", ",")
        right = _parse_tc_node(cur)
        cur.expect("punct", ")")
        return And(left, right) if tok.text == "and" else Or(left, right)
    if tok.text == "not":
        cur.expect("punct", "(")
        inner = _parse_tc_node(cur)
        cur.expect("punct", ")")
        return Not(inner)
    if tok.text in _RELS:
        cur.expect("punct", "(")
        left = _parse_tpi(cur)
        cur.expect("punct", ",")
        right = _parse_tpi(cur)
        cur.expect("punct", ")")
        return Basic(tok.text, left, right)
    raise _ParseError(
        ParseDiagnostic(
            "error", tok.span(cur.file),
            f"expected a temporal constraint, got {tok.text!r}",
            ("and", "or", "not") + _RELS,
        )
    )


def parse_tc(text: str) -> TemporalConstraint:
    """Parse a constraint from its function-call notation. Raises ValueError
    on malformed input."""
    tokens, diags = _tokenize(text, "<tc>")
    if diags:
        raise ValueError(str(diags[0]))
    cur = _Cursor(tokens, "<tc>")
    try:
        tc = _parse_tc_node(cur)
        if not cur.at_eof():
            raise cur.error(f"trailing input after constraint: {cur.peek().text!r}")
    except _ParseError as exc:
        raise ValueError(str(exc.diag)) from None
    return tc


# -- norm file parsing ---------------------------------------------------------


def _parse_literal(cur: _Cursor) -> BodyLiteral:
    negated = False
    if cur.at("ident", "not"):
        cur.take()
        negated = True
    name_tok = cur.expect_ident("body literal")
    name = name_tok.text
    if name in ("holds", "holds**"):
        cur.expect("punct", "(")
        pattern = _parse_term(cur)
        cur.expect("punct", ",")
        sit = cur.expect_variable("situation variable")
        cur.expect("punct", ")")
        lit: BodyLiteral = HoldsLit(pattern, sit.text, fully=name == "holds**")
    elif name in ("event-type", "process-type"):
        cur.expect("punct", "(")
        var = cur.expect_variable()
        cur.expect("punct", ",")
        type_tok = cur.expect_ident("type name")
        cur.expect("punct", ")")
        cls = EventTypeLit if name == "event-type" else ProcessTypeLit
        lit = cls(var.text, type_tok.text)
    elif name in _INTERVAL_PREDS:
        cur.expect("punct", "(")
        args = [_parse_time_term(cur)]
        while cur.at("punct", ","):
            cur.take()
            args.append(_parse_time_term(cur))
        cur.expect("punct", ")")
        if len(args) != _INTERVAL_PREDS[name]:
            raise _ParseError(
                ParseDiagnostic(
                    "error", name_tok.span(cur.file),
                    f"{name} takes {_INTERVAL_PREDS[name]} time terms, got {len(args)}",
                )
            )
        lit = IntervalLit(name, tuple(args))
    else:
        cur.expect("punct", "(")
        args = [_parse_term(cur)]
        while cur.at("punct", ","):
            cur.take()
            args.append(_parse_term(cur))
        cur.expect("punct", ")")
        lit = DomainLit(Term(name, tuple(args)))
    return NegatedLit(lit) if negated else lit


def _parse_time_term(cur: _Cursor) -> TimeTerm:
    tok = cur.expect_ident("time term")
    if tok.text not in _TIME_FUNCS:
        raise _ParseError(
            ParseDiagnostic(
                "error", tok.span(cur.file),
                f"expected a time term, got {tok.text!r}", _TIME_FUNCS,
            )
        )
    cur.expect("punct", "(")
    var = cur.expect_variable()
    cur.expect("punct", ")")
    return TimeTerm(tok.text, var.text)


def _parse_fluent(cur: _Cursor) -> NormativeFluent:
    negations = 0
    while cur.at("punct", "~"):
        cur.take()
        negations += 1
    kind_tok = cur.expect_ident("obl or pro")
    if kind_tok.text not in ("obl", "pro"):
        raise _ParseError(
            ParseDiagnostic(
                "error", kind_tok.span(cur.file),
                f"expected obl or pro, got {kind_tok.text!r}", ("obl", "pro"),
            )
        )
    cur.expect("punct", "(")
    action = _parse_term(cur)
    cur.expect("punct", ")")
    return NormativeFluent(kind_tok.text, action, negated=negations % 2 == 1)


class _NormParser:
    def __init__(self, text: str, file: str):
        tokens, lex_diags = _tokenize(text, file)
        self.cur = _Cursor(tokens, file)
        self.file = file
        self.diags: list[ParseDiagnostic] = list(lex_diags)
        self.rules: list[NormRule] = []
        self.rule_spans: dict[str, SourceSpan] = {}
        self.enacts: dict[str, tuple[int, SourceSpan]] = {}
        self.repeals: dict[str, set[int]] = {}
        self.norm_order: list[str] = []

    def diag(self, err: _ParseError) -> None:
        self.diags.append(err.diag)

    def parse(self) -> tuple[list[NormRule], list[ValidityRecord], list[ParseDiagnostic]]:
        cur = self.cur
        while not cur.at_eof():
            if cur.at("ident", "norm"):
                self._parse_rule()
            elif cur.at("ident", "enact") or cur.at("ident", "repeal"):
                self._parse_directive()
            else:
                self.diag(cur.error(f"expected norm, enact or repeal, got {cur.peek().text!r}",
                                    ("norm", "enact", "repeal")))
                self._resync_top()
        self._check_rules()
        return self.rules, self._validity_records(), sort_diagnostics(self.diags)

    def _resync_top(self) -> None:
        depth = 0
        cur = self.cur
        while not cur.at_eof():
            if depth == 0 and cur.peek().kind == "ident" and cur.peek().text in ("norm", "enact", "repeal"):
                return
            tok = cur.take()
            if tok.text == "{":
                depth += 1
            elif tok.text == "}":
                depth = max(0, depth - 1)

    def _skip_clause(self) -> None:
        # recover at the next `;`; stop short of `}` so the rule can close
        cur = self.cur
        while not cur.at_eof() and not cur.at("punct", "}"):
            if cur.take().text == ";":
                return

    def _parse_rule(self) -> None:
        cur = self.cur
        try:
            cur.expect("ident", "norm")
            id_tok = cur.expect_ident("norm id")
            cur.expect("punct", "{")
        except _ParseError as err:
            self.diag(err)
            self._resync_top()
            return
        span = id_tok.span(self.file)
        fields: dict[str, object] = {}
        while not cur.at("punct", "}") and not cur.at_eof():
            if cur.at("punct", ";"):
                cur.take()
                continue
            try:
                kw = cur.expect_ident("clause keyword")
                if kw.text == "agent":
                    tok = cur.expect_ident("agent variable or id")
                    fields["agent"] = Term(tok.text)
                    cur.expect("punct", ";")
                elif kw.text == "effect":
                    fields["fluent"] = _parse_fluent(cur)
                    cur.expect("punct", ";")
                elif kw.text == "situation":
                    fields["situation"] = cur.expect_variable("situation variable").text
                    cur.expect("punct", ";")
                elif kw.text == "tc":
                    fields["tc"] = _parse_tc_node(cur)
                    cur.expect("punct", ";")
                elif kw.text == "when":
                    fields["body"] = self._parse_when()
                else:
                    raise _ParseError(
                        ParseDiagnostic(
                            "error", kw.span(self.file),
                            f"unknown clause {kw.text!r}",
                            ("agent", "effect", "situation", "tc", "when"),
                        )
                    )
            except _ParseError as err:
                self.diag(err)
                self._skip_clause()
        try:
            cur.expect("punct", "}")
        except _ParseError as err:
            self.diag(err)
            self._resync_top()

        missing = [k for k in ("agent", "fluent", "situation", "tc", "body") if k not in fields]
        if missing:
            names = {"fluent": "effect", "body": "when"}
            self.diags.append(
                ParseDiagnostic(
                    "error", span,
                    f"rule {id_tok.text} is missing clauses: "
                    + ", ".join(names.get(m, m) for m in missing),
                )
            )
            return
        first = self.rule_spans.get(id_tok.text)
        if first is not None:
            self.diags.append(
                ParseDiagnostic(
                    "error", span,
                    f"duplicate norm id {id_tok.text}; first defined at {first}",
                )
            )
            return
        self.rule_spans[id_tok.text] = span
        self.rules.append(
            NormRule(
                norm_id=id_tok.text,
                agent=fields["agent"],  # type: ignore[arg-type]
                fluent=fields["fluent"],  # type: ignore[arg-type]
                situation_var=fields["situation"],  # type: ignore[arg-type]
                tc=fields["tc"],  # type: ignore[arg-type]
                body=tuple(fields["body"]),  # type: ignore[arg-type]
                span=span,
            )
        )

    def _parse_when(self) -> list[BodyLiteral]:
        cur = self.cur
        cur.expect("punct", "{")
        literals: list[BodyLiteral] = []
        while not cur.at("punct", "}") and not cur.at_eof():
            try:
                literals.append(_parse_literal(cur))
                cur.expect("punct", ";")
            except _ParseError as err:
                self.diag(err)
                self._skip_clause()
        cur.expect("punct", "}")
        return literals

    def _parse_directive(self) -> None:
        cur = self.cur
        try:
            kw = cur.take()
            id_tok = cur.expect_ident("norm id")
            tick_tok = cur.expect("int", None, "instant")
            cur.expect("punct", ";")
        except _ParseError as err:
            self.diag(err)
            self._resync_top()
            return
        tick = int(tick_tok.text)
        nid = id_tok.text
        if nid not in self.norm_order:
            self.norm_order.append(nid)
        if kw.text == "enact":
            if nid in self.enacts:
                self.diags.append(
                    ParseDiagnostic(
                        "error", id_tok.span(self.file),
                        f"norm {nid} enacted more than once; first at {self.enacts[nid][1]}",
                    )
                )
            else:
                self.enacts[nid] = (tick, id_tok.span(self.file))
        else:
            self.repeals.setdefault(nid, set()).add(tick)
            enacted = self.enacts.get(nid)
            if enacted is not None and tick <= enacted[0]:
                self.diags.append(
                    ParseDiagnostic(
                        "error", id_tok.span(self.file),
                        f"repeal of {nid} at {tick} is not after its enactment at {enacted[0]}",
                    )
                )

    def _check_rules(self) -> None:
        for rule in self.rules:
            for problem in rule_safety_errors(rule):
                self.diags.append(
                    ParseDiagnostic("error", rule.span or SourceSpan(self.file, 1, 1, 1),
                                    f"rule {rule.norm_id}: {problem}")
                )

    def _validity_records(self) -> list[ValidityRecord]:
        records = []
        for nid in self.norm_order:
            enact = self.enacts.get(nid)
            repeals = frozenset(self.repeals.get(nid, set()))
            if enact is None and repeals:
                self.diags.append(
                    ParseDiagnostic(
                        "warning", SourceSpan(self.file, 1, 1, 1),
                        f"norm {nid} has repeals but no enactment",
                    )
                )
            records.append(ValidityRecord(nid, enact[0] if enact else None, repeals))
        return records


def parse_norms(text: str, file: str = "<norms>") -> tuple[list[NormRule], list[ValidityRecord], list[ParseDiagnostic]]:
    """Parse a norm file into rules, validity records, and diagnostics.
    Diagnostics of severity error mean the result must not be loaded."""
    return _NormParser(text, file).parse()


# -- fact file parsing ---------------------------------------------------------


def parse_facts(text: str, file: str = "<facts>") -> tuple[list[Fact], list[ParseDiagnostic]]:
    """Parse a fact file, one record per line. Records must be ground."""
    facts: list[Fact] = []
    diags: list[ParseDiagnostic] = []
    for line_no, raw in enumerate(text.splitlines(), 1):
        tokens, lex_diags = _tokenize(raw, file, first_line=line_no)
        diags.extend(lex_diags)
        if tokens[0].kind == "eof":
            continue
        cur = _Cursor(tokens, file)
        try:
            fact = _parse_record(cur)
            if not cur.at_eof():
                raise cur.error(f"trailing input after record: {cur.peek().text!r}")
            facts.append(fact)
        except _ParseError as err:
            diags.append(err.diag)
    return facts, sort_diagnostics(diags)


def _parse_record(cur: _Cursor) -> Fact:
    head = cur.expect_ident("record head")
    if head.text == "situation":
        sid = _expect_entity_id(cur)
        return Situation(sid, _parse_interval(cur))
    if head.text == "event":
        eid = _expect_entity_id(cur)
        iv = _parse_interval(cur)
        cur.expect("ident", "type")
        type_tok = cur.expect_ident("event type")
        return EventToken(eid, iv, type_tok.text)
    if head.text == "process":
        pid = _expect_entity_id(cur)
        iv = _parse_interval(cur)
        cur.expect("ident", "type")
        type_tok = cur.expect_ident("process type")
        decomposition = None
        if cur.at("ident", "decomp"):
            cur.take()
            parts = []
            while cur.peek().kind == "ident":
                parts.append(_expect_entity_id(cur))
            if not parts:
                raise cur.error("decomp needs at least one situation id")
            decomposition = tuple(parts)
        return ProcessToken(pid, iv, type_tok.text, decomposition)
    if head.text == "action":
        aid = _expect_entity_id(cur)
        cur.expect("ident", "actor")
        actor = _expect_entity_id(cur)
        cur.expect("ident", "type")
        action_type = _parse_ground_term(cur)
        return ActionToken(aid, actor, action_type, _parse_interval(cur))
    if head.text in ("holds", "holds**"):
        fluent = _parse_ground_term(cur)
        sid = _expect_entity_id(cur)
        return HoldsFact(fluent, sid, fully=head.text == "holds**")
    if head.text == "imply":
        antecedent = _parse_ground_term(cur)
        consequent = _parse_ground_term(cur)
        return ImplyFact(antecedent, consequent)
    if head.text == "fact":
        return DomainFact(_parse_ground_term(cur))
    raise _ParseError(
        ParseDiagnostic(
            "error", head.span(cur.file),
            f"unknown record head {head.text!r}",
            ("situation", "event", "process", "action", "holds", "holds**", "imply", "fact"),
        )
    )


def _expect_entity_id(cur: _Cursor) -> str:
    tok = cur.expect_ident("id")
    if tok.text[:1].isupper():
        raise _ParseError(
            ParseDiagnostic(
                "error", tok.span(cur.file),
                f"id {tok.text!r} looks like a variable; fact records are ground",
            )
        )
    return tok.text


def _parse_ground_term(cur: _Cursor) -> Term:
    start = cur.peek()
    term = _parse_term(cur)
    variables = term.variables()
    if variables:
        raise _ParseError(
            ParseDiagnostic(
                "error", start.span(cur.file),
                f"term {term} contains variables ({', '.join(sorted(variables))}); "
                "fact records are ground",
            )
        )
    return term


def _parse_interval(cur: _Cursor) -> Interval:
    open_tok = cur.expect("punct", "[")
    begin = int(cur.expect("int").text)
    cur.expect("punct", ",")
    end = int(cur.expect("int").text)
    cur.expect("punct", "]")
    try:
        return Interval(begin, end)
    except TemporalError as exc:
        raise _ParseError(
            ParseDiagnostic("error", open_tok.span(cur.file), str(exc))
        ) from None


# -- printers -------------------------------------------------------------------


def print_tc(tc: TemporalConstraint) -> str:
    """Canonical text for a constraint; parse_tc(print_tc(x)) == x."""
    if isinstance(tc, Basic):
        return f"{tc.rel}({tc.left},{tc.right})"
    if isinstance(tc, And):
        return f"and({print_tc(tc.left)},{print_tc(tc.right)})"
    if isinstance(tc, Or):
        return f"or({print_tc(tc.left)},{print_tc(tc.right)})"
    if isinstance(tc, Not):
        return f"not({print_tc(tc.inner)})"
    raise TypeError(f"not a temporal constraint: {tc!r}")


def print_rule(rule: NormRule) -> str:
    lines = [f"norm {rule.norm_id} {{"]
    lines.append(f"  agent {rule.agent};")
    lines.append(f"  effect {rule.fluent};")
    lines.append(f"  situation {rule.situation_var};")
    lines.append(f"  tc {print_tc(rule.tc)};")
    lines.append("  when {")
    for lit in rule.body:
        lines.append(f"    {lit};")
    lines.append("  }")
    lines.append("}")
    return "\n".join(lines)


def print_norm_file(rules: list[NormRule], validities: list[ValidityRecord]) -> str:
    chunks = [print_rule(rule) for rule in rules]
    for record in validities:
        if record.enact is not None:
            chunks.append(f"enact {record.norm_id} {record.enact};")
        for repeal in sorted(record.repeals):
            chunks.append(f"repeal {record.norm_id} {repeal};")
    return "\n".join(chunks) + "\n"


def print_fact(fact: Fact) -> str:
    if isinstance(fact, Situation):
        return f"situation {fact.id} {fact.time}"
    if isinstance(fact, EventToken):
        return f"event {fact.id} {fact.time} type {fact.event_type}"
    if isinstance(fact, ProcessToken):
        line = f"process {fact.id} {fact.time} type {fact.process_type}"
        if fact.decomposition:
            line += " decomp " + " ".join(fact.decomposition)
        return line
    if isinstance(fact, ActionToken):
        return f"action {fact.id} actor {fact.actor} type {fact.action_type} {fact.time}"
    if isinstance(fact, HoldsFact):
        star = "**" if fact.fully else ""
        return f"holds{star} {fact.fluent} {fact.situation_id}"
    if isinstance(fact, ImplyFact):
        return f"imply {fact.antecedent} {fact.consequent}"
    if isinstance(fact, DomainFact):
        return f"fact {fact.pred}"
    raise TypeError(f"not a fact: {fact!r}")


def print_fact_file(facts: list[Fact]) -> str:
    return "\n".join(print_fact(f) for f in facts) + "\n"
