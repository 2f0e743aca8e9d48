"""Load norm and fact sources and assemble a queryable knowledge base."""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Sequence

from .diagnostics import ParseDiagnostic, SourceSpan, sort_diagnostics
from .dsl import parse_facts, parse_norms
from .norms import NormRule, ValidityRecord
from .ontology import KnowledgeBase, KnowledgeBaseError, build_kb


@dataclass
class LoadResult:
    rules: list[NormRule] = field(default_factory=list)
    validities: list[ValidityRecord] = field(default_factory=list)
    kb: KnowledgeBase = field(default_factory=KnowledgeBase)
    diagnostics: list[ParseDiagnostic] = field(default_factory=list)

    @property
    def errors(self) -> list[ParseDiagnostic]:
        return [d for d in self.diagnostics if d.is_error]

    @property
    def ok(self) -> bool:
        return not self.errors


def load_texts(
    norm_sources: Sequence[tuple[str, str]], fact_sources: Sequence[tuple[str, str]]
) -> LoadResult:
    """Parse (name, text) pairs and build the knowledge base. Any error
    diagnostic leaves the result unusable for checking."""
    result = LoadResult()
    seen_rule_files: dict[str, str] = {}
    facts = []
    for name, text in norm_sources:
        rules, validities, diags = parse_norms(text, name)
        result.diagnostics.extend(diags)
        for rule in rules:
            first = seen_rule_files.get(rule.norm_id)
            if first is not None:
                result.diagnostics.append(
                    ParseDiagnostic(
                        "error",
                        rule.span or SourceSpan(name, 1, 1, 1),
                        f"duplicate norm id {rule.norm_id}; already defined in {first}",
                    )
                )
                continue
            seen_rule_files[rule.norm_id] = name
            result.rules.append(rule)
        result.validities.extend(validities)
    for name, text in fact_sources:
        parsed, diags = parse_facts(text, name)
        result.diagnostics.extend(diags)
        facts.extend(parsed)

    if not result.errors:
        try:
            result.kb = build_kb(facts)
            for record in result.validities:
                result.kb.add_validity(record)
        except KnowledgeBaseError as exc:
            result.diagnostics.append(
                ParseDiagnostic("error", SourceSpan("<load>", 0, 0, 0), str(exc))
            )
    result.diagnostics = sort_diagnostics(result.diagnostics)
    return result


def load_paths(norm_paths: Sequence[str | Path], fact_paths: Sequence[str | Path]) -> LoadResult:
    """Read and load files; unreadable files become error diagnostics."""
    norm_sources: list[tuple[str, str]] = []
    fact_sources: list[tuple[str, str]] = []
    io_errors: list[ParseDiagnostic] = []
    for paths, sources in ((norm_paths, norm_sources), (fact_paths, fact_sources)):
        for path in paths:
            try:
                sources.append((str(path), Path(path).read_text(encoding="utf-8")))
            except OSError as exc:
                io_errors.append(
                    ParseDiagnostic(
                        "error", SourceSpan(str(path), 0, 0, 0), f"cannot read file: {exc}"
                    )
                )
    result = load_texts(norm_sources, fact_sources)
    result.diagnostics = sort_diagnostics(io_errors + result.diagnostics)
    return result
