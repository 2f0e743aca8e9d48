"""Source locations and diagnostics shared by the parsers and the loader."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class SourceSpan:
    file: str
    line: int
    col_start: int
    col_end: int

    def __str__(self) -> str:
        return f"{self.file}:{self.line}:{self.col_start}"


@dataclass(frozen=True)
class ParseDiagnostic:
    severity: str  # "error" or "warning"; errors prevent loading, warnings do not
    span: SourceSpan
    message: str
    expected: tuple[str, ...] = ()

    @property
    def is_error(self) -> bool:
        return self.severity == "error"

    def __str__(self) -> str:
        hint = f" (expected {', '.join(self.expected)})" if self.expected else ""
        return f"{self.span}: {self.severity}: {self.message}{hint}"


def sort_diagnostics(diags: list[ParseDiagnostic]) -> list[ParseDiagnostic]:
    """Order diagnostics by source position so output is deterministic."""
    return sorted(diags, key=lambda d: (d.span.file, d.span.line, d.span.col_start, d.message))
