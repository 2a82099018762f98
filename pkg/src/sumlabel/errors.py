"""Exception hierarchy shared across the library."""

from __future__ import annotations


class SumLabelError(Exception):
    """Base class for all library-specific errors."""


class DimensionError(SumLabelError):
    """A labeling's length does not match the instance's vertex count."""


class ShapeError(SumLabelError):
    """Input has the wrong shape for the operation (e.g. |E| != |V|, not a tree)."""


class DualDegenerate(SumLabelError):
    """Two vertices share an identical incidence set, so the dual would
    contain duplicate edges and no irregular labeling can exist."""

    def __init__(self, groups: list[tuple[int, ...]]):
        self.groups = groups
        detail = "; ".join(",".join(map(str, g)) for g in groups)
        super().__init__(f"vertices with identical incidence sets: {detail}")


class EmptyNeighborhood(SumLabelError):
    """An isolated vertex has an empty open neighborhood."""


class BudgetExhausted(SumLabelError):
    """A search or retry budget ran out before a definite answer.

    ``bracket`` (when set) is a (lo, hi) pair bounding the true optimum;
    ``detail`` carries solver- or labeler-specific statistics.
    """

    def __init__(self, message: str, *, bracket: tuple[int, int] | None = None,
                 detail: dict | None = None):
        self.bracket = bracket
        self.detail = detail or {}
        super().__init__(message)


class OracleTooLarge(SumLabelError):
    """The brute-force enumeration oracle would exceed its size guard."""


class TooLarge(SumLabelError):
    """Requested computation exceeds a memory/size guard."""


class ParamsOutOfRange(SumLabelError):
    """Derived parameters leave their valid range (e.g. edge probability > 1)."""


class InfeasibleParams(SumLabelError):
    """No instance with the requested shape exists for these parameters."""


class ParseError(SumLabelError):
    """Malformed instance file."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(message if line is None else f"line {line}: {message}")


class ValidationError(SumLabelError):
    """Syntactically valid input that violates a semantic invariant."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(message if line is None else f"line {line}: {message}")
