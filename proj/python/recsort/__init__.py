"""Count-space digit sorting (recombinant sort) with benchmark helpers."""

from ._core import (
    DEFAULT_CELL_BUDGET,
    Error,
    ExtractionReport,
    KeyShape,
    WorstCaseConstant,
    __version__,
    describe,
    generate,
    sort_decimals,
    sort_integers,
    sort_strings,
    worst_case_constant,
)

__all__ = [
    "DEFAULT_CELL_BUDGET",
    "Error",
    "ExtractionReport",
    "KeyShape",
    "WorstCaseConstant",
    "__version__",
    "describe",
    "generate",
    "sort_decimals",
    "sort_integers",
    "sort_strings",
    "worst_case_constant",
]
