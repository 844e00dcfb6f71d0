# 化简规则 1-8 与不动点引擎

from .base import OutcomeKind, ReductionRule, RuleOutcome
from .blocks import RowBlock, count_identical_row_blocks, find_row_block_reduction, is_row_block, row_count_bound
from .engine import KernelEngine, KernelResult, TraceEntry, kernelize
from .errors import KernelError
from .factory import RuleFactory
from .rules import (
    rule_button_count,
    rule_col_count,
    rule_column_block,
    rule_empty_lines,
    rule_heavy_bound,
    rule_light_bound,
    rule_row_block,
    rule_row_count,
)

__all__ = [
    "KernelEngine",
    "KernelError",
    "KernelResult",
    "OutcomeKind",
    "ReductionRule",
    "RowBlock",
    "RuleFactory",
    "RuleOutcome",
    "TraceEntry",
    "count_identical_row_blocks",
    "find_row_block_reduction",
    "is_row_block",
    "kernelize",
    "row_count_bound",
    "rule_button_count",
    "rule_col_count",
    "rule_column_block",
    "rule_empty_lines",
    "rule_heavy_bound",
    "rule_light_bound",
    "rule_row_block",
    "rule_row_count",
]
