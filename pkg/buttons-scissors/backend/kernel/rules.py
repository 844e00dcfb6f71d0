from typing import Optional, Sequence

from board.cuts import classify_lines, transpose
from board.model import Board, Instance

from .base import NOT_APPLICABLE, OutcomeKind, ReductionRule, RuleOutcome
from .blocks import find_row_block_reduction, row_count_bound


def _span(indices: Sequence[int]) -> str:
    return "[" + ",".join(str(i) for i in indices) + "]"


class HeavyLineRule(ReductionRule):
    """
    规则1: 重行或重列超过 k 条时无解
    """

    def __init__(self):
        super().__init__(1, "heavy-line-bound")

    def apply(self, inst: Instance) -> RuleOutcome:
        lines = classify_lines(inst.board, inst.k)
        heavy_rows, heavy_cols = len(lines.heavy_rows), len(lines.heavy_cols)
        if heavy_rows > inst.k or heavy_cols > inst.k:
            return RuleOutcome.no(f"heavy rows={heavy_rows} heavy cols={heavy_cols} exceed k={inst.k}")
        return NOT_APPLICABLE


class LightButtonRule(ReductionRule):
    """
    规则2: 轻按钮超过 k^2 个时无解
    """

    def __init__(self):
        super().__init__(2, "light-button-bound")

    def apply(self, inst: Instance) -> RuleOutcome:
        light = classify_lines(inst.board, inst.k).light_button_count
        if light > inst.k * inst.k:
            return RuleOutcome.no(f"light buttons={light} exceed k^2={inst.k * inst.k}")
        return NOT_APPLICABLE


class EmptyLineRule(ReductionRule):
    """
    规则3: 删除所有没有按钮的行和列，并重新压缩编号
    """

    def __init__(self):
        super().__init__(3, "empty-lines")

    def apply(self, inst: Instance) -> RuleOutcome:
        b = inst.board
        used_rows = sorted({row for row, _ in b.cells})
        used_cols = sorted({col for _, col in b.cells})
        if len(used_rows) == b.rows and len(used_cols) == b.cols:
            return NOT_APPLICABLE

        row_pos = {row: i for i, row in enumerate(used_rows, start=1)}
        col_pos = {col: j for j, col in enumerate(used_cols, start=1)}
        cells = {(row_pos[row], col_pos[col]): color for (row, col), color in b.cells.items()}
        reduced = Board(len(used_rows), len(used_cols), cells)
        deleted_rows = tuple(row for row in range(1, b.rows + 1) if row not in row_pos)
        deleted_cols = tuple(col for col in range(1, b.cols + 1) if col not in col_pos)
        return RuleOutcome(
            OutcomeKind.REDUCED,
            instance=Instance(reduced, inst.k),
            detail=f"delete rows {_span(deleted_rows)} cols {_span(deleted_cols)}",
            deleted_rows=deleted_rows,
            deleted_cols=deleted_cols,
        )

    def describe(self, outcome: RuleOutcome, row_map: Sequence[int], col_map: Sequence[int]) -> str:
        rows = [row_map[row - 1] for row in outcome.deleted_rows]
        cols = [col_map[col - 1] for col in outcome.deleted_cols]
        return f"delete rows {_span(rows)} cols {_span(cols)}"


class RowBlockRule(ReductionRule):
    """
    规则4: 在行块中删除第 i0 行的全部按钮（行本身保留，由规则3删除）
    """

    def __init__(self):
        super().__init__(4, "row-block")

    def apply(self, inst: Instance) -> RuleOutcome:
        found = find_row_block_reduction(inst)
        if found is None:
            return NOT_APPLICABLE
        block, i0 = found
        cleared = tuple((i0, col) for col, _ in inst.board.row_buttons(i0))
        return RuleOutcome(
            OutcomeKind.REDUCED,
            instance=Instance(inst.board.without(list(cleared)), inst.k),
            detail=f"block rows [{block.lo}..{block.hi}] clear row {i0} ({len(cleared)} buttons)",
            cleared_cells=cleared,
            block=block,
            cleared_line=i0,
        )

    def describe(self, outcome: RuleOutcome, row_map: Sequence[int], col_map: Sequence[int]) -> str:
        block = outcome.block
        return (
            f"block rows [{row_map[block.lo - 1]}..{row_map[block.hi - 1]}] "
            f"clear row {row_map[outcome.cleared_line - 1]} ({len(outcome.cleared_cells)} buttons)"
        )


class RowCountRule(ReductionRule):
    """
    规则5: 行数超过 row_count_bound(k) 时无解

    其正确性依赖规则3、4已无法应用，由引擎的优先级顺序保证。
    """

    def __init__(self):
        super().__init__(5, "row-count-bound")

    def apply(self, inst: Instance) -> RuleOutcome:
        bound = row_count_bound(inst.k)
        if inst.board.rows > bound:
            return RuleOutcome.no(f"rows={inst.board.rows} exceed bound={bound}")
        return NOT_APPLICABLE


class ColumnBlockRule(ReductionRule):
    """
    规则6: 列方向的规则4，即 转置 ∘ 规则4 ∘ 转置
    """

    def __init__(self):
        super().__init__(6, "column-block")
        self._row_rule = RowBlockRule()

    def apply(self, inst: Instance) -> RuleOutcome:
        outcome = self._row_rule.apply(Instance(transpose(inst.board), inst.k))
        if not outcome.applicable:
            return NOT_APPLICABLE
        block, j0 = outcome.block, outcome.cleared_line
        cleared = tuple((row, col) for col, row in outcome.cleared_cells)
        return RuleOutcome(
            OutcomeKind.REDUCED,
            instance=Instance(transpose(outcome.instance.board), inst.k),
            detail=f"block cols [{block.lo}..{block.hi}] clear col {j0} ({len(cleared)} buttons)",
            cleared_cells=cleared,
            block=block,
            cleared_line=j0,
        )

    def describe(self, outcome: RuleOutcome, row_map: Sequence[int], col_map: Sequence[int]) -> str:
        block = outcome.block
        return (
            f"block cols [{col_map[block.lo - 1]}..{col_map[block.hi - 1]}] "
            f"clear col {col_map[outcome.cleared_line - 1]} ({len(outcome.cleared_cells)} buttons)"
        )


class ColumnCountRule(ReductionRule):
    """
    规则7: 列数超过 row_count_bound(k) 时无解
    """

    def __init__(self):
        super().__init__(7, "column-count-bound")
        self._row_rule = RowCountRule()

    def apply(self, inst: Instance) -> RuleOutcome:
        outcome = self._row_rule.apply(Instance(transpose(inst.board), inst.k))
        if not outcome.applicable:
            return NOT_APPLICABLE
        return RuleOutcome.no(f"cols={inst.board.cols} exceed bound={row_count_bound(inst.k)}")


class ButtonCountRule(ReductionRule):
    """
    规则8: 按钮数至少为 k*max(n,m)+1 时无解
    """

    def __init__(self):
        super().__init__(8, "button-count-bound")

    def apply(self, inst: Instance) -> RuleOutcome:
        b = inst.board
        limit = inst.k * max(b.rows, b.cols) + 1
        if b.button_count >= limit:
            return RuleOutcome.no(f"buttons={b.button_count} reach k*max(n,m)+1={limit}")
        return NOT_APPLICABLE


def rule_heavy_bound(inst: Instance) -> RuleOutcome:
    return HeavyLineRule().apply(inst)


def rule_light_bound(inst: Instance) -> RuleOutcome:
    return LightButtonRule().apply(inst)


def rule_empty_lines(inst: Instance) -> RuleOutcome:
    return EmptyLineRule().apply(inst)


def rule_row_block(inst: Instance) -> RuleOutcome:
    return RowBlockRule().apply(inst)


def rule_row_count(inst: Instance) -> RuleOutcome:
    return RowCountRule().apply(inst)


def rule_column_block(inst: Instance) -> RuleOutcome:
    return ColumnBlockRule().apply(inst)


def rule_col_count(inst: Instance) -> RuleOutcome:
    return ColumnCountRule().apply(inst)


def rule_button_count(inst: Instance) -> RuleOutcome:
    return ButtonCountRule().apply(inst)


def violated_bound(inst: Instance) -> Optional[int]:
    """
    检查无需前置条件即安全的判定规则 (1, 2, 8)，供搜索剪枝使用

    Returns:
        触发的规则编号，都不触发时返回 None
    """
    b, k = inst.board, inst.k
    if b.button_count >= k * max(b.rows, b.cols) + 1:
        return 8
    lines = classify_lines(b, k)
    if len(lines.heavy_rows) > k or len(lines.heavy_cols) > k:
        return 1
    if lines.light_button_count > k * k:
        return 2
    return None
