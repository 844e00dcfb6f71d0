import logging
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from board.codec import BoardCodec
from board.model import Cell, Instance

from .base import OutcomeKind, ReductionRule, RuleOutcome
from .errors import KernelError
from .factory import RuleFactory

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TraceEntry:
    rule_id: int
    description: str

    def __str__(self) -> str:
        return f"rule={self.rule_id} {self.description}"


@dataclass(frozen=True)
class KernelResult:
    """
    化简结果

    outcome 为 NO 时 rule_id 为触发的规则，instance 为触发时的中间实例；
    为 REDUCED 时 instance 为化简后的实例，此时没有任何规则可以应用。
    row_map / col_map 给出化简后行列号对应的原始行列号，
    cleared_cells 为被规则4/6删除按钮的原始格子。
    """
    outcome: OutcomeKind
    instance: Instance
    trace: Tuple[TraceEntry, ...]
    rule_id: Optional[int] = None
    row_map: Tuple[int, ...] = ()
    col_map: Tuple[int, ...] = ()
    cleared_cells: Tuple[Cell, ...] = field(default=())

    @property
    def is_no(self) -> bool:
        return self.outcome is OutcomeKind.NO

    def to_text(self) -> str:
        """
        文本形式: 注释形式的 trace，随后是 "NO rule=<id>" 或化简后的棋盘
        """
        lines = "".join(f"# {entry}\n" for entry in self.trace)
        if self.is_no:
            return lines + f"NO rule={self.rule_id}\n"
        return lines + BoardCodec.serialize_board(self.instance.board)


class KernelEngine:
    """
    化简引擎，按严格优先级反复应用规则直到不动点
    """

    def __init__(self, rules: Optional[List[ReductionRule]] = None):
        """
        初始化化简引擎

        Args:
            rules: 规则列表，None 表示使用 RuleFactory 的全部规则
        """
        self.rules = rules if rules is not None else RuleFactory.create_rules()

    def step(self, inst: Instance) -> Optional[Tuple[ReductionRule, RuleOutcome]]:
        """
        应用编号最小的可用规则

        Returns:
            (规则, 结果)，没有规则可用时返回 None
        """
        for rule in self.rules:
            outcome = rule.apply(inst)
            if outcome.applicable:
                return rule, outcome
        return None

    def run(self, inst: Instance) -> KernelResult:
        """
        执行化简

        Args:
            inst: 原始实例

        Returns:
            化简结果
        """
        current = inst
        row_map = list(range(1, inst.board.rows + 1))
        col_map = list(range(1, inst.board.cols + 1))
        trace: List[TraceEntry] = []
        cleared: List[Cell] = []
        # 每次规则3/4/6应用都严格减小 (按钮数, n+m)
        budget = inst.board.button_count + inst.board.rows + inst.board.cols + 1

        while True:
            found = self.step(current)
            if found is None:
                logger.info(
                    f"化简完成: {inst.board.rows}x{inst.board.cols}/{inst.board.button_count} -> "
                    f"{current.board.rows}x{current.board.cols}/{current.board.button_count}，"
                    f"共 {len(trace)} 次规则应用"
                )
                return KernelResult(
                    outcome=OutcomeKind.REDUCED,
                    instance=current,
                    trace=tuple(trace),
                    row_map=tuple(row_map),
                    col_map=tuple(col_map),
                    cleared_cells=tuple(cleared),
                )

            rule, outcome = found
            entry = TraceEntry(rule.rule_id, rule.describe(outcome, row_map, col_map))
            trace.append(entry)
            logger.debug(f"应用规则: {entry}")

            if outcome.kind is OutcomeKind.NO:
                logger.info(f"化简判定无解: {entry}")
                return KernelResult(
                    outcome=OutcomeKind.NO,
                    instance=current,
                    trace=tuple(trace),
                    rule_id=rule.rule_id,
                    row_map=tuple(row_map),
                    col_map=tuple(col_map),
                    cleared_cells=tuple(cleared),
                )

            cleared.extend((row_map[row - 1], col_map[col - 1]) for row, col in outcome.cleared_cells)
            if outcome.deleted_rows or outcome.deleted_cols:
                gone_rows, gone_cols = set(outcome.deleted_rows), set(outcome.deleted_cols)
                row_map = [orig for i, orig in enumerate(row_map, start=1) if i not in gone_rows]
                col_map = [orig for j, orig in enumerate(col_map, start=1) if j not in gone_cols]
            current = outcome.instance

            if len(trace) > budget:
                raise KernelError(f"化简超过 {budget} 次规则应用仍未终止")


def kernelize(inst: Instance) -> KernelResult:
    return KernelEngine().run(inst)
