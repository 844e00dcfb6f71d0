from abc import ABC, abstractmethod
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence, Tuple

from board.model import Cell, Instance

from .blocks import RowBlock


class OutcomeKind(str, Enum):
    NO = "no"
    REDUCED = "reduced"
    NOT_APPLICABLE = "not_applicable"


@dataclass(frozen=True)
class RuleOutcome:
    """
    单条化简规则的结果

    坐标均为规则所作用实例的当前坐标；还原到原始坐标由引擎负责。
    """
    kind: OutcomeKind
    instance: Optional[Instance] = None
    detail: str = ""
    deleted_rows: Tuple[int, ...] = ()
    deleted_cols: Tuple[int, ...] = ()
    cleared_cells: Tuple[Cell, ...] = ()
    block: Optional[RowBlock] = None
    cleared_line: Optional[int] = None

    @property
    def applicable(self) -> bool:
        return self.kind is not OutcomeKind.NOT_APPLICABLE

    @classmethod
    def no(cls, detail: str) -> "RuleOutcome":
        return cls(OutcomeKind.NO, detail=detail)


NOT_APPLICABLE = RuleOutcome(OutcomeKind.NOT_APPLICABLE)


class ReductionRule(ABC):
    """
    化简规则基础接口
    """

    def __init__(self, rule_id: int, name: str):
        """
        初始化化简规则

        Args:
            rule_id: 规则编号，同时也是优先级（越小越先）
            name: 规则名称
        """
        self.rule_id = rule_id
        self.name = name

    @abstractmethod
    def apply(self, inst: Instance) -> RuleOutcome:
        """
        尝试在实例上应用规则

        Args:
            inst: 当前实例

        Returns:
            NO / REDUCED / NOT_APPLICABLE 之一
        """
        pass

    def describe(self, outcome: RuleOutcome, row_map: Sequence[int], col_map: Sequence[int]) -> str:
        """
        以原始坐标描述一次规则应用

        Args:
            outcome: 规则结果
            row_map: 当前行号 -> 原始行号（下标从0开始存放）
            col_map: 当前列号 -> 原始列号

        Returns:
            描述文本
        """
        return outcome.detail

    def __repr__(self) -> str:
        return f"{type(self).__name__}(rule_id={self.rule_id})"
