from typing import List, Optional

from .base import ReductionRule
from .rules import (
    ButtonCountRule,
    ColumnBlockRule,
    ColumnCountRule,
    EmptyLineRule,
    HeavyLineRule,
    LightButtonRule,
    RowBlockRule,
    RowCountRule,
)


class RuleFactory:
    """
    化简规则工厂类，按优先级创建规则实例
    """

    RULE_CLASSES = {
        1: HeavyLineRule,
        2: LightButtonRule,
        3: EmptyLineRule,
        4: RowBlockRule,
        5: RowCountRule,
        6: ColumnBlockRule,
        7: ColumnCountRule,
        8: ButtonCountRule,
    }

    @staticmethod
    def create_rule(rule_id: int) -> Optional[ReductionRule]:
        """
        创建单条规则

        Args:
            rule_id: 规则编号 1..8

        Returns:
            规则实例，编号未知时返回 None
        """
        rule_class = RuleFactory.RULE_CLASSES.get(rule_id)
        if rule_class is None:
            return None
        return rule_class()

    @staticmethod
    def create_rules() -> List[ReductionRule]:
        """
        按严格优先级 1 -> 8 创建全部规则
        """
        return [RuleFactory.create_rule(rule_id) for rule_id in RuleFactory.get_rule_ids()]

    @staticmethod
    def get_rule_ids() -> List[int]:
        return sorted(RuleFactory.RULE_CLASSES)
