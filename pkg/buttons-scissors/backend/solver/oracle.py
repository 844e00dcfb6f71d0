import logging
from dataclasses import dataclass
from typing import Iterator, List, Optional, Tuple

from board.model import Cut, Instance, Orientation
from config import get_settings

from .errors import OracleLimitError

logger = logging.getLogger(__name__)

Grid = Tuple[Tuple[int, ...], ...]


@dataclass(frozen=True)
class OracleResult:
    answer: bool
    solution: Optional[Tuple[Cut, ...]] = None


def _segments(grid: Grid) -> Iterator[Cut]:
    # 直接按定义枚举: 两端有按钮且所有按钮同色的每一段（单格在两个方向各出现一次）
    n = len(grid)
    m = len(grid[0]) if n else 0
    for i in range(n):
        for j1 in range(m):
            for j2 in range(j1, m):
                colors = {grid[i][j] for j in range(j1, j2 + 1)} - {0}
                if grid[i][j1] and grid[i][j2] and len(colors) == 1:
                    yield Cut(Orientation.HORIZONTAL, i + 1, j1 + 1, j2 + 1)
    for j in range(m):
        for i1 in range(n):
            for i2 in range(i1, n):
                colors = {grid[i][j] for i in range(i1, i2 + 1)} - {0}
                if grid[i1][j] and grid[i2][j] and len(colors) == 1:
                    yield Cut(Orientation.VERTICAL, j + 1, i1 + 1, i2 + 1)


def _apply(grid: Grid, cut: Cut) -> Grid:
    rows = [list(row) for row in grid]
    for row, col in cut.cells():
        rows[row - 1][col - 1] = 0
    return tuple(tuple(row) for row in rows)


def _search(grid: Grid, budget: int) -> Optional[List[Cut]]:
    if not any(any(row) for row in grid):
        return []
    if budget == 0:
        return None
    for cut in _segments(grid):
        rest = _search(_apply(grid, cut), budget - 1)
        if rest is not None:
            return [cut] + rest
    return None


def oracle_solve(inst: Instance, max_buttons: Optional[int] = None) -> OracleResult:
    """
    穷举所有不超过 k 个有效切割的序列，不化简、不剪枝，作为测试基准

    Args:
        inst: 实例
        max_buttons: 按钮数上限，None 表示使用配置 oracle_max_buttons

    Returns:
        是否有解以及找到的第一个解

    Raises:
        OracleLimitError: 实例超过上限
    """
    limit = get_settings().oracle_max_buttons if max_buttons is None else max_buttons
    if inst.board.button_count > limit:
        raise OracleLimitError(f"预言机只处理不超过 {limit} 个按钮的实例，实际 {inst.board.button_count}")
    grid = tuple(tuple(row) for row in inst.board.to_rows())
    found = _search(grid, inst.k)
    logger.debug(f"预言机: {inst.board!r} k={inst.k} -> {'YES' if found is not None else 'NO'}")
    if found is None:
        return OracleResult(answer=False)
    return OracleResult(answer=True, solution=tuple(found))
