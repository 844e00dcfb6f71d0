from dataclasses import dataclass
from typing import FrozenSet, Optional, Tuple

import numpy as np

from board.model import Board, Instance


@dataclass(frozen=True)
class RowBlock:
    """
    行块 X = [lo, hi]

    块内每一列的按钮颜色都相同。occupied_cols 为块内至少有一个按钮的列，
    sparse_cols 为块内按钮数在 1 到 k+1 之间的列。
    """
    lo: int
    hi: int
    occupied_cols: FrozenSet[int]
    sparse_cols: FrozenSet[int]


def row_count_bound(k: int) -> int:
    """
    行数上界 (4k^2+1)(k+1)k(4k+6)^k，精确整数运算
    """
    if k < 0:
        raise ValueError(f"预算 k 必须非负: {k}")
    return (4 * k * k + 1) * (k + 1) * k * (4 * k + 6) ** k


def _dense(b: Board) -> np.ndarray:
    # 第0行为哨兵，便于前缀和计算
    colors = np.zeros((b.rows + 1, b.cols), dtype=np.int64)
    for (row, col), color in b.cells.items():
        colors[row, col - 1] = color
    return colors


def is_row_block(b: Board, lo: int, hi: int) -> bool:
    """
    判断 [lo, hi] 是否为行块
    """
    for col in range(1, b.cols + 1):
        colors = {color for row, color in b.col_buttons(col) if lo <= row <= hi}
        if len(colors) > 1:
            return False
    return True


def _maximal_block_end(colors: np.ndarray, start: int) -> int:
    # 从 start 行开始逐行扩展，直到某列出现第二种颜色
    seen = np.zeros(colors.shape[1], dtype=np.int64)
    end = start - 1
    for row in range(start, colors.shape[0]):
        line = colors[row]
        present = line > 0
        if np.any(present & (seen > 0) & (seen != line)):
            break
        seen = np.where(present & (seen == 0), line, seen)
        end = row
    return end


def find_row_block_reduction(inst: Instance) -> Optional[Tuple[RowBlock, int]]:
    """
    查找可删除第 i0 行按钮的行块

    按 (a, b, i0) 字典序扫描: 对每个起点 a 先求极大行块终点，再依次检查其子区间
    [a, b] 与 i0。要求 i0 行至少有一个按钮，并且块内每个有按钮的列在 i0 之上、
    之下各至少有 k 个按钮。

    Args:
        inst: 实例

    Returns:
        (行块, i0)，找不到时返回 None
    """
    b, k = inst.board, inst.k
    if b.is_empty:
        return None

    colors = _dense(b)
    occupied = colors > 0
    prefix = np.cumsum(occupied, axis=0)
    row_has_button = occupied.any(axis=1)

    for a in range(1, b.rows + 1):
        block_end = _maximal_block_end(colors, a)
        for end in range(a, block_end + 1):
            in_block = prefix[end] - prefix[a - 1]
            occupied_cols = in_block > 0
            # i0 之上、之下各需要至少 k 行
            for i0 in range(a + k, end - k + 1):
                if not row_has_button[i0]:
                    continue
                above = prefix[i0 - 1] - prefix[a - 1]
                below = prefix[end] - prefix[i0]
                if np.all(~occupied_cols | ((above >= k) & (below >= k))):
                    block = RowBlock(
                        lo=a,
                        hi=end,
                        occupied_cols=frozenset(int(j) + 1 for j in np.flatnonzero(occupied_cols)),
                        sparse_cols=frozenset(
                            int(j) + 1 for j in np.flatnonzero(occupied_cols & (in_block <= k + 1))
                        ),
                    )
                    return block, i0
    return None


def count_identical_row_blocks(b: Board) -> int:
    """
    统计“非空行完全相同”的极大行区间个数

    这是早先文献中的行块定义，仅作诊断用：交替反例上它随 n 增长，
    而两次垂直切割就能清空棋盘，所以不能据此判定无解。
    """
    if b.rows == 0:
        return 0
    blocks = 1
    signature = None
    for row in range(1, b.rows + 1):
        buttons = tuple(b.row_buttons(row))
        if not buttons:
            continue
        if signature is not None and buttons != signature:
            blocks += 1
        signature = buttons
    return blocks
