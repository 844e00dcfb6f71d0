from typing import Dict, List, Set, Tuple

from .errors import CutOutOfBoundsError, InvalidCutError
from .model import Board, Cell, Cut, LineClassification, Orientation


def transpose(b: Board) -> Board:
    """
    转置棋盘: (i, j) 上的按钮移动到 (j, i)
    """
    cells = {(col, row): color for (row, col), color in b.cells.items()}
    return Board._trusted(b.cols, b.rows, cells)


def _check_bounds(b: Board, c: Cut) -> None:
    # 区间连续，检查两个端点即可
    if c.orientation is Orientation.HORIZONTAL:
        ends = ((c.line, c.lo), (c.line, c.hi))
    else:
        ends = ((c.lo, c.line), (c.hi, c.line))
    if not all(b.in_bounds(row, col) for row, col in ends):
        raise CutOutOfBoundsError(f"切割 {c} 超出 {b.rows}x{b.cols} 棋盘")


def removed_cells(b: Board, c: Cut) -> List[Tuple[int, int, int]]:
    """
    切割覆盖到的按钮 (row, col, color)，不做有效性检查
    """
    _check_bounds(b, c)
    removed = []
    for row, col in c.cells():
        color = b.color_at(row, col)
        if color:
            removed.append((row, col, color))
    return removed


def is_valid_cut(b: Board, c: Cut) -> bool:
    """
    判断切割是否有效

    两端格子必须有按钮，且切割上所有按钮颜色相同；中间允许空格。

    Raises:
        CutOutOfBoundsError: 切割超出棋盘
    """
    _check_bounds(b, c)
    cells = list(c.cells())
    first = b.color_at(*cells[0])
    if not first or not b.color_at(*cells[-1]):
        return False
    for cell in cells[1:]:
        color = b.color_at(*cell)
        if color and color != first:
            return False
    return True


def apply_cut(b: Board, c: Cut) -> Board:
    """
    应用切割，删除切割上的所有按钮

    Raises:
        InvalidCutError: 切割无效
    """
    if not is_valid_cut(b, c):
        raise InvalidCutError(f"切割 {c} 在当前棋盘上无效")
    return b.without(list(c.cells()))


def _line_runs(buttons: List[Tuple[int, int]]) -> List[Tuple[int, int]]:
    # 对一条线上排好序的按钮，列出所有同色连续段的 (首位置, 末位置)
    segments = []
    for s, (start_pos, color) in enumerate(buttons):
        for pos, other in buttons[s:]:
            if other != color:
                break
            segments.append((start_pos, pos))
    return segments


def enumerate_valid_cuts(b: Board) -> List[Cut]:
    """
    枚举棋盘上所有规范形式的有效切割

    每个切割由一对同色按钮端点确定，且端点之间不能夹着异色按钮。
    单格切割只以水平方向出现一次。结果按 (orientation, line, lo, hi) 排序。
    """
    cuts: List[Cut] = []
    for row in sorted({r for r, _ in b.cells}):
        for lo, hi in _line_runs(b.row_buttons(row)):
            cuts.append(Cut(Orientation.HORIZONTAL, row, lo, hi))
    for col in sorted({c for _, c in b.cells}):
        for lo, hi in _line_runs(b.col_buttons(col)):
            if lo != hi:
                cuts.append(Cut(Orientation.VERTICAL, col, lo, hi))
    cuts.sort()
    return cuts


def _maximal_runs(buttons: List[Tuple[int, int]]) -> List[Tuple[int, int]]:
    runs = []
    start = 0
    for idx in range(1, len(buttons) + 1):
        if idx == len(buttons) or buttons[idx][1] != buttons[start][1]:
            runs.append((buttons[start][0], buttons[idx - 1][0]))
            start = idx
    return runs


def enumerate_maximal_cuts(b: Board) -> List[Cut]:
    """
    枚举按格子集合包含关系极大的有效切割

    一条线上每个极大同色按钮段给出一个切割。单个按钮的段只有在它所在的
    行和列都无法延伸时才保留（否则被另一方向的切割包含）。
    """
    horizontal: List[Cut] = []
    vertical: List[Cut] = []
    row_singles: Set[Cell] = set()
    col_singles: Set[Cell] = set()
    for row in sorted({r for r, _ in b.cells}):
        for lo, hi in _maximal_runs(b.row_buttons(row)):
            if lo == hi:
                row_singles.add((row, lo))
            else:
                horizontal.append(Cut(Orientation.HORIZONTAL, row, lo, hi))
    for col in sorted({c for _, c in b.cells}):
        for lo, hi in _maximal_runs(b.col_buttons(col)):
            if lo == hi:
                col_singles.add((lo, col))
            else:
                vertical.append(Cut(Orientation.VERTICAL, col, lo, hi))
    singles = [Cut(Orientation.HORIZONTAL, row, col, col) for row, col in row_singles & col_singles]
    cuts = horizontal + vertical + singles
    cuts.sort()
    return cuts


def classify_lines(b: Board, k: int) -> LineClassification:
    """
    按 k 划分重/轻行列

    Args:
        b: 棋盘
        k: 预算，至少 k+1 个按钮的行/列为重

    Returns:
        重行集合、重列集合与轻按钮数量
    """
    if k < 0:
        raise ValueError(f"预算 k 必须非负: {k}")
    threshold = k + 1
    row_counts: Dict[int, int] = b.row_counts()
    col_counts: Dict[int, int] = b.col_counts()
    heavy_rows = frozenset(r for r, count in row_counts.items() if count >= threshold)
    heavy_cols = frozenset(c for c, count in col_counts.items() if count >= threshold)
    light = sum(1 for (r, c) in b.cells if r not in heavy_rows and c not in heavy_cols)
    return LineClassification(heavy_rows=heavy_rows, heavy_cols=heavy_cols, light_button_count=light)
