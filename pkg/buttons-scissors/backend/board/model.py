from dataclasses import dataclass
from enum import Enum
from types import MappingProxyType
from typing import Dict, FrozenSet, Iterator, List, Mapping, Optional, Sequence, Tuple

Cell = Tuple[int, int]


class Orientation(str, Enum):
    """
    切割方向，取值即文本格式中的首字母
    """
    HORIZONTAL = "H"
    VERTICAL = "V"


@dataclass(frozen=True, order=True)
class Cut:
    """
    一次切割: 方向 + 固定的行/列号 + 闭区间 [lo, hi]

    水平切割 hcut(i, j1, j2) 表示为 Cut(H, line=i, lo=j1, hi=j2)，
    垂直切割 vcut(i1, i2, j) 表示为 Cut(V, line=j, lo=i1, hi=i2)。
    字段顺序即枚举顺序 (orientation, line, lo, hi)。
    """
    orientation: Orientation
    line: int
    lo: int
    hi: int

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError(f"切割区间无效: lo={self.lo} > hi={self.hi}")

    @classmethod
    def horizontal(cls, row: int, col_lo: int, col_hi: int) -> "Cut":
        return cls(Orientation.HORIZONTAL, row, col_lo, col_hi)

    @classmethod
    def vertical(cls, row_lo: int, row_hi: int, col: int) -> "Cut":
        """
        构造垂直切割；单格切割统一规范为水平方向
        """
        if row_lo == row_hi:
            return cls(Orientation.HORIZONTAL, row_lo, col, col)
        return cls(Orientation.VERTICAL, col, row_lo, row_hi)

    @property
    def is_single_cell(self) -> bool:
        return self.lo == self.hi

    def canonical(self) -> "Cut":
        if self.orientation is Orientation.VERTICAL and self.is_single_cell:
            return Cut(Orientation.HORIZONTAL, self.lo, self.line, self.line)
        return self

    def cells(self) -> Iterator[Cell]:
        """
        按顺序产出切割覆盖的所有格子 (row, col)
        """
        if self.orientation is Orientation.HORIZONTAL:
            for col in range(self.lo, self.hi + 1):
                yield (self.line, col)
        else:
            for row in range(self.lo, self.hi + 1):
                yield (row, self.line)

    def transposed(self) -> "Cut":
        flipped = Orientation.VERTICAL if self.orientation is Orientation.HORIZONTAL else Orientation.HORIZONTAL
        return Cut(flipped, self.line, self.lo, self.hi).canonical()

    def __str__(self) -> str:
        if self.orientation is Orientation.HORIZONTAL:
            return f"H {self.line} {self.lo} {self.hi}"
        return f"V {self.lo} {self.hi} {self.line}"


class Board:
    """
    稀疏按钮棋盘

    只保存有按钮的格子: (row, col) -> color，行列号从1开始。
    没有键的格子为空。实例创建后不再修改。
    """

    __slots__ = ("rows", "cols", "_cells", "_key", "_row_index", "_col_index")

    def __init__(self, rows: int, cols: int, cells: Optional[Mapping[Cell, int]] = None):
        """
        初始化棋盘

        Args:
            rows: 行数 n
            cols: 列数 m
            cells: 有按钮的格子及其颜色
        """
        if rows < 0 or cols < 0:
            raise ValueError(f"棋盘尺寸无效: {rows}x{cols}")
        stored: Dict[Cell, int] = {}
        for (row, col), color in (cells or {}).items():
            if not (1 <= row <= rows and 1 <= col <= cols):
                raise ValueError(f"格子 ({row},{col}) 超出 {rows}x{cols} 棋盘")
            if not isinstance(color, int) or color <= 0:
                raise ValueError(f"格子 ({row},{col}) 的颜色必须是正整数: {color!r}")
            stored[(row, col)] = color
        self.rows = rows
        self.cols = cols
        self._cells = stored
        self._key: Optional[FrozenSet[Tuple[Cell, int]]] = None
        self._row_index: Optional[Dict[int, List[Tuple[int, int]]]] = None
        self._col_index: Optional[Dict[int, List[Tuple[int, int]]]] = None

    @classmethod
    def _trusted(cls, rows: int, cols: int, cells: Dict[Cell, int]) -> "Board":
        # 内部路径: 调用方保证坐标和颜色合法
        board = cls.__new__(cls)
        board.rows = rows
        board.cols = cols
        board._cells = cells
        board._key = None
        board._row_index = None
        board._col_index = None
        return board

    @classmethod
    def from_rows(cls, grid: Sequence[Sequence[int]]) -> "Board":
        """
        由稠密矩阵构造棋盘，0 表示空格
        """
        rows = len(grid)
        cols = len(grid[0]) if rows else 0
        cells = {}
        for i, line in enumerate(grid, start=1):
            if len(line) != cols:
                raise ValueError(f"第 {i} 行长度 {len(line)} 与列数 {cols} 不一致")
            for j, color in enumerate(line, start=1):
                if color:
                    cells[(i, j)] = int(color)
        return cls(rows, cols, cells)

    def to_rows(self) -> List[List[int]]:
        grid = [[0] * self.cols for _ in range(self.rows)]
        for (row, col), color in self._cells.items():
            grid[row - 1][col - 1] = color
        return grid

    @property
    def cells(self) -> Mapping[Cell, int]:
        return MappingProxyType(self._cells)

    @property
    def button_count(self) -> int:
        return len(self._cells)

    @property
    def is_empty(self) -> bool:
        return not self._cells

    def color_at(self, row: int, col: int) -> int:
        return self._cells.get((row, col), 0)

    def in_bounds(self, row: int, col: int) -> bool:
        return 1 <= row <= self.rows and 1 <= col <= self.cols

    def row_buttons(self, row: int) -> List[Tuple[int, int]]:
        """
        第 row 行的按钮，按列号升序的 (col, color) 列表
        """
        if self._row_index is None:
            index: Dict[int, List[Tuple[int, int]]] = {}
            for (r, c), color in sorted(self._cells.items()):
                index.setdefault(r, []).append((c, color))
            self._row_index = index
        return self._row_index.get(row, [])

    def col_buttons(self, col: int) -> List[Tuple[int, int]]:
        """
        第 col 列的按钮，按行号升序的 (row, color) 列表
        """
        if self._col_index is None:
            index: Dict[int, List[Tuple[int, int]]] = {}
            for (r, c), color in sorted(self._cells.items(), key=lambda item: (item[0][1], item[0][0])):
                index.setdefault(c, []).append((r, color))
            self._col_index = index
        return self._col_index.get(col, [])

    def row_counts(self) -> Dict[int, int]:
        counts: Dict[int, int] = {}
        for (row, _), _color in self._cells.items():
            counts[row] = counts.get(row, 0) + 1
        return counts

    def col_counts(self) -> Dict[int, int]:
        counts: Dict[int, int] = {}
        for (_, col), _color in self._cells.items():
            counts[col] = counts.get(col, 0) + 1
        return counts

    def key(self) -> FrozenSet[Tuple[Cell, int]]:
        """
        稀疏按钮集合，作为置换表的键
        """
        if self._key is None:
            self._key = frozenset(self._cells.items())
        return self._key

    def without(self, cells: Sequence[Cell]) -> "Board":
        """
        返回删除指定格子按钮后的新棋盘
        """
        remaining = dict(self._cells)
        for cell in cells:
            remaining.pop(cell, None)
        return Board._trusted(self.rows, self.cols, remaining)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Board):
            return NotImplemented
        return self.rows == other.rows and self.cols == other.cols and self._cells == other._cells

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.key()))

    def __repr__(self) -> str:
        return f"Board({self.rows}x{self.cols}, buttons={self.button_count})"


@dataclass(frozen=True)
class Instance:
    """
    问题实例 (B, k)
    """
    board: Board
    k: int

    def __post_init__(self):
        if self.k < 0:
            raise ValueError(f"预算 k 必须非负: {self.k}")


@dataclass(frozen=True)
class LineClassification:
    heavy_rows: FrozenSet[int]
    heavy_cols: FrozenSet[int]
    light_button_count: int
