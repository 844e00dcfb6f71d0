# 棋盘模型与切割运算

from .codec import BoardCodec, parse_board, serialize_board
from .cuts import (
    apply_cut,
    classify_lines,
    enumerate_maximal_cuts,
    enumerate_valid_cuts,
    is_valid_cut,
    removed_cells,
    transpose,
)
from .errors import BoardError, BoardParseError, ButtonsError, CutOutOfBoundsError, InvalidCutError
from .model import Board, Cut, Instance, LineClassification, Orientation

__all__ = [
    "Board",
    "BoardCodec",
    "BoardError",
    "BoardParseError",
    "ButtonsError",
    "Cut",
    "CutOutOfBoundsError",
    "Instance",
    "InvalidCutError",
    "LineClassification",
    "Orientation",
    "apply_cut",
    "classify_lines",
    "enumerate_maximal_cuts",
    "enumerate_valid_cuts",
    "is_valid_cut",
    "parse_board",
    "removed_cells",
    "serialize_board",
    "transpose",
]
