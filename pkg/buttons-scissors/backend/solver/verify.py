from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence, Tuple

from board.codec import BoardCodec
from board.cuts import is_valid_cut
from board.errors import CutOutOfBoundsError
from board.model import Board, Cut, Instance


@dataclass(frozen=True)
class Solution:
    """
    解: 依次应用的切割序列
    """
    cuts: Tuple[Cut, ...] = ()

    @classmethod
    def of(cls, cuts: Iterable[Cut]) -> "Solution":
        return cls(tuple(cuts))

    def __len__(self) -> int:
        return len(self.cuts)

    def __iter__(self) -> Iterator[Cut]:
        return iter(self.cuts)

    def to_text(self) -> str:
        return BoardCodec.format_solution(self.cuts)


def replay(board: Board, cuts: Iterable[Cut]) -> Optional[Board]:
    """
    依次应用切割

    Returns:
        最终棋盘；若某个切割在其应用时刻无效或越界，返回 None
    """
    for cut in cuts:
        try:
            if not is_valid_cut(board, cut):
                return None
        except CutOutOfBoundsError:
            return None
        board = board.without(list(cut.cells()))
    return board


def explain_solution(inst: Instance, cuts: Sequence[Cut]) -> Optional[str]:
    """
    校验解并说明失败原因

    Returns:
        None 表示解有效，否则为失败原因
    """
    cuts = list(cuts)
    if len(cuts) > inst.k:
        return f"切割数 {len(cuts)} 超过预算 k={inst.k}"
    board = inst.board
    for step, cut in enumerate(cuts, start=1):
        try:
            valid = is_valid_cut(board, cut)
        except CutOutOfBoundsError:
            return f"第 {step} 个切割 {cut} 超出棋盘"
        if not valid:
            return f"第 {step} 个切割 {cut} 在应用时无效"
        board = board.without(list(cut.cells()))
    if not board.is_empty:
        return f"仍剩余 {board.button_count} 个按钮"
    return None


def verify_solution(inst: Instance, cuts: Sequence[Cut]) -> bool:
    return explain_solution(inst, cuts) is None
