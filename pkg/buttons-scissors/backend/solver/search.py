import logging
import time
from dataclasses import dataclass
from enum import Enum
from typing import Dict, FrozenSet, List, Optional, Sequence, Set, Tuple

from board.codec import BoardCodec
from board.cuts import enumerate_maximal_cuts, enumerate_valid_cuts
from board.model import Board, Cell, Cut, Instance, Orientation
from config import get_settings
from kernel.engine import KernelResult, TraceEntry, kernelize
from kernel.rules import violated_bound

from .errors import SolverError
from .verify import Solution, replay, verify_solution

logger = logging.getLogger(__name__)


class Answer(str, Enum):
    YES = "YES"
    NO = "NO"


@dataclass(frozen=True)
class SolveReport:
    """
    求解报告

    solution 为原始坐标下的证书；kernel_solution 为化简后坐标下的证书，
    两者通过 kernel_result 的 row_map / col_map 对应。
    """
    answer: Answer
    nodes_explored: int
    solution: Optional[Solution] = None
    kernel_result: Optional[KernelResult] = None
    kernel_solution: Optional[Solution] = None
    elapsed: float = 0.0

    @property
    def is_yes(self) -> bool:
        return self.answer is Answer.YES

    @property
    def kernel_trace(self) -> Tuple[TraceEntry, ...]:
        return self.kernel_result.trace if self.kernel_result else ()

    @property
    def row_map(self) -> Tuple[int, ...]:
        return self.kernel_result.row_map if self.kernel_result else ()

    @property
    def col_map(self) -> Tuple[int, ...]:
        return self.kernel_result.col_map if self.kernel_result else ()

    def to_text(self) -> str:
        """
        文本形式: 首行 YES/NO，YES 时每行一个切割，"#" 行为 trace 与统计信息
        """
        lines = [self.answer.value]
        if self.solution is not None:
            lines.extend(str(cut) for cut in self.solution)
        lines.extend(f"# {entry}" for entry in self.kernel_trace)
        kr = self.kernel_result
        if kr is not None:
            b = kr.instance.board
            lines.append(f"# kernel rows={b.rows} cols={b.cols} buttons={b.button_count}")
            if not kr.is_no and self.kernel_solution is not None:
                lines.append("# row_map=" + ",".join(str(row) for row in kr.row_map))
                lines.append("# col_map=" + ",".join(str(col) for col in kr.col_map))
                lines.extend(f"# kernel_cut {cut}" for cut in self.kernel_solution)
        lines.append(f"# nodes_explored={self.nodes_explored}")
        lines.append(f"# elapsed={self.elapsed:.6f}")
        return "\n".join(lines) + "\n"


class CutSearch:
    """
    深度不超过预算的深度优先搜索

    每个节点按固定顺序枚举当前所有有效切割（或只枚举极大切割）；
    安全的判定规则 1、2、8 在剩余预算下成立时剪枝；
    置换表记录每个棋盘已知失败的最大剩余预算。
    """

    def __init__(self, prune_maximal: bool = False, memoize: bool = True):
        """
        初始化搜索

        Args:
            prune_maximal: 只在包含关系极大的切割上分支
            memoize: 启用置换表
        """
        self.prune_maximal = prune_maximal
        self.memoize = memoize
        self.nodes_explored = 0
        self._failed: Dict[FrozenSet[Tuple[Cell, int]], int] = {}

    def search(self, board: Board, budget: int) -> Optional[List[Cut]]:
        """
        搜索不超过 budget 个切割清空棋盘的序列

        Returns:
            切割序列，无解时返回 None
        """
        return self._dfs(board, budget)

    def _candidates(self, board: Board) -> List[Cut]:
        if self.prune_maximal:
            return enumerate_maximal_cuts(board)
        return enumerate_valid_cuts(board)

    def _dfs(self, board: Board, budget: int) -> Optional[List[Cut]]:
        self.nodes_explored += 1
        if board.is_empty:
            return []
        if budget == 0:
            return None
        key = board.key()
        if self.memoize and self._failed.get(key, -1) >= budget:
            return None

        if violated_bound(Instance(board, budget)) is None:
            for cut in self._candidates(board):
                rest = self._dfs(board.without(list(cut.cells())), budget - 1)
                if rest is not None:
                    return [cut] + rest

        if self.memoize:
            self._failed[key] = max(self._failed.get(key, -1), budget)
        return None


def _map_cut(cut: Cut, row_map: Sequence[int], col_map: Sequence[int]) -> Cut:
    if cut.orientation is Orientation.HORIZONTAL:
        return Cut.horizontal(row_map[cut.line - 1], col_map[cut.lo - 1], col_map[cut.hi - 1])
    return Cut.vertical(row_map[cut.lo - 1], row_map[cut.hi - 1], col_map[cut.line - 1])


def _extensions(cut: Cut, cell: Cell) -> List[Cut]:
    # 把切割沿自身所在的线延伸到覆盖 cell；单格切割两个方向都可以
    row, col = cell
    candidates = []
    if cut.orientation is Orientation.VERTICAL:
        fixed_col, lo, hi = cut.line, cut.lo, cut.hi
    else:
        fixed_col, lo, hi = (cut.lo, cut.line, cut.line) if cut.is_single_cell else (None, 0, 0)
    if fixed_col == col and not lo <= row <= hi:
        candidates.append(Cut.vertical(min(lo, row), max(hi, row), col))
    if cut.orientation is Orientation.HORIZONTAL and cut.line == row and not cut.lo <= col <= cut.hi:
        candidates.append(Cut.horizontal(row, min(cut.lo, col), max(cut.hi, col)))
    return candidates


def _improve(board: Board, cuts: List[Cut], remaining: Board, cleared: Set[Cell]) -> Optional[Tuple[List[Cut], Board]]:
    for cell in remaining.cells:
        if cell not in cleared:
            continue
        for index, cut in enumerate(cuts):
            for extended in _extensions(cut, cell):
                trial = cuts[:index] + [extended] + cuts[index + 1:]
                result = replay(board, trial)
                if result is not None and result.button_count < remaining.button_count:
                    return trial, result
    return None


def _repair(inst: Instance, cuts: List[Cut], cleared: Sequence[Cell]) -> Optional[List[Cut]]:
    """
    把被规则4/6删除的按钮补进相邻的同线切割

    对剩余的被删除格子，尝试延伸序列中的某个切割使其覆盖该格子，
    接受第一个仍然合法且剩余按钮更少的改写，直到棋盘清空或无法改进。
    """
    cleared_set = set(cleared)
    current = list(cuts)
    remaining = replay(inst.board, current)
    while remaining is not None and not remaining.is_empty:
        step = _improve(inst.board, current, remaining, cleared_set)
        if step is None:
            return None
        current, remaining = step
    return current if remaining is not None else None


def lift_solution(
    inst: Instance,
    kernel_result: KernelResult,
    kernel_cuts: Sequence[Cut],
    memoize: bool = True,
) -> Tuple[Solution, int]:
    """
    把化简实例上的证书还原为原实例上的证书

    先按 row_map / col_map 映射坐标；若规则4/6删除过按钮导致校验失败，
    尝试延伸切割补上这些按钮；仍失败时在原实例上重新搜索（答案已知为有解）。

    Returns:
        (原始坐标下的解, 额外搜索的节点数)
    """
    mapped = [_map_cut(cut, kernel_result.row_map, kernel_result.col_map) for cut in kernel_cuts]
    if verify_solution(inst, mapped):
        return Solution.of(mapped), 0

    repaired = _repair(inst, mapped, kernel_result.cleared_cells)
    if repaired is not None and verify_solution(inst, repaired):
        logger.info(f"证书还原: 延伸切割补回了 {len(kernel_result.cleared_cells)} 个被化简删除的按钮")
        return Solution.of(repaired), 0

    logger.warning("证书还原失败，在原实例上重新搜索证书")
    recovery = CutSearch(prune_maximal=True, memoize=memoize)
    found = recovery.search(inst.board, inst.k)
    if found is None:
        raise SolverError("化简后的实例有解，但原实例上找不到证书")
    return Solution.of(found), recovery.nodes_explored


def solve(
    inst: Instance,
    use_kernel: bool = True,
    prune_maximal: Optional[bool] = None,
    memoize: Optional[bool] = None,
) -> SolveReport:
    """
    求解实例并给出证书

    Args:
        inst: 实例
        use_kernel: 先执行化简
        prune_maximal: 只在极大切割上分支，None 表示使用配置
        memoize: 启用置换表，None 表示使用配置

    Returns:
        求解报告
    """
    settings = get_settings()
    prune_maximal = settings.prune_maximal if prune_maximal is None else prune_maximal
    memoize = settings.memoize if memoize is None else memoize
    started = time.perf_counter()

    if inst.board.is_empty:
        return SolveReport(Answer.YES, 0, solution=Solution(), elapsed=time.perf_counter() - started)

    kernel_result = None
    target = inst
    if use_kernel:
        kernel_result = kernelize(inst)
        if kernel_result.is_no:
            return SolveReport(
                Answer.NO, 0, kernel_result=kernel_result, elapsed=time.perf_counter() - started
            )
        target = kernel_result.instance

    searcher = CutSearch(prune_maximal=prune_maximal, memoize=memoize)
    found = searcher.search(target.board, target.k)
    nodes = searcher.nodes_explored
    if found is None:
        logger.info(f"搜索完成: 无解，共 {nodes} 个节点")
        return SolveReport(
            Answer.NO, nodes, kernel_result=kernel_result, elapsed=time.perf_counter() - started
        )

    kernel_solution = None
    solution = Solution.of(found)
    if kernel_result is not None:
        kernel_solution = solution
        solution, extra = lift_solution(inst, kernel_result, found, memoize=memoize)
        nodes += extra

    if not verify_solution(inst, solution.cuts):
        raise SolverError(f"证书校验失败: {BoardCodec.format_solution(solution.cuts)!r}")
    logger.info(f"搜索完成: 有解，{len(solution)} 个切割，共 {nodes} 个节点")
    return SolveReport(
        Answer.YES,
        nodes,
        solution=solution,
        kernel_result=kernel_result,
        kernel_solution=kernel_solution,
        elapsed=time.perf_counter() - started,
    )
