import csv
import io
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Iterable, List, Optional, Tuple

from pydantic import BaseModel, Field, ValidationError, model_validator

from board.codec import BoardCodec
from board.model import Board, Instance
from config import get_settings
from solver.search import solve

from .errors import SuiteError
from .generator import PRNG_NAME, GenParams, generate_counterexample, generate_instance

logger = logging.getLogger(__name__)

SCHEMA = "bench-v1"
CSV_COLUMNS = [
    "instance_id",
    "n",
    "m",
    "k",
    "buttons",
    "kernel_rows",
    "kernel_cols",
    "kernel_buttons",
    "answer",
    "nodes_explored",
    "wall_time",
    "error",
]


class SuiteEntry(BaseModel):
    """
    套件中的一项: 实例来源（随机参数 / 反例 / 棋盘文件三选一）与一组预算
    """
    id: Optional[str] = None
    params: Optional[GenParams] = None
    counterexample: Optional[int] = None
    board_file: Optional[str] = None
    k: List[int] = Field(min_length=1)

    @model_validator(mode="after")
    def _check_source(self) -> "SuiteEntry":
        sources = [self.params, self.counterexample, self.board_file]
        if sum(source is not None for source in sources) != 1:
            raise ValueError("params / counterexample / board_file 必须恰好给出一个")
        if any(k < 0 for k in self.k):
            raise ValueError(f"预算必须非负: {self.k}")
        return self


class SuiteSpec(BaseModel):
    """
    基准测试套件
    """
    name: str = "suite"
    entries: List[SuiteEntry] = Field(default_factory=list)

    @classmethod
    def load(cls, path: str) -> "SuiteSpec":
        """
        从 JSON 文件加载套件

        Raises:
            SuiteError: 文件无法读取或内容校验失败
        """
        try:
            return cls.model_validate_json(Path(path).read_text(encoding="utf-8"))
        except OSError as e:
            raise SuiteError(f"读取套件文件失败: {e}") from e
        except ValidationError as e:
            raise SuiteError(f"套件文件格式错误: {e}") from e


class BenchRecord(BaseModel):
    """
    单个 (实例, k) 的基准结果
    """
    instance_id: str
    n: int = 0
    m: int = 0
    k: int
    buttons: int = 0
    kernel_rows: int = 0
    kernel_cols: int = 0
    kernel_buttons: int = 0
    answer: str
    nodes_explored: int = 0
    wall_time: float = 0.0
    error: str = ""


Task = Tuple[str, SuiteEntry, int, Optional[str], bool, Optional[bool]]


def _load_board(entry: SuiteEntry, base_dir: Optional[str]) -> Board:
    if entry.params is not None:
        return generate_instance(entry.params)
    if entry.counterexample is not None:
        return generate_counterexample(entry.counterexample)
    path = Path(entry.board_file)
    if base_dir is not None and not path.is_absolute():
        path = Path(base_dir) / path
    return BoardCodec.parse_board(path.read_text(encoding="utf-8"))


def _run_task(task: Task) -> BenchRecord:
    instance_id, entry, k, base_dir, use_kernel, prune_maximal = task
    try:
        board = _load_board(entry, base_dir)
    except Exception as e:
        logger.error(f"加载实例 {instance_id} 失败: {e}")
        return BenchRecord(instance_id=instance_id, k=k, answer="ERROR", error=str(e))

    started = time.perf_counter()
    try:
        report = solve(Instance(board, k), use_kernel=use_kernel, prune_maximal=prune_maximal)
    except Exception as e:
        logger.error(f"求解实例 {instance_id} 失败: {e}")
        return BenchRecord(
            instance_id=instance_id,
            n=board.rows,
            m=board.cols,
            k=k,
            buttons=board.button_count,
            answer="ERROR",
            error=str(e),
            wall_time=time.perf_counter() - started,
        )
    wall_time = time.perf_counter() - started

    kernel_board = report.kernel_result.instance.board if report.kernel_result else board
    logger.info(f"实例 {instance_id}: {report.answer.value}，{report.nodes_explored} 个节点，{wall_time:.4f}s")
    return BenchRecord(
        instance_id=instance_id,
        n=board.rows,
        m=board.cols,
        k=k,
        buttons=board.button_count,
        kernel_rows=kernel_board.rows,
        kernel_cols=kernel_board.cols,
        kernel_buttons=kernel_board.button_count,
        answer=report.answer.value,
        nodes_explored=report.nodes_explored,
        wall_time=wall_time,
    )


def _tasks(suite: SuiteSpec, base_dir: Optional[str], use_kernel: bool, prune_maximal: Optional[bool]) -> List[Task]:
    tasks = []
    for index, entry in enumerate(suite.entries, start=1):
        entry_id = entry.id or f"{suite.name}-{index}"
        for k in entry.k:
            tasks.append((f"{entry_id}-k{k}", entry, k, base_dir, use_kernel, prune_maximal))
    return tasks


def run_benchmark(
    suite: SuiteSpec,
    workers: Optional[int] = None,
    base_dir: Optional[str] = None,
    use_kernel: bool = True,
    prune_maximal: Optional[bool] = None,
) -> List[BenchRecord]:
    """
    运行基准测试套件

    Args:
        suite: 套件
        workers: 并行进程数，None 表示使用配置 bench_workers
        base_dir: 解析相对 board_file 路径的目录
        use_kernel: 求解前先化简
        prune_maximal: 只在极大切割上分支，None 表示使用配置

    Returns:
        按套件顺序排列的结果记录
    """
    workers = get_settings().bench_workers if workers is None else workers
    tasks = _tasks(suite, base_dir, use_kernel, prune_maximal)
    logger.info(f"运行套件 {suite.name}: {len(tasks)} 个任务，{workers} 个进程")
    if workers <= 1 or len(tasks) <= 1:
        return [_run_task(task) for task in tasks]
    # map 按提交顺序返回结果
    with ProcessPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(_run_task, tasks))


def records_to_csv(records: Iterable[BenchRecord]) -> str:
    """
    输出 CSV: 首行为带版本的注释头，然后是列名和记录
    """
    buffer = io.StringIO()
    buffer.write(f"# schema={SCHEMA} prng={PRNG_NAME}\n")
    writer = csv.DictWriter(buffer, fieldnames=CSV_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for record in records:
        writer.writerow(record.model_dump())
    return buffer.getvalue()


def write_csv(records: Iterable[BenchRecord], out: str) -> None:
    Path(out).write_text(records_to_csv(records), encoding="utf-8")
