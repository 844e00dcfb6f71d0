import argparse
import logging
import os
import sys
from pathlib import Path
from typing import List, Optional

from pydantic import ValidationError

# 添加当前目录到Python路径
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from bench.benchmark import SuiteSpec, run_benchmark, write_csv
from bench.errors import GeneratorError, SuiteError
from bench.generator import GenParams, generate_counterexample, generate_instance
from board.codec import BoardCodec
from board.errors import BoardParseError
from board.model import Instance
from config import setup_logging
from kernel.engine import kernelize
from solver.search import solve
from solver.verify import explain_solution

logger = logging.getLogger("buttons-scissors")

EXIT_YES = 0
EXIT_NO = 1
EXIT_USAGE = 2


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text(encoding="utf-8")


def _non_negative(value: str) -> int:
    number = int(value)
    if number < 0:
        raise argparse.ArgumentTypeError(f"必须是非负整数: {value}")
    return number


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="buttons-scissors",
        description="正交 Buttons and Scissors 精确求解器: 化简规则 + 有界深度搜索",
    )
    parser.add_argument("--log-level", default=None, help="日志级别，默认读取 BNS_LOG_LEVEL")
    sub = parser.add_subparsers(dest="command", required=True)

    p_solve = sub.add_parser("solve", help="判定并给出证书")
    p_solve.add_argument("--k", type=_non_negative, required=True)
    p_solve.add_argument("--no-kernel", action="store_true", help="跳过化简直接搜索")
    p_solve.add_argument("--prune-maximal", action="store_true", help="只在极大切割上分支")
    p_solve.add_argument("--no-memo", action="store_true", help="关闭置换表")
    p_solve.add_argument("board_file")

    p_kernel = sub.add_parser("kernelize", help="只执行化简规则")
    p_kernel.add_argument("--k", type=_non_negative, required=True)
    p_kernel.add_argument("board_file")

    p_gen = sub.add_parser("gen", help="生成实例")
    p_gen.add_argument("--rows", type=int)
    p_gen.add_argument("--cols", type=int)
    p_gen.add_argument("--colors", type=int)
    p_gen.add_argument("--density")
    p_gen.add_argument("--seed", type=int)
    p_gen.add_argument("--counterexample", type=int, metavar="N", help="生成 N×2 交替反例")

    p_verify = sub.add_parser("verify", help="校验解")
    p_verify.add_argument("--k", type=_non_negative, required=True)
    p_verify.add_argument("board_file")
    p_verify.add_argument("solution_file")

    p_bench = sub.add_parser("bench", help="运行基准测试套件")
    p_bench.add_argument("suite_file")
    p_bench.add_argument("--out", required=True)
    p_bench.add_argument("--workers", type=int, default=None)
    p_bench.add_argument("--no-kernel", action="store_true")
    p_bench.add_argument("--prune-maximal", action="store_true")
    return parser


def cmd_solve(args: argparse.Namespace) -> int:
    board = BoardCodec.parse_board(_read_text(args.board_file))
    report = solve(
        Instance(board, args.k),
        use_kernel=not args.no_kernel,
        prune_maximal=True if args.prune_maximal else None,
        memoize=False if args.no_memo else None,
    )
    sys.stdout.write(report.to_text())
    return EXIT_YES if report.is_yes else EXIT_NO


def cmd_kernelize(args: argparse.Namespace) -> int:
    board = BoardCodec.parse_board(_read_text(args.board_file))
    result = kernelize(Instance(board, args.k))
    sys.stdout.write(result.to_text())
    return EXIT_NO if result.is_no else EXIT_YES


def cmd_gen(args: argparse.Namespace) -> int:
    if args.counterexample is not None:
        board = generate_counterexample(args.counterexample)
    else:
        missing = [name for name in ("rows", "cols", "colors", "density", "seed") if getattr(args, name) is None]
        if missing:
            raise GeneratorError("缺少参数: " + ", ".join(f"--{name}" for name in missing))
        params = GenParams(
            rows=args.rows, cols=args.cols, colors=args.colors, density=args.density, seed=args.seed
        )
        board = generate_instance(params)
    sys.stdout.write(BoardCodec.serialize_board(board))
    return EXIT_YES


def cmd_verify(args: argparse.Namespace) -> int:
    board = BoardCodec.parse_board(_read_text(args.board_file))
    cuts = BoardCodec.parse_solution(_read_text(args.solution_file))
    reason = explain_solution(Instance(board, args.k), cuts)
    if reason is None:
        sys.stdout.write("VALID\n")
        return EXIT_YES
    sys.stdout.write(f"INVALID {reason}\n")
    return EXIT_NO


def cmd_bench(args: argparse.Namespace) -> int:
    suite = SuiteSpec.load(args.suite_file)
    records = run_benchmark(
        suite,
        workers=args.workers,
        base_dir=str(Path(args.suite_file).resolve().parent),
        use_kernel=not args.no_kernel,
        prune_maximal=True if args.prune_maximal else None,
    )
    write_csv(records, args.out)
    logger.info(f"写入 {len(records)} 条记录到 {args.out}")
    return EXIT_YES


COMMANDS = {
    "solve": cmd_solve,
    "kernelize": cmd_kernelize,
    "gen": cmd_gen,
    "verify": cmd_verify,
    "bench": cmd_bench,
}


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    setup_logging(args.log_level)
    try:
        return COMMANDS[args.command](args)
    except (BoardParseError, GeneratorError, SuiteError, ValidationError, OSError) as e:
        logger.error(f"{args.command} 失败: {e}")
        sys.stderr.write(f"error: {e}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
