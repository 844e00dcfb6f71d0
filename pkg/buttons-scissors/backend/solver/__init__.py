# 精确判定与证书: 深度优先搜索、穷举预言机、解校验

from .errors import OracleLimitError, SolverError
from .oracle import OracleResult, oracle_solve
from .search import Answer, CutSearch, SolveReport, lift_solution, solve
from .verify import Solution, explain_solution, replay, verify_solution

__all__ = [
    "Answer",
    "CutSearch",
    "OracleLimitError",
    "OracleResult",
    "Solution",
    "SolveReport",
    "SolverError",
    "explain_solution",
    "lift_solution",
    "oracle_solve",
    "replay",
    "solve",
    "verify_solution",
]
