from board.errors import ButtonsError


class SolverError(ButtonsError):
    """
    求解器内部错误：给出了无法通过校验的证书
    """


class OracleLimitError(ButtonsError):
    """
    穷举预言机只用于小实例，按钮数超过上限时拒绝执行
    """
