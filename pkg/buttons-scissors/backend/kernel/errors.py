from board.errors import ButtonsError


class KernelError(ButtonsError):
    """
    化简不动点循环超出计量上界（按钮数 + n + m）
    """
