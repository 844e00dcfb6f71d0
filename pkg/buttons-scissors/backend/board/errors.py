class ButtonsError(Exception):
    """
    求解器所有异常的基类
    """


class BoardError(ButtonsError):
    """
    棋盘模型相关错误
    """


class BoardParseError(BoardError):
    """
    棋盘/切割文本解析失败，携带出错的行号(从1开始)
    """

    def __init__(self, line_no: int, message: str):
        self.line_no = line_no
        self.message = message
        super().__init__(f"第 {line_no} 行: {message}")


class CutOutOfBoundsError(BoardError):
    """
    切割超出棋盘范围（与“切割无效”是两回事）
    """


class InvalidCutError(BoardError):
    """
    对棋盘应用了无效切割
    """
