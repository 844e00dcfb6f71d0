from board.errors import ButtonsError


class GeneratorError(ButtonsError):
    """
    实例生成参数无效
    """


class SuiteError(ButtonsError):
    """
    基准测试套件文件无法读取或校验失败
    """
