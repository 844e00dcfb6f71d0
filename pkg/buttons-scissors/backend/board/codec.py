from typing import List, Sequence

from .errors import BoardParseError
from .model import Board, Cut


class BoardCodec:
    """
    棋盘、切割与解的文本编解码

    棋盘格式: 首行 "<n> <m>"，随后 n 行，每行 m 个非负整数，0 为空格。
    以 "#" 开头的行为注释，解析时跳过但仍计入行号。
    """

    @staticmethod
    def parse_board(text: str) -> Board:
        """
        解析棋盘文本

        Args:
            text: 棋盘文本

        Returns:
            棋盘

        Raises:
            BoardParseError: 格式错误，附带行号
        """
        lines = [
            (no, line)
            for no, line in enumerate(text.splitlines(), start=1)
            if line.strip() and not line.lstrip().startswith("#")
        ]
        if not lines:
            raise BoardParseError(1, "缺少棋盘头 \"<n> <m>\"")

        header_no, header = lines[0]
        tokens = header.split()
        if len(tokens) != 2:
            raise BoardParseError(header_no, f"棋盘头应为 \"<n> <m>\"，实际为 {header!r}")
        rows = BoardCodec._parse_int(tokens[0], header_no)
        cols = BoardCodec._parse_int(tokens[1], header_no)

        data = lines[1:]
        if cols == 0 and not data:
            # 没有列的棋盘，其数据行都是空行
            return Board(rows, 0)
        if len(data) < rows:
            last_no = data[-1][0] + 1 if data else header_no + 1
            raise BoardParseError(last_no, f"期望 {rows} 行数据，实际只有 {len(data)} 行")
        if len(data) > rows:
            raise BoardParseError(data[rows][0], f"多余的数据行，棋盘只有 {rows} 行")

        cells = {}
        for i, (no, line) in enumerate(data, start=1):
            tokens = line.split()
            if len(tokens) != cols:
                raise BoardParseError(no, f"有 {len(tokens)} 个数值，期望 {cols} 个")
            for j, token in enumerate(tokens, start=1):
                color = BoardCodec._parse_int(token, no)
                if color:
                    cells[(i, j)] = color
        return Board(rows, cols, cells)

    @staticmethod
    def serialize_board(b: Board) -> str:
        """
        将棋盘序列化为规范文本，每行以换行结尾
        """
        out = [f"{b.rows} {b.cols}"]
        for row in b.to_rows():
            out.append(" ".join(str(color) for color in row))
        return "\n".join(out) + "\n"

    @staticmethod
    def parse_cut(text: str, line_no: int = 1) -> Cut:
        """
        解析单个切割: "H <i> <j1> <j2>" 或 "V <i1> <i2> <j>"
        """
        tokens = text.split()
        if len(tokens) != 4 or tokens[0] not in ("H", "V"):
            raise BoardParseError(line_no, f"无法识别的切割 {text!r}")
        a, b, c = (BoardCodec._parse_int(token, line_no, positive=True) for token in tokens[1:])
        try:
            if tokens[0] == "H":
                return Cut.horizontal(a, b, c)
            return Cut.vertical(a, b, c)
        except ValueError as e:
            raise BoardParseError(line_no, str(e)) from e

    @staticmethod
    def format_cut(c: Cut) -> str:
        return str(c)

    @staticmethod
    def parse_solution(text: str) -> List[Cut]:
        """
        解析解文件: 每行一个切割

        空行、注释行以及开头的 "YES" 行会被忽略，因此 solve 的输出可直接用于 verify。
        """
        cuts = []
        for no, line in enumerate(text.splitlines(), start=1):
            stripped = line.strip()
            if not stripped or stripped.startswith("#"):
                continue
            if stripped == "YES" and not cuts:
                continue
            cuts.append(BoardCodec.parse_cut(stripped, no))
        return cuts

    @staticmethod
    def format_solution(cuts: Sequence[Cut]) -> str:
        return "".join(f"{cut}\n" for cut in cuts)

    @staticmethod
    def _parse_int(token: str, line_no: int, positive: bool = False) -> int:
        if not (token.isascii() and token.isdigit()):
            raise BoardParseError(line_no, f"{token!r} 不是非负整数")
        value = int(token)
        if positive and value == 0:
            raise BoardParseError(line_no, f"坐标必须从 1 开始: {token!r}")
        return value


parse_board = BoardCodec.parse_board
serialize_board = BoardCodec.serialize_board
