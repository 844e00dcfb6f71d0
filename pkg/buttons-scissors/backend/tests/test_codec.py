import pytest
from hypothesis import given, settings

from board.codec import BoardCodec, parse_board, serialize_board
from board.errors import BoardParseError
from board.model import Board, Cut
from strategies import boards


class TestParseBoard:
    def test_basic(self):
        b = parse_board("2 2\n1 0\n0 2")
        assert (b.rows, b.cols) == (2, 2)
        assert dict(b.cells) == {(1, 1): 1, (2, 2): 2}

    def test_empty_cell_board(self):
        b = parse_board("1 1\n0")
        assert (b.rows, b.cols, b.button_count) == (1, 1, 0)

    def test_short_line_names_line_number(self):
        with pytest.raises(BoardParseError) as exc:
            parse_board("2 2\n1 0\n0")
        assert exc.value.line_no == 3

    @pytest.mark.parametrize(
        "text, line_no",
        [
            ("", 1),
            ("2\n1 0", 1),
            ("x 2\n1 0", 1),
            ("1 2\n1 -1", 2),
            ("1 2\n1 a", 2),
            ("2 2\n1 0", 3),
            ("1 1\n1\n1", 3),
        ],
    )
    def test_malformed(self, text, line_no):
        with pytest.raises(BoardParseError) as exc:
            parse_board(text)
        assert exc.value.line_no == line_no

    @pytest.mark.parametrize("token", ["²", "٣", "３"])
    def test_non_ascii_digits_rejected(self, token):
        with pytest.raises(BoardParseError) as exc:
            parse_board(f"1 1\n{token}\n")
        assert exc.value.line_no == 2

    def test_non_ascii_digit_in_cut(self):
        with pytest.raises(BoardParseError):
            BoardCodec.parse_cut("H 1 ١ 1", 4)

    def test_comments_and_blank_lines_are_skipped(self):
        b = parse_board("# generated\n\n1 2\n# row 1\n3 0\n")
        assert b == Board(1, 2, {(1, 1): 3})

    def test_comment_still_counts_for_line_numbers(self):
        with pytest.raises(BoardParseError) as exc:
            parse_board("# header\n1 2\n1")
        assert exc.value.line_no == 3

    def test_zero_sized_board(self):
        assert parse_board("0 0\n") == Board(0, 0)


class TestSerializeBoard:
    def test_empty_cell(self):
        assert serialize_board(Board(1, 1)) == "1 1\n0\n"

    def test_two_colors(self):
        assert serialize_board(Board(2, 2, {(1, 1): 1, (2, 2): 2})) == "2 2\n1 0\n0 2\n"

    @given(boards(max_rows=5, max_cols=5, max_colors=4))
    @settings(max_examples=50)
    @pytest.mark.property_based
    def test_round_trip(self, b):
        text = serialize_board(b)
        assert parse_board(text) == b
        assert serialize_board(parse_board(text)) == text


class TestCutText:
    def test_parse_horizontal(self):
        assert BoardCodec.parse_cut("H 2 1 3") == Cut.horizontal(2, 1, 3)

    def test_parse_vertical_single_cell(self):
        assert BoardCodec.parse_cut("V 2 2 1") == Cut.horizontal(2, 1, 1)

    @pytest.mark.parametrize("text", ["X 1 1 1", "H 1 1", "H 0 1 1", "H 1 3 2", "V 1 b 2"])
    def test_parse_invalid(self, text):
        with pytest.raises(BoardParseError):
            BoardCodec.parse_cut(text, 7)

    def test_format(self):
        assert BoardCodec.format_cut(Cut.vertical(1, 4, 2)) == "V 1 4 2"

    def test_solution_ignores_header_and_comments(self):
        text = "YES\nH 1 1 2\n# rule=3 delete rows [2] cols []\nV 1 3 2\n\n"
        assert BoardCodec.parse_solution(text) == [Cut.horizontal(1, 1, 2), Cut.vertical(1, 3, 2)]

    def test_solution_error_line_number(self):
        with pytest.raises(BoardParseError) as exc:
            BoardCodec.parse_solution("H 1 1 1\nH 1 x 1\n")
        assert exc.value.line_no == 2

    def test_format_solution(self):
        cuts = [Cut.horizontal(1, 1, 2), Cut.vertical(1, 3, 2)]
        assert BoardCodec.format_solution(cuts) == "H 1 1 2\nV 1 3 2\n"
        assert BoardCodec.parse_solution(BoardCodec.format_solution(cuts)) == cuts
