from hypothesis import strategies as st

from board.model import Board


@st.composite
def boards(draw, max_rows=3, max_cols=3, max_colors=2):
    """
    小棋盘策略: 每个格子为 0（空）或 1..max_colors
    """
    rows = draw(st.integers(min_value=1, max_value=max_rows))
    cols = draw(st.integers(min_value=1, max_value=max_cols))
    grid = draw(
        st.lists(
            st.lists(st.integers(min_value=0, max_value=max_colors), min_size=cols, max_size=cols),
            min_size=rows,
            max_size=rows,
        )
    )
    return Board.from_rows(grid)
