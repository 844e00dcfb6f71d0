from fractions import Fraction
from typing import Any

import numpy as np
from pydantic import BaseModel, Field, field_validator

from board.model import Board

from .errors import GeneratorError

# 写入 CSV 头部，保证跨实现可复现
PRNG_NAME = "numpy.PCG64"


class GenParams(BaseModel):
    """
    随机实例参数
    """
    rows: int = Field(ge=1)
    cols: int = Field(ge=1)
    colors: int = Field(ge=1)
    density: float = Field(ge=0, le=1)
    seed: int = Field(ge=0, le=2 ** 64 - 1)

    @field_validator("density", mode="before")
    @classmethod
    def _parse_fraction(cls, value: Any) -> Any:
        # 允许 "1/2" 这样的有理数写法
        if isinstance(value, str) and "/" in value:
            return float(Fraction(value))
        return value


def generate_instance(p: GenParams) -> Board:
    """
    生成随机棋盘

    每个格子以概率 density 独立放置按钮，颜色在 1..colors 中均匀选取；
    随机数由以 seed 初始化的 PCG64 生成，同样的参数总是得到同样的棋盘。

    Args:
        p: 生成参数

    Returns:
        棋盘
    """
    rng = np.random.Generator(np.random.PCG64(p.seed))
    occupied = rng.random((p.rows, p.cols)) < p.density
    colors = rng.integers(1, p.colors, size=(p.rows, p.cols), endpoint=True)
    cells = {
        (int(i) + 1, int(j) + 1): int(colors[i, j])
        for i, j in zip(*np.nonzero(occupied))
    }
    return Board(p.rows, p.cols, cells)


def generate_counterexample(n: int) -> Board:
    """
    生成 n×2 交替棋盘: 奇数行第1列颜色1，偶数行第2列颜色2

    早先的“行块数超过 2k 即无解”判定在此实例上出错: 行块数随 n 增长，
    但两次垂直切割即可清空。

    Raises:
        GeneratorError: n 不是不小于2的偶数
    """
    if n < 2 or n % 2:
        raise GeneratorError(f"反例行数必须是不小于2的偶数: {n}")
    cells = {}
    for i in range(1, n + 1):
        if i % 2:
            cells[(i, 1)] = 1
        else:
            cells[(i, 2)] = 2
    return Board(n, 2, cells)
