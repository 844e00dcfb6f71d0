import os
import sys

import pytest

# 测试直接以 backend 目录为根导入各个包
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from bench.generator import generate_counterexample
from board.model import Board


@pytest.fixture
def alternating():
    """
    n×2 交替反例的构造函数
    """
    return generate_counterexample


@pytest.fixture
def column_of_ones():
    return Board.from_rows([[1], [1], [1]])
