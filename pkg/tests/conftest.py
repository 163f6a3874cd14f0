"""
测试公共配置与夹具
"""

import os
import sys

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

import pytest

from advdiff.model.mesh import build_uniform
from advdiff.model.problem import build_problem


@pytest.fixture
def unit_mesh():
    """[0, 1] 上 10 个单元，h = 0.1"""
    return build_uniform((0.0, 1.0), 10)


@pytest.fixture
def benchmark():
    """v = 1, k = 1/ratio, f = 1，两端齐次 Dirichlet 的基准问题"""

    def make(ratio: float, velocity: float = 1.0):
        return build_problem(velocity, velocity / ratio, 1.0)

    return make
