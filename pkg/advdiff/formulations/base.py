"""
离散格式基类
"""

from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Optional

import numpy as np

from advdiff.model.problem import Problem, WeightFunction
from advdiff.model.system import Formulation


@dataclass(frozen=True, eq=False)
class ElementContribution:
    """
    单元贡献，整体乘以 exp(log_factor) 后才是真实值

    matrix[a, b] 中 a 为试探函数（行），b 为形函数（列）；mass 为 ∫ α N_a，
    供行平衡使用
    """

    matrix: np.ndarray
    load: np.ndarray
    mass: np.ndarray
    log_factor: float = 0.0


class FormulationKernel(ABC):
    """离散格式：给出单元矩阵、单元载荷和对称性"""

    @property
    @abstractmethod
    def name(self) -> Formulation:
        """格式标签"""
        pass

    @property
    @abstractmethod
    def description(self) -> str:
        """格式描述"""
        pass

    @property
    def uses_weight(self) -> bool:
        return False

    @abstractmethod
    def element_contributions(
        self,
        problem: Problem,
        x_left: float,
        h: float,
        weight: Optional[WeightFunction] = None,
    ) -> ElementContribution:
        """计算单元 [x_left, x_left + h] 的贡献

        Args:
            problem: 校验过的问题
            x_left: 单元左端点
            h: 单元长度
            weight: 权函数，只有加权格式使用

        Returns:
            ElementContribution: 2x2 矩阵、载荷与集中质量
        """
        pass

    def element_matrix(self, problem, x_left, h, weight=None) -> np.ndarray:
        contribution = self.element_contributions(problem, x_left, h, weight)
        return np.exp(contribution.log_factor) * contribution.matrix

    def element_load(self, problem, x_left, h, weight=None) -> np.ndarray:
        contribution = self.element_contributions(problem, x_left, h, weight)
        return np.exp(contribution.log_factor) * contribution.load

    @abstractmethod
    def is_symmetric(self, problem: Problem) -> bool:
        """装配出的原始系统是否对称"""
        pass
