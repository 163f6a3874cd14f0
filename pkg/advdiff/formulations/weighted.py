"""
加权变分格式

试探函数乘以 α = exp(-∫ v/k)，使 α(-(k u')' + v u') = -(α k u')'，
弱形式的双线性型变为对称的 ∫ α k u' w'
"""

from typing import Optional

import numpy as np

from advdiff.formulations.base import ElementContribution, FormulationKernel
from advdiff.model.problem import Problem, WeightFunction, peclet_element
from advdiff.model.system import Formulation
from advdiff.numerics.quadrature import element_gauss_points, integrate_exp_poly, integrate_weighted

_STIFFNESS = np.array([[1.0, -1.0], [-1.0, 1.0]])


def element_log_factor(weight: WeightFunction, x_left: float, h: float) -> float:
    """单元两端 log α 的较大者，单元内的相对权函数不超过 1"""
    return float(np.max(weight.log_value(np.array([x_left, x_left + h]))))


class WeightedKernel(FormulationKernel):
    @property
    def name(self) -> Formulation:
        return Formulation.WEIGHTED

    @property
    def description(self) -> str:
        return "weighted variational formulation, symmetric and nodally exact"

    @property
    def uses_weight(self) -> bool:
        return True

    def element_contributions(
        self,
        problem: Problem,
        x_left: float,
        h: float,
        weight: Optional[WeightFunction] = None,
    ) -> ElementContribution:
        if weight is None:
            weight = WeightFunction.for_problem(problem)
        log_factor = element_log_factor(weight, x_left, h)

        if problem.constant_coefficients:
            v, k, f = problem.constant_values()
            # 以 α 较大的端点为原点，指数始终非正
            decay = -abs(v / k)
            j0 = integrate_exp_poly(decay, [1.0], 0.0, h)
            near = integrate_exp_poly(decay, [1.0, -1.0 / h], 0.0, h)
            far = integrate_exp_poly(decay, [0.0, 1.0 / h], 0.0, h)
            mass = np.array([near, far] if v >= 0.0 else [far, near])
            matrix = (k * j0 / (h * h)) * _STIFFNESS
            return ElementContribution(matrix, f * mass, mass, log_factor)

        n_pts = element_gauss_points(peclet_element(problem, x_left, h))
        x_right = x_left + h
        shapes = (lambda x: (x_right - x) / h, lambda x: (x - x_left) / h)

        def weighted(g) -> float:
            return integrate_weighted(g, weight, x_left, x_right, n_pts, log_shift=log_factor)

        stiffness = weighted(problem.diffusivity) / (h * h)
        mass = np.array([weighted(shape) for shape in shapes])
        load = np.array([weighted(lambda x, shape=shape: shape(x) * problem.forcing(x)) for shape in shapes])
        return ElementContribution(stiffness * _STIFFNESS, load, mass, log_factor)

    def is_symmetric(self, problem: Problem) -> bool:
        return True
