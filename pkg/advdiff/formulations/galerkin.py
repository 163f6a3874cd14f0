"""
标准 Galerkin 格式，线性形函数，试探空间与形函数空间相同
"""

from typing import Optional

import numpy as np

from advdiff.formulations.base import ElementContribution, FormulationKernel
from advdiff.model.problem import Problem, WeightFunction, peclet_element
from advdiff.model.system import Formulation
from advdiff.numerics.quadrature import element_gauss_points, gauss_rule

_ADVECTION = np.array([[-1.0, 1.0], [-1.0, 1.0]])
_DIFFUSION = np.array([[1.0, -1.0], [-1.0, 1.0]])


class GalerkinKernel(FormulationKernel):
    @property
    def name(self) -> Formulation:
        return Formulation.GALERKIN

    @property
    def description(self) -> str:
        return "standard Galerkin, oscillates once the element Péclet number exceeds 1"

    def extra_diffusivity(self, problem: Problem, x_left: float, h: float) -> float:
        """叠加在 k 上的单元常数扩散"""
        return 0.0

    def element_contributions(
        self,
        problem: Problem,
        x_left: float,
        h: float,
        weight: Optional[WeightFunction] = None,
    ) -> ElementContribution:
        extra = self.extra_diffusivity(problem, x_left, h)
        mass = np.full(2, 0.5 * h)

        if problem.constant_coefficients:
            v, k, f = problem.constant_values()
            matrix = (0.5 * v) * _ADVECTION + ((k + extra) / h) * _DIFFUSION
            return ElementContribution(matrix, f * mass, mass)

        rule = gauss_rule(element_gauss_points(peclet_element(problem, x_left, h)))
        xs, ws = rule.on_interval(x_left, x_left + h)
        n_left = (x_left + h - xs) / h
        n_right = (xs - x_left) / h
        shapes = np.vstack((n_left, n_right))

        # v N_a N_b'，其中 N_b' = ∓1/h
        advection_moments = shapes @ (ws * problem.velocity(xs))
        advection = np.outer(advection_moments, np.array([-1.0, 1.0]) / h)
        diffusion = (np.sum(ws * problem.diffusivity(xs)) + extra * h) / (h * h) * _DIFFUSION
        load = shapes @ (ws * problem.forcing(xs))
        return ElementContribution(advection + diffusion, load, mass)

    def is_symmetric(self, problem: Problem) -> bool:
        if problem.constant_coefficients:
            return problem.constant_values()[0] == 0.0
        grid = np.linspace(problem.x_lo, problem.x_hi, 101)
        return bool(np.all(problem.velocity(grid) == 0.0))
