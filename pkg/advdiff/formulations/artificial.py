"""
最优人工扩散格式：Galerkin 加上单元常数 k̄ = (v h / 2) cothm(Pe)
"""

from advdiff.formulations.galerkin import GalerkinKernel
from advdiff.model.problem import Problem
from advdiff.model.system import Formulation
from advdiff.numerics.stencils import kbar


class ArtificialDiffusionKernel(GalerkinKernel):
    @property
    def name(self) -> Formulation:
        return Formulation.ARTIFICIAL

    @property
    def description(self) -> str:
        return "Galerkin with optimal artificial diffusion evaluated at element midpoints"

    def extra_diffusivity(self, problem: Problem, x_left: float, h: float) -> float:
        x_mid = x_left + 0.5 * h
        v = float(problem.velocity(x_mid))
        k = float(problem.diffusivity(x_mid))
        return kbar(v, k, h)

    def is_symmetric(self, problem: Problem) -> bool:
        return False
