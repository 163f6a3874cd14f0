"""
Tridiagonal Solve

不选主元的 Thomas 消元、1-范数条件数与完整求解流水线
"""

from __future__ import annotations

from dataclasses import replace
from typing import Optional, Union

import numpy as np

from advdiff.errors import SystemTooLargeError, ZeroPivotError
from advdiff.model.mesh import Mesh1D
from advdiff.model.problem import Problem, WeightFunction
from advdiff.model.system import Formulation, NodalSolution, TriDiagSystem
from advdiff.numerics.assembly import (
    apply_dirichlet,
    apply_neumann,
    assemble,
    assemble_equilibrated,
)
from advdiff.utils.logger import logger

PIVOT_FLOOR = 1e-300
MAX_CONDITION_SIZE = 100_000
_CONDITION_BLOCK = 512


class TridiagonalLU:
    """A = L U 分解，L 为单位下双对角，U 的对角即主元"""

    def __init__(self, sub, diag, sup):
        sub = np.asarray(sub, dtype=float)
        diag = np.asarray(diag, dtype=float)
        self.sup = np.asarray(sup, dtype=float)
        n = diag.size
        self.pivots = np.empty(n)
        self.multipliers = np.empty(max(n - 1, 0))

        self.pivots[0] = diag[0]
        self._check(0)
        for i in range(1, n):
            m = sub[i - 1] / self.pivots[i - 1]
            self.multipliers[i - 1] = m
            self.pivots[i] = diag[i] - m * self.sup[i - 1]
            self._check(i)

    def _check(self, row: int) -> None:
        pivot = self.pivots[row]
        if not abs(pivot) > PIVOT_FLOOR:
            raise ZeroPivotError(row, float(pivot))

    @property
    def n(self) -> int:
        return self.pivots.size

    def solve(self, rhs) -> np.ndarray:
        """解 A x = rhs，rhs 可以是 (n,) 或 (n, m)"""
        y = np.array(rhs, dtype=float)
        for i in range(1, self.n):
            y[i] -= self.multipliers[i - 1] * y[i - 1]
        y[-1] /= self.pivots[-1]
        for i in range(self.n - 2, -1, -1):
            y[i] = (y[i] - self.sup[i] * y[i + 1]) / self.pivots[i]
        return y


def thomas_solve(system: TriDiagSystem) -> NodalSolution:
    """
    Thomas 算法求解三对角系统

    Raises:
        ZeroPivotError: 某个主元的绝对值不超过 1e-300
    """
    lu = TridiagonalLU(system.sub, system.diag, system.sup)
    values = lu.solve(system.rhs)
    residual = float(np.max(np.abs(system.matvec(values) - system.rhs)))
    logger.debug(f"Thomas 求解完成: n={system.n}, 残差 {residual:.3e}")
    return NodalSolution(
        values=values,
        formulation=system.formulation,
        residual_inf=residual,
        mesh=system.mesh,
    )


def tridiagonal_matvec(system: TriDiagSystem, u) -> np.ndarray:
    return system.matvec(u)


def condition_estimate(system: TriDiagSystem) -> float:
    """
    κ₁(A) = ‖A‖₁ ‖A⁻¹‖₁

    A⁻¹ 按列块用同一个 LU 分解求出，规模上限 1e5

    Raises:
        SystemTooLargeError, ZeroPivotError
    """
    n = system.n
    if n > MAX_CONDITION_SIZE:
        raise SystemTooLargeError(
            f"condition estimate is limited to n <= {MAX_CONDITION_SIZE}, got {n}"
        )
    column_sums = np.abs(system.diag).copy()
    column_sums[1:] += np.abs(system.sup)
    column_sums[:-1] += np.abs(system.sub)
    norm = float(column_sums.max())

    lu = TridiagonalLU(system.sub, system.diag, system.sup)
    inverse_norm = 0.0
    for start in range(0, n, _CONDITION_BLOCK):
        stop = min(n, start + _CONDITION_BLOCK)
        block = np.zeros((n, stop - start))
        block[np.arange(start, stop), np.arange(stop - start)] = 1.0
        columns = lu.solve(block)
        inverse_norm = max(inverse_norm, float(np.abs(columns).sum(axis=0).max()))
    return norm * inverse_norm


def prepare_system(
    problem: Problem,
    mesh: Mesh1D,
    formulation: Union[str, Formulation],
    *,
    weight: Optional[WeightFunction] = None,
    equilibrate: bool = True,
    max_workers: int = 1,
) -> TriDiagSystem:
    """
    装配并施加边界条件，得到可以直接求解的系统

    equilibrate 为真时先做行平衡（加权格式使用对数平移装配），
    大 v/k 下原始加权系统会下溢，只在诊断时关闭
    """
    formulation = Formulation.parse(formulation)
    if equilibrate:
        system = assemble_equilibrated(
            problem, mesh, formulation, weight=weight, max_workers=max_workers
        )
    else:
        system = assemble(problem, mesh, formulation, weight=weight, max_workers=max_workers)

    for end in ("left", "right"):
        bc = problem.boundary(end)
        if not bc.is_dirichlet:
            system = apply_neumann(system, problem, end, bc.value)
    for node, bc in ((0, problem.left), (system.n - 1, problem.right)):
        if bc.is_dirichlet:
            system = apply_dirichlet(system, node, bc.value)
    return system


def solve_formulation(
    problem: Problem,
    mesh: Mesh1D,
    formulation: Union[str, Formulation],
    *,
    weight: Optional[WeightFunction] = None,
    equilibrate: bool = True,
    max_workers: int = 1,
) -> NodalSolution:
    """
    完整求解：装配 -> 行平衡 -> Neumann -> Dirichlet -> Thomas

    Args:
        problem: 校验过的问题
        mesh: 网格
        formulation: 离散格式
        weight: 加权格式的权函数，默认按问题构造
        equilibrate: 是否行平衡
        max_workers: 装配的并行线程数

    Returns:
        NodalSolution: 带有 problem 与 mesh 的节点解
    """
    formulation = Formulation.parse(formulation)
    system = prepare_system(
        problem,
        mesh,
        formulation,
        weight=weight,
        equilibrate=equilibrate,
        max_workers=max_workers,
    )
    solution = thomas_solve(system)
    logger.debug(f"{formulation.value} 求解完成: {problem.summary()}")
    return replace(solution, problem=problem)
