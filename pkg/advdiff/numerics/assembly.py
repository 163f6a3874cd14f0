"""
Assembly

把单元贡献装配成三对角系统，并提供行平衡、对称缩放与边界条件

加权格式的系数在 v/k 很大时跨越几百个数量级，装配时第 j 行先除以
exp(row_log_scale[j])，再乘单元因子，整个过程只在对数空间里做差
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from typing import Optional, Union

import numpy as np

from advdiff.errors import (
    EndHasDirichletError,
    InteriorDirichletUnsupportedError,
    NonPositiveScaleError,
)
from advdiff.formulations.base import ElementContribution
from advdiff.formulations.registry import get_formulation
from advdiff.model.mesh import Mesh1D, element_span
from advdiff.model.problem import Problem, WeightFunction
from advdiff.model.system import Formulation, TriDiagSystem
from advdiff.utils.logger import logger

FormulationLike = Union[str, Formulation]


def _element_contributions(
    problem: Problem,
    mesh: Mesh1D,
    formulation: Formulation,
    weight: Optional[WeightFunction],
    max_workers: int,
) -> list[ElementContribution]:
    kernel = get_formulation(formulation)

    def contribution(e: int) -> ElementContribution:
        x_left, h = element_span(mesh, e)
        return kernel.element_contributions(problem, x_left, h, weight)

    elements = range(mesh.n_elements)
    if max_workers > 1 and mesh.n_elements > 1:
        with ThreadPoolExecutor(max_workers=max_workers) as executor:
            return list(executor.map(contribution, elements))
    return [contribution(e) for e in elements]


def _assemble(
    problem: Problem,
    mesh: Mesh1D,
    formulation: FormulationLike,
    weight: Optional[WeightFunction],
    row_shift: Optional[np.ndarray],
    max_workers: int,
) -> tuple[TriDiagSystem, np.ndarray]:
    mesh.check_domain(problem.x_lo, problem.x_hi)
    formulation = Formulation.parse(formulation)
    kernel = get_formulation(formulation)
    if kernel.uses_weight and weight is None:
        weight = WeightFunction.for_problem(problem, mesh)

    n = mesh.n_nodes
    shift = np.zeros(n) if row_shift is None else np.asarray(row_shift, dtype=float)
    sub = np.zeros(n - 1)
    sup = np.zeros(n - 1)
    diag = np.zeros(n)
    rhs = np.zeros(n)
    mass = np.zeros(n)

    contributions = _element_contributions(problem, mesh, formulation, weight, max_workers)
    # 按单元顺序归约，结果与线程数无关
    for e, c in enumerate(contributions):
        a, b = e, e + 1
        fa = math.exp(c.log_factor - shift[a])
        fb = math.exp(c.log_factor - shift[b])
        diag[a] += fa * c.matrix[0, 0]
        sup[a] = fa * c.matrix[0, 1]
        sub[a] = fb * c.matrix[1, 0]
        diag[b] += fb * c.matrix[1, 1]
        rhs[a] += fa * c.load[0]
        rhs[b] += fb * c.load[1]
        mass[a] += fa * c.mass[0]
        mass[b] += fb * c.mass[1]

    system = TriDiagSystem(
        sub=sub,
        diag=diag,
        sup=sup,
        rhs=rhs,
        symmetric_hint=kernel.is_symmetric(problem) and row_shift is None,
        formulation=formulation,
        mesh=mesh,
        weight=weight,
        row_log_scale=shift,
    )
    logger.debug(
        f"装配完成: {formulation.value}, {mesh.n_elements} 个单元, "
        f"非对称度 {system.asymmetry():.3e}"
    )
    return system, mass


def assemble(
    problem: Problem,
    mesh: Mesh1D,
    formulation: FormulationLike,
    *,
    weight: Optional[WeightFunction] = None,
    max_workers: int = 1,
) -> TriDiagSystem:
    """
    装配原始系统，未施加边界条件

    加权格式不传 weight 时按问题构造归一化的权函数

    Args:
        problem: 校验过的问题
        mesh: 与问题区间一致的网格
        formulation: 离散格式
        weight: 权函数
        max_workers: 单元贡献的并行线程数

    Returns:
        TriDiagSystem: n+1 阶三对角系统
    """
    system, _ = _assemble(problem, mesh, formulation, weight, None, max_workers)
    return system


def lumped_mass(
    problem: Problem,
    mesh: Mesh1D,
    formulation: FormulationLike,
    *,
    weight: Optional[WeightFunction] = None,
) -> np.ndarray:
    """每个节点的 ∫ α N_j（非加权格式 α ≡ 1）"""
    _, mass = _assemble(problem, mesh, formulation, weight, None, 1)
    return mass


def row_equilibrate(system: TriDiagSystem, scales) -> TriDiagSystem:
    """第 j 行除以 scales[j]"""
    scales = np.asarray(scales, dtype=float)
    if scales.shape != (system.n,):
        raise ValueError(f"expected {system.n} row scales, got shape {scales.shape}")
    if not np.all(scales > 0.0) or not np.all(np.isfinite(scales)):
        raise NonPositiveScaleError("row scales must be positive and finite")
    equal = bool(np.all(scales == scales[0]))
    return system.replace(
        sub=system.sub / scales[1:],
        diag=system.diag / scales,
        sup=system.sup / scales[:-1],
        rhs=system.rhs / scales,
        row_log_scale=system.row_log_scale + np.log(scales),
        symmetric_hint=system.symmetric_hint and equal,
    )


def assemble_equilibrated(
    problem: Problem,
    mesh: Mesh1D,
    formulation: FormulationLike = Formulation.WEIGHTED,
    *,
    weight: Optional[WeightFunction] = None,
    max_workers: int = 1,
) -> TriDiagSystem:
    """
    装配并做行平衡：第 j 行除以 ∫ α N_j

    加权格式先按相邻单元 log α 的最大值平移每行，内部行等于闭式模板，右端项等于 f
    """
    formulation = Formulation.parse(formulation)
    kernel = get_formulation(formulation)
    shift = None
    if kernel.uses_weight:
        if weight is None:
            weight = WeightFunction.for_problem(problem, mesh)
        shift = row_log_shift(weight, mesh)
    system, mass = _assemble(problem, mesh, formulation, weight, shift, max_workers)
    return row_equilibrate(system, mass)


def row_log_shift(weight: WeightFunction, mesh: Mesh1D) -> np.ndarray:
    """第 j 行的平移量：与节点 j 相邻的单元中 log α 的最大值，平移后所有单元因子不超过 1"""
    log_alpha = np.asarray(weight.log_value(mesh.nodes), dtype=float)
    element = np.maximum(log_alpha[:-1], log_alpha[1:])
    shift = np.empty(mesh.n_nodes)
    shift[0] = element[0]
    shift[-1] = element[-1]
    shift[1:-1] = np.maximum(element[:-1], element[1:])
    return shift


def symmetric_scale(system: TriDiagSystem, scales) -> TriDiagSystem:
    """
    D^{-1/2} A D^{-1/2} 缩放，保持对称性

    Dirichlet 行的缩放因子固定为 1
    """
    scales = np.array(scales, dtype=float)
    if scales.shape != (system.n,):
        raise ValueError(f"expected {system.n} scales, got shape {scales.shape}")
    scales[list(system.dirichlet_nodes)] = 1.0
    if not np.all(scales > 0.0) or not np.all(np.isfinite(scales)):
        raise NonPositiveScaleError("symmetric scales must be positive and finite")
    root = np.sqrt(scales)
    off = root[:-1] * root[1:]
    return system.replace(
        sub=system.sub / off,
        diag=system.diag / scales,
        sup=system.sup / off,
        rhs=system.rhs / root,
        row_log_scale=system.row_log_scale + np.log(root),
    )


def apply_dirichlet(system: TriDiagSystem, node: int, value: float) -> TriDiagSystem:
    """
    在端点施加 u = value：消去该列，边界行置为 (1 | value)

    Raises:
        InteriorDirichletUnsupportedError: node 不是端点
    """
    n = system.n
    if node not in (0, n - 1):
        raise InteriorDirichletUnsupportedError(
            f"Dirichlet conditions apply at node 0 or {n - 1}, got {node}"
        )
    sub, diag, sup, rhs = (a.copy() for a in (system.sub, system.diag, system.sup, system.rhs))
    if node == 0:
        rhs[1] -= sub[0] * value
        sub[0] = 0.0
        sup[0] = 0.0
    else:
        rhs[n - 2] -= sup[n - 2] * value
        sup[n - 2] = 0.0
        sub[n - 2] = 0.0
    diag[node] = 1.0
    rhs[node] = value
    row_log_scale = system.row_log_scale.copy()
    row_log_scale[node] = 0.0
    nodes = tuple(sorted(set(system.dirichlet_nodes) | {node}))
    return system.replace(
        sub=sub,
        diag=diag,
        sup=sup,
        rhs=rhs,
        row_log_scale=row_log_scale,
        dirichlet_nodes=nodes,
    )


def apply_neumann(
    system: TriDiagSystem, problem: Problem, end: str, flux: float
) -> TriDiagSystem:
    """
    在端点加上外法向通量项

    加权格式加 α(x_end) · flux，其余格式加 flux，再按该行的缩放换算

    Raises:
        EndHasDirichletError: 该端为 Dirichlet 条件
    """
    if problem.boundary(end).is_dirichlet:
        raise EndHasDirichletError(f"the {end} end carries a Dirichlet condition")
    node = 0 if end == "left" else system.n - 1
    x_end = problem.x_lo if end == "left" else problem.x_hi
    log_term = -system.row_log_scale[node]
    if system.formulation is Formulation.WEIGHTED:
        weight = system.weight or WeightFunction.for_problem(problem, system.mesh)
        log_term += float(weight.log_value(x_end))
    rhs = system.rhs.copy()
    rhs[node] += math.exp(log_term) * flux
    return system.replace(rhs=rhs)


def interior_rows(system: TriDiagSystem) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """内部行 1..n-2 的 (左, 中, 右, 右端项)"""
    n = system.n
    return (
        system.sub[: n - 2].copy(),
        system.diag[1 : n - 1].copy(),
        system.sup[1 : n - 1].copy(),
        system.rhs[1 : n - 1].copy(),
    )
