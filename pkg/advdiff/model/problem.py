"""
Problem Definition

一维定常对流扩散问题 -(k u')' + v u' = f：系数场、边界条件、权函数 α 与单元 Péclet 数
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from enum import Enum
from typing import Callable, Optional, Union

import numpy as np

from advdiff.errors import (
    EmptyDomainError,
    NoDirichletEndError,
    NonPositiveDiffusivityError,
)
from advdiff.numerics.quadrature import gauss_rule
from advdiff.utils.logger import logger

Field = Union[float, Callable[[np.ndarray], np.ndarray]]

VALIDATION_GRID_POINTS = 101
LOG_ALPHA_GAUSS_POINTS = 5
DEFAULT_LOG_ALPHA_SEGMENTS = 200


def evaluate_field(field: Field, x) -> np.ndarray:
    """在 x 处求系数场的值，常数场广播到 x 的形状"""
    x = np.asarray(x, dtype=float)
    if callable(field):
        values = np.asarray(field(x), dtype=float)
        return np.broadcast_to(values, x.shape).astype(float)
    return np.full(x.shape, float(field))


class BCKind(str, Enum):
    DIRICHLET = "dirichlet"
    NEUMANN = "neumann"


@dataclass(frozen=True)
class BoundaryCondition:
    """端点条件：Dirichlet 给定值，Neumann 给定外法向通量 k u'·n"""

    kind: BCKind
    value: float = 0.0

    @classmethod
    def dirichlet(cls, value: float = 0.0) -> "BoundaryCondition":
        return cls(BCKind.DIRICHLET, float(value))

    @classmethod
    def neumann(cls, flux: float = 0.0) -> "BoundaryCondition":
        return cls(BCKind.NEUMANN, float(flux))

    @property
    def is_dirichlet(self) -> bool:
        return self.kind is BCKind.DIRICHLET

    def __str__(self) -> str:
        return f"{self.kind.value}:{self.value:g}"


@dataclass(frozen=True)
class ProblemSpec:
    """未校验的问题描述，系数可以是常数或可向量化的函数"""

    v: Field
    k: Field
    f: Field
    x_lo: float = 0.0
    x_hi: float = 1.0


@dataclass(frozen=True)
class Problem:
    """校验通过的问题，只能由 validate 构造"""

    spec: ProblemSpec
    left: BoundaryCondition
    right: BoundaryCondition
    constant_coefficients: bool

    @property
    def x_lo(self) -> float:
        return float(self.spec.x_lo)

    @property
    def x_hi(self) -> float:
        return float(self.spec.x_hi)

    @property
    def length(self) -> float:
        return self.x_hi - self.x_lo

    def velocity(self, x) -> np.ndarray:
        return evaluate_field(self.spec.v, x)

    def diffusivity(self, x) -> np.ndarray:
        return evaluate_field(self.spec.k, x)

    def forcing(self, x) -> np.ndarray:
        return evaluate_field(self.spec.f, x)

    def constant_values(self) -> tuple[float, float, float]:
        """常系数问题的 (v, k, f)"""
        if not self.constant_coefficients:
            raise ValueError("problem has variable coefficients")
        x = self.x_lo
        return (
            float(self.velocity(x)),
            float(self.diffusivity(x)),
            float(self.forcing(x)),
        )

    def boundary(self, end: str) -> BoundaryCondition:
        if end == "left":
            return self.left
        if end == "right":
            return self.right
        raise ValueError(f"end must be 'left' or 'right', got {end!r}")

    def summary(self) -> str:
        if self.constant_coefficients:
            v, k, f = self.constant_values()
            coefficients = f"v={v:g}, k={k:g}, f={f:g}"
        else:
            coefficients = "variable coefficients"
        return (
            f"[{self.x_lo:g}, {self.x_hi:g}], {coefficients}, "
            f"left={self.left}, right={self.right}"
        )


def _is_constant(field: Field, grid: np.ndarray) -> bool:
    if not callable(field):
        return True
    values = evaluate_field(field, grid)
    return bool(np.all(values == values[0]))


def validate(
    spec: ProblemSpec, bcs: tuple[BoundaryCondition, BoundaryCondition]
) -> Problem:
    """
    校验问题描述

    在 101 点均匀网格上检查 k > 0，并要求至少一端为 Dirichlet 条件

    Raises:
        EmptyDomainError, NonPositiveDiffusivityError, NoDirichletEndError
    """
    left, right = bcs
    if not spec.x_lo < spec.x_hi:
        raise EmptyDomainError(
            f"domain must satisfy x_lo < x_hi, got [{spec.x_lo}, {spec.x_hi}]"
        )

    grid = np.linspace(spec.x_lo, spec.x_hi, VALIDATION_GRID_POINTS)
    k = evaluate_field(spec.k, grid)
    bad = ~np.isfinite(k) | (k <= 0.0)
    if np.any(bad):
        where = int(np.argmax(bad))
        raise NonPositiveDiffusivityError(
            f"diffusivity must be positive, got k({grid[where]:.6g}) = {k[where]:.6g}"
        )
    for name, field in (("velocity", spec.v), ("forcing", spec.f)):
        if not np.all(np.isfinite(evaluate_field(field, grid))):
            raise ValueError(f"{name} is not finite on the domain")

    if not (left.is_dirichlet or right.is_dirichlet):
        raise NoDirichletEndError(
            "at least one end needs a Dirichlet condition, both ends are Neumann"
        )

    constant = all(_is_constant(field, grid) for field in (spec.v, spec.k, spec.f))
    problem = Problem(spec, left, right, constant)
    logger.debug(f"问题校验通过: {problem.summary()}")
    return problem


def peclet_element(problem: Problem, x_left: float, h: float) -> float:
    """单元中点处的 Péclet 数 Pe = v h / (2 k)"""
    if not h > 0.0:
        raise ValueError(f"element size must be positive, got {h}")
    x_mid = x_left + 0.5 * h
    v = float(problem.velocity(x_mid))
    k = float(problem.diffusivity(x_mid))
    return v * h / (2.0 * k)


class _ConstantLogAlpha:
    """log α(x) = -(v/k)(x - x_lo)"""

    def __init__(self, rate: float, x_lo: float):
        self.rate = rate
        self.x_lo = x_lo

    def __call__(self, x) -> np.ndarray:
        return -self.rate * (np.asarray(x, dtype=float) - self.x_lo)

    def __repr__(self) -> str:
        return f"_ConstantLogAlpha(rate={self.rate!r}, x_lo={self.x_lo!r})"


class _CumulativeLogAlpha:
    """
    log α(x) = -∫_{x_lo}^x v/k

    节点处使用累积的复合 Gauss 积分，单元内部在 [x_i, x] 上再做一次 5 点 Gauss
    """

    def __init__(self, problem: Problem, nodes: np.ndarray):
        self._problem = problem
        self._nodes = np.asarray(nodes, dtype=float)
        increments = self._partial(self._nodes[:-1], self._nodes[1:])
        self._cumulative = np.concatenate(([0.0], -np.cumsum(increments)))

    def _partial(self, left: np.ndarray, x: np.ndarray) -> np.ndarray:
        rule = gauss_rule(LOG_ALPHA_GAUSS_POINTS)
        points = np.asarray(rule.points)
        weights = np.asarray(rule.weights)
        half = 0.5 * (x - left)
        mid = 0.5 * (x + left)
        xs = mid[..., None] + half[..., None] * points
        ratio = self._problem.velocity(xs) / self._problem.diffusivity(xs)
        return half * np.sum(weights * ratio, axis=-1)

    @property
    def node_values(self) -> np.ndarray:
        return self._cumulative

    def __call__(self, x) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        last = self._nodes.size - 2
        index = np.clip(np.searchsorted(self._nodes, x, side="right") - 1, 0, last)
        inside = self._cumulative[index] - self._partial(self._nodes[index], x)
        return np.where(x >= self._nodes[-1], self._cumulative[-1], inside)


@dataclass(frozen=True)
class WeightFunction:
    """
    权函数 α(x) = normalization · exp(log_alpha(x))

    归一化常数以对数形式保存，大 v/k 时 α 不会在构造阶段溢出
    """

    log_alpha: Callable[[np.ndarray], np.ndarray]
    log_normalization: float = 0.0

    @property
    def normalization(self) -> float:
        return math.exp(self.log_normalization)

    def log_value(self, x) -> np.ndarray:
        return self.log_alpha(x) + self.log_normalization

    def __call__(self, x) -> np.ndarray:
        return np.exp(self.log_value(x))

    def rescaled(self, factor: float) -> "WeightFunction":
        """乘以正常数后的权函数；求解结果与该常数无关"""
        if not factor > 0.0:
            raise ValueError(f"weight rescaling factor must be positive, got {factor}")
        return replace(self, log_normalization=self.log_normalization + math.log(factor))

    @classmethod
    def for_problem(cls, problem: Problem, mesh=None) -> "WeightFunction":
        """
        构造问题的权函数，归一化使 α 在区间上的最大值为 1

        变系数问题需要网格做复合积分，未给出时使用 200 段均匀划分
        """
        if problem.constant_coefficients:
            v, k, _ = problem.constant_values()
            log_alpha = _ConstantLogAlpha(v / k, problem.x_lo)
            ends = log_alpha(np.array([problem.x_lo, problem.x_hi]))
            return cls(log_alpha, -float(np.max(ends)))

        if mesh is not None:
            nodes = mesh.nodes
        else:
            nodes = np.linspace(problem.x_lo, problem.x_hi, DEFAULT_LOG_ALPHA_SEGMENTS + 1)
        log_alpha = _CumulativeLogAlpha(problem, nodes)
        return cls(log_alpha, -float(np.max(log_alpha.node_values)))


def alpha_at(weight: WeightFunction, x):
    """α(x)，标量输入返回 float"""
    values = weight(x)
    return float(values) if np.ndim(values) == 0 else values


def mirrored(problem: Problem) -> Problem:
    """
    关于区间中点镜像后的问题：x -> x_lo + x_hi - x，v 取反，两端条件互换

    u 是原问题的解时 u(x_lo + x_hi - x) 是镜像问题的解
    """
    spec = problem.spec
    lo, hi = float(spec.x_lo), float(spec.x_hi)

    def reflect(field: Field, sign: float = 1.0) -> Field:
        if callable(field):
            return lambda x: sign * evaluate_field(field, lo + hi - np.asarray(x, dtype=float))
        return sign * float(field)

    reflected = ProblemSpec(
        v=reflect(spec.v, -1.0),
        k=reflect(spec.k),
        f=reflect(spec.f),
        x_lo=lo,
        x_hi=hi,
    )
    return validate(reflected, (problem.right, problem.left))


def build_problem(
    v: Field,
    k: Field,
    f: Field,
    *,
    x_lo: float = 0.0,
    x_hi: float = 1.0,
    left: Optional[BoundaryCondition] = None,
    right: Optional[BoundaryCondition] = None,
) -> Problem:
    """便捷构造：默认齐次 Dirichlet 两端"""
    left = left or BoundaryCondition.dirichlet(0.0)
    right = right or BoundaryCondition.dirichlet(0.0)
    return validate(ProblemSpec(v=v, k=k, f=f, x_lo=x_lo, x_hi=x_hi), (left, right))
