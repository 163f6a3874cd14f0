"""
Mesh

一维网格：节点坐标严格递增，单元 e 为 [nodes[e], nodes[e+1]]
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from advdiff.errors import (
    EmptyDomainError,
    IndexOutOfRangeError,
    InvalidMeshError,
    MeshProblemMismatchError,
    TooFewElementsError,
)

UNIFORM_RTOL = 1e-14


@dataclass(frozen=True, eq=False)
class Mesh1D:
    nodes: np.ndarray

    def __post_init__(self):
        nodes = np.array(self.nodes, dtype=float)
        if nodes.ndim != 1:
            raise InvalidMeshError("mesh nodes must be a one-dimensional array")
        if nodes.size < 3:
            raise TooFewElementsError(
                f"a mesh needs at least 2 elements, got {max(nodes.size - 1, 0)}"
            )
        if not np.all(np.diff(nodes) > 0.0):
            raise InvalidMeshError("mesh nodes must be strictly increasing")
        nodes.setflags(write=False)
        object.__setattr__(self, "nodes", nodes)

    @property
    def n_elements(self) -> int:
        return self.nodes.size - 1

    @property
    def n_nodes(self) -> int:
        return self.nodes.size

    @property
    def x_lo(self) -> float:
        return float(self.nodes[0])

    @property
    def x_hi(self) -> float:
        return float(self.nodes[-1])

    @property
    def spacings(self) -> np.ndarray:
        return np.diff(self.nodes)

    @property
    def uniform(self) -> bool:
        """所有单元长度在节点量级的 1e-14 相对误差内相等"""
        spacings = self.spacings
        scale = max(abs(self.x_lo), abs(self.x_hi), self.x_hi - self.x_lo)
        return bool(np.all(np.abs(spacings - spacings.mean()) <= UNIFORM_RTOL * scale))

    @property
    def h(self) -> float:
        """均匀网格的单元长度"""
        if not self.uniform:
            raise ValueError("mesh is not uniform")
        return (self.x_hi - self.x_lo) / self.n_elements

    def matches(self, x_lo: float, x_hi: float) -> bool:
        tol = 1e-12 * max(abs(x_lo), abs(x_hi), x_hi - x_lo)
        return abs(self.x_lo - x_lo) <= tol and abs(self.x_hi - x_hi) <= tol

    def check_domain(self, x_lo: float, x_hi: float) -> None:
        if not self.matches(x_lo, x_hi):
            raise MeshProblemMismatchError(
                f"mesh spans [{self.x_lo:g}, {self.x_hi:g}] "
                f"but the problem domain is [{x_lo:g}, {x_hi:g}]"
            )


def _check_domain(domain: tuple[float, float]) -> tuple[float, float]:
    x_lo, x_hi = float(domain[0]), float(domain[1])
    if not x_lo < x_hi:
        raise EmptyDomainError(f"domain must satisfy x_lo < x_hi, got [{x_lo}, {x_hi}]")
    return x_lo, x_hi


def _check_count(n: int) -> int:
    if isinstance(n, bool) or int(n) != n or n < 2:
        raise TooFewElementsError(f"number of elements must be an integer >= 2, got {n}")
    return int(n)


def build_uniform(domain: tuple[float, float], n: int) -> Mesh1D:
    """
    n 个等长单元的网格

    节点 x_j = x_lo + (x_hi - x_lo) * j / n，末节点精确取 x_hi
    """
    x_lo, x_hi = _check_domain(domain)
    n = _check_count(n)
    nodes = x_lo + (x_hi - x_lo) * (np.arange(n + 1, dtype=float) / n)
    nodes[0] = x_lo
    nodes[-1] = x_hi
    return Mesh1D(nodes)


def build_graded(domain: tuple[float, float], n: int, ratio: float) -> Mesh1D:
    """单元长度按公比 ratio 几何递增的网格，ratio = 1 退化为均匀网格"""
    x_lo, x_hi = _check_domain(domain)
    n = _check_count(n)
    if not ratio > 0.0:
        raise ValueError(f"grading ratio must be positive, got {ratio}")
    if ratio == 1.0:
        return build_uniform((x_lo, x_hi), n)
    length = x_hi - x_lo
    first = length * (1.0 - ratio) / (1.0 - ratio**n)
    spacings = first * ratio ** np.arange(n, dtype=float)
    nodes = np.concatenate(([x_lo], x_lo + np.cumsum(spacings)))
    nodes[-1] = x_hi
    return Mesh1D(nodes)


def from_nodes(
    nodes: Sequence[float], domain: Optional[tuple[float, float]] = None
) -> Mesh1D:
    """由任意严格递增节点构造网格，给出 domain 时检查端点"""
    mesh = Mesh1D(np.asarray(nodes, dtype=float))
    if domain is not None:
        mesh.check_domain(*_check_domain(domain))
    return mesh


def element_span(mesh: Mesh1D, e: int) -> tuple[float, float]:
    """单元 e 的 (左端点, 长度)"""
    if isinstance(e, bool) or not isinstance(e, (int, np.integer)):
        raise IndexOutOfRangeError(f"element index must be an integer, got {e!r}")
    if not 0 <= e < mesh.n_elements:
        raise IndexOutOfRangeError(
            f"element index {e} out of range for a mesh of {mesh.n_elements} elements"
        )
    x_left = float(mesh.nodes[e])
    return x_left, float(mesh.nodes[e + 1]) - x_left


def mirror(mesh: Mesh1D) -> Mesh1D:
    """关于区间中点的镜像网格"""
    x_lo, x_hi = mesh.x_lo, mesh.x_hi
    nodes = x_lo + x_hi - mesh.nodes[::-1]
    nodes[0] = x_lo
    nodes[-1] = x_hi
    return Mesh1D(nodes)
