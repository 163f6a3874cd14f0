"""
Linear System Types

三对角系统、节点解与离散格式标签
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Optional

import numpy as np

from advdiff.model.mesh import Mesh1D
from advdiff.model.problem import Problem, WeightFunction

SYMMETRY_RTOL = 1e-12


class Formulation(str, Enum):
    """三种离散格式"""

    GALERKIN = "galerkin"
    ARTIFICIAL = "artificial"
    WEIGHTED = "weighted"

    @classmethod
    def parse(cls, name: "str | Formulation") -> "Formulation":
        if isinstance(name, cls):
            return name
        key = str(name).strip().lower().replace("-", "_")
        aliases = {
            "galerkin": cls.GALERKIN,
            "artificial": cls.ARTIFICIAL,
            "artificial_diffusion": cls.ARTIFICIAL,
            "optimal": cls.ARTIFICIAL,
            "weighted": cls.WEIGHTED,
            "weighted_variational": cls.WEIGHTED,
        }
        if key not in aliases:
            choices = ", ".join(f.value for f in cls)
            raise ValueError(f"unknown formulation '{name}', expected one of: {choices}")
        return aliases[key]

    @classmethod
    def ordered(cls) -> tuple["Formulation", ...]:
        return (cls.GALERKIN, cls.ARTIFICIAL, cls.WEIGHTED)


@dataclass(frozen=True, eq=False)
class TriDiagSystem:
    """
    三对角系统 A u = rhs

    sub[i] = A[i+1, i]，sup[i] = A[i, i+1]。第 j 行等于原始装配行乘以
    exp(-row_log_scale[j])，施加边界条件时据此换算通量项
    """

    sub: np.ndarray
    diag: np.ndarray
    sup: np.ndarray
    rhs: np.ndarray
    symmetric_hint: bool = False
    formulation: Optional[Formulation] = None
    mesh: Optional[Mesh1D] = None
    weight: Optional[WeightFunction] = None
    row_log_scale: Optional[np.ndarray] = None
    dirichlet_nodes: tuple[int, ...] = field(default_factory=tuple)

    def __post_init__(self):
        for name in ("sub", "diag", "sup", "rhs"):
            object.__setattr__(self, name, np.array(getattr(self, name), dtype=float))
        n = self.diag.size
        if self.rhs.size != n or self.sub.size != n - 1 or self.sup.size != n - 1:
            raise ValueError(
                f"inconsistent tridiagonal sizes: diag={n}, sub={self.sub.size}, "
                f"sup={self.sup.size}, rhs={self.rhs.size}"
            )
        if self.row_log_scale is None:
            object.__setattr__(self, "row_log_scale", np.zeros(n))
        else:
            object.__setattr__(self, "row_log_scale", np.array(self.row_log_scale, dtype=float))
        if self.symmetric_hint and self.asymmetry() > SYMMETRY_RTOL:
            raise ValueError(
                f"system flagged symmetric but relative asymmetry is {self.asymmetry():.3e}"
            )

    @property
    def n(self) -> int:
        return self.diag.size

    def row_magnitude(self) -> float:
        """max_i (|sub| + |diag| + |sup|)"""
        magnitude = np.abs(self.diag).copy()
        magnitude[1:] += np.abs(self.sub)
        magnitude[:-1] += np.abs(self.sup)
        return float(magnitude.max()) if magnitude.size else 0.0

    def max_abs_asymmetry(self) -> float:
        if self.sub.size == 0:
            return 0.0
        return float(np.max(np.abs(self.sub - self.sup)))

    def asymmetry(self) -> float:
        """max |sub - sup| / 最大行幅值"""
        magnitude = self.row_magnitude()
        if magnitude == 0.0:
            return 0.0
        return self.max_abs_asymmetry() / magnitude

    def matvec(self, u) -> np.ndarray:
        u = np.asarray(u, dtype=float)
        out = self.diag * u
        out[1:] += self.sub * u[:-1]
        out[:-1] += self.sup * u[1:]
        return out

    def to_dense(self) -> np.ndarray:
        return np.diag(self.diag) + np.diag(self.sub, -1) + np.diag(self.sup, 1)

    def replace(self, **changes) -> "TriDiagSystem":
        return replace(self, **changes)


@dataclass(frozen=True, eq=False)
class NodalSolution:
    values: np.ndarray
    formulation: Optional[Formulation]
    residual_inf: float
    mesh: Optional[Mesh1D] = None
    problem: Optional[Problem] = None

    @property
    def nodes(self) -> np.ndarray:
        if self.mesh is None:
            raise ValueError("solution carries no mesh")
        return self.mesh.nodes
