"""
AdvDiff Models

问题、网格、线性系统与验证报告的数据类型
"""

from .problem import (
    BCKind,
    BoundaryCondition,
    Problem,
    ProblemSpec,
    WeightFunction,
    alpha_at,
    build_problem,
    mirrored,
    peclet_element,
    validate,
)
from .mesh import Mesh1D, build_graded, build_uniform, element_span, from_nodes, mirror
from .system import Formulation, NodalSolution, TriDiagSystem
from .report import (
    CheckResult,
    ConvergenceReport,
    ExactnessRecord,
    ExactnessReport,
    SymmetryReport,
)

__all__ = [
    "BCKind",
    "BoundaryCondition",
    "Problem",
    "ProblemSpec",
    "WeightFunction",
    "alpha_at",
    "build_problem",
    "mirrored",
    "peclet_element",
    "validate",
    "Mesh1D",
    "build_graded",
    "build_uniform",
    "element_span",
    "from_nodes",
    "mirror",
    "Formulation",
    "NodalSolution",
    "TriDiagSystem",
    "CheckResult",
    "ConvergenceReport",
    "ExactnessRecord",
    "ExactnessReport",
    "SymmetryReport",
]
