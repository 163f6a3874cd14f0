"""
AdvDiff

一维对流扩散方程的有限元套件：Galerkin、最优人工扩散与加权变分格式
"""

__version__ = "0.1.0"

from .errors import AdvDiffError
from .config import RunConfig
from .model import BoundaryCondition, Formulation, Mesh1D, Problem, ProblemSpec

__all__ = [
    "__version__",
    "AdvDiffError",
    "RunConfig",
    "BoundaryCondition",
    "Formulation",
    "Mesh1D",
    "Problem",
    "ProblemSpec",
]
