"""
离散格式系统
"""

from .base import ElementContribution, FormulationKernel
from .registry import FormulationRegistry, get_formulation, list_formulations
from .galerkin import GalerkinKernel
from .artificial import ArtificialDiffusionKernel
from .weighted import WeightedKernel

__all__ = [
    "ElementContribution",
    "FormulationKernel",
    "FormulationRegistry",
    "get_formulation",
    "list_formulations",
    "GalerkinKernel",
    "ArtificialDiffusionKernel",
    "WeightedKernel",
]
