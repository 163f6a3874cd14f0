"""
AdvDiff Nodes

各命令流程中使用的 Node 定义
"""

from .setup_problem_node import SetupProblemNode
from .solve_formulations_node import SolveFormulationsNode
from .tabulate_solution_node import TabulateSolutionNode
from .sweep_ratios_node import SweepRatiosNode
from .stencil_table_node import StencilTableNode
from .run_checks_node import RunAcceptanceChecksNode
from .write_results_node import WriteResultsNode

__all__ = [
    "SetupProblemNode",
    "SolveFormulationsNode",
    "TabulateSolutionNode",
    "SweepRatiosNode",
    "StencilTableNode",
    "RunAcceptanceChecksNode",
    "WriteResultsNode",
]
