from .advdiff_flow import (
    create_solve_flow,
    create_stencil_flow,
    create_sweep_flow,
    run_command,
    run_solve_flow,
    run_stencil_flow,
    run_sweep_flow,
)
from .verify_flow import VerifyFlow, run_verify_flow

__all__ = [
    "create_solve_flow",
    "create_stencil_flow",
    "create_sweep_flow",
    "run_command",
    "run_solve_flow",
    "run_stencil_flow",
    "run_sweep_flow",
    "VerifyFlow",
    "run_verify_flow",
]
