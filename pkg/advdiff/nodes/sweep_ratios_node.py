"""
SweepRatiosNode - 对一组 v/k 比值逐个格式求解并记录误差与矩阵指标
"""

import math
from concurrent.futures import ThreadPoolExecutor

import numpy as np
import pandas as pd
from pocketflow import Node
from tqdm import tqdm

from advdiff.config.config import RunConfig
from advdiff.model.mesh import build_uniform
from advdiff.model.problem import ProblemSpec, validate
from advdiff.model.system import Formulation
from advdiff.numerics.solve import condition_estimate, prepare_system, thomas_solve
from advdiff.numerics.verify import (
    exact_values,
    has_exact_solution,
    l2_error,
    oscillation_fraction,
    vainberg_symmetry,
)
from advdiff.utils.logger import logger

SWEEP_COLUMNS = [
    "ratio",
    "peclet",
    "formulation",
    "max_nodal_error",
    "l2_error",
    "oscillation_fraction",
    "asymmetry",
    "condition_estimate",
]


def sweep_row(ratio: float, formulation: Formulation, config: RunConfig) -> dict:
    """
    单个 (v/k, 格式) 组合的指标

    v = sweep_velocity · sign(ratio)，k = sweep_velocity / |ratio|；
    条件数取实际求解的（行平衡后）系统
    """
    v = math.copysign(config.sweep_velocity, ratio)
    k = config.sweep_velocity / abs(ratio)
    spec = ProblemSpec(v=v, k=k, f=config.f, x_lo=config.x_lo, x_hi=config.x_hi)
    problem = validate(spec, config.boundary_conditions())
    mesh = build_uniform((config.x_lo, config.x_hi), config.n)

    system = prepare_system(problem, mesh, formulation)
    solution = thomas_solve(system)
    row = {
        "ratio": ratio,
        "peclet": v * mesh.h / (2.0 * k),
        "formulation": formulation.value,
        "max_nodal_error": math.nan,
        "l2_error": math.nan,
        "oscillation_fraction": math.nan,
        "asymmetry": vainberg_symmetry(problem, mesh, formulation).asymmetry,
        "condition_estimate": condition_estimate(system),
    }
    if has_exact_solution(problem):
        errors = solution.values - exact_values(problem, mesh.nodes)
        row["max_nodal_error"] = float(np.max(np.abs(errors)))
        row["l2_error"] = l2_error(solution, problem)
        row["oscillation_fraction"] = oscillation_fraction(errors)
    return row


class SweepRatiosNode(Node):
    """并行扫描 v/k，输出行按 (ratio, formulation) 的输入顺序排列"""

    def __init__(self, max_workers: int = 4, **kwargs):
        super().__init__(**kwargs)
        self.max_workers = max_workers

    def prep(self, shared):
        """展开 (ratio, formulation) 任务列表"""
        config: RunConfig = shared["config"]
        tasks = [(ratio, f) for ratio in config.ratios for f in config.formulations()]
        logger.info(f"扫描 {len(config.ratios)} 个 v/k 比值，共 {len(tasks)} 个求解任务")
        return config, tasks

    def exec(self, prep_res):
        """并行执行扫描"""
        config, tasks = prep_res
        with ThreadPoolExecutor(max_workers=self.max_workers) as executor:
            rows = list(
                tqdm(
                    executor.map(lambda task: sweep_row(task[0], task[1], config), tasks),
                    total=len(tasks),
                    desc="Sweeping v/k",
                    disable=None,
                )
            )
        return pd.DataFrame(rows, columns=SWEEP_COLUMNS)

    def post(self, shared, prep_res, exec_res):
        shared["table"] = exec_res
        logger.info(f"扫描完成，共 {len(exec_res)} 行")
        return "default"
