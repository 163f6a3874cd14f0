"""
StencilTableNode - 三种格式的闭式模板与装配得到的模板对照表
"""

import math

import pandas as pd
from pocketflow import Node

from advdiff.config.config import RunConfig
from advdiff.model.mesh import build_uniform
from advdiff.model.problem import ProblemSpec, validate
from advdiff.model.system import Formulation
from advdiff.numerics.stencils import closed_form_stencil, coth, kbar
from advdiff.numerics.verify import stencil_from_assembly
from advdiff.utils.logger import logger


def stencil_table(config: RunConfig) -> pd.DataFrame:
    """每个格式一行：闭式 (c_left, c_center, c_right)、装配所得 asm_*，以及 k̄ 与 coth(Pe)"""
    spec = ProblemSpec(v=config.v, k=config.k, f=config.f, x_lo=config.x_lo, x_hi=config.x_hi)
    problem = validate(spec, config.boundary_conditions())
    mesh = build_uniform((config.x_lo, config.x_hi), config.n)
    v, k = problem.constant_values()[:2]
    h = (config.x_hi - config.x_lo) / config.n
    pe = v * h / (2.0 * k)

    rows = []
    for formulation in Formulation.ordered():
        closed = closed_form_stencil(formulation, v, k, h)
        assembled = stencil_from_assembly(problem, mesh, formulation)
        rows.append(
            {
                "formulation": formulation.value,
                "peclet": pe,
                "c_left": closed.c_left,
                "c_center": closed.c_center,
                "c_right": closed.c_right,
                "asm_left": assembled.c_left,
                "asm_center": assembled.c_center,
                "asm_right": assembled.c_right,
                "kbar": kbar(v, k, h),
                "coth_pe": coth(pe) if pe != 0.0 else math.nan,
            }
        )
    return pd.DataFrame(rows)


class StencilTableNode(Node):
    def prep(self, shared):
        return shared["config"]

    def exec(self, config: RunConfig):
        return stencil_table(config)

    def post(self, shared, prep_res, exec_res):
        shared["table"] = exec_res
        logger.info(f"模板表已生成: Pe = {exec_res['peclet'].iloc[0]:.6g}")
        return "default"
