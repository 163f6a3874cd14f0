"""
TabulateSolutionNode - 把节点解整理成结果表
"""

import pandas as pd
from pocketflow import Node

from advdiff.numerics.verify import exact_values, has_exact_solution
from advdiff.utils.logger import logger


def tabulate_solutions(problem, mesh, solutions) -> pd.DataFrame:
    """
    生成 solve 命令的结果表

    列顺序：x，各格式的 u_<name>，u_exact，再是对应的 err_<name>；
    问题没有解析解时省略 u_exact 与误差列
    """
    table = {"x": mesh.nodes}
    for formulation, solution in solutions.items():
        table[f"u_{formulation.value}"] = solution.values

    if has_exact_solution(problem):
        exact = exact_values(problem, mesh.nodes)
        table["u_exact"] = exact
        for formulation, solution in solutions.items():
            table[f"err_{formulation.value}"] = solution.values - exact
    else:
        logger.warning(f"问题没有解析解，省略 u_exact 列: {problem.summary()}")
    return pd.DataFrame(table)


class TabulateSolutionNode(Node):
    def prep(self, shared):
        return shared["problem"], shared["mesh"], shared["solutions"]

    def exec(self, prep_res):
        problem, mesh, solutions = prep_res
        return tabulate_solutions(problem, mesh, solutions)

    def post(self, shared, prep_res, exec_res):
        shared["table"] = exec_res
        return "default"
