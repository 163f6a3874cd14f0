"""
SolveFormulationsNode - 并行求解选中的各个格式
"""

from concurrent.futures import ThreadPoolExecutor

from pocketflow import Node

from advdiff.model.system import Formulation
from advdiff.numerics.solve import solve_formulation
from advdiff.utils.logger import logger


class SolveFormulationsNode(Node):
    """对同一个问题求解多个格式，结果按格式的固定顺序保存"""

    def __init__(self, max_workers: int = 4, **kwargs):
        """
        初始化并行求解节点

        Args:
            max_workers: 最大并发线程数
        """
        super().__init__(**kwargs)
        self.max_workers = max_workers

    def prep(self, shared):
        """获取问题、网格和格式列表"""
        formulations = shared["config"].formulations()
        logger.info(f"需要求解 {len(formulations)} 个格式，并发度: {self.max_workers}")
        return shared["problem"], shared["mesh"], formulations

    def exec(self, prep_res):
        """并行求解"""
        problem, mesh, formulations = prep_res

        def solve(formulation: Formulation):
            return solve_formulation(problem, mesh, formulation)

        with ThreadPoolExecutor(max_workers=self.max_workers) as executor:
            solutions = list(executor.map(solve, formulations))
        return dict(zip(formulations, solutions))

    def post(self, shared, prep_res, exec_res):
        """保存节点解"""
        shared["solutions"] = exec_res
        for formulation, solution in exec_res.items():
            logger.info(f"{formulation.value} 求解完成，残差 {solution.residual_inf:.3e}")
        return "default"
