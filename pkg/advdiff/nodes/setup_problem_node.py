"""
SetupProblemNode - 根据配置构造问题与网格
"""

from pocketflow import Node

from advdiff.config.config import RunConfig
from advdiff.model.mesh import build_uniform
from advdiff.model.problem import ProblemSpec, validate
from advdiff.utils.logger import logger


class SetupProblemNode(Node):
    """校验常系数问题并生成均匀网格"""

    def prep(self, shared):
        """读取配置"""
        config: RunConfig = shared.get("config")
        if config is None:
            raise ValueError("config must be provided in shared store")
        return config

    def exec(self, config: RunConfig):
        """构造问题和网格"""
        spec = ProblemSpec(v=config.v, k=config.k, f=config.f, x_lo=config.x_lo, x_hi=config.x_hi)
        problem = validate(spec, config.boundary_conditions())
        mesh = build_uniform((config.x_lo, config.x_hi), config.n)
        return problem, mesh

    def post(self, shared, prep_res, exec_res):
        """保存问题和网格"""
        problem, mesh = exec_res
        shared["problem"] = problem
        shared["mesh"] = mesh
        logger.info(f"问题已构造: {problem.summary()}, {mesh.n_elements} 个单元")
        return "default"
