"""
Verify Flow

验收流程：运行全部检查并写出报告，检查失败时仍然写出报告
"""

from pocketflow import Flow

from advdiff.config.config import RunConfig
from advdiff.nodes.run_checks_node import RunAcceptanceChecksNode
from advdiff.nodes.write_results_node import WriteResultsNode
from advdiff.utils.logger import logger


class VerifyFlow(Flow):
    """验收工作流"""

    def __init__(self):
        # 创建节点
        self.checks_node = RunAcceptanceChecksNode()
        self.write_node = WriteResultsNode(key="checks")

        self._setup_flow()

        super().__init__(start=self.checks_node)

    def _setup_flow(self):
        """设置工作流连接"""
        self.checks_node - "default" >> self.write_node
        self.checks_node - "failed" >> self.write_node

    def prep(self, shared):
        """验证必需的数据"""
        if "config" not in shared:
            raise ValueError("config must be provided in shared store")
        logger.info("开始验收流程")
        return None

    def post(self, shared, prep_res, exec_res):
        """汇总检查结果"""
        checks = shared.get("checks", [])
        failed = [check for check in checks if not check.passed]
        shared["verified"] = not failed
        if failed:
            logger.warning(f"验收未通过: {len(failed)}/{len(checks)} 项失败")
            return "failed"
        logger.info(f"验收通过: {len(checks)} 项")
        return "completed"


def run_verify_flow(config: RunConfig) -> dict:
    """运行验收流程，shared["verified"] 表示是否全部通过"""
    shared = {"config": config}
    try:
        VerifyFlow().run(shared)
    except Exception as e:
        logger.error(f"验收流程执行失败: {str(e)}")
        raise
    return shared
