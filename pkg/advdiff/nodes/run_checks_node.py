"""
RunAcceptanceChecksNode - 运行验收套件
"""

import pandas as pd
from pocketflow import Node

from advdiff.numerics.verify import run_acceptance_suite
from advdiff.utils.logger import logger


class RunAcceptanceChecksNode(Node):
    def prep(self, shared):
        return None

    def exec(self, prep_res):
        return run_acceptance_suite()

    def post(self, shared, prep_res, exec_res):
        """保存检查结果，有失败项时返回 "failed" """
        shared["checks"] = exec_res
        shared["table"] = pd.DataFrame(
            [check.as_row() for check in exec_res],
            columns=["check", "value", "tolerance", "pass"],
        )
        failed = [check.check for check in exec_res if not check.passed]
        if failed:
            logger.error(f"{len(failed)} 项验收检查未通过: {failed}")
            return "failed"
        logger.info(f"全部 {len(exec_res)} 项验收检查通过")
        return "default"
