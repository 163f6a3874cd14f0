"""
WriteResultsNode - 写出结果表
"""

from pocketflow import Node

from advdiff.config.config import RunConfig
from advdiff.utils.result_writer import ResultWriter


class WriteResultsNode(Node):
    def __init__(self, key: str = "rows", **kwargs):
        """
        Args:
            key: JSON 输出中结果数组的字段名
        """
        super().__init__(**kwargs)
        self.key = key

    def prep(self, shared):
        config: RunConfig = shared["config"]
        return config, shared["table"]

    def exec(self, prep_res):
        config, table = prep_res
        writer = ResultWriter(config.output, config.format)
        return writer.write(table, config=config.echo(), key=self.key)

    def post(self, shared, prep_res, exec_res):
        shared["output_location"] = exec_res
        return "default"
