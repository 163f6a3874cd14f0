"""
AdvDiff Utilities

日志与结果输出工具
"""

from .logger import logger, setup_logger, set_log_level

__all__ = ["logger", "setup_logger", "set_log_level"]
