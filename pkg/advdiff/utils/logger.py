import logging
import sys


def setup_logger(name="advdiff", level=logging.INFO):
    """
    设置日志记录器

    日志统一写到 stderr，stdout 只留给 CSV/JSON 结果

    Args:
        name (str): 日志记录器名称
        level: 日志级别

    Returns:
        logger: 配置好的日志记录器
    """
    logger = logging.getLogger(name)
    logger.setLevel(level)

    logger.handlers = []
    logger.propagate = False

    formatter = logging.Formatter(
        "%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        datefmt="%Y-%m-%d %H:%M:%S",
    )

    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setLevel(level)
    console_handler.setFormatter(formatter)
    logger.addHandler(console_handler)

    return logger


def set_log_level(level: str | int) -> None:
    """调整默认日志记录器及其处理器的级别"""
    if isinstance(level, str):
        level = logging.getLevelName(level.upper())
        if not isinstance(level, int):
            raise ValueError(f"unknown log level: {level}")
    logger.setLevel(level)
    for handler in logger.handlers:
        handler.setLevel(level)


# 创建默认的日志记录器实例
logger = setup_logger()
