"""
Command Line Interface

advdiff solve|sweep|stencil|verify

退出码：0 成功，1 验收未通过，2 参数或校验错误
"""

import argparse
import sys
from typing import Optional, Sequence

from pydantic import ValidationError

from advdiff.config.config import COMMANDS, RunConfig
from advdiff.errors import AdvDiffError
from advdiff.flow.advdiff_flow import run_command
from advdiff.utils.logger import logger, set_log_level

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2

# 命令行参数名 -> RunConfig 字段名
_FLAG_FIELDS = {
    "v": "v",
    "k": "k",
    "f": "f",
    "n": "n",
    "formulation": "formulation",
    "ratios": "ratios",
    "left_bc": "left_bc",
    "right_bc": "right_bc",
    "x_lo": "x_lo",
    "x_hi": "x_hi",
    "sweep_velocity": "sweep_velocity",
    "output": "output",
    "format": "format",
    "workers": "max_workers",
    "log_level": "log_level",
}


def _add_common_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--config", type=str, default=None, help="YAML 配置文件路径，命令行参数优先")
    parser.add_argument("--v", type=float, default=None, help="对流速度 v")
    parser.add_argument("--k", type=float, default=None, help="扩散系数 k (> 0)")
    parser.add_argument("--f", type=float, default=None, help="源项 f，默认 1")
    parser.add_argument("--n", type=int, default=None, help="单元数，默认 10")
    parser.add_argument(
        "--formulation",
        type=str,
        default=None,
        help="galerkin, artificial, weighted 或 all（可逗号分隔）",
    )
    parser.add_argument("--ratios", type=str, default=None, help="逗号分隔的 v/k 比值（sweep）")
    parser.add_argument("--left-bc", dest="left_bc", type=str, default=None, help="dirichlet:V 或 neumann:V")
    parser.add_argument("--right-bc", dest="right_bc", type=str, default=None, help="dirichlet:V 或 neumann:V")
    parser.add_argument("--x-lo", dest="x_lo", type=float, default=None, help="区间左端点，默认 0")
    parser.add_argument("--x-hi", dest="x_hi", type=float, default=None, help="区间右端点，默认 1")
    parser.add_argument(
        "--sweep-velocity",
        dest="sweep_velocity",
        type=float,
        default=None,
        help="sweep 使用的速度，k = v / ratio，默认 1",
    )
    parser.add_argument("--output", type=str, default=None, help="输出文件路径，默认 stdout")
    parser.add_argument("--format", type=str, choices=["csv", "json"], default=None, help="输出格式")
    parser.add_argument("--workers", type=int, default=None, help="线程池大小")
    parser.add_argument("--log-level", dest="log_level", type=str, default=None, help="日志级别")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="advdiff",
        description="1D advection-diffusion finite element suite",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)
    for command in COMMANDS:
        _add_common_arguments(subparsers.add_parser(command))
    return parser


def load_run_config(args: argparse.Namespace) -> RunConfig:
    """合并配置文件与命令行参数"""
    overrides = {"command": args.command}
    for flag, field in _FLAG_FIELDS.items():
        value = getattr(args, flag)
        if value is not None:
            overrides[field] = value
    if args.config:
        logger.info(f"加载配置文件: {args.config}")
        return RunConfig.from_yaml(args.config, **overrides)
    return RunConfig(**overrides)


def _one_line(exc: Exception) -> str:
    if isinstance(exc, ValidationError):
        error = exc.errors()[0]
        message = str(error.get("msg", exc)).removeprefix("Value error, ")
        location = ".".join(str(part) for part in error.get("loc", ()))
        if location and "--" not in message:
            return f"--{location.replace('_', '-')}: {message}"
        return message
    return " ".join(str(exc).split())


def _usage_error(exc: Exception) -> int:
    message = _one_line(exc)
    logger.debug(f"参数错误详情: {exc!r}")
    print(f"advdiff: error: {message}", file=sys.stderr)
    return EXIT_USAGE


def main(argv: Optional[Sequence[str]] = None) -> int:
    """主入口函数，返回退出码"""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE

    try:
        config = load_run_config(args)
        set_log_level(config.log_level)
    except (ValidationError, AdvDiffError, ValueError, OSError) as exc:
        return _usage_error(exc)

    try:
        shared = run_command(config)
    except (AdvDiffError, ValueError) as exc:
        return _usage_error(exc)

    if config.command == "verify" and not shared.get("verified", False):
        return EXIT_VERIFY_FAILED
    return EXIT_OK
