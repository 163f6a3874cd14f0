from pocketflow import Flow

from advdiff.config.config import RunConfig
from advdiff.flow.verify_flow import run_verify_flow
from advdiff.nodes import (
    SetupProblemNode,
    SolveFormulationsNode,
    StencilTableNode,
    SweepRatiosNode,
    TabulateSolutionNode,
    WriteResultsNode,
)
from advdiff.utils.logger import logger


def create_solve_flow(config: RunConfig) -> Flow:
    """创建单问题求解流程：setup -> solve -> tabulate -> write"""
    setup_node = SetupProblemNode()
    solve_node = SolveFormulationsNode(max_workers=config.max_workers)
    tabulate_node = TabulateSolutionNode()
    write_node = WriteResultsNode()

    setup_node >> solve_node >> tabulate_node >> write_node

    flow = Flow(start=setup_node)
    logger.info("Solve Flow 创建完成")
    return flow


def create_sweep_flow(config: RunConfig) -> Flow:
    """创建 v/k 扫描流程"""
    sweep_node = SweepRatiosNode(max_workers=config.max_workers)
    write_node = WriteResultsNode()

    sweep_node >> write_node

    flow = Flow(start=sweep_node)
    logger.info("Sweep Flow 创建完成")
    return flow


def create_stencil_flow(config: RunConfig) -> Flow:
    """创建模板对照表流程"""
    stencil_node = StencilTableNode()
    write_node = WriteResultsNode()

    stencil_node >> write_node

    flow = Flow(start=stencil_node)
    logger.info("Stencil Flow 创建完成")
    return flow


def _run_flow(flow: Flow, config: RunConfig) -> dict:
    shared = {"config": config}
    try:
        flow.run(shared)
    except Exception as e:
        logger.error(f"流程执行失败: {str(e)}")
        raise
    logger.info(f"结果已写出: {shared.get('output_location')}")
    return shared


def run_solve_flow(config: RunConfig) -> dict:
    return _run_flow(create_solve_flow(config), config)


def run_sweep_flow(config: RunConfig) -> dict:
    return _run_flow(create_sweep_flow(config), config)


def run_stencil_flow(config: RunConfig) -> dict:
    return _run_flow(create_stencil_flow(config), config)


COMMAND_RUNNERS = {
    "solve": run_solve_flow,
    "sweep": run_sweep_flow,
    "stencil": run_stencil_flow,
    "verify": run_verify_flow,
}


def run_command(config: RunConfig) -> dict:
    """按 config.command 运行对应的流程，返回共享存储"""
    logger.info(f"开始运行 {config.command} 命令")
    return COMMAND_RUNNERS[config.command](config)
