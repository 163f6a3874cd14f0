from __future__ import annotations

from typing import Any, Literal, Optional

import yaml
from pydantic import BaseModel, field_validator, model_validator

from advdiff.model.problem import BoundaryCondition
from advdiff.model.system import Formulation

COMMANDS = ("solve", "sweep", "stencil", "verify")


def _normalize_list(value: Any) -> list[str]:
    """允许 YAML 或命令行里用逗号分隔的字符串表示列表"""
    if value is None:
        return []
    if isinstance(value, str):
        parts = value.split(",")
    else:
        try:
            parts = list(value)
        except TypeError:
            parts = [value]
    normalized = []
    for item in parts:
        if item is None:
            continue
        text = str(item).strip()
        if text:
            normalized.append(text)
    return normalized


class BoundarySpec(BaseModel):
    """端点条件配置，命令行写作 dirichlet:VALUE 或 neumann:VALUE"""

    kind: Literal["dirichlet", "neumann"] = "dirichlet"
    value: float = 0.0

    @classmethod
    def parse(cls, text: str) -> "BoundarySpec":
        kind, _, value = str(text).partition(":")
        kind = kind.strip().lower()
        if kind not in ("dirichlet", "neumann"):
            raise ValueError(
                f"boundary condition must look like dirichlet:VALUE or neumann:VALUE, got '{text}'"
            )
        return cls(kind=kind, value=float(value) if value.strip() else 0.0)

    def to_condition(self) -> BoundaryCondition:
        if self.kind == "dirichlet":
            return BoundaryCondition.dirichlet(self.value)
        return BoundaryCondition.neumann(self.value)

    def __str__(self) -> str:
        return f"{self.kind}:{self.value:g}"


class RunConfig(BaseModel):
    command: Literal["solve", "sweep", "stencil", "verify"]

    # 常系数问题
    v: Optional[float] = None
    k: Optional[float] = None
    f: float = 1.0
    n: int = 10
    x_lo: float = 0.0
    x_hi: float = 1.0
    left_bc: BoundarySpec = BoundarySpec()
    right_bc: BoundarySpec = BoundarySpec()

    # 格式选择："all" 或逗号分隔的格式名
    formulation: list[str] = ["all"]

    # sweep 配置：k = sweep_velocity / |ratio|
    ratios: list[float] = []
    sweep_velocity: float = 1.0

    # 输出配置
    output: Optional[str] = None
    format: Literal["csv", "json"] = "csv"

    max_workers: int = 4
    log_level: str = "INFO"

    @field_validator("formulation", mode="before")
    @classmethod
    def _normalize_formulations(cls, value):
        names = [name.lower() for name in _normalize_list(value)] or ["all"]
        if "all" in names:
            if len(names) > 1:
                raise ValueError("--formulation 'all' cannot be combined with other names")
            return ["all"]
        return [Formulation.parse(name).value for name in names]

    @field_validator("ratios", mode="before")
    @classmethod
    def _normalize_ratios(cls, value):
        return [float(item) for item in _normalize_list(value)]

    @field_validator("left_bc", "right_bc", mode="before")
    @classmethod
    def _parse_boundary(cls, value):
        if isinstance(value, str):
            return BoundarySpec.parse(value)
        return value

    @field_validator("max_workers")
    @classmethod
    def _positive_workers(cls, value):
        if value < 1:
            raise ValueError("--workers must be at least 1")
        return value

    @field_validator("log_level")
    @classmethod
    def _known_level(cls, value):
        level = str(value).upper()
        if level not in ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"):
            raise ValueError(f"--log-level must be a standard logging level, got '{value}'")
        return level

    @model_validator(mode="after")
    def _check_command(self):
        if self.command in ("solve", "stencil"):
            for flag in ("v", "k"):
                if getattr(self, flag) is None:
                    raise ValueError(f"--{flag} is required for the {self.command} command")
        if self.command == "sweep":
            if not self.ratios:
                raise ValueError("--ratios must list at least one v/k ratio for sweep")
            if any(ratio == 0.0 for ratio in self.ratios):
                raise ValueError("--ratios entries must be non-zero")
            if not self.sweep_velocity > 0.0:
                raise ValueError("--sweep-velocity must be positive")
        return self

    def formulations(self) -> list[Formulation]:
        """按固定顺序 (galerkin, artificial, weighted) 返回选中的格式"""
        if self.formulation == ["all"]:
            return list(Formulation.ordered())
        selected = {Formulation.parse(name) for name in self.formulation}
        return [f for f in Formulation.ordered() if f in selected]

    def boundary_conditions(self) -> tuple[BoundaryCondition, BoundaryCondition]:
        return self.left_bc.to_condition(), self.right_bc.to_condition()

    def echo(self) -> dict:
        """写入 JSON 结果的配置回显"""
        return self.model_dump(mode="json")

    @classmethod
    def from_yaml(cls, yaml_path: str, **overrides):
        """从 YAML 加载，overrides 中非 None 的值覆盖文件内容"""
        with open(yaml_path, "r") as f:
            config = yaml.load(f, Loader=yaml.FullLoader) or {}
        if not isinstance(config, dict):
            raise ValueError(f"config file {yaml_path} must hold a mapping of settings")
        config = {key.replace("-", "_"): value for key, value in config.items()}
        if "workers" in config:
            config["max_workers"] = config.pop("workers")
        config.update({key: value for key, value in overrides.items() if value is not None})
        return cls(**config)
