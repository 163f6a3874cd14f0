"""
Verification Reports

验证结果的数据模型，直接序列化为 JSON
"""

from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator


class ExactnessRecord(BaseModel):
    """单个 (v/k, 格式) 组合的节点误差"""

    ratio: float
    peclet: float
    formulation: str
    max_nodal_error: float
    oscillation_fraction: float = 0.0
    tolerance: float = 1e-10
    passed: bool


class ExactnessReport(BaseModel):
    records: list[ExactnessRecord] = Field(default_factory=list)

    @model_validator(mode="after")
    def unique_pairs(self):
        keys = [(r.ratio, r.formulation) for r in self.records]
        if len(keys) != len(set(keys)):
            raise ValueError("exactness report holds duplicate (ratio, formulation) records")
        return self

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.records)


class SymmetryReport(BaseModel):
    formulation: str
    asymmetry: float
    max_abs_difference: float
    problem_summary: str


class ConvergenceReport(BaseModel):
    formulation: str
    element_counts: list[int]
    mesh_sizes: list[float]
    l2_errors: list[float]
    rates: list[float]

    @model_validator(mode="after")
    def consistent_lengths(self):
        n = len(self.element_counts)
        if len(self.mesh_sizes) != n or len(self.l2_errors) != n:
            raise ValueError("convergence report columns differ in length")
        if len(self.rates) != max(n - 1, 0):
            raise ValueError("convergence report needs one rate per refinement step")
        return self


class CheckResult(BaseModel):
    """
    单项验收结果

    tolerance 为 None 表示仅报告的条目，此时 pass 恒为真
    """

    model_config = ConfigDict(populate_by_name=True)

    check: str
    value: float
    tolerance: Optional[float] = None
    passed: bool = Field(alias="pass")

    def as_row(self) -> dict:
        return self.model_dump(by_alias=True)
