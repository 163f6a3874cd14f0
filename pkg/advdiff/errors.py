"""
AdvDiff Errors

求解器各模块抛出的异常类型，校验类错误同时继承 ValueError
"""


class AdvDiffError(Exception):
    """所有求解器异常的基类"""


class NonPositiveDiffusivityError(AdvDiffError, ValueError):
    """扩散系数在校验网格上出现 k <= 0"""


class NoDirichletEndError(AdvDiffError, ValueError):
    """两端都不是 Dirichlet 条件，解只确定到一个常数"""


class EmptyDomainError(AdvDiffError, ValueError):
    """区间端点不满足 x_lo < x_hi"""


class TooFewElementsError(AdvDiffError, ValueError):
    """单元数少于 2，不存在内部节点"""


class InvalidMeshError(AdvDiffError, ValueError):
    """节点坐标不是严格递增序列"""


class IndexOutOfRangeError(AdvDiffError, IndexError):
    """单元编号越界"""


class UnsupportedOrderError(AdvDiffError, ValueError):
    """Gauss 点数不在 [1, 64] 范围内"""


class MeshProblemMismatchError(AdvDiffError, ValueError):
    """网格端点与问题区间不一致"""


class NonPositiveScaleError(AdvDiffError, ValueError):
    """行缩放因子必须为正"""


class InteriorDirichletUnsupportedError(AdvDiffError, ValueError):
    """Dirichlet 条件只能施加在端点"""


class EndHasDirichletError(AdvDiffError, ValueError):
    """试图在 Dirichlet 端施加 Neumann 通量"""


class NotConstantCoefficientError(AdvDiffError, ValueError):
    """解析解只对常系数问题有定义"""


class ExactSolutionUnavailableError(AdvDiffError, ValueError):
    """问题形状不是有解析解的基准问题"""


class SystemTooLargeError(AdvDiffError, ValueError):
    """条件数精确计算的规模上限"""


class ZeroPivotError(AdvDiffError, ArithmeticError):
    """Thomas 消元遇到零主元（奇异或不定系统）"""

    def __init__(self, row: int, pivot: float):
        super().__init__(f"zero pivot at row {row} (|pivot| = {abs(pivot):.3e})")
        self.row = row
        self.pivot = pivot
