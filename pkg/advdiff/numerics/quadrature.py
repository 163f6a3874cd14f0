"""
Quadrature

Gauss-Legendre 求积规则、多项式乘指数的精确积分，以及带权函数的单元积分
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import TYPE_CHECKING, Callable, Sequence, Union

import numpy as np
from numpy.polynomial import Polynomial
from scipy.special import roots_legendre

from advdiff.errors import UnsupportedOrderError

if TYPE_CHECKING:
    from advdiff.model.problem import WeightFunction

MAX_GAUSS_POINTS = 64
MIN_ELEMENT_POINTS = 4
MAX_ELEMENT_POINTS = 32

# |c| 低于该值时矩积分用幂级数，否则用递推
SERIES_THRESHOLD = 2.0
_SERIES_MAX_TERMS = 80
_SERIES_CUTOFF = 1e-18

Integrand = Union[float, Callable[[np.ndarray], np.ndarray]]


@dataclass(frozen=True)
class GaussRule:
    """[-1, 1] 上的 Gauss-Legendre 规则，节点升序"""

    points: tuple[float, ...]
    weights: tuple[float, ...]

    @property
    def n(self) -> int:
        return len(self.points)

    def on_interval(self, x0: float, x1: float) -> tuple[np.ndarray, np.ndarray]:
        """映射到 [x0, x1]，返回 (节点, 缩放后的权重)"""
        half = 0.5 * (x1 - x0)
        mid = 0.5 * (x0 + x1)
        points = np.asarray(self.points)
        return mid + half * points, half * np.asarray(self.weights)


@lru_cache(maxsize=None)
def _cached_rule(n: int) -> GaussRule:
    points, weights = roots_legendre(n)
    return GaussRule(tuple(float(p) for p in points), tuple(float(w) for w in weights))


def gauss_rule(n: int) -> GaussRule:
    """
    n 点 Gauss-Legendre 规则，对次数不超过 2n-1 的多项式精确

    Raises:
        UnsupportedOrderError: n 不在 [1, 64]
    """
    if isinstance(n, bool) or not isinstance(n, (int, np.integer)):
        raise UnsupportedOrderError(f"Gauss order must be an integer, got {n!r}")
    if not 1 <= n <= MAX_GAUSS_POINTS:
        raise UnsupportedOrderError(
            f"Gauss order must lie in [1, {MAX_GAUSS_POINTS}], got {n}"
        )
    return _cached_rule(int(n))


def element_gauss_points(peclet: float) -> int:
    """按单元 Péclet 数选择点数：clamp(4 + ceil(|Pe|), 4, 32)"""
    wanted = MIN_ELEMENT_POINTS + math.ceil(abs(peclet))
    return int(min(max(wanted, MIN_ELEMENT_POINTS), MAX_ELEMENT_POINTS))


def _moments_series(c: float, degree: int) -> np.ndarray:
    orders = np.arange(degree + 1, dtype=float)
    total = np.zeros(degree + 1)
    term = 1.0
    for j in range(_SERIES_MAX_TERMS):
        total += term / (orders + j + 1.0)
        term *= c / (j + 1.0)
        if abs(term) < _SERIES_CUTOFF:
            break
    return total


def _moments_recurrence(c: float, degree: int) -> np.ndarray:
    growth = math.exp(c)
    moments = np.empty(degree + 1)
    moments[0] = math.expm1(c) / c
    for m in range(1, degree + 1):
        moments[m] = (growth - m * moments[m - 1]) / c
    return moments


def exp_moments(c: float, degree: int) -> np.ndarray:
    """
    φ_m(c) = ∫_0^1 s^m e^{cs} ds，m = 0..degree

    |c| < SERIES_THRESHOLD 用幂级数 Σ c^j / (j! (m+j+1))，否则用
    φ_0 = expm1(c)/c，φ_m = (e^c - m φ_{m-1}) / c
    """
    if degree < 0:
        raise ValueError(f"degree must be non-negative, got {degree}")
    if abs(c) < SERIES_THRESHOLD:
        return _moments_series(c, degree)
    return _moments_recurrence(c, degree)


def integrate_exp_poly(
    a: float, poly: Sequence[float], x0: float, x1: float
) -> float:
    """
    计算 ∫_{x0}^{x1} p(x) e^{a x} dx

    Args:
        a: 指数系数
        poly: 多项式系数，升幂排列
        x0, x1: 积分区间，要求 x0 <= x1

    Returns:
        积分值；a = 0 时退化为多项式积分
    """
    if x1 < x0:
        raise ValueError(f"integration bounds must satisfy x0 <= x1, got [{x0}, {x1}]")
    length = x1 - x0
    coefficients = np.atleast_1d(np.asarray(poly, dtype=float))
    if length == 0.0 or coefficients.size == 0:
        return 0.0

    if x0 == 0.0:
        shifted = coefficients
    else:
        shifted = Polynomial(coefficients)(Polynomial([x0, 1.0])).coef
    degree = shifted.size - 1

    moments = exp_moments(a * length, degree)
    powers = length ** np.arange(1, degree + 2, dtype=float)
    local = float(np.dot(shifted, powers * moments))
    if a == 0.0 or x0 == 0.0:
        return local
    return math.exp(a * x0) * local


def integrate_weighted(
    g: Integrand,
    weight: "WeightFunction",
    x0: float,
    x1: float,
    n_pts: int,
    *,
    log_shift: float = 0.0,
) -> float:
    """
    n_pts 点 Gauss 规则计算 ∫ α(x) g(x) dx

    log_shift 非零时返回 ∫ exp(log α(x) - log_shift) g(x) dx，用于避免下溢
    """
    rule = gauss_rule(n_pts)
    xs, ws = rule.on_interval(x0, x1)
    values = g(xs) if callable(g) else np.full_like(xs, float(g))
    scaled_alpha = np.exp(weight.log_value(xs) - log_shift)
    return float(np.sum(ws * scaled_alpha * values))
