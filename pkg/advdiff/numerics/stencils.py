"""
Closed-form Stencils

常系数均匀网格上三种格式的三点模板、最优人工扩散与解析解

所有双曲函数组合都写成 expm1 的形式，Pe 很大或很小时不出现抵消和溢出
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import mpmath
import numpy as np
from numpy.polynomial import polynomial as P

from advdiff.errors import NonPositiveDiffusivityError
from advdiff.model.system import Formulation

COTHM_SERIES_LIMIT = 1.0
_COTHM_TERMS = 18
EXACT_SERIES_LIMIT = 1e-6
NEUMANN_SERIES_LIMIT = 1.0
_PHI2_TERMS = 24
_EXP_OVERFLOW = 709.0


def _cothm_coefficients(terms: int) -> np.ndarray:
    # coth(x) - 1/x = Σ_{n>=1} 2^{2n} B_{2n} x^{2n-1} / (2n)!，系数在 40 位精度下计算后舍入
    with mpmath.workdps(40):
        return np.array(
            [
                float(mpmath.mpf(4) ** n * mpmath.bernoulli(2 * n) / mpmath.factorial(2 * n))
                for n in range(1, terms + 1)
            ]
        )


def _phi2_coefficients(terms: int) -> np.ndarray:
    # (e^z - 1 - z) / z^2 = Σ_{n>=0} z^n / (n+2)!
    return np.array([1.0 / math.factorial(n + 2) for n in range(terms)])


_COTHM_COEFFICIENTS = _cothm_coefficients(_COTHM_TERMS)
_PHI2_COEFFICIENTS = _phi2_coefficients(_PHI2_TERMS)


@dataclass(frozen=True)
class StencilCoeffs:
    """三点模板 (c_{-1}, c_0, c_{+1})"""

    c_left: float
    c_center: float
    c_right: float
    formulation: Formulation

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.c_left, self.c_center, self.c_right)

    def __iter__(self):
        return iter(self.as_tuple())

    def total(self) -> float:
        return self.c_left + self.c_center + self.c_right


def _expm1(x: float) -> float:
    return math.inf if x > _EXP_OVERFLOW else math.expm1(x)


def coth(x: float) -> float:
    if x == 0.0:
        raise ZeroDivisionError("coth is singular at 0")
    ax = abs(x)
    return math.copysign(1.0 + 2.0 / _expm1(2.0 * ax), x)


def one_plus_coth(x: float) -> float:
    """1 + coth(x) = -2 / expm1(-2x)"""
    if x == 0.0:
        raise ZeroDivisionError("coth is singular at 0")
    return -2.0 / _expm1(-2.0 * x)


def one_minus_coth(x: float) -> float:
    """1 - coth(x) = -2 / expm1(2x)"""
    if x == 0.0:
        raise ZeroDivisionError("coth is singular at 0")
    return -2.0 / _expm1(2.0 * x)


def cothm(x):
    """
    coth(x) - 1/x，奇函数，cothm(0) = 0

    |x| < 1 用 Bernoulli 级数，否则用 (|x|-1)/|x| + 2/expm1(2|x|)
    """
    scalar = np.ndim(x) == 0
    x = np.atleast_1d(np.asarray(x, dtype=float))
    ax = np.abs(x)
    out = np.empty_like(x)

    small = ax < COTHM_SERIES_LIMIT
    xs = x[small]
    xs2 = xs * xs
    # 首项 x/3 单独相加
    out[small] = xs / 3.0 + xs * xs2 * P.polyval(xs2, _COTHM_COEFFICIENTS[1:])

    large = ~small
    xl = ax[large]
    with np.errstate(over="ignore"):
        tail = (xl - 1.0) / xl + 2.0 / np.expm1(2.0 * xl)
    out[large] = np.sign(x[large]) * tail

    return float(out[0]) if scalar else out


def _check_positive(k: float, h: float) -> None:
    if not k > 0.0:
        raise NonPositiveDiffusivityError(f"diffusivity must be positive, got k = {k}")
    if not h > 0.0:
        raise ValueError(f"element size must be positive, got h = {h}")


def kbar(v: float, k: float, h: float) -> float:
    """最优人工扩散 k̄ = (v h / 2) · cothm(Pe)"""
    _check_positive(k, h)
    pe = v * h / (2.0 * k)
    return 0.5 * v * h * cothm(pe)


def _diffusion_stencil(k: float, h: float, formulation: Formulation) -> StencilCoeffs:
    d = k / (h * h)
    return StencilCoeffs(-d, 2.0 * d, -d, formulation)


def galerkin_stencil(v: float, k: float, h: float) -> StencilCoeffs:
    """(v/2h) · (-(Pe+1)/Pe, 2/Pe, (Pe-1)/Pe)；Pe = 1 时右系数恰为 0"""
    _check_positive(k, h)
    if v == 0.0:
        return _diffusion_stencil(k, h, Formulation.GALERKIN)
    pe = v * h / (2.0 * k)
    scale = v / (2.0 * h)
    return StencilCoeffs(
        -scale * (pe + 1.0) / pe,
        scale * 2.0 / pe,
        scale * (pe - 1.0) / pe,
        Formulation.GALERKIN,
    )


def optimal_stencil(v: float, k: float, h: float) -> StencilCoeffs:
    """人工扩散取 k̄ 时的模板 (v/2h) · (-(1+coth Pe), 2 coth Pe, 1 - coth Pe)"""
    _check_positive(k, h)
    if v == 0.0:
        return _diffusion_stencil(k, h, Formulation.ARTIFICIAL)
    pe = v * h / (2.0 * k)
    scale = v / (2.0 * h)
    return StencilCoeffs(
        -scale * one_plus_coth(pe),
        scale * (2.0 * coth(pe)),
        scale * one_minus_coth(pe),
        Formulation.ARTIFICIAL,
    )


def gamma_stencil(v: float, k: float, h: float) -> StencilCoeffs:
    """加权变分格式的模板 (-(v/2h)(1+coth Pe), (v/h) coth Pe, (v/2h)(1-coth Pe))"""
    _check_positive(k, h)
    if v == 0.0:
        return _diffusion_stencil(k, h, Formulation.WEIGHTED)
    pe = v * h / (2.0 * k)
    return StencilCoeffs(
        -(v / (2.0 * h)) * one_plus_coth(pe),
        (v / h) * coth(pe),
        (v / (2.0 * h)) * one_minus_coth(pe),
        Formulation.WEIGHTED,
    )


def closed_form_stencil(formulation: Formulation, v: float, k: float, h: float) -> StencilCoeffs:
    builders = {
        Formulation.GALERKIN: galerkin_stencil,
        Formulation.ARTIFICIAL: optimal_stencil,
        Formulation.WEIGHTED: gamma_stencil,
    }
    return builders[Formulation.parse(formulation)](v, k, h)


def exact_solution(v: float, k: float, f: float, x):
    """
    [0, 1] 上 -k u'' + v u' = f，u(0) = u(1) = 0 的解析解

    r = v/k；|r| < 1e-6 时用到一阶的 Taylor 展开
    """
    if not k > 0.0:
        raise NonPositiveDiffusivityError(f"diffusivity must be positive, got k = {k}")
    scalar = np.ndim(x) == 0
    x = np.asarray(x, dtype=float)
    r = v / k
    if abs(r) < EXACT_SERIES_LIMIT:
        bubble = x * (1.0 - x)
        u = f * bubble / (2.0 * k) - f * r * bubble * (1.0 - 2.0 * x) / (12.0 * k)
    elif r > 0.0:
        layer = np.exp(r * (x - 1.0)) * np.expm1(-r * x) / math.expm1(-r)
        u = (f / v) * (x - layer)
    else:
        layer = np.expm1(r * x) / math.expm1(r)
        u = (f / v) * (x - layer)
    return float(u) if scalar else u


def _phi2(z):
    """(e^z - 1 - z) / z^2，|z| < 1 时的级数"""
    return P.polyval(z, _PHI2_COEFFICIENTS)


def exact_solution_neumann_outflow(v: float, k: float, f: float, flux: float, x):
    """
    [0, 1] 上 u(0) = 0、k u'(1) = flux 的解析解

    u = f x / v + ((flux - k f / v) / v) · (e^{r(x-1)} - e^{-r})

    |r| < 1 时改写为 u = (flux/k) S + (f/k) T，
    S = e^{-r} x φ1(rx)，T = x e^{-r} (φ1(r) - x φ2(rx))，φ1(z) = 1 + z φ2(z)，
    两项都不含抵消
    """
    if not k > 0.0:
        raise NonPositiveDiffusivityError(f"diffusivity must be positive, got k = {k}")
    scalar = np.ndim(x) == 0
    x = np.asarray(x, dtype=float)
    r = v / k
    if abs(r) < NEUMANN_SERIES_LIMIT:
        decay = math.exp(-r)
        rx = r * x
        phi2_rx = _phi2(rx)
        phi1_rx = 1.0 + rx * phi2_rx
        phi1_r = 1.0 + r * float(_phi2(r))
        s = decay * x * phi1_rx
        t = decay * x * (phi1_r - x * phi2_rx)
        u = (flux / k) * s + (f / k) * t
    else:
        if r > 0.0:
            shape = -np.exp(r * (x - 1.0)) * np.expm1(-r * x)
        else:
            shape = math.exp(-r) * np.expm1(r * x)
        u = f * x / v + ((flux - k * f / v) / v) * shape
    return float(u) if scalar else u
