"""
问题定义与权函数测试
"""

import math

import numpy as np
import pytest

from advdiff.errors import (
    AdvDiffError,
    EmptyDomainError,
    NoDirichletEndError,
    NonPositiveDiffusivityError,
)
from advdiff.model.mesh import build_uniform
from advdiff.model.problem import (
    BoundaryCondition,
    ProblemSpec,
    WeightFunction,
    alpha_at,
    build_problem,
    mirrored,
    peclet_element,
    validate,
)

DIRICHLET = (BoundaryCondition.dirichlet(), BoundaryCondition.dirichlet())


def test_validate_constant_problem():
    problem = validate(ProblemSpec(v=1.0, k=0.1, f=1.0), DIRICHLET)
    assert problem.constant_coefficients
    assert problem.constant_values() == (1.0, 0.1, 1.0)
    assert problem.length == 1.0
    assert "v=1" in problem.summary()


def test_validate_detects_variable_coefficients():
    problem = validate(ProblemSpec(v=lambda x: 1.0 + x, k=1.0, f=1.0), DIRICHLET)
    assert not problem.constant_coefficients
    with pytest.raises(ValueError):
        problem.constant_values()
    np.testing.assert_allclose(problem.velocity([0.0, 0.5, 1.0]), [1.0, 1.5, 2.0])


def test_validate_rejects_non_positive_diffusivity():
    with pytest.raises(NonPositiveDiffusivityError):
        validate(ProblemSpec(v=1.0, k=0.0, f=1.0), DIRICHLET)
    # 只在区间内部某处变为负
    with pytest.raises(NonPositiveDiffusivityError) as info:
        validate(ProblemSpec(v=1.0, k=lambda x: x - 0.5, f=1.0), DIRICHLET)
    assert isinstance(info.value, AdvDiffError)


def test_validate_needs_a_dirichlet_end():
    neumann = BoundaryCondition.neumann(0.0)
    with pytest.raises(NoDirichletEndError):
        validate(ProblemSpec(v=1.0, k=1.0, f=1.0), (neumann, neumann))
    # 一端 Dirichlet 即可
    problem = validate(ProblemSpec(v=1.0, k=1.0, f=1.0), (BoundaryCondition.dirichlet(), neumann))
    assert not problem.right.is_dirichlet


def test_validate_rejects_empty_domain():
    with pytest.raises(EmptyDomainError):
        validate(ProblemSpec(v=1.0, k=1.0, f=1.0, x_lo=1.0, x_hi=1.0), DIRICHLET)


def test_boundary_condition_str():
    assert str(BoundaryCondition.dirichlet(0.0)) == "dirichlet:0"
    assert str(BoundaryCondition.neumann(0.5)) == "neumann:0.5"


def test_peclet_element():
    problem = build_problem(1.0, 0.05, 1.0)
    assert peclet_element(problem, 0.0, 0.1) == pytest.approx(1.0, rel=1e-15)
    with pytest.raises(ValueError):
        peclet_element(problem, 0.0, 0.0)


def test_weight_constant_coefficients():
    problem = build_problem(1.0, 0.1, 1.0)
    weight = WeightFunction.for_problem(problem)
    assert alpha_at(weight, 0.0) == 1.0
    assert alpha_at(weight, 0.5) == pytest.approx(math.exp(-5.0), rel=1e-14)
    xs = np.linspace(0.0, 1.0, 7)
    np.testing.assert_allclose(weight(xs), np.exp(-10.0 * xs), rtol=1e-14)


def test_weight_negative_velocity_is_normalized_at_the_right_end():
    problem = build_problem(-1.0, 0.1, 1.0)
    weight = WeightFunction.for_problem(problem)
    assert alpha_at(weight, 1.0) == pytest.approx(1.0, rel=1e-14)
    assert alpha_at(weight, 0.0) == pytest.approx(math.exp(-10.0), rel=1e-13)


def test_weight_variable_coefficients():
    """v = 1 + x, k = 1：log α = -(x + x²/2)"""
    problem = build_problem(lambda x: 1.0 + x, 1.0, 1.0)
    mesh = build_uniform((0.0, 1.0), 10)
    weight = WeightFunction.for_problem(problem, mesh)
    xs = np.array([0.0, 0.13, 0.5, 0.77, 1.0])
    np.testing.assert_allclose(weight(xs), np.exp(-(xs + 0.5 * xs**2)), rtol=1e-13)
    # 不给网格时使用默认的均匀划分
    default = WeightFunction.for_problem(problem)
    np.testing.assert_allclose(default(xs), weight(xs), rtol=1e-13)


def test_weight_rescaled():
    weight = WeightFunction.for_problem(build_problem(1.0, 1.0, 1.0))
    scaled = weight.rescaled(3.0)
    assert scaled.normalization == pytest.approx(3.0, rel=1e-15)
    assert alpha_at(scaled, 0.4) == pytest.approx(3.0 * alpha_at(weight, 0.4), rel=1e-14)
    with pytest.raises(ValueError):
        weight.rescaled(0.0)


def test_mirrored_problem():
    problem = build_problem(
        lambda x: 1.0 + x,
        1.0,
        1.0,
        left=BoundaryCondition.dirichlet(0.0),
        right=BoundaryCondition.neumann(2.0),
    )
    reflected = mirrored(problem)
    assert float(reflected.velocity(0.2)) == pytest.approx(-1.8)
    assert reflected.left == problem.right
    assert reflected.right == problem.left


def test_build_problem_defaults():
    problem = build_problem(0.0, 1.0, 1.0, x_lo=-1.0, x_hi=2.0)
    assert problem.left.is_dirichlet and problem.right.is_dirichlet
    assert problem.left.value == 0.0
    assert problem.length == 3.0
    with pytest.raises(ValueError):
        problem.boundary("middle")
