"""
验证量与验收套件测试
"""

import math

import numpy as np
import pytest
from pydantic import ValidationError
from scipy.integrate import quad

from advdiff.errors import ExactSolutionUnavailableError, NotConstantCoefficientError
from advdiff.model.mesh import build_graded, build_uniform
from advdiff.model.problem import BoundaryCondition, WeightFunction, build_problem
from advdiff.model.report import CheckResult, ConvergenceReport, ExactnessRecord, ExactnessReport
from advdiff.model.system import Formulation, NodalSolution
from advdiff.numerics.solve import solve_formulation
from advdiff.numerics.stencils import exact_solution, gamma_stencil
from advdiff.numerics.verify import (
    convergence_study,
    equivalence_gap,
    exact_values,
    functional_value,
    has_exact_solution,
    l2_error,
    mirror_check,
    neumann_outflow_report,
    nodal_exactness,
    nonuniform_report,
    oscillation_fraction,
    run_acceptance_suite,
    stationarity_check,
    stencil_from_assembly,
    vainberg_symmetry,
)

RATIOS = [1.0, 10.0, 50.0, 100.0]


@pytest.mark.parametrize("ratio", RATIOS)
@pytest.mark.parametrize("formulation", [Formulation.WEIGHTED, Formulation.ARTIFICIAL])
def test_stabilized_formulations_are_nodally_exact(ratio, formulation, benchmark, unit_mesh):
    record = nodal_exactness(benchmark(ratio), unit_mesh, formulation)
    assert record.passed
    assert record.max_nodal_error <= 1e-10
    assert record.formulation == formulation.value
    assert record.ratio == ratio


@pytest.mark.parametrize("ratio", RATIOS)
def test_weighted_and_artificial_solutions_coincide(ratio, benchmark, unit_mesh):
    assert equivalence_gap(benchmark(ratio), unit_mesh) <= 1e-10


def test_galerkin_oscillates_at_high_peclet(benchmark, unit_mesh):
    """v/k = 100, h = 0.1，Pe = 5"""
    record = nodal_exactness(benchmark(100.0), unit_mesh, Formulation.GALERKIN)
    assert not record.passed
    assert record.max_nodal_error >= 1e-2
    assert record.oscillation_fraction >= 0.7
    assert record.peclet == pytest.approx(5.0)


def test_oscillation_fraction():
    assert oscillation_fraction([0.0, 1.0, -1.0, 1.0, -1.0, 0.0]) == 1.0
    assert oscillation_fraction([0.0, 1.0, 1.0, 1.0, 0.0]) == 0.0
    assert oscillation_fraction([0.0, 1.0, 0.0]) == 0.0


def test_exact_values_availability():
    assert has_exact_solution(build_problem(1.0, 0.1, 1.0))
    assert has_exact_solution(build_problem(1.0, 0.1, 1.0, right=BoundaryCondition.neumann(0.5)))
    with pytest.raises(NotConstantCoefficientError):
        exact_values(build_problem(lambda x: 1.0 + x, 1.0, 1.0), 0.5)
    with pytest.raises(ExactSolutionUnavailableError):
        exact_values(build_problem(1.0, 1.0, 1.0, x_hi=2.0), 0.5)
    assert not has_exact_solution(build_problem(1.0, 1.0, 1.0, left=BoundaryCondition.dirichlet(1.0)))
    with pytest.raises(NotConstantCoefficientError):
        nodal_exactness(build_problem(lambda x: 1.0 + x, 1.0, 1.0), build_uniform((0.0, 1.0), 4), "weighted")


def test_symmetry_dichotomy(unit_mesh):
    for problem in (build_problem(1.0, 0.01, 1.0), build_problem(lambda x: 1.0 + x, 1.0, 1.0)):
        assert vainberg_symmetry(problem, unit_mesh, "weighted").asymmetry <= 1e-12
    galerkin = vainberg_symmetry(build_problem(2.0, 1.0, 1.0), unit_mesh, "galerkin")
    assert galerkin.max_abs_difference == pytest.approx(2.0, abs=1e-13)
    assert vainberg_symmetry(build_problem(0.0, 1.0, 1.0), unit_mesh, "galerkin").asymmetry <= 1e-15


def test_weighted_solution_is_stationary(unit_mesh):
    problem = build_problem(1.0, 0.1, 1.0)
    weight = WeightFunction.for_problem(problem, unit_mesh)
    solution = solve_formulation(problem, unit_mesh, Formulation.WEIGHTED, weight=weight)
    value = functional_value(problem, unit_mesh, solution.values, weight=weight)
    slope = stationarity_check(problem, unit_mesh, solution, weight=weight)
    assert slope <= 1e-8 * abs(value) + 1e-10

    # 解析解的节点插值与离散解一致，驻点检查也一致
    interpolant = exact_values(problem, unit_mesh.nodes)
    assert stationarity_check(problem, unit_mesh, interpolant, weight=weight) == pytest.approx(slope, abs=1e-8)


def test_weighted_solution_minimizes_the_functional(unit_mesh):
    problem = build_problem(1.0, 0.1, 1.0)
    weight = WeightFunction.for_problem(problem, unit_mesh)
    values = solve_formulation(problem, unit_mesh, Formulation.WEIGHTED, weight=weight).values
    minimum = functional_value(problem, unit_mesh, values, weight=weight)
    rng = np.random.default_rng(11)
    for _ in range(100):
        direction = np.zeros_like(values)
        direction[1:-1] = rng.standard_normal(values.size - 2)
        direction *= 1e-2 / np.linalg.norm(direction)
        assert functional_value(problem, unit_mesh, values + direction, weight=weight) >= minimum


def test_galerkin_solution_is_not_stationary_for_the_weighted_functional(unit_mesh):
    problem = build_problem(1.0, 0.01, 1.0)
    galerkin = solve_formulation(problem, unit_mesh, Formulation.GALERKIN)
    weighted = solve_formulation(problem, unit_mesh, Formulation.WEIGHTED)
    assert stationarity_check(problem, unit_mesh, galerkin) > 1e3 * stationarity_check(
        problem, unit_mesh, weighted
    ) + 1e-10


def test_mirror_check(unit_mesh):
    assert mirror_check(build_problem(10.0, 1.0, 1.0), unit_mesh) <= 1e-10
    assert mirror_check(build_problem(0.0, 1.0, 1.0), unit_mesh) <= 1e-12
    assert mirror_check(build_problem(1.0, 0.01, 1.0), unit_mesh, "galerkin") <= 1e-10
    assert mirror_check(build_problem(lambda x: 1.0 + x, 0.1, 1.0), unit_mesh) <= 1e-10


def test_l2_error_and_convergence(benchmark):
    problem = benchmark(1.0)
    report = convergence_study(problem, "galerkin", [8, 16, 32, 64])
    assert isinstance(report, ConvergenceReport)
    assert report.element_counts == [8, 16, 32, 64]
    assert all(a > b for a, b in zip(report.l2_errors, report.l2_errors[1:]))
    assert all(abs(rate - 2.0) <= 0.15 for rate in report.rates)

    weighted = convergence_study(benchmark(10.0), "weighted", [8, 16, 32, 64])
    assert all(abs(rate - 2.0) <= 0.15 for rate in weighted.rates)

    with pytest.raises(ValueError):
        convergence_study(problem, "galerkin", [16, 8])


def test_l2_error_matches_adaptive_quadrature():
    problem = build_problem(1.0, 0.1, 1.0)
    mesh = build_uniform((0.0, 1.0), 8)
    nodes = mesh.nodes
    interpolant = NodalSolution(
        values=exact_solution(1.0, 0.1, 1.0, nodes), formulation=None, residual_inf=0.0, mesh=mesh, problem=problem
    )

    def squared_error(x, i):
        t = (x - nodes[i]) / (nodes[i + 1] - nodes[i])
        uh = interpolant.values[i] * (1.0 - t) + interpolant.values[i + 1] * t
        return (uh - exact_solution(1.0, 0.1, 1.0, x)) ** 2

    reference = math.sqrt(
        sum(quad(squared_error, nodes[i], nodes[i + 1], args=(i,), epsabs=1e-16, epsrel=1e-13)[0] for i in range(8))
    )
    assert reference == pytest.approx(0.029327, abs=1e-6)
    assert l2_error(interpolant) == pytest.approx(reference, rel=1e-9)


@pytest.mark.parametrize("formulation", list(Formulation.ordered()))
def test_convergence_without_advection(formulation):
    report = convergence_study(build_problem(0.0, 1.0, 1.0), formulation, [8, 16, 32, 64])
    assert all(abs(rate - 2.0) <= 0.1 for rate in report.rates)


def test_l2_error_needs_a_problem(benchmark, unit_mesh):
    solution = solve_formulation(benchmark(1.0), unit_mesh, "weighted")
    assert l2_error(solution) == l2_error(solution, benchmark(1.0))
    bare = solution.__class__(values=solution.values, formulation=None, residual_inf=0.0, mesh=unit_mesh)
    with pytest.raises(ValueError):
        l2_error(bare)


def test_stencil_from_assembly(unit_mesh):
    problem = build_problem(1.0, 0.02, 1.0)
    assembled = stencil_from_assembly(problem, unit_mesh, "weighted")
    np.testing.assert_allclose(assembled.as_tuple(), gamma_stencil(1.0, 0.02, 0.1).as_tuple(), rtol=1e-11)
    with pytest.raises(ValueError):
        stencil_from_assembly(problem, unit_mesh, "weighted", row=0)


def test_reported_measurements(benchmark):
    records = nonuniform_report(benchmark(10.0), build_graded((0.0, 1.0), 10, 0.8))
    assert [r.formulation for r in records] == ["galerkin", "artificial", "weighted"]
    assert all(math.isfinite(r.max_nodal_error) for r in records)

    outflow = neumann_outflow_report(1.0, 0.1, 1.0, 0.5, 10)
    assert len(outflow) == 3
    assert all(math.isfinite(r.max_nodal_error) for r in outflow)


def test_report_models():
    row = CheckResult(check="demo", value=1.0, tolerance=None, passed=True).as_row()
    assert row == {"check": "demo", "value": 1.0, "tolerance": None, "pass": True}
    assert CheckResult.model_validate({"check": "a", "value": 0.0, "pass": False}).passed is False

    record = ExactnessRecord(ratio=1.0, peclet=0.05, formulation="weighted", max_nodal_error=0.0, passed=True)
    with pytest.raises(ValidationError):
        ExactnessReport(records=[record, record])
    assert ExactnessReport(records=[record]).passed
    with pytest.raises(ValidationError):
        ConvergenceReport(formulation="galerkin", element_counts=[8, 16], mesh_sizes=[0.1], l2_errors=[1.0, 0.5], rates=[2.0])


def test_acceptance_suite_passes():
    checks = run_acceptance_suite()
    names = [check.check for check in checks]
    assert len(names) == len(set(names))
    failed = [check for check in checks if not check.passed]
    assert not failed, failed
    reported = [check for check in checks if check.tolerance is None]
    assert reported and all(check.passed for check in reported)
