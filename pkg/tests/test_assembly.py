"""
装配、行平衡与边界条件测试
"""

import math

import numpy as np
import pytest

from advdiff.errors import (
    EndHasDirichletError,
    InteriorDirichletUnsupportedError,
    MeshProblemMismatchError,
    NonPositiveScaleError,
)
from advdiff.model.mesh import build_uniform
from advdiff.model.problem import BoundaryCondition, WeightFunction, build_problem
from advdiff.model.system import Formulation, TriDiagSystem
from advdiff.numerics.assembly import (
    apply_dirichlet,
    apply_neumann,
    assemble,
    assemble_equilibrated,
    interior_rows,
    lumped_mass,
    row_log_shift,
    row_equilibrate,
    symmetric_scale,
)
from advdiff.numerics.stencils import gamma_stencil, optimal_stencil
from advdiff.numerics.solve import solve_formulation


def test_poisson_assembly():
    problem = build_problem(0.0, 1.0, 1.0)
    system = assemble(problem, build_uniform((0.0, 1.0), 4), Formulation.GALERKIN)
    sub, diag, sup, rhs = interior_rows(system)
    np.testing.assert_allclose(sub, -4.0)
    np.testing.assert_allclose(diag, 8.0)
    np.testing.assert_allclose(sup, -4.0)
    np.testing.assert_allclose(rhs, 0.25)
    assert system.symmetric_hint
    assert system.asymmetry() == 0.0


@pytest.mark.parametrize("v", [0.5, 1.0, 10.0, -3.0])
def test_galerkin_asymmetry_equals_velocity(v, unit_mesh):
    system = assemble(build_problem(v, 1.0, 1.0), unit_mesh, Formulation.GALERKIN)
    np.testing.assert_allclose(system.sub - system.sup, -v, atol=1e-13)
    assert not system.symmetric_hint


def test_weighted_raw_system_is_symmetric(unit_mesh):
    for problem in (
        build_problem(1.0, 0.1, 1.0),
        build_problem(1.0, 0.01, 1.0),
        build_problem(lambda x: 1.0 + x, 1.0, 1.0),
    ):
        system = assemble(problem, unit_mesh, Formulation.WEIGHTED)
        assert system.asymmetry() <= 1e-12
        assert system.symmetric_hint


def test_weighted_equilibrated_rows_match_closed_form(unit_mesh):
    """v = 1, k = 0.02, h = 0.1：行平衡后的内部行就是闭式模板，右端项为 f"""
    problem = build_problem(1.0, 0.02, 1.0)
    system = assemble_equilibrated(problem, unit_mesh, Formulation.WEIGHTED)
    sub, diag, sup, rhs = interior_rows(system)
    expected = gamma_stencil(1.0, 0.02, 0.1)
    np.testing.assert_allclose(sub, expected.c_left, rtol=1e-11)
    np.testing.assert_allclose(diag, expected.c_center, rtol=1e-11)
    np.testing.assert_allclose(sup, expected.c_right, rtol=1e-11)
    np.testing.assert_allclose(rhs, 1.0, rtol=1e-11)


def test_weighted_equilibration_survives_large_ratios():
    """v/k = 2000 时 α 跨越约 870 个数量级，平移装配后行仍然有限"""
    problem = build_problem(1.0, 5e-4, 1.0)
    mesh = build_uniform((0.0, 1.0), 10)
    system = assemble_equilibrated(problem, mesh, Formulation.WEIGHTED)
    assert np.all(np.isfinite(system.diag))
    np.testing.assert_allclose(system.diag[1:-1], gamma_stencil(1.0, 5e-4, 0.1).c_center, rtol=1e-11)


def test_artificial_equilibrated_rows_match_closed_form(unit_mesh):
    problem = build_problem(1.0, 0.02, 1.0)
    system = assemble_equilibrated(problem, unit_mesh, Formulation.ARTIFICIAL)
    sub, diag, sup, _ = interior_rows(system)
    expected = optimal_stencil(1.0, 0.02, 0.1)
    np.testing.assert_allclose(sub, expected.c_left, rtol=1e-12)
    np.testing.assert_allclose(diag, expected.c_center, rtol=1e-12)
    np.testing.assert_allclose(sup, expected.c_right, rtol=1e-12)


def test_assembly_is_independent_of_worker_count(unit_mesh):
    problem = build_problem(lambda x: 1.0 + x, 0.1, 1.0)
    serial = assemble(problem, unit_mesh, Formulation.WEIGHTED, max_workers=1)
    threaded = assemble(problem, unit_mesh, Formulation.WEIGHTED, max_workers=4)
    for name in ("sub", "diag", "sup", "rhs"):
        np.testing.assert_array_equal(getattr(serial, name), getattr(threaded, name))


def test_mesh_must_match_problem():
    with pytest.raises(MeshProblemMismatchError):
        assemble(build_problem(1.0, 1.0, 1.0), build_uniform((0.0, 2.0), 4), "galerkin")


def test_lumped_mass(unit_mesh):
    mass = lumped_mass(build_problem(1.0, 1.0, 1.0), unit_mesh, Formulation.GALERKIN)
    np.testing.assert_allclose(mass, [0.05] + [0.1] * 9 + [0.05], rtol=1e-14)
    weighted = lumped_mass(build_problem(1.0, 1.0, 1.0), unit_mesh, Formulation.WEIGHTED)
    assert weighted.sum() == pytest.approx(1.0 - math.exp(-1.0), rel=1e-13)


def test_row_equilibrate():
    system = TriDiagSystem(sub=[1.0, 1.0], diag=[4.0, 4.0, 4.0], sup=[2.0, 2.0], rhs=[1.0, 2.0, 3.0])
    scaled = row_equilibrate(system, [2.0, 4.0, 1.0])
    np.testing.assert_allclose(scaled.diag, [2.0, 1.0, 4.0])
    np.testing.assert_allclose(scaled.sub, [0.25, 1.0])
    np.testing.assert_allclose(scaled.sup, [1.0, 0.5])
    np.testing.assert_allclose(scaled.rhs, [0.5, 0.5, 3.0])
    np.testing.assert_allclose(scaled.row_log_scale, np.log([2.0, 4.0, 1.0]))
    with pytest.raises(NonPositiveScaleError):
        row_equilibrate(system, [1.0, 0.0, 1.0])
    with pytest.raises(ValueError):
        row_equilibrate(system, [1.0, 1.0])


def test_apply_dirichlet():
    system = TriDiagSystem(sub=[1.0, 1.0], diag=[4.0, 4.0, 4.0], sup=[2.0, 2.0], rhs=[1.0, 1.0, 1.0])
    fixed = apply_dirichlet(system, 0, 3.0)
    np.testing.assert_array_equal(fixed.diag, [1.0, 4.0, 4.0])
    np.testing.assert_array_equal(fixed.sub, [0.0, 1.0])
    np.testing.assert_array_equal(fixed.sup, [0.0, 2.0])
    np.testing.assert_array_equal(fixed.rhs, [3.0, -2.0, 1.0])
    assert fixed.dirichlet_nodes == (0,)

    both = apply_dirichlet(fixed, 2, 0.5)
    np.testing.assert_array_equal(both.rhs, [3.0, -3.0, 0.5])
    assert both.dirichlet_nodes == (0, 2)
    with pytest.raises(InteriorDirichletUnsupportedError):
        apply_dirichlet(system, 1, 0.0)


def test_apply_neumann_weighted_uses_the_end_weight(unit_mesh):
    problem = build_problem(1.0, 1.0, 0.0, right=BoundaryCondition.neumann(1.0))
    system = assemble(problem, unit_mesh, Formulation.WEIGHTED)
    updated = apply_neumann(system, problem, "right", 1.0)
    assert updated.rhs[-1] - system.rhs[-1] == pytest.approx(math.exp(-1.0), rel=1e-14)

    galerkin = assemble(problem, unit_mesh, Formulation.GALERKIN)
    assert apply_neumann(galerkin, problem, "right", 1.0).rhs[-1] == pytest.approx(1.0)
    with pytest.raises(EndHasDirichletError):
        apply_neumann(system, problem, "left", 1.0)


def test_apply_neumann_after_equilibration(unit_mesh):
    """行平衡后的通量项按该行的缩放换算，解不变"""
    problem = build_problem(1.0, 0.1, 1.0, right=BoundaryCondition.neumann(0.5))
    raw = solve_formulation(problem, unit_mesh, Formulation.WEIGHTED, equilibrate=False)
    balanced = solve_formulation(problem, unit_mesh, Formulation.WEIGHTED)
    np.testing.assert_allclose(balanced.values, raw.values, rtol=1e-10, atol=1e-13)


def test_symmetric_scale_keeps_symmetry(unit_mesh):
    problem = build_problem(1.0, 0.01, 1.0)
    weight = WeightFunction.for_problem(problem, unit_mesh)
    system = assemble(problem, unit_mesh, Formulation.WEIGHTED, weight=weight)
    system = apply_dirichlet(apply_dirichlet(system, 0, 0.0), system.n - 1, 0.0)
    scales = lumped_mass(problem, unit_mesh, Formulation.WEIGHTED, weight=weight)
    scaled = symmetric_scale(system, scales)
    assert scaled.asymmetry() <= 1e-12
    assert scaled.diag[0] == 1.0 and scaled.diag[-1] == 1.0
    with pytest.raises(NonPositiveScaleError):
        symmetric_scale(system, np.r_[scales[:-2], -1.0, scales[-1]])


def test_row_log_shift_bounds_every_element_factor(unit_mesh):
    for velocity in (1.0, -1.0):
        problem = build_problem(velocity, 1e-3, 1.0)
        weight = WeightFunction.for_problem(problem, unit_mesh)
        shift = row_log_shift(weight, unit_mesh)
        log_alpha = weight.log_value(unit_mesh.nodes)
        assert np.all(shift >= log_alpha)
        assert np.all(shift[:-1] >= log_alpha[1:])
        assert np.all(shift[1:] >= log_alpha[:-1])
