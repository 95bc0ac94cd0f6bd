import numpy as np
import pytest

from compas_fdcrack.assembly import Material
from compas_fdcrack.geometry import CellClass
from compas_fdcrack.manufactured import DEFAULT_JUMP
from compas_fdcrack.manufactured import AffineField
from compas_fdcrack.manufactured import ManufacturedCase
from compas_fdcrack.manufactured import TrigonometricField
from compas_fdcrack.manufactured import exact_body_force
from compas_fdcrack.manufactured import exact_displacement
from compas_fdcrack.manufactured import exact_multiplier
from compas_fdcrack.manufactured import exact_traction
from compas_fdcrack.manufactured import problem_data
from compas_fdcrack.manufactured import project_multiplier
from compas_fdcrack.manufactured import sweep_geometry
from compas_fdcrack.manufactured import sweep_length

from conftest import build_model


POINTS = np.array([[0.1, 0.2], [0.5, 0.9], [0.8, 0.3], [0.95, 0.05]])


def test_reference_case(case):
    assert (case.x0, case.x_a, case.x_b) == (0.317, 0.47, 0.52)
    np.testing.assert_allclose(case.jump, DEFAULT_JUMP)
    np.testing.assert_allclose(case.normal, np.array([2.0, -1.0]) / np.sqrt(5.0))


def test_exact_displacement_jumps_across_the_line(case):
    above = exact_displacement(case, [[0.5, 0.9]])
    below = exact_displacement(case, [[0.5, 0.2]])
    np.testing.assert_allclose(above, case.branch([[0.5, 0.9]], CellClass.PLUS))
    np.testing.assert_allclose(below, case.branch([[0.5, 0.2]], CellClass.MINUS))
    on_line = np.array([[0.5, 2.0 * (0.5 - 0.317)]])
    jump = case.branch(on_line, CellClass.PLUS) - case.branch(on_line, CellClass.MINUS)
    np.testing.assert_allclose(jump[0], DEFAULT_JUMP)


@pytest.mark.parametrize("x0, x_a, x_b", [(0.317, 0.52, 0.47), (0.317, 0.5, 0.5), (2.0, 0.1, 0.2), (-3.0, 0.1, 0.2)])
def test_invalid_cases(x0, x_a, x_b):
    with pytest.raises(ValueError):
        ManufacturedCase(x0=x0, x_a=x_a, x_b=x_b)


def test_gradient_matches_finite_differences():
    field = TrigonometricField()
    step = 1e-6
    for j, shift in enumerate(np.eye(2)):
        difference = (field.value(POINTS + step * shift) - field.value(POINTS - step * shift)) / (2 * step)
        np.testing.assert_allclose(field.gradient(POINTS)[:, :, j], difference, atol=1e-8)


def test_body_force_matches_finite_differences_of_the_stress():
    case = ManufacturedCase(material=Material(2.0, 0.5))
    step = 1e-5
    divergence = np.zeros((len(POINTS), 2))
    for j, shift in enumerate(np.eye(2)):
        difference = (case.stress(POINTS + step * shift) - case.stress(POINTS - step * shift)) / (2 * step)
        divergence += difference[:, :, j]
    np.testing.assert_allclose(exact_body_force(case, POINTS), -divergence, atol=1e-6)


def test_affine_field_needs_no_body_force():
    case = ManufacturedCase(field=AffineField((1.0, 2.0), ((0.1, 0.2), (0.3, -0.4))))
    np.testing.assert_allclose(exact_body_force(case, POINTS), 0.0)
    np.testing.assert_allclose(case.field.gradient(POINTS)[0], [[0.1, 0.2], [0.3, -0.4]])


def test_traction_is_linear_in_the_normal(case):
    a = np.array([0.6, 0.8])
    b = np.array([-1.0, 0.0])
    np.testing.assert_allclose(
        exact_traction(case, POINTS, 2.0 * a - 3.0 * b),
        2.0 * exact_traction(case, POINTS, a) - 3.0 * exact_traction(case, POINTS, b),
        atol=1e-12,
    )


def test_exact_multiplier_is_minus_the_plus_traction(case):
    np.testing.assert_allclose(exact_multiplier(case, POINTS), -exact_traction(case, POINTS, case.normal))


def test_sweep_geometry():
    case = sweep_geometry(0.95)
    assert case.x_b == pytest.approx(1.0)
    assert case.x0 == pytest.approx(0.95 - 0.153)
    for x_a in (-0.01, 0.96):
        with pytest.raises(ValueError):
            sweep_geometry(x_a)


def test_sweep_length():
    case = sweep_length(0.2)
    assert (case.x0, case.x_a) == (0.317, 0.47)
    assert case.x_b == pytest.approx(0.67)
    for length in (0.005, 0.6):
        with pytest.raises(ValueError):
            sweep_length(length)


def test_problem_data_reproduces_the_branches(case):
    data = problem_data(case)
    np.testing.assert_allclose(data.dirichlet_minus(POINTS), case.branch(POINTS, CellClass.MINUS))
    np.testing.assert_allclose(data.jump(POINTS), np.tile(DEFAULT_JUMP, (len(POINTS), 1)))
    normals = np.tile(case.normal, (len(POINTS), 1))
    np.testing.assert_allclose(
        data.crack_traction(POINTS, normals, plus=False),
        -exact_traction(case, POINTS, normals),
    )


def test_projection_of_a_constant_multiplier_is_exact():
    affine = AffineField(gradient=((0.1, 0.0), (0.0, 0.2)))
    case = ManufacturedCase(field=affine)
    model = build_model("P1/P0", 10, case.material)
    spaces = model.discretize(case.crack).spaces
    projected = project_multiplier(case, spaces)
    nm = len(spaces.multiplier.active)
    expected = exact_multiplier(case, np.zeros((1, 2)))[0]
    np.testing.assert_allclose(projected[:nm], expected[0], atol=1e-12)
    np.testing.assert_allclose(projected[nm:], expected[1], atol=1e-12)
