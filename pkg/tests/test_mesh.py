import numpy as np
import pytest
from hypothesis import given
from hypothesis import settings
from hypothesis import strategies as st

from compas_fdcrack.exceptions import ElementError
from compas_fdcrack.mesh import ElementType
from compas_fdcrack.mesh import RectDomain
from compas_fdcrack.mesh import build_mesh
from compas_fdcrack.mesh import dump_mesh
from compas_fdcrack.mesh import global_dof_map
from compas_fdcrack.mesh import parse_couple
from compas_fdcrack.mesh import reference_basis


unit = st.floats(min_value=0.0, max_value=1.0, allow_nan=False)


def test_mesh_counts(mesh10):
    assert mesh10.cell_count == 200
    assert mesh10.vertex_count == 121
    assert mesh10.h == pytest.approx(np.sqrt(2) / 10)


def test_mesh_cells_are_counterclockwise_and_fill_the_domain(mesh10):
    assert np.all(mesh10.determinants > 0)
    assert mesh10.areas.sum() == pytest.approx(1.0, abs=1e-12)


def test_mesh_diagonal_runs_from_lower_left_to_upper_right():
    mesh = build_mesh(RectDomain(), 1, 1)
    assert mesh.cells.tolist() == [[0, 1, 3], [0, 3, 2]]


def test_mesh_on_rectangle():
    mesh = build_mesh(RectDomain(0.0, 100.0, 0.0, 50.0), 25, 12)
    assert mesh.vertex_count == 26 * 13
    assert mesh.areas.sum() == pytest.approx(5000.0)


@pytest.mark.parametrize("nx, ny", [(0, 1), (1, 0), (-2, 3)])
def test_mesh_rejects_empty_grid(nx, ny):
    with pytest.raises(ValueError):
        build_mesh(RectDomain(), nx, ny)


def test_domain_rejects_empty_rectangle():
    with pytest.raises(ValueError):
        RectDomain(1.0, 0.0, 0.0, 1.0)


def test_reference_and_physical_maps_are_inverse(mesh10):
    cells = np.arange(mesh10.cell_count)
    ref = np.tile([[0.2, 0.3], [0.5, 0.1]], (len(cells), 1, 1))
    back = mesh10.to_reference(cells, mesh10.to_physical(cells, ref))
    np.testing.assert_allclose(back, ref, atol=1e-12)


@pytest.mark.parametrize("degree", [0, 1, 2, 3])
def test_shape_functions_are_nodal(degree):
    element = ElementType(degree)
    np.testing.assert_allclose(element.values(element.nodes), np.eye(element.ndofs), atol=1e-12)


@pytest.mark.parametrize("degree", [0, 1, 2, 3])
@settings(max_examples=25, deadline=None)
@given(a=unit, b=unit)
def test_partition_of_unity(degree, a, b):
    point = np.array([a, b * (1.0 - a)])
    element = ElementType(degree)
    assert element.values(point).sum() == pytest.approx(1.0, abs=1e-12)
    np.testing.assert_allclose(element.gradients(point).sum(axis=0), 0.0, atol=1e-10)


def test_shape_functions_reproduce_linear_fields():
    element = ElementType(3)
    field = 2.0 + 3.0 * element.nodes[:, 0] - element.nodes[:, 1]
    point = np.array([0.21, 0.37])
    assert element.values(point) @ field == pytest.approx(2.0 + 0.63 - 0.37)
    np.testing.assert_allclose(field @ element.gradients(point), [3.0, -1.0], atol=1e-12)


def test_reference_basis_rejects_bad_barycentric():
    with pytest.raises(ValueError):
        reference_basis(ElementType(1), [0.5, 0.6, 0.1])
    values, _ = reference_basis(ElementType(1), [0.2, 0.3, 0.5])
    np.testing.assert_allclose(values, [0.2, 0.3, 0.5], atol=1e-12)


@pytest.mark.parametrize("degree", [4, -1])
def test_unsupported_degree(degree):
    with pytest.raises(ElementError):
        ElementType(degree)


def test_parse_couple():
    assert parse_couple("P2/P0") == (ElementType(2), ElementType(0))
    assert parse_couple(" p3/p1 ") == (ElementType(3), ElementType(1))


@pytest.mark.parametrize("token", ["P1/P2", "P0/P0", "Q1/P0", "P2", "P2/P0/P1", "P5/P0"])
def test_parse_couple_rejects(token):
    with pytest.raises(ElementError):
        parse_couple(token)


@pytest.mark.parametrize("degree, count", [(0, 200), (1, 121), (2, 441), (3, 961)])
def test_scalar_dof_counts(mesh10, degree, count):
    dofmap = global_dof_map(mesh10, ElementType(degree), components=2)
    assert dofmap.scalar_count == count
    assert dofmap.count == 2 * count


def test_shared_edge_dofs_agree(mesh10):
    dofmap = global_dof_map(mesh10, ElementType(3))
    points = mesh10.to_physical(np.arange(mesh10.cell_count), np.tile(ElementType(3).nodes, (mesh10.cell_count, 1, 1)))
    np.testing.assert_allclose(dofmap.nodes[dofmap.cell_dofs], points, atol=1e-12)


def test_vector_dofs_are_component_blocked(mesh10):
    dofmap = global_dof_map(mesh10, ElementType(1))
    dofs = dofmap.vector_dofs([0])
    assert dofs.tolist() == [[0, 1, 12, 121, 122, 133]]


def test_boundary_dofs(mesh10):
    dofmap = global_dof_map(mesh10, ElementType(2))
    assert len(dofmap.boundary_dofs()) == 4 * 20
    assert len(dofmap.boundary_dofs(edges=("bottom",))) == 21


def test_dump_mesh(tmp_path, domain):
    path = tmp_path / "mesh.txt"
    dump_mesh(build_mesh(domain, 2, 1), str(path))
    lines = path.read_text().splitlines()
    assert len(lines) == 6 + 4
    assert lines[0] == "v 0.0 0.0"
    assert lines[-1].startswith("c ")
