import numpy as np
import pytest
from scipy.sparse import csr_matrix
from scipy.sparse.linalg import spsolve

from compas_fdcrack.assembly import FictitiousDomainModel
from compas_fdcrack.assembly import Material
from compas_fdcrack.assembly import ProblemData
from compas_fdcrack.assembly import assemble_coupling
from compas_fdcrack.assembly import assemble_rhs
from compas_fdcrack.assembly import dump_triplets
from compas_fdcrack.assembly import physical_gradients
from compas_fdcrack.assembly import traction_operator
from compas_fdcrack.geometry import CellClass
from compas_fdcrack.mesh import RectDomain
from compas_fdcrack.mesh import build_mesh
from compas_fdcrack.mesh import parse_couple
from compas_fdcrack.postproc import fit_rate

from conftest import build_model


# ==============================================================================
# Material
# ==============================================================================


def test_material_from_young_and_poisson():
    material = Material.from_young_poisson(5000.0, 0.25)
    assert material.lambda_l == pytest.approx(2000.0)
    assert material.mu_l == pytest.approx(2000.0)
    assert material.young == pytest.approx(5000.0)
    assert material.poisson == pytest.approx(0.25)


@pytest.mark.parametrize("lambda_l, mu_l", [(1.0, 0.0), (1.0, -1.0), (-0.5, 1.0)])
def test_material_rejects_invalid_coefficients(lambda_l, mu_l):
    with pytest.raises(ValueError):
        Material(lambda_l, mu_l)


@pytest.mark.parametrize("young, poisson", [(0.0, 0.3), (1.0, 0.5), (1.0, -0.1)])
def test_material_rejects_invalid_moduli(young, poisson):
    with pytest.raises(ValueError):
        Material.from_young_poisson(young, poisson)


def test_material_stress_is_symmetric():
    material = Material(2.0, 3.0)
    gradient = np.array([[1.0, 2.0], [0.0, -1.0]])
    sigma = material.stress(gradient)
    np.testing.assert_allclose(sigma, [[6.0, 6.0], [6.0, -6.0]])
    np.testing.assert_allclose(material.traction(gradient, [0.0, 1.0]), [6.0, -6.0])


def test_traction_operator_matches_the_stress():
    model = build_model("P1/P0", 4, Material(2.0, 3.0))
    gradient = np.array([[0.3, -0.2], [0.5, 0.1]])
    values = model.uncut.interpolate(lambda points: points @ gradient.T)
    cells = np.array([0, 5])
    normals = np.array([[0.6, 0.8], [1.0, 0.0]])
    grads = physical_gradients(model.element_u, model.mesh, cells, np.full((2, 2), 1.0 / 3.0))
    T = traction_operator(model.material, grads, normals)
    tractions = np.einsum("mai,ma->mi", T, values[model.uncut.dofmap.vector_dofs(cells)])
    np.testing.assert_allclose(tractions, model.material.traction(gradient, normals), atol=1e-12)


# ==============================================================================
# Stiffness
# ==============================================================================


@pytest.mark.parametrize("couple", ["P1/P0", "P2/P1"])
def test_rigid_motions_are_in_the_kernel_of_the_base_stiffness(couple):
    model = build_model(couple, 6)
    K = model.base_stiffness
    for field in (
        lambda p: np.column_stack([np.ones(len(p)), np.zeros(len(p))]),
        lambda p: np.column_stack([np.zeros(len(p)), np.ones(len(p))]),
        lambda p: np.column_stack([-p[:, 1], p[:, 0]]),
    ):
        np.testing.assert_allclose(K @ model.uncut.interpolate(field), 0.0, atol=1e-10)
    np.testing.assert_allclose((K - K.T).toarray(), 0.0, atol=1e-12)


def test_side_stiffnesses_add_up_to_the_base_stiffness(crack):
    model = build_model("P2/P0", 10)
    discretization = model.discretize(crack)
    spaces = discretization.spaces
    total = sum(
        restricted.E @ stiffness @ restricted.R
        for restricted, stiffness in zip((spaces.plus, spaces.minus), discretization.stiffness)
    )
    np.testing.assert_allclose((total - model.base_stiffness).toarray(), 0.0, atol=1e-10)


def p1_element_stiffness(points, material):
    coefficients = np.linalg.inv(np.column_stack([np.ones(3), points]))
    grads = coefficients[1:].T
    area = 0.5 * abs(np.linalg.det(np.column_stack([np.ones(3), points])))
    K = np.zeros((2, 3, 2, 3))
    for i in range(2):
        for j in range(2):
            K[i, :, j, :] = material.lambda_l * np.outer(grads[:, i], grads[:, j])
            K[i, :, j, :] += material.mu_l * np.outer(grads[:, j], grads[:, i])
            if i == j:
                K[i, :, j, :] += material.mu_l * grads @ grads.T
    return area * K


def test_p1_stiffness_on_a_single_square():
    material = Material(2.0, 3.0)
    mesh = build_mesh(RectDomain(), 1, 1)
    element_u, element_lambda = parse_couple("P1/P0")
    model = FictitiousDomainModel(mesh, element_u, element_lambda, material)
    nv = mesh.vertex_count
    expected = np.zeros((2, nv, 2, nv))
    for cell in mesh.cells:
        K = p1_element_stiffness(mesh.vertices[cell], material)
        expected[np.ix_(range(2), cell, range(2), cell)] += K
    np.testing.assert_allclose(model.base_stiffness.toarray(), expected.reshape(2 * nv, 2 * nv), atol=1e-12)


# ==============================================================================
# Block system
# ==============================================================================


@pytest.mark.parametrize("gamma0", [0.0, 0.03])
def test_saddle_matrix_is_symmetric(reference_run, gamma0):
    _, _, _, system, _ = reference_run(gamma0=gamma0)
    matrix = system.matrix()
    assert matrix.shape[0] == sum(system.sizes)
    np.testing.assert_allclose((matrix - matrix.T).toarray(), 0.0, atol=1e-12)


def test_unstabilized_displacement_blocks_are_positive_definite(reference_run):
    _, _, _, system, _ = reference_run(gamma0=0.0)
    for block in (system.A_plus, system.A_minus):
        np.linalg.cholesky(block.toarray())
    assert abs(system.C).sum() == 0


def test_stabilization_weight(reference_run):
    _, model, _, system, _ = reference_run(gamma0=0.03)
    assert system.gamma == pytest.approx(0.03 * model.mesh.h)
    np.testing.assert_allclose(system.C.toarray(), 2.0 * system.gamma * system.mass.toarray(), atol=1e-14)


def test_negative_stabilization_is_rejected(crack):
    model = build_model("P1/P0", 4)
    with pytest.raises(ValueError):
        model.assemble(model.discretize(crack), -0.1)


def test_stabilization_block_is_linear_in_h(reference_run):
    totals = []
    for n in (10, 20):
        _, model, discretization, system, _ = reference_run(n=n, gamma0=0.03, solver=lambda system: None)
        extension = discretization.interface.gamma0.length()
        assert system.C.sum() == pytest.approx(2.0 * 0.03 * model.mesh.h * extension, rel=1e-6)
        totals.append(system.C.sum())
    assert totals[1] / totals[0] == pytest.approx(0.5, rel=1e-6)


def test_interpolated_jump_reproduces_the_jump_data_under_refinement(crack):
    def jump(p):
        return np.column_stack([np.sin(3.0 * p[:, 0]), np.cos(2.0 * p[:, 1]) * p[:, 0]])

    def zero(p):
        return np.zeros((len(p), 2))

    h = []
    residuals = []
    for n in (10, 20, 40):
        model = build_model("P1/P0", n)
        discretization = model.discretize(crack)
        spaces = discretization.spaces
        B_plus, B_minus = assemble_coupling(discretization.interface, spaces.plus, spaces.minus, spaces.multiplier)
        _, _, G = assemble_rhs(ProblemData(jump=jump), discretization.cutmesh, spaces)
        system = model.assemble(discretization, 0.0, ProblemData(jump=jump))
        r = B_plus @ spaces.plus.interpolate(jump) - B_minus @ spaces.minus.interpolate(zero) - G
        h.append(model.mesh.h)
        residuals.append(np.sqrt(r @ spsolve(system.mass.tocsc(), r)))
    assert residuals[0] > 0
    assert residuals[2] < residuals[1] < residuals[0]
    assert fit_rate(h, residuals) >= 1.0


def test_rigid_translations_satisfy_the_gluing(crack):
    model = build_model("P1/P0", 10)
    discretization = model.discretize(crack)
    spaces = discretization.spaces
    B_plus, B_minus = assemble_coupling(discretization.interface, spaces.plus, spaces.minus, spaces.multiplier)

    def shift(p):
        return np.column_stack([np.full(len(p), 0.4), np.full(len(p), -0.3)])

    u_plus = spaces.plus.interpolate(shift)
    u_minus = spaces.minus.interpolate(shift)
    np.testing.assert_allclose(B_plus @ u_plus - B_minus @ u_minus, 0.0, atol=1e-14)
    extension = discretization.interface.gamma0.length()
    assert (B_plus @ u_plus).sum() == pytest.approx(0.1 * extension)


def test_pressure_loads_have_no_resultant(crack):
    model = build_model("P2/P0", 10)
    discretization = model.discretize(crack)
    spaces = discretization.spaces
    F_plus, F_minus, G = assemble_rhs(ProblemData(pressure=5.0), discretization.cutmesh, spaces)
    plus = spaces.plus.extend(F_plus)
    minus = spaces.minus.extend(F_minus)
    np.testing.assert_allclose(plus + minus, 0.0, atol=1e-12)
    ns = spaces.uncut.dofmap.scalar_count
    assert plus[:ns].sum() == pytest.approx(0.5)
    assert plus[ns:].sum() == pytest.approx(-0.25)
    np.testing.assert_allclose(G, 0.0)


def test_dirichlet_lifts_carry_the_boundary_values(reference_run):
    case, _, _, system, _ = reference_run()
    n_plus, n_minus, _ = system.sizes
    full_plus, _ = system.expand(np.zeros(n_plus), np.zeros(n_minus))
    ns = system.plus.space.dofmap.scalar_count
    local = system.plus.dirichlet
    dofs = system.plus.dofs[local]
    x = dofs < ns
    expected = case.branch(system.plus.space.nodes[dofs[x]], CellClass.PLUS)
    np.testing.assert_allclose(full_plus[local[x]], expected[:, 0])
    np.testing.assert_allclose(full_plus[system.plus.free], 0.0)


def test_dump_triplets(tmp_path):
    path = tmp_path / "matrix.txt"
    dump_triplets(csr_matrix(np.array([[0.0, 2.5], [1.0, 0.0]])), str(path))
    assert path.read_text().splitlines() == ["0 1 2.5", "1 0 1.0"]
