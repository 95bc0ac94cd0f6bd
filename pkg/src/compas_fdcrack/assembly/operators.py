import logging

import numpy as np
from scipy.sparse import csr_matrix

from ..geometry import interface_quadrature
from ..geometry import subdomain_quadrature
from .kernels import StiffnessCache
from .kernels import element_stiffness
from .kernels import physical_gradients
from .kernels import scatter_matrix
from .kernels import scatter_vector
from .kernels import traction_operator
from .kernels import vector_values
from .problem import ProblemData
from .system import ErrorMatrices
from .system import SaddleSystem


__all__ = [
    "InterfaceOperators",
    "volume_degree",
    "interface_degree",
    "assemble_base_stiffness",
    "assemble_subdomain_stiffness",
    "assemble_interface_operators",
    "assemble_coupling",
    "assemble_stabilized",
    "assemble_rhs",
    "assemble_error_matrices",
    "dump_triplets",
]


logger = logging.getLogger(__name__)


def volume_degree(element):
    return max(2 * element.degree, 1)


def interface_degree(element):
    return 2 * element.degree + 1


def _assemble_cells(cache, dofmap, cells):
    matrix = csr_matrix((dofmap.count, dofmap.count))
    step = 4096
    for start in range(0, len(cells), step):
        chunk = cells[start:start + step]
        dofs = dofmap.vector_dofs(chunk)
        matrix = matrix + scatter_matrix(cache.matrices(chunk), dofs, dofs, matrix.shape)
    return matrix


def assemble_base_stiffness(space, material, cache=None):
    """Stiffness matrix of the uncut space, independent of the crack.

    Parameters
    ----------
    space : :class:`compas_fdcrack.spaces.UncutSpace`
    material : :class:`compas_fdcrack.assembly.Material`
    cache : :class:`compas_fdcrack.assembly.StiffnessCache`, optional
        Element matrices to reuse.

    Returns
    -------
    :class:`scipy.sparse.csr_matrix`
        Shape (space.count, space.count), no boundary condition applied.
    """
    if cache is None:
        cache = StiffnessCache(space.mesh, space.element, material, volume_degree(space.element))
    matrix = _assemble_cells(cache, space.dofmap, np.arange(space.mesh.cell_count))
    logger.debug("Base stiffness: %d DOFs, %d non-zeros", matrix.shape[0], matrix.nnz)
    return matrix


def _side_stiffness(cutmesh, space, material, side, quadrature, cache):
    # whole cells of the side from the cache, cut cells from their sub-triangles of the side
    cells = np.flatnonzero(cutmesh.classes == side)
    matrix = _assemble_cells(cache, space.dofmap, cells)
    pieces = quadrature.select((quadrature.sides == side) & quadrature.cut)
    if len(pieces):
        grads = physical_gradients(space.element, space.mesh, pieces.cells, pieces.ref_points)
        local = element_stiffness(material, grads, pieces.weights)
        dofs = space.dofmap.vector_dofs(pieces.cells)
        matrix = matrix + scatter_matrix(local, dofs, dofs, matrix.shape)
    return matrix


def assemble_subdomain_stiffness(cutmesh, restricted, material, quadrature=None, cache=None, dirichlet=True):
    """Stiffness matrix of one side, integrated over that side only.

    Parameters
    ----------
    cutmesh : :class:`compas_fdcrack.geometry.CutMesh`
    restricted : :class:`compas_fdcrack.spaces.RestrictedSpace`
    material : :class:`compas_fdcrack.assembly.Material`
    quadrature : :class:`compas_fdcrack.geometry.SubdomainQuadrature`, optional
    cache : :class:`compas_fdcrack.assembly.StiffnessCache`, optional
    dirichlet : bool, optional
        If True, the default, rows and columns of the Dirichlet DOFs are removed.

    Returns
    -------
    :class:`scipy.sparse.csr_matrix`
    """
    space = restricted.space
    if quadrature is None:
        quadrature = subdomain_quadrature(cutmesh, volume_degree(space.element))
    if cache is None:
        cache = StiffnessCache(space.mesh, space.element, material, volume_degree(space.element))
    full = _side_stiffness(cutmesh, space, material, restricted.side, quadrature, cache)
    matrix = (restricted.R @ full @ restricted.E).tocsr()
    if dirichlet:
        free = restricted.free
        matrix = matrix[free][:, free].tocsr()
    return matrix


class InterfaceOperators(object):
    """Integrals over the crack extension on the uncut and candidate multiplier spaces.

    Attributes
    ----------
    traction : sparse matrix
        ``int (sigma(phi_i) n+) . (sigma(phi_j) n+)``, uncut by uncut.
    stress : sparse matrix
        ``int psi_i . sigma(phi_j) n+``, multiplier by uncut.
    coupling : sparse matrix
        ``int psi_i . phi_j``, multiplier by uncut.
    mass : sparse matrix
        ``int psi_i . psi_j``, multiplier by multiplier.
    """

    def __init__(self, traction, stress, coupling, mass):
        self.traction = traction
        self.stress = stress
        self.coupling = coupling
        self.mass = mass


def assemble_interface_operators(interface, spaces, material):
    """Assemble the crack extension integrals shared by the coupling, stabilization and error terms.

    Parameters
    ----------
    interface : :class:`compas_fdcrack.geometry.InterfaceQuadrature`
        Only the points tagged ``GAMMA_0`` are used.
    spaces : :class:`compas_fdcrack.spaces.FdSpaces`
    material : :class:`compas_fdcrack.assembly.Material`

    Returns
    -------
    :class:`InterfaceOperators`
    """
    q = interface.gamma0
    uncut = spaces.uncut
    multiplier = spaces.multiplier
    nu = uncut.count
    nl = multiplier.dofmap.count
    w = q.weights

    values = uncut.element.values(q.ref_points)
    grads = physical_gradients(uncut.element, uncut.mesh, q.cells, q.ref_points)
    phi = vector_values(values)
    sigma = traction_operator(material, grads, q.normals)
    psi = vector_values(multiplier.element.values(q.ref_points))

    udofs = uncut.dofmap.vector_dofs(q.cells)
    ldofs = multiplier.dofmap.vector_dofs(q.cells)

    traction = scatter_matrix(np.einsum("m,mai,mbi->mab", w, sigma, sigma), udofs, udofs, (nu, nu))
    stress = scatter_matrix(np.einsum("m,mai,mbi->mab", w, psi, sigma), ldofs, udofs, (nl, nu))
    coupling = scatter_matrix(np.einsum("m,mai,mbi->mab", w, psi, phi), ldofs, udofs, (nl, nu))
    mass = scatter_matrix(np.einsum("m,mai,mbi->mab", w, psi, psi), ldofs, ldofs, (nl, nl))
    return InterfaceOperators(traction, stress, coupling, mass)


def assemble_coupling(interface, plus, minus, multiplier, operators=None):
    """Unstabilized coupling blocks ``B0+`` and ``B0-``.

    Parameters
    ----------
    interface : :class:`compas_fdcrack.geometry.InterfaceQuadrature`
    plus : :class:`compas_fdcrack.spaces.RestrictedSpace`
    minus : :class:`compas_fdcrack.spaces.RestrictedSpace`
    multiplier : :class:`compas_fdcrack.spaces.MultiplierSpace`
    operators : :class:`InterfaceOperators`, optional

    Returns
    -------
    tuple of :class:`scipy.sparse.csr_matrix`
        Shapes (multiplier.count, plus.count) and (multiplier.count, minus.count).
    """
    if operators is None:
        q = interface.gamma0
        uncut = plus.space
        values = uncut.element.values(q.ref_points)
        phi = vector_values(values)
        psi = vector_values(multiplier.element.values(q.ref_points))
        udofs = uncut.dofmap.vector_dofs(q.cells)
        ldofs = multiplier.dofmap.vector_dofs(q.cells)
        local = np.einsum("m,mai,mbi->mab", q.weights, psi, phi)
        coupling = scatter_matrix(local, ldofs, udofs, (multiplier.dofmap.count, uncut.count))
    else:
        coupling = operators.coupling
    P = multiplier.P
    return (P @ coupling @ plus.E).tocsr(), (P @ coupling @ minus.E).tocsr()


def assemble_rhs(data, cutmesh, spaces, quadrature=None, interface=None):
    """Load vectors of both sides and the jump data vector.

    Parameters
    ----------
    data : :class:`compas_fdcrack.assembly.ProblemData`
    cutmesh : :class:`compas_fdcrack.geometry.CutMesh`
    spaces : :class:`compas_fdcrack.spaces.FdSpaces`
    quadrature : :class:`compas_fdcrack.geometry.SubdomainQuadrature`, optional
    interface : :class:`compas_fdcrack.geometry.InterfaceQuadrature`, optional

    Returns
    -------
    tuple of arrays
        ``F+`` and ``F-`` on the full restricted spaces, and ``G`` on the active multipliers.
    """
    uncut = spaces.uncut
    element = uncut.element
    if quadrature is None:
        quadrature = subdomain_quadrature(cutmesh, volume_degree(element))
    if interface is None:
        interface = interface_quadrature(cutmesh, interface_degree(element))

    loads = []
    crack = interface.gammat
    for restricted, plus in ((spaces.plus, True), (spaces.minus, False)):
        side = quadrature.side(restricted.side)
        values = element.values(side.ref_points)
        force = np.asarray(data.body_force(side.points.reshape(-1, 2)), dtype=float).reshape(side.points.shape)
        local = np.einsum("mq,mqai,mqi->ma", side.weights, vector_values(values), force)
        load = scatter_vector(local, uncut.dofmap.vector_dofs(side.cells), uncut.count)
        if len(crack):
            traction = data.crack_traction(crack.points, crack.normals, plus=plus)
            phi = vector_values(element.values(crack.ref_points))
            local = np.einsum("m,mai,mi->ma", crack.weights, phi, traction)
            load = load + scatter_vector(local, uncut.dofmap.vector_dofs(crack.cells), uncut.count)
        loads.append(restricted.restrict(load))

    multiplier = spaces.multiplier
    extension = interface.gamma0
    psi = vector_values(multiplier.element.values(extension.ref_points))
    jump = np.asarray(data.jump(extension.points), dtype=float)
    local = np.einsum("m,mai,mi->ma", extension.weights, psi, jump)
    G = multiplier.P @ scatter_vector(local, multiplier.dofmap.vector_dofs(extension.cells), multiplier.dofmap.count)
    return loads[0], loads[1], G


def assemble_error_matrices(interface, spaces, material, operators=None):
    """Matrices of the multiplier error metric and of the traction compatibility.

    Parameters
    ----------
    interface : :class:`compas_fdcrack.geometry.InterfaceQuadrature`
    spaces : :class:`compas_fdcrack.spaces.FdSpaces`
    material : :class:`compas_fdcrack.assembly.Material`
    operators : :class:`InterfaceOperators`, optional

    Returns
    -------
    :class:`compas_fdcrack.assembly.ErrorMatrices`
    """
    if operators is None:
        operators = assemble_interface_operators(interface, spaces, material)
    plus = spaces.plus
    minus = spaces.minus
    P = spaces.multiplier.P
    N = operators.traction
    S = operators.stress
    return ErrorMatrices(
        (plus.R @ N @ plus.E).tocsr(),
        (minus.R @ N @ minus.E).tocsr(),
        (plus.R @ S.T @ P.T).tocsr(),
        -(minus.R @ S.T @ P.T).tocsr(),
        (P @ operators.mass @ P.T).tocsr(),
        -(plus.R @ N @ minus.E).tocsr(),
    )


def assemble_stabilized(
    cutmesh,
    spaces,
    material,
    gamma0,
    data=None,
    quadrature=None,
    interface=None,
    operators=None,
    stiffness=None,
    cache=None,
):
    """Assemble the stabilized block system, Dirichlet DOFs eliminated.

    With ``gamma = gamma0 * h``::

        A+ = A0+ - gamma (E+)^T N E+      B+ = P (B0 - gamma S) E+
        A- = A0- - gamma (E-)^T N E-      B- = P (B0 + gamma S) E-
        C  = 2 gamma P M P^T

    where ``N``, ``S``, ``B0`` and ``M`` are the crack extension integrals of
    :class:`InterfaceOperators`, built with the plus normal.

    Parameters
    ----------
    cutmesh : :class:`compas_fdcrack.geometry.CutMesh`
    spaces : :class:`compas_fdcrack.spaces.FdSpaces`
    material : :class:`compas_fdcrack.assembly.Material`
    gamma0 : float
        Mesh-independent stabilization parameter, zero for the unstabilized system.
    data : :class:`compas_fdcrack.assembly.ProblemData`, optional
        Default is a homogeneous problem.
    quadrature : :class:`compas_fdcrack.geometry.SubdomainQuadrature`, optional
    interface : :class:`compas_fdcrack.geometry.InterfaceQuadrature`, optional
    operators : :class:`InterfaceOperators`, optional
    stiffness : tuple of sparse matrices, optional
        Full restricted stiffness matrices ``(A0+, A0-)`` to reuse.
    cache : :class:`compas_fdcrack.assembly.StiffnessCache`, optional

    Returns
    -------
    :class:`compas_fdcrack.assembly.SaddleSystem`

    Raises
    ------
    ValueError
        If ``gamma0`` is negative.
    """
    if gamma0 < 0:
        raise ValueError("The stabilization parameter should not be negative: {}".format(gamma0))
    element = spaces.uncut.element
    if data is None:
        data = ProblemData()
    if quadrature is None:
        quadrature = subdomain_quadrature(cutmesh, volume_degree(element))
    if interface is None:
        interface = interface_quadrature(cutmesh, interface_degree(element))
    if operators is None:
        operators = assemble_interface_operators(interface, spaces, material)
    if stiffness is None:
        stiffness = tuple(
            assemble_subdomain_stiffness(cutmesh, restricted, material, quadrature, cache, dirichlet=False)
            for restricted in (spaces.plus, spaces.minus)
        )

    gamma = float(gamma0) * cutmesh.mesh.h
    plus = spaces.plus
    minus = spaces.minus
    P = spaces.multiplier.P
    N = operators.traction
    S = operators.stress
    B0 = operators.coupling

    A_plus = stiffness[0] - gamma * (plus.R @ N @ plus.E)
    A_minus = stiffness[1] - gamma * (minus.R @ N @ minus.E)
    B_plus = P @ (B0 - gamma * S) @ plus.E
    B_minus = P @ (B0 + gamma * S) @ minus.E
    mass = (P @ operators.mass @ P.T).tocsr()
    C = 2.0 * gamma * mass

    F_plus, F_minus, G = assemble_rhs(data, cutmesh, spaces, quadrature, interface)
    lifts = (plus.interpolate(data.dirichlet_plus), minus.interpolate(data.dirichlet_minus))
    errors = assemble_error_matrices(interface, spaces, material, operators)

    system = SaddleSystem.from_blocks(
        plus,
        minus,
        spaces.multiplier,
        (A_plus, A_minus, B_plus, B_minus, C),
        (F_plus, F_minus, G),
        gamma,
        lifts,
        mass,
        errors,
    )
    logger.info("Assembled %r", system)
    return system


def dump_triplets(matrix, path):
    """Write a sparse matrix as ``row col value`` lines (0-based)."""
    coo = matrix.tocoo()
    order = np.lexsort((coo.col, coo.row))
    with open(path, "w", encoding="utf-8") as f:
        for k in order:
            f.write("{} {} {!r}\n".format(int(coo.row[k]), int(coo.col[k]), float(coo.data[k])))
