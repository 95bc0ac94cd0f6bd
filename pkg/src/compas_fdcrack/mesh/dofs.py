import logging

import numpy as np


__all__ = ["DofMap", "global_dof_map"]


logger = logging.getLogger(__name__)


class DofMap(object):
    """Global numbering of the degrees of freedom of a vector field.

    Scalar DOFs are numbered vertices first, then edges, then cell interiors.
    Vector DOFs are component-blocked: the scalar DOF ``s`` of component ``c``
    has global index ``c * scalar_count + s``.
    The local ordering of a cell follows the same blocking: all shape
    functions of component 0, then all shape functions of component 1.

    Parameters
    ----------
    mesh : :class:`compas_fdcrack.mesh.BackgroundMesh`
    element : :class:`compas_fdcrack.mesh.ElementType`
    components : int
    cell_dofs : array of int, shape (nc, ndofs)
        Scalar DOFs of each cell in local node order.
    nodes : array of shape (scalar_count, 2)
        Physical location of each scalar DOF.
    """

    def __init__(self, mesh, element, components, cell_dofs, nodes):
        self.mesh = mesh
        self.element = element
        self.components = components
        self.cell_dofs = cell_dofs
        self.nodes = nodes

    def __repr__(self):
        return "DofMap({0}, components={1}, count={2})".format(self.element.name, self.components, self.count)

    @property
    def scalar_count(self):
        return len(self.nodes)

    @property
    def count(self):
        return self.components * self.scalar_count

    def vector_dofs(self, cells=None):
        """Component-blocked vector DOFs of cells.

        Parameters
        ----------
        cells : array of int, optional
            Default is all cells.

        Returns
        -------
        array of int, shape (m, components * ndofs)
        """
        scalar = self.cell_dofs if cells is None else self.cell_dofs[cells]
        return np.concatenate([c * self.scalar_count + scalar for c in range(self.components)], axis=1)

    def vectorize(self, scalar_dofs):
        """Expand scalar DOF indices to the blocked vector indices of all components."""
        scalar_dofs = np.asarray(scalar_dofs, dtype=np.int64)
        return np.concatenate([c * self.scalar_count + scalar_dofs for c in range(self.components)])

    def boundary_dofs(self, edges=("bottom", "right", "top", "left")):
        """Scalar DOFs whose node lies on the selected edges of the domain."""
        mask = self.mesh.domain.boundary_mask(self.nodes, edges=edges)
        return np.flatnonzero(mask)


def global_dof_map(mesh, element, components=2):
    """Number the DOFs of a Lagrange field on the background mesh.

    Parameters
    ----------
    mesh : :class:`compas_fdcrack.mesh.BackgroundMesh`
    element : :class:`compas_fdcrack.mesh.ElementType`
    components : int, optional
        Default is ``2``.

    Returns
    -------
    :class:`DofMap`

    Examples
    --------
    >>> from compas_fdcrack.mesh import RectDomain, ElementType, build_mesh
    >>> mesh = build_mesh(RectDomain(), 1, 1)
    >>> global_dof_map(mesh, ElementType(2), 2).count
    18

    """
    cells = mesh.cells
    nc = len(cells)
    k = element.degree

    if not element.continuous:
        cell_dofs = np.arange(nc, dtype=np.int64)[:, None]
        nodes = mesh.to_physical(np.arange(nc), np.tile(element.nodes, (nc, 1, 1)))[:, 0, :]
        dofmap = DofMap(mesh, element, components, cell_dofs, nodes)
        logger.debug("Numbered %s: %d scalar DOFs", element.name, dofmap.scalar_count)
        return dofmap

    nv = mesh.vertex_count
    parts = [cells]
    node_parts = [mesh.vertices]
    offset = nv

    if k > 1:
        ne = k - 1
        local_edges = np.array([[0, 1], [1, 2], [2, 0]])
        pairs = cells[:, local_edges]
        ordered = np.sort(pairs, axis=2).reshape(-1, 2)
        unique, inverse = np.unique(ordered, axis=0, return_inverse=True)
        inverse = inverse.reshape(nc, 3)
        forward = pairs[:, :, 0] < pairs[:, :, 1]
        steps = np.arange(ne)
        edge_dofs = []
        for e in range(3):
            first = offset + inverse[:, e, None] * ne
            along = np.where(forward[:, e, None], steps[None, :], ne - 1 - steps[None, :])
            edge_dofs.append(first + along)
        parts.append(np.concatenate(edge_dofs, axis=1))
        a = mesh.vertices[unique[:, 0]]
        b = mesh.vertices[unique[:, 1]]
        t = (steps + 1.0) / k
        edge_nodes = a[:, None, :] + t[None, :, None] * (b - a)[:, None, :]
        node_parts.append(edge_nodes.reshape(-1, 2))
        offset += len(unique) * ne

    ni = element.interior_nodes
    if ni > 0:
        interior = offset + np.arange(nc * ni, dtype=np.int64).reshape(nc, ni)
        parts.append(interior)
        ref = element.nodes[-ni:]
        node_parts.append(mesh.to_physical(np.arange(nc), np.tile(ref, (nc, 1, 1))).reshape(-1, 2))

    cell_dofs = np.concatenate(parts, axis=1).astype(np.int64)
    nodes = np.concatenate(node_parts, axis=0)
    dofmap = DofMap(mesh, element, components, cell_dofs, nodes)
    logger.debug("Numbered %s: %d scalar DOFs", element.name, dofmap.scalar_count)
    return dofmap
