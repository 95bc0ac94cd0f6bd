import logging

import numpy as np

from ..mesh import global_dof_map


__all__ = ["UncutSpace", "build_uncut_space"]


logger = logging.getLogger(__name__)


ALL_EDGES = ("bottom", "right", "top", "left")


class UncutSpace(object):
    """Vector Lagrange space on the background mesh, ignoring the crack.

    Parameters
    ----------
    mesh : :class:`compas_fdcrack.mesh.BackgroundMesh`
    element : :class:`compas_fdcrack.mesh.ElementType`
    dofmap : :class:`compas_fdcrack.mesh.DofMap`
    dirichlet_edges : tuple of str
        Edges of the domain carrying a Dirichlet condition.

    Attributes
    ----------
    dirichlet_dofs : array of int
        Vector DOFs whose node lies on a Dirichlet edge.
    """

    def __init__(self, mesh, element, dofmap, dirichlet_edges=ALL_EDGES):
        self.mesh = mesh
        self.element = element
        self.dofmap = dofmap
        self.dirichlet_edges = tuple(dirichlet_edges)
        if self.dirichlet_edges:
            self.dirichlet_dofs = dofmap.vectorize(dofmap.boundary_dofs(self.dirichlet_edges))
        else:
            self.dirichlet_dofs = np.zeros(0, dtype=np.int64)

    def __repr__(self):
        return "UncutSpace({0}, count={1}, dirichlet={2})".format(self.element.name, self.count, len(self.dirichlet_dofs))

    @property
    def count(self):
        return self.dofmap.count

    @property
    def nodes(self):
        return self.dofmap.nodes

    def interpolate(self, function):
        """Nodal interpolant of a vector field.

        Parameters
        ----------
        function : callable
            Maps points of shape (n, 2) to values of shape (n, 2).

        Returns
        -------
        array of shape (count,)
            Component-blocked DOF vector.
        """
        values = np.asarray(function(self.nodes), dtype=float)
        return np.concatenate([values[:, c] for c in range(self.dofmap.components)])


def build_uncut_space(mesh, element, dirichlet_edges=ALL_EDGES):
    """Build the uncut displacement space of a mesh.

    Parameters
    ----------
    mesh : :class:`compas_fdcrack.mesh.BackgroundMesh`
    element : :class:`compas_fdcrack.mesh.ElementType`
    dirichlet_edges : sequence of str, optional
        Default is the whole boundary.

    Returns
    -------
    :class:`UncutSpace`

    Examples
    --------
    >>> from compas_fdcrack.mesh import RectDomain, ElementType, build_mesh
    >>> space = build_uncut_space(build_mesh(RectDomain(), 2, 2), ElementType(1))
    >>> space.count, len(space.dirichlet_dofs)
    (18, 16)

    """
    dofmap = global_dof_map(mesh, element, components=2)
    space = UncutSpace(mesh, element, dofmap, dirichlet_edges)
    logger.debug("Built %r", space)
    return space
