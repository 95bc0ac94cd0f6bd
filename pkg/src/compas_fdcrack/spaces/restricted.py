import logging

import numpy as np
from scipy.sparse import csr_matrix

from ..exceptions import InvalidCrackError
from ..geometry import CellClass


__all__ = ["RestrictedSpace", "build_restricted"]


logger = logging.getLogger(__name__)


class RestrictedSpace(object):
    """Displacement space of one side of the interface.

    The kept DOFs are those of the uncut space whose basis function has
    support on the side, i.e. the DOFs of the side's cells and of the cut
    cells. DOFs kept by both sides are doubled.

    Parameters
    ----------
    space : :class:`compas_fdcrack.spaces.UncutSpace`
    side : :class:`compas_fdcrack.geometry.CellClass`
    dofs : array of int
        Sorted vector DOFs of the uncut space that are kept.

    Attributes
    ----------
    R : :class:`scipy.sparse.csr_matrix`
        Reduction from the uncut space, shape (count, space.count).
    E : :class:`scipy.sparse.csr_matrix`
        Extension into the uncut space, ``R.T``.
    dirichlet : array of int
        Local indices of the kept DOFs on a Dirichlet edge.
    free : array of int
        Local indices of the other kept DOFs.
    """

    def __init__(self, space, side, dofs):
        self.space = space
        self.side = CellClass(side)
        self.dofs = np.asarray(dofs, dtype=np.int64)
        n = len(self.dofs)
        self.R = csr_matrix((np.ones(n), (np.arange(n), self.dofs)), shape=(n, space.count))
        self.E = self.R.T.tocsr()
        on_boundary = np.isin(self.dofs, space.dirichlet_dofs)
        self.dirichlet = np.flatnonzero(on_boundary)
        self.free = np.flatnonzero(~on_boundary)

    def __repr__(self):
        return "RestrictedSpace({0}, count={1}, free={2})".format(self.side.name, self.count, len(self.free))

    @property
    def count(self):
        return len(self.dofs)

    def restrict(self, values):
        """Restrict an uncut DOF vector to the kept DOFs."""
        return self.R @ values

    def extend(self, values):
        """Extend a restricted DOF vector by zero to the uncut space."""
        return self.E @ values

    def interpolate(self, function):
        """Nodal interpolant of a vector field on the kept DOFs."""
        return self.restrict(self.space.interpolate(function))


def build_restricted(space, cutmesh, side):
    """Restrict the uncut space to one side of the interface.

    Parameters
    ----------
    space : :class:`compas_fdcrack.spaces.UncutSpace`
    cutmesh : :class:`compas_fdcrack.geometry.CutMesh`
    side : :class:`compas_fdcrack.geometry.CellClass`
        ``PLUS`` or ``MINUS``.

    Returns
    -------
    :class:`RestrictedSpace`

    Raises
    ------
    InvalidCrackError
        If no cell has any part on the side, i.e. ``ls1`` does not split the domain.
    """
    side = CellClass(side)
    if side == CellClass.CUT:
        raise ValueError("A restricted space lives on the PLUS or the MINUS side.")
    cells = cutmesh.cells_on(side)
    if len(cells) == 0:
        raise InvalidCrackError("The level set does not split the domain: the {} side is empty.".format(side.name))
    scalar = np.unique(space.dofmap.cell_dofs[cells])
    restricted = RestrictedSpace(space, side, space.dofmap.vectorize(scalar))
    logger.debug("Built %r", restricted)
    return restricted
