import logging

import numpy as np
from scipy.linalg import solve_triangular
from scipy.sparse import coo_matrix
from scipy.sparse import csr_matrix

from ..exceptions import InvalidCrackError
from ..mesh import global_dof_map


__all__ = ["MultiplierSpace", "build_multiplier", "EPS_RANK"]


logger = logging.getLogger(__name__)


EPS_RANK = 1e-8


class MultiplierSpace(object):
    """Traces on the crack extension of a Lagrange space of the background mesh.

    Parameters
    ----------
    element : :class:`compas_fdcrack.mesh.ElementType`
    dofmap : :class:`compas_fdcrack.mesh.DofMap`
        Numbering of the candidate space on the whole mesh.
    active : array of int
        Scalar DOFs of ``dofmap`` whose traces are kept.
    quadrature : :class:`compas_fdcrack.geometry.InterfaceQuadrature`
        The points of the crack extension.
    values : array of shape (m, nb)
        Scalar shape function values at the quadrature points.

    Attributes
    ----------
    dofs : array of int
        Active vector DOFs of ``dofmap``, both components sharing the scalar pattern.
    P : :class:`scipy.sparse.csr_matrix`
        Selection of the active DOFs, shape (count, dofmap.count).
    """

    def __init__(self, element, dofmap, active, quadrature, values):
        self.element = element
        self.dofmap = dofmap
        self.active = np.asarray(active, dtype=np.int64)
        self.quadrature = quadrature
        self.values = values
        self.dofs = dofmap.vectorize(self.active)
        n = len(self.dofs)
        self.P = csr_matrix((np.ones(n), (np.arange(n), self.dofs)), shape=(n, dofmap.count))

    def __repr__(self):
        return "MultiplierSpace({0}, count={1})".format(self.element.name, self.count)

    @property
    def count(self):
        return len(self.dofs)

    def trace_mass(self):
        """Scalar mass matrix of all candidate traces on the crack extension."""
        return _scalar_mass(self.dofmap, self.quadrature, self.values)


def _scalar_mass(dofmap, quadrature, values):
    dofs = dofmap.cell_dofs[quadrature.cells]
    local = quadrature.weights[:, None, None] * values[:, :, None] * values[:, None, :]
    rows = np.repeat(dofs[:, :, None], dofs.shape[1], axis=2)
    cols = np.repeat(dofs[:, None, :], dofs.shape[1], axis=1)
    n = dofmap.scalar_count
    return coo_matrix((local.ravel(), (rows.ravel(), cols.ravel())), shape=(n, n)).tocsr()


def _independent(gram, eps_rank):
    """Indices of a maximal independent set of columns of a Gram matrix, scanned in order.

    An incremental Cholesky factorization keeps a column when its squared
    pivot exceeds ``eps_rank`` times the largest diagonal entry. A squared
    pivot never exceeds the diagonal entry of its column, so every kept
    pivot also exceeds ``eps_rank`` times the largest pivot of the kept set.
    """
    n = gram.shape[0]
    if n == 0:
        return []
    threshold = eps_rank * gram.diagonal().max()
    L = np.zeros((n, n))
    kept = []
    for j in range(n):
        column = gram[kept, j]
        if kept:
            k = len(kept)
            row = solve_triangular(L[:k, :k], column, lower=True)
            pivot = gram[j, j] - row @ row
        else:
            row = column
            pivot = gram[j, j]
        if pivot > threshold:
            k = len(kept)
            L[k, :k] = row
            L[k, k] = np.sqrt(pivot)
            kept.append(j)
    return kept


def build_multiplier(element, cutmesh, interface, eps_rank=EPS_RANK):
    """Build the multiplier space from the traces of a Lagrange space on the crack extension.

    Candidates are the scalar DOFs whose trace on the extension is not
    identically zero. They are scanned in ascending order and a DOF is
    eliminated when its trace is, up to ``eps_rank``, a combination of the
    traces already kept.

    Parameters
    ----------
    element : :class:`compas_fdcrack.mesh.ElementType`
    cutmesh : :class:`compas_fdcrack.geometry.CutMesh`
    interface : :class:`compas_fdcrack.geometry.InterfaceQuadrature`
        Quadrature of the whole interface; only its extension points are used.
    eps_rank : float, optional
        Relative pivot threshold of the Gram factorization.

    Returns
    -------
    :class:`MultiplierSpace`

    Raises
    ------
    InvalidCrackError
        If the crack covers the whole interface.
    """
    quadrature = interface.gamma0
    if len(quadrature) == 0 or quadrature.length() <= 0.0:
        raise InvalidCrackError("The crack extension is empty: there is nothing to glue.")

    dofmap = global_dof_map(cutmesh.mesh, element, components=2)
    values = element.values(quadrature.ref_points)
    mass = _scalar_mass(dofmap, quadrature, values)

    candidates = np.flatnonzero(mass.diagonal() > 0.0)
    gram = mass[candidates][:, candidates].toarray()
    kept = _independent(gram, eps_rank)
    active = candidates[kept]

    space = MultiplierSpace(element, dofmap, active, quadrature, values)
    logger.info(
        "Multiplier space %s: %d candidates, %d kept, %d eliminated",
        element.name,
        len(candidates),
        len(active),
        len(candidates) - len(active),
    )
    return space
