import logging

import numpy as np

from ..assembly import physical_gradients
from ..assembly import vector_values
from ..exceptions import MetricError
from ..geometry import CellClass
from ..geometry import subdomain_quadrature


__all__ = ["evaluate_field", "field_errors", "displacement_errors"]


logger = logging.getLogger(__name__)


def evaluate_field(space, values, cells, ref_points):
    """Values and gradients of a vector field of the uncut space.

    Parameters
    ----------
    space : :class:`compas_fdcrack.spaces.UncutSpace`
    values : array of shape (space.count,)
    cells : array of int, shape (m,)
    ref_points : array of shape (m, q, 2)

    Returns
    -------
    tuple of arrays
        The values, shape (m, q, 2), and the gradients, shape (m, q, 2, 2),
        with ``gradient[..., i, j]`` the derivative of component ``i`` along ``j``.
    """
    element = space.element
    local = np.asarray(values)[space.dofmap.vector_dofs(cells)]
    nb = element.ndofs
    u = np.einsum("mqai,ma->mqi", vector_values(element.values(ref_points)), local)
    grads = physical_gradients(element, space.mesh, cells, ref_points)
    du = np.einsum("mqbj,mcb->mqcj", grads, local.reshape(len(cells), 2, nb))
    return u, du


def field_errors(cutmesh, space, fields, exact, degree=None):
    """Relative L2 and H1 errors of a pair of uncut fields against a two-sided exact solution.

    Each side is integrated over its own part of the domain only, and the
    squared errors and norms of both sides are summed before the ratio.

    Parameters
    ----------
    cutmesh : :class:`compas_fdcrack.geometry.CutMesh`
    space : :class:`compas_fdcrack.spaces.UncutSpace`
    fields : tuple of arrays
        Plus and minus DOF vectors of the uncut space.
    exact : :class:`compas_fdcrack.manufactured.ManufacturedCase`
    degree : int, optional
        Quadrature degree. Default is two orders above the assembly rule.

    Returns
    -------
    tuple of float
        Relative L2 and H1 errors, in percent.

    Raises
    ------
    MetricError
        If the exact solution has a zero norm.
    """
    if degree is None:
        degree = 2 * space.element.degree + 2
    quadrature = subdomain_quadrature(cutmesh, degree)
    error_l2 = norm_l2 = error_h1 = norm_h1 = 0.0
    for side, values in zip((CellClass.PLUS, CellClass.MINUS), fields):
        q = quadrature.side(side)
        if not len(q):
            continue
        u, du = evaluate_field(space, values, q.cells, q.ref_points)
        u_ex = exact.branch(q.points, side)
        du_ex = exact.field.gradient(q.points)
        w = q.weights
        e0 = np.einsum("mq,mqi->", w, (u - u_ex) ** 2)
        e1 = np.einsum("mq,mqij->", w, (du - du_ex) ** 2)
        n0 = np.einsum("mq,mqi->", w, u_ex ** 2)
        n1 = np.einsum("mq,mqij->", w, du_ex ** 2)
        error_l2 += e0
        norm_l2 += n0
        error_h1 += e0 + e1
        norm_h1 += n0 + n1
    if not norm_l2 > 0 or not norm_h1 > 0:
        raise MetricError("The exact displacement has a zero norm.")
    return 100.0 * np.sqrt(error_l2 / norm_l2), 100.0 * np.sqrt(error_h1 / norm_h1)


def displacement_errors(solution, case, cutmesh, spaces, degree=None):
    """Relative L2 and H1 errors of a computed displacement, in percent.

    Parameters
    ----------
    solution : :class:`compas_fdcrack.solvers.Solution`
    case : :class:`compas_fdcrack.manufactured.ManufacturedCase`
    cutmesh : :class:`compas_fdcrack.geometry.CutMesh`
    spaces : :class:`compas_fdcrack.spaces.FdSpaces`
    degree : int, optional

    Returns
    -------
    tuple of float

    Raises
    ------
    MetricError
        If the exact solution has a zero norm.
    """
    fields = (solution.displacement(CellClass.PLUS), solution.displacement(CellClass.MINUS))
    l2, h1 = field_errors(cutmesh, spaces.uncut, fields, case, degree)
    logger.debug("Displacement errors: L2 %.6e %%, H1 %.6e %%", l2, h1)
    return l2, h1
