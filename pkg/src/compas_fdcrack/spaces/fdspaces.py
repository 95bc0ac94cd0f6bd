import logging

from ..geometry import CellClass
from .multiplier import EPS_RANK
from .multiplier import build_multiplier
from .restricted import build_restricted
from .uncut import ALL_EDGES
from .uncut import build_uncut_space


__all__ = ["FdSpaces", "build_spaces"]


logger = logging.getLogger(__name__)


class FdSpaces(object):
    """The discrete spaces of a fictitious domain problem.

    Parameters
    ----------
    uncut : :class:`compas_fdcrack.spaces.UncutSpace`
    plus : :class:`compas_fdcrack.spaces.RestrictedSpace`
    minus : :class:`compas_fdcrack.spaces.RestrictedSpace`
    multiplier : :class:`compas_fdcrack.spaces.MultiplierSpace`
    """

    def __init__(self, uncut, plus, minus, multiplier):
        self.uncut = uncut
        self.plus = plus
        self.minus = minus
        self.multiplier = multiplier

    def __repr__(self):
        return "FdSpaces(plus={0}, minus={1}, multiplier={2})".format(
            self.plus.count, self.minus.count, self.multiplier.count
        )

    def side(self, side):
        return self.plus if side == CellClass.PLUS else self.minus

    @property
    def count(self):
        """Total number of unknowns, Dirichlet DOFs included."""
        return self.plus.count + self.minus.count + self.multiplier.count

    @property
    def doubled(self):
        """Number of uncut DOFs kept by both sides."""
        return len(set(self.plus.dofs.tolist()) & set(self.minus.dofs.tolist()))


def build_spaces(cutmesh, element_u, element_lambda, interface, dirichlet_edges=ALL_EDGES, uncut=None, eps_rank=EPS_RANK):
    """Build all the spaces of a problem on a cut mesh.

    Parameters
    ----------
    cutmesh : :class:`compas_fdcrack.geometry.CutMesh`
    element_u : :class:`compas_fdcrack.mesh.ElementType`
    element_lambda : :class:`compas_fdcrack.mesh.ElementType`
    interface : :class:`compas_fdcrack.geometry.InterfaceQuadrature`
    dirichlet_edges : sequence of str, optional
    uncut : :class:`compas_fdcrack.spaces.UncutSpace`, optional
        Reuse an uncut space built on the same mesh.
    eps_rank : float, optional

    Returns
    -------
    :class:`FdSpaces`
    """
    if uncut is None:
        uncut = build_uncut_space(cutmesh.mesh, element_u, dirichlet_edges)
    plus = build_restricted(uncut, cutmesh, CellClass.PLUS)
    minus = build_restricted(uncut, cutmesh, CellClass.MINUS)
    multiplier = build_multiplier(element_lambda, cutmesh, interface, eps_rank)
    spaces = FdSpaces(uncut, plus, minus, multiplier)
    logger.info("Spaces: %r, %d doubled DOFs", spaces, spaces.doubled)
    return spaces
