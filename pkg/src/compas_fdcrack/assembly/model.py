import logging

from ..geometry import cut_mesh
from ..geometry import interface_quadrature
from ..geometry import subdomain_quadrature
from ..spaces import EPS_RANK
from ..spaces import build_spaces
from ..spaces import build_uncut_space
from .kernels import StiffnessCache
from .operators import assemble_base_stiffness
from .operators import assemble_interface_operators
from .operators import assemble_stabilized
from .operators import assemble_subdomain_stiffness
from .operators import interface_degree
from .operators import volume_degree


__all__ = ["Discretization", "FictitiousDomainModel"]


logger = logging.getLogger(__name__)


class Discretization(object):
    """Everything that depends on the crack but not on the stabilization or the data.

    Attributes
    ----------
    cutmesh : :class:`compas_fdcrack.geometry.CutMesh`
    quadrature : :class:`compas_fdcrack.geometry.SubdomainQuadrature`
    interface : :class:`compas_fdcrack.geometry.InterfaceQuadrature`
    spaces : :class:`compas_fdcrack.spaces.FdSpaces`
    operators : :class:`compas_fdcrack.assembly.InterfaceOperators`
    stiffness : tuple of sparse matrices
        Full restricted stiffness matrices of both sides.
    """

    def __init__(self, cutmesh, quadrature, interface, spaces, operators, stiffness):
        self.cutmesh = cutmesh
        self.quadrature = quadrature
        self.interface = interface
        self.spaces = spaces
        self.operators = operators
        self.stiffness = stiffness

    def __repr__(self):
        return "Discretization({0!r}, {1!r})".format(self.cutmesh, self.spaces)


class FictitiousDomainModel(object):
    """A fixed background mesh and element couple, for any number of cracks.

    The element matrices of the whole cells and the uncut stiffness are
    computed once; a new crack only re-integrates its cut cells.

    Parameters
    ----------
    mesh : :class:`compas_fdcrack.mesh.BackgroundMesh`
    element_u : :class:`compas_fdcrack.mesh.ElementType`
    element_lambda : :class:`compas_fdcrack.mesh.ElementType`
    material : :class:`compas_fdcrack.assembly.Material`
    dirichlet_edges : sequence of str, optional
        Default is the whole boundary.
    eps_rank : float, optional
        Pivot threshold of the multiplier elimination.

    Examples
    --------
    >>> from compas_fdcrack.mesh import RectDomain, ElementType, build_mesh
    >>> from compas_fdcrack.geometry import CrackDescription
    >>> from compas_fdcrack.assembly import Material
    >>> model = FictitiousDomainModel(build_mesh(RectDomain(), 10, 10), ElementType(1), ElementType(0), Material())
    >>> system = model.assemble(model.discretize(CrackDescription.from_line(0.317, 0.47, 0.52)), gamma0=0.03)
    >>> system.matrix().shape[0] == sum(system.sizes)
    True

    """

    def __init__(self, mesh, element_u, element_lambda, material, dirichlet_edges=("bottom", "right", "top", "left"), eps_rank=EPS_RANK):
        self.mesh = mesh
        self.element_u = element_u
        self.element_lambda = element_lambda
        self.material = material
        self.eps_rank = eps_rank
        self.uncut = build_uncut_space(mesh, element_u, dirichlet_edges)
        self.cache = StiffnessCache(mesh, element_u, material, volume_degree(element_u))
        self._base = None

    def __repr__(self):
        return "FictitiousDomainModel({0!r}, {1}/{2})".format(self.mesh, self.element_u.name, self.element_lambda.name)

    @property
    def base_stiffness(self):
        """Stiffness matrix of the uncut space."""
        if self._base is None:
            self._base = assemble_base_stiffness(self.uncut, self.material, self.cache)
        return self._base

    def discretize(self, crack):
        """Cut the mesh with a crack and build its spaces and crack-dependent operators.

        Parameters
        ----------
        crack : :class:`compas_fdcrack.geometry.CrackDescription`

        Returns
        -------
        :class:`Discretization`

        Raises
        ------
        InvalidCrackError
            If the crack does not split the domain or covers the whole interface.
        """
        cutmesh = cut_mesh(self.mesh, crack)
        quadrature = subdomain_quadrature(cutmesh, volume_degree(self.element_u))
        interface = interface_quadrature(cutmesh, interface_degree(self.element_u))
        spaces = build_spaces(
            cutmesh,
            self.element_u,
            self.element_lambda,
            interface,
            uncut=self.uncut,
            eps_rank=self.eps_rank,
        )
        operators = assemble_interface_operators(interface, spaces, self.material)
        stiffness = tuple(
            assemble_subdomain_stiffness(cutmesh, restricted, self.material, quadrature, self.cache, dirichlet=False)
            for restricted in (spaces.plus, spaces.minus)
        )
        discretization = Discretization(cutmesh, quadrature, interface, spaces, operators, stiffness)
        logger.info("Discretized %r", discretization)
        return discretization

    def assemble(self, discretization, gamma0=0.0, data=None):
        """Assemble the block system of a discretized crack.

        Parameters
        ----------
        discretization : :class:`Discretization`
        gamma0 : float, optional
            Stabilization parameter, ``0`` for the unstabilized system.
        data : :class:`compas_fdcrack.assembly.ProblemData`, optional

        Returns
        -------
        :class:`compas_fdcrack.assembly.SaddleSystem`
        """
        return assemble_stabilized(
            discretization.cutmesh,
            discretization.spaces,
            self.material,
            gamma0,
            data=data,
            quadrature=discretization.quadrature,
            interface=discretization.interface,
            operators=discretization.operators,
            stiffness=discretization.stiffness,
            cache=self.cache,
        )
