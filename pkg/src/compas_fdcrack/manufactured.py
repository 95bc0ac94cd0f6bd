"""
********************************************************************************
compas_fdcrack.manufactured
********************************************************************************

.. currentmodule:: compas_fdcrack.manufactured

Manufactured solutions of the cracked unit square and the crack geometries
of the calibration and robustness sweeps.

.. autosummary::
    :toctree: generated/

    TrigonometricField
    AffineField
    ManufacturedCase
    exact_displacement
    exact_gradient
    exact_body_force
    exact_traction
    exact_multiplier
    sweep_geometry
    sweep_length
    interpolate_branch
    project_multiplier
    problem_data

"""
import logging

import numpy as np
from scipy.sparse.linalg import splu

from .assembly import Material
from .assembly import ProblemData
from .assembly import vector_values
from .assembly.kernels import scatter_matrix
from .assembly.kernels import scatter_vector
from .geometry import CellClass
from .geometry import CrackDescription


__all__ = [
    "TrigonometricField",
    "AffineField",
    "ManufacturedCase",
    "REFERENCE_CRACK",
    "DEFAULT_JUMP",
    "exact_displacement",
    "exact_gradient",
    "exact_body_force",
    "exact_traction",
    "exact_multiplier",
    "sweep_geometry",
    "sweep_length",
    "interpolate_branch",
    "project_multiplier",
    "problem_data",
]


logger = logging.getLogger(__name__)


REFERENCE_CRACK = (0.317, 0.47, 0.52)
DEFAULT_JUMP = (0.1, 0.05)

SWEEP_OFFSET = 0.153
SWEEP_LENGTH = 0.05


class TrigonometricField(object):
    """The field ``((x + y) cos x, (x - y) sin y)`` and its closed-form derivatives."""

    def __repr__(self):
        return "TrigonometricField()"

    def value(self, points):
        x, y = _xy(points)
        return np.stack([(x + y) * np.cos(x), (x - y) * np.sin(y)], axis=-1)

    def gradient(self, points):
        """``gradient[..., i, j]`` is the derivative of component ``i`` along ``j``."""
        x, y = _xy(points)
        g = np.empty(x.shape + (2, 2))
        g[..., 0, 0] = np.cos(x) - (x + y) * np.sin(x)
        g[..., 0, 1] = np.cos(x)
        g[..., 1, 0] = np.sin(y)
        g[..., 1, 1] = -np.sin(y) + (x - y) * np.cos(y)
        return g

    def hessian(self, points):
        """``hessian[..., i, j, k]`` is the second derivative of component ``i`` along ``j`` and ``k``."""
        x, y = _xy(points)
        h = np.zeros(x.shape + (2, 2, 2))
        h[..., 0, 0, 0] = -2.0 * np.sin(x) - (x + y) * np.cos(x)
        h[..., 0, 0, 1] = h[..., 0, 1, 0] = -np.sin(x)
        h[..., 1, 0, 1] = h[..., 1, 1, 0] = np.cos(y)
        h[..., 1, 1, 1] = -2.0 * np.cos(y) - (x - y) * np.sin(y)
        return h


class AffineField(object):
    """The field ``offset + gradient . x``, with constant stress.

    Parameters
    ----------
    offset : vector, optional
    gradient : 2x2 matrix, optional
    """

    def __init__(self, offset=(0.0, 0.0), gradient=((0.0, 0.0), (0.0, 0.0))):
        self.offset = np.asarray(offset, dtype=float).reshape(2)
        self.matrix = np.asarray(gradient, dtype=float).reshape(2, 2)

    def __repr__(self):
        return "AffineField({0}, {1})".format(self.offset.tolist(), self.matrix.tolist())

    def value(self, points):
        points = np.asarray(points, dtype=float)
        return self.offset + points @ self.matrix.T

    def gradient(self, points):
        points = np.asarray(points, dtype=float)
        return np.broadcast_to(self.matrix, points.shape[:-1] + (2, 2)).copy()

    def hessian(self, points):
        points = np.asarray(points, dtype=float)
        return np.zeros(points.shape[:-1] + (2, 2, 2))


def _xy(points):
    points = np.asarray(points, dtype=float)
    return points[..., 0], points[..., 1]


class ManufacturedCase(object):
    """Cracked unit square with a known solution.

    The crack lies on ``y = slope (x - x0)`` between the abscissas ``x_a``
    and ``x_b``. The plus displacement is the smooth ``field`` and the minus
    displacement is the same field minus the constant ``jump``.

    Parameters
    ----------
    x0 : float, optional
    x_a : float, optional
    x_b : float, optional
    jump : vector, optional
        Default is ``(0.1, 0.05)``.
    material : :class:`compas_fdcrack.assembly.Material`, optional
        Default is ``lambda_l = mu_l = 1``.
    slope : float, optional
        Default is ``2``.
    field : object, optional
        Default is :class:`TrigonometricField`.

    Raises
    ------
    ValueError
        If ``x_a >= x_b`` or if the line misses the unit square.

    Examples
    --------
    >>> case = ManufacturedCase()
    >>> case.x0, case.x_a, case.x_b
    (0.317, 0.47, 0.52)

    """

    def __init__(self, x0=0.317, x_a=0.47, x_b=0.52, jump=DEFAULT_JUMP, material=None, slope=2.0, field=None):
        if not x_a < x_b:
            raise ValueError("The crack should satisfy x_a < x_b: {} >= {}".format(x_a, x_b))
        y_left = -slope * x0
        y_right = slope * (1.0 - x0)
        if min(y_left, y_right) > 1.0 or max(y_left, y_right) < 0.0:
            raise ValueError("The line y = {} (x - {}) misses the unit square.".format(slope, x0))
        self.x0 = float(x0)
        self.x_a = float(x_a)
        self.x_b = float(x_b)
        self.slope = float(slope)
        self.jump = np.asarray(jump, dtype=float).reshape(2)
        self.material = material or Material()
        self.field = field or TrigonometricField()
        self.crack = CrackDescription.from_line(self.x0, self.x_a, self.x_b, slope=self.slope)

    def __repr__(self):
        return "ManufacturedCase(x0={0:.6g}, x_a={1:.6g}, x_b={2:.6g})".format(self.x0, self.x_a, self.x_b)

    @property
    def normal(self):
        """Plus normal of the crack line."""
        n = np.array([self.slope, -1.0])
        return n / np.linalg.norm(n)

    def branch(self, points, side):
        """Smooth extension of the exact displacement of one side to any point."""
        value = self.field.value(points)
        if side == CellClass.MINUS:
            return value - self.jump
        return value

    def stress(self, points):
        return self.material.stress(self.field.gradient(points))


def exact_displacement(case, points):
    """Exact displacement, on the side given by the sign of ``ls1``.

    Parameters
    ----------
    case : :class:`ManufacturedCase`
    points : array of shape (n, 2)

    Returns
    -------
    array of shape (n, 2)

    Examples
    --------
    >>> case = ManufacturedCase()
    >>> exact_displacement(case, [[0.5, 0.9], [0.5, 0.2]]).round(6).tolist()
    [[1.228616, -0.313331], [0.514308, 0.009601]]

    """
    points = np.asarray(points, dtype=float)
    value = case.field.value(points)
    minus = case.crack.values(points) <= 0
    return np.where(minus[..., None], value - case.jump, value)


def exact_gradient(case, points):
    """Displacement gradient, identical on both sides."""
    return case.field.gradient(points)


def exact_body_force(case, points):
    """Body force ``f = -div sigma(u)`` from the closed-form second derivatives.

    Parameters
    ----------
    case : :class:`ManufacturedCase`
    points : array of shape (n, 2)

    Returns
    -------
    array of shape (n, 2)
    """
    h = case.field.hessian(points)
    lam = case.material.lambda_l
    mu = case.material.mu_l
    grad_div = h[..., 0, 0, :] + h[..., 1, 1, :]
    laplacian = h[..., :, 0, 0] + h[..., :, 1, 1]
    return -((lam + mu) * grad_div + mu * laplacian)


def exact_traction(case, points, normals):
    """Traction ``sigma(u) n`` of the exact solution.

    Parameters
    ----------
    case : :class:`ManufacturedCase`
    points : array of shape (n, 2)
    normals : array of shape (n, 2) or (2,)

    Returns
    -------
    array of shape (n, 2)
    """
    normals = np.broadcast_to(np.asarray(normals, dtype=float), np.shape(points))
    return np.einsum("...ij,...j->...i", case.stress(points), normals)


def exact_multiplier(case, points, normals=None):
    """Exact multiplier ``-sigma(u+) n+`` on the crack extension.

    Parameters
    ----------
    case : :class:`ManufacturedCase`
    points : array of shape (n, 2)
    normals : array of shape (n, 2), optional
        Plus normals. Default is the normal of the crack line.
    """
    if normals is None:
        normals = case.normal
    return -exact_traction(case, points, normals)


def sweep_geometry(x_a, jump=DEFAULT_JUMP, material=None):
    """Reference crack translated along the line family of the robustness sweep.

    Parameters
    ----------
    x_a : float
        Left crack tip abscissa, in ``[0, 0.95]``.
    jump : vector, optional
    material : :class:`compas_fdcrack.assembly.Material`, optional

    Returns
    -------
    :class:`ManufacturedCase`

    Raises
    ------
    ValueError
        If ``x_a`` lies outside ``[0, 0.95]``.

    Examples
    --------
    >>> case = sweep_geometry(0.0)
    >>> round(case.x0, 12), case.x_a, round(case.x_b, 12)
    (-0.153, 0.0, 0.05)

    """
    if not -1e-12 <= x_a <= 0.95 + 1e-12:
        raise ValueError("x_a should lie in [0, 0.95]: {}".format(x_a))
    return ManufacturedCase(x0=x_a - SWEEP_OFFSET, x_a=x_a, x_b=x_a + SWEEP_LENGTH, jump=jump, material=material)


def sweep_length(length, x0=0.317, x_a=0.47, jump=DEFAULT_JUMP, material=None):
    """Reference crack with its right tip moved to ``x_a + length``.

    Raises
    ------
    ValueError
        If ``length`` lies outside ``[0.01, 0.5]``.
    """
    if not 0.01 - 1e-12 <= length <= 0.5 + 1e-12:
        raise ValueError("The crack length should lie in [0.01, 0.5]: {}".format(length))
    return ManufacturedCase(x0=x0, x_a=x_a, x_b=x_a + length, jump=jump, material=material)


def interpolate_branch(case, restricted):
    """Nodal interpolant of the exact displacement of the side of a restricted space."""
    return restricted.interpolate(lambda points: case.branch(points, restricted.side))


def project_multiplier(case, spaces):
    """L2 projection of the exact multiplier onto the multiplier space.

    Parameters
    ----------
    case : :class:`ManufacturedCase`
    spaces : :class:`compas_fdcrack.spaces.FdSpaces`

    Returns
    -------
    array of shape (spaces.multiplier.count,)
    """
    multiplier = spaces.multiplier
    q = multiplier.quadrature
    psi = vector_values(multiplier.values)
    dofs = multiplier.dofmap.vector_dofs(q.cells)
    n = multiplier.dofmap.count
    mass = scatter_matrix(np.einsum("m,mai,mbi->mab", q.weights, psi, psi), dofs, dofs, (n, n))
    target = exact_multiplier(case, q.points, q.normals)
    load = scatter_vector(np.einsum("m,mai,mi->ma", q.weights, psi, target), dofs, n)
    P = multiplier.P
    return splu((P @ mass @ P.T).tocsc()).solve(P @ load)


def problem_data(case):
    """Loads and boundary data reproducing the exact solution.

    The crack carries the general traction ``sigma(u) n+`` and the extension
    the constant jump.
    """

    def traction(points, normals):
        return exact_traction(case, points, normals)

    return ProblemData(
        body_force=lambda points: exact_body_force(case, points),
        traction=traction,
        jump=case.jump,
        dirichlet_plus=lambda points: case.branch(points, CellClass.PLUS),
        dirichlet_minus=lambda points: case.branch(points, CellClass.MINUS),
    )
