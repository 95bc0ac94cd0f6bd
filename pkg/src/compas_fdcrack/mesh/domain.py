import logging

import numpy as np


__all__ = ["RectDomain", "BackgroundMesh", "build_mesh", "dump_mesh"]


logger = logging.getLogger(__name__)


class RectDomain(object):
    """Axis-aligned rectangle housing the whole computational domain.

    Parameters
    ----------
    x_min : float, optional
        Default is ``0.0``.
    x_max : float, optional
        Default is ``1.0``.
    y_min : float, optional
        Default is ``0.0``.
    y_max : float, optional
        Default is ``1.0``.

    Raises
    ------
    ValueError
        If the bounds are not strictly increasing.

    Examples
    --------
    >>> domain = RectDomain(0.0, 100.0, 0.0, 50.0)
    >>> domain.area
    5000.0

    """

    def __init__(self, x_min=0.0, x_max=1.0, y_min=0.0, y_max=1.0):
        if not x_min < x_max:
            raise ValueError("x_min should be smaller than x_max: {} >= {}".format(x_min, x_max))
        if not y_min < y_max:
            raise ValueError("y_min should be smaller than y_max: {} >= {}".format(y_min, y_max))
        self.x_min = float(x_min)
        self.x_max = float(x_max)
        self.y_min = float(y_min)
        self.y_max = float(y_max)

    def __repr__(self):
        return "RectDomain({0}, {1}, {2}, {3})".format(self.x_min, self.x_max, self.y_min, self.y_max)

    @property
    def width(self):
        return self.x_max - self.x_min

    @property
    def height(self):
        return self.y_max - self.y_min

    @property
    def area(self):
        return self.width * self.height

    @property
    def diameter(self):
        return float(np.hypot(self.width, self.height))

    def boundary_mask(self, points, edges=("bottom", "right", "top", "left"), tol=1e-12):
        """Flag the points lying on the selected edges of the rectangle.

        Parameters
        ----------
        points : array of shape (n, 2)
        edges : sequence of str, optional
            Any of ``'bottom'``, ``'right'``, ``'top'``, ``'left'``.
        tol : float, optional
            Relative tolerance, scaled by the domain diameter.

        Returns
        -------
        array of bool, shape (n,)
        """
        points = np.asarray(points, dtype=float)
        eps = tol * self.diameter
        x = points[:, 0]
        y = points[:, 1]
        tests = {
            "bottom": np.abs(y - self.y_min) <= eps,
            "right": np.abs(x - self.x_max) <= eps,
            "top": np.abs(y - self.y_max) <= eps,
            "left": np.abs(x - self.x_min) <= eps,
        }
        mask = np.zeros(len(points), dtype=bool)
        for edge in edges:
            try:
                mask |= tests[edge]
            except KeyError:
                raise ValueError("Unknown boundary edge: {}".format(edge))
        return mask


class BackgroundMesh(object):
    """Structured triangulation of a rectangle.

    Every square of the ``nx`` by ``ny`` grid is split along its
    lower-left to upper-right diagonal, and both triangles are
    numbered counter-clockwise.

    Parameters
    ----------
    domain : :class:`RectDomain`
    nx : int
    ny : int
    vertices : array of shape (nv, 2)
    cells : array of shape (nc, 3)

    Attributes
    ----------
    jacobians : array of shape (nc, 2, 2)
        Columns are the edge vectors ``p1 - p0`` and ``p2 - p0`` of each cell.
    determinants : array of shape (nc,)
        Twice the signed cell areas.
    """

    def __init__(self, domain, nx, ny, vertices, cells):
        self.domain = domain
        self.nx = nx
        self.ny = ny
        self.vertices = vertices
        self.cells = cells
        p0 = vertices[cells[:, 0]]
        p1 = vertices[cells[:, 1]]
        p2 = vertices[cells[:, 2]]
        self.jacobians = np.stack([p1 - p0, p2 - p0], axis=2)
        self.determinants = np.linalg.det(self.jacobians)
        self._inverse = None

    def __repr__(self):
        return "BackgroundMesh({0!r}, nx={1}, ny={2})".format(self.domain, self.nx, self.ny)

    @property
    def vertex_count(self):
        return len(self.vertices)

    @property
    def cell_count(self):
        return len(self.cells)

    @property
    def areas(self):
        return 0.5 * self.determinants

    @property
    def inverse_jacobians(self):
        if self._inverse is None:
            self._inverse = np.linalg.inv(self.jacobians)
        return self._inverse

    @property
    def h(self):
        """Largest cell diameter."""
        p = self.vertices[self.cells]
        edges = p - np.roll(p, -1, axis=1)
        return float(np.sqrt((edges ** 2).sum(axis=2)).max())

    def cell_points(self, cell):
        """The three vertex coordinates of a cell."""
        return self.vertices[self.cells[cell]]

    def to_physical(self, cells, ref_points):
        """Map reference coordinates to physical coordinates.

        Parameters
        ----------
        cells : array of int, shape (m,)
        ref_points : array of shape (m, ..., 2)

        Returns
        -------
        array of shape (m, ..., 2)
        """
        cells = np.asarray(cells)
        origin = self.vertices[self.cells[cells, 0]]
        J = self.jacobians[cells]
        ref_points = np.asarray(ref_points, dtype=float)
        extra = ref_points.ndim - 2
        origin = origin.reshape(origin.shape[:1] + (1,) * extra + (2,))
        J = J.reshape(J.shape[:1] + (1,) * extra + (2, 2))
        return origin + np.einsum("...ij,...j->...i", J, ref_points)

    def to_reference(self, cells, points):
        """Map physical coordinates back to the reference triangle of their cells."""
        cells = np.asarray(cells)
        origin = self.vertices[self.cells[cells, 0]]
        inv = self.inverse_jacobians[cells]
        points = np.asarray(points, dtype=float)
        extra = points.ndim - 2
        origin = origin.reshape(origin.shape[:1] + (1,) * extra + (2,))
        inv = inv.reshape(inv.shape[:1] + (1,) * extra + (2, 2))
        return np.einsum("...ij,...j->...i", inv, points - origin)


def build_mesh(domain, nx, ny):
    """Build the Cartesian background triangulation of a rectangle.

    Parameters
    ----------
    domain : :class:`RectDomain`
    nx : int
        Number of subdivisions along x.
    ny : int
        Number of subdivisions along y.

    Returns
    -------
    :class:`BackgroundMesh`

    Raises
    ------
    ValueError
        If one of the subdivision counts is smaller than one.

    Examples
    --------
    >>> mesh = build_mesh(RectDomain(), 10, 10)
    >>> mesh.cell_count, mesh.vertex_count
    (200, 121)
    >>> round(mesh.h, 6)
    0.141421

    """
    nx = int(nx)
    ny = int(ny)
    if nx < 1 or ny < 1:
        raise ValueError("The number of subdivisions should be at least one: nx={}, ny={}".format(nx, ny))
    xs = np.linspace(domain.x_min, domain.x_max, nx + 1)
    ys = np.linspace(domain.y_min, domain.y_max, ny + 1)
    X, Y = np.meshgrid(xs, ys)
    vertices = np.column_stack([X.ravel(), Y.ravel()])

    i, j = np.meshgrid(np.arange(nx), np.arange(ny))
    i = i.ravel()
    j = j.ravel()
    v00 = j * (nx + 1) + i
    v10 = v00 + 1
    v01 = v00 + nx + 1
    v11 = v01 + 1
    lower = np.column_stack([v00, v10, v11])
    upper = np.column_stack([v00, v11, v01])
    cells = np.empty((2 * nx * ny, 3), dtype=np.int64)
    cells[0::2] = lower
    cells[1::2] = upper

    mesh = BackgroundMesh(domain, nx, ny, vertices, cells)
    logger.debug("Built %dx%d mesh: %d cells, %d vertices, h=%.6g", nx, ny, mesh.cell_count, mesh.vertex_count, mesh.h)
    return mesh


def dump_mesh(mesh, path):
    """Write a plain-text listing of the vertices and cells of a mesh.

    Lines are ``v x y`` for vertices and ``c i j k`` for cells (0-based).
    """
    with open(path, "w", encoding="utf-8") as f:
        for x, y in mesh.vertices:
            f.write("v {!r} {!r}\n".format(float(x), float(y)))
        for a, b, c in mesh.cells:
            f.write("c {} {} {}\n".format(a, b, c))
