import logging
from collections import deque
from enum import IntEnum

import numpy as np
from compas.datastructures import Mesh
from compas.geometry import add_vectors
from compas.geometry import area_triangle
from compas.geometry import centroid_points
from compas.geometry import normal_triangle
from compas.geometry import scale_vector

from ..exceptions import SurfaceError
from .surface import EPS_DEGENERATE
from .surface import _write_triangles
from .surface import _write_vertices


__all__ = [
    "PointSide",
    "ExtendedCrack",
    "triangle_apex",
    "orient_surface",
    "build_extension",
    "classify_point",
    "classify_points",
    "write_extension",
]


logger = logging.getLogger(__name__)


EPS_BOUNDARY = 1e-9


class PointSide(IntEnum):
    """Side of a point with respect to an extended crack."""

    MINUS = -1
    BOUNDARY = 0
    PLUS = 1


def triangle_apex(triangle, side_sign=1, scale=1.0):
    """Apex of the cone over a triangle.

    The apex projects orthogonally onto the centroid, at a distance of
    ``scale`` times the square root of the area, on the side of the normal
    of the vertex order if ``side_sign`` is positive.

    Parameters
    ----------
    triangle : list of list of float
        Three XYZ points.
    side_sign : {1, -1}, optional
    scale : float, optional

    Returns
    -------
    list of float

    Raises
    ------
    SurfaceError
        If the triangle is degenerate.

    Examples
    --------
    >>> apex = triangle_apex([[0, 0, 0], [1, 0, 0], [0, 1, 0]])
    >>> [round(x, 6) for x in apex]
    [0.333333, 0.333333, 0.707107]

    """
    area = area_triangle(triangle)
    if not area > EPS_DEGENERATE:
        raise SurfaceError("Degenerate triangle: {}".format(triangle))
    normal = normal_triangle(triangle, unitized=True)
    height = (1 if side_sign >= 0 else -1) * scale * area ** 0.5
    return add_vectors(centroid_points(triangle), scale_vector(normal, height))


def orient_surface(surface):
    """Orientation of every triangle relative to the first one, by breadth-first traversal.

    Two triangles sharing an edge are consistently oriented when their
    vertex orders run through the edge in opposite directions.

    Parameters
    ----------
    surface : :class:`compas_fdcrack.extension3d.TriSurface`

    Returns
    -------
    list of int
        ``1`` where the vertex order is kept, ``-1`` where it is reversed.

    Raises
    ------
    SurfaceError
        If the surface is not orientable or not edge-connected.
    """
    signs = [0] * len(surface)
    signs[0] = 1
    queue = deque([0])
    while queue:
        index = queue.popleft()
        for other, (u, v) in surface.neighbors(index):
            # same direction through the shared edge means opposite winding
            a, b, c = surface.triangles[other]
            same = (u, v) in ((a, b), (b, c), (c, a))
            sign = -signs[index] if same else signs[index]
            if signs[other] == 0:
                signs[other] = sign
                queue.append(other)
            elif signs[other] != sign:
                raise SurfaceError("The surface is not orientable: conflict at triangles {} and {}.".format(index, other))
    missing = [index for index, sign in enumerate(signs) if sign == 0]
    if missing:
        raise SurfaceError("The surface is not connected: {} triangles cannot be reached from the first.".format(len(missing)))
    return signs


class ExtendedCrack(object):
    """A crack surface with one cone per triangle on a consistent side.

    The minus region is the union of the tetrahedra spanned by every crack
    triangle and its apex.

    Parameters
    ----------
    surface : :class:`compas_fdcrack.extension3d.TriSurface`
    apexes : list of list of float
    orientation : list of int
        Sign of every triangle, relative to its vertex order, of the side carrying its apex.
    seed_sign : int
    scale : float
    """

    def __init__(self, surface, apexes, orientation, seed_sign=1, scale=1.0):
        self.surface = surface
        self.apexes = apexes
        self.orientation = orientation
        self.seed_sign = seed_sign
        self.scale = scale

    def __repr__(self):
        return "ExtendedCrack(triangles={0}, facets={1})".format(len(self.surface), len(self.facets))

    @property
    def oriented_triangles(self):
        """Crack triangles reordered so that their normal points to their apex."""
        return [tri if sign > 0 else [tri[0], tri[2], tri[1]] for tri, sign in zip(self.surface.triangles, self.orientation)]

    @property
    def vertices(self):
        """Crack vertices followed by the apexes."""
        return self.surface.vertices + self.apexes

    @property
    def facets(self):
        """The three cone side triangles of every crack triangle."""
        nv = len(self.surface.vertices)
        facets = []
        for index, (a, b, c) in enumerate(self.oriented_triangles):
            s = nv + index
            facets += [[a, b, s], [b, c, s], [c, a, s]]
        return facets

    def to_mesh(self):
        """The cone facets as a :class:`compas.datastructures.Mesh`."""
        return Mesh.from_vertices_and_faces(self.vertices, self.facets)

    def tetrahedra(self):
        """Corner coordinates of the tetrahedra of the minus region, shape (n, 4, 3)."""
        vertices = np.asarray(self.surface.vertices, dtype=float)
        base = vertices[np.asarray(self.oriented_triangles)]
        return np.concatenate([base, np.asarray(self.apexes, dtype=float)[:, None, :]], axis=1)

    def region_volume(self):
        """Total volume of the tetrahedra."""
        t = self.tetrahedra()
        edges = t[:, 1:] - t[:, :1]
        return float(np.abs(np.linalg.det(edges)).sum() / 6.0)


def build_extension(surface, seed_sign=1, scale=1.0):
    """Build the cone extension of a crack surface.

    The side of the first triangle is chosen by ``seed_sign`` and carried
    over to the others through their shared edges.

    Parameters
    ----------
    surface : :class:`compas_fdcrack.extension3d.TriSurface`
    seed_sign : {1, -1}, optional
    scale : float, optional
        Apex height in units of the square root of the triangle area.

    Returns
    -------
    :class:`ExtendedCrack`

    Raises
    ------
    SurfaceError
        If the surface is not orientable or not connected.
    ValueError
        If ``seed_sign`` is not 1 or -1, or ``scale`` is not positive.
    """
    if seed_sign not in (1, -1):
        raise ValueError("The seed sign should be 1 or -1: {}".format(seed_sign))
    if not scale > 0:
        raise ValueError("The apex scale should be positive: {}".format(scale))
    orientation = [seed_sign * sign for sign in orient_surface(surface)]
    apexes = [triangle_apex(surface.points(index), sign, scale) for index, sign in enumerate(orientation)]
    extension = ExtendedCrack(surface, apexes, orientation, seed_sign, scale)
    logger.info("Built %r", extension)
    return extension


def classify_points(extension, points, eps=EPS_BOUNDARY):
    """Classify points against the minus region of an extended crack.

    A point within ``eps`` times the largest apex height of a crack triangle
    is on the boundary; a point in the closure of a tetrahedron is minus;
    every other point is plus.

    Parameters
    ----------
    extension : :class:`ExtendedCrack`
    points : array of shape (n, 3)
    eps : float, optional

    Returns
    -------
    array of int
        :class:`PointSide` values.
    """
    points = np.atleast_2d(np.asarray(points, dtype=float))
    t = extension.tetrahedra()
    heights = np.linalg.norm(t[:, 3] - t[:, :3].mean(axis=1), axis=1)
    tol = eps * heights.max()

    origin = t[:, 0]
    frames = np.transpose(t[:, 1:] - origin[:, None, :], (0, 2, 1))
    local = np.einsum("tij,ntj->nti", np.linalg.inv(frames), points[:, None, :] - origin[None, :, :])
    bary = np.concatenate([1.0 - local.sum(axis=-1, keepdims=True), local], axis=-1)

    slack = -tol / heights[None, :, None]
    inside = np.all(bary >= slack, axis=-1)
    on_base = np.abs(bary[..., 3]) * heights[None, :] <= tol
    in_triangle = np.all(bary[..., :3] >= slack, axis=-1)

    result = np.full(len(points), int(PointSide.PLUS))
    result[np.any(inside, axis=1)] = int(PointSide.MINUS)
    result[np.any(on_base & in_triangle, axis=1)] = int(PointSide.BOUNDARY)
    return result


def classify_point(extension, point, eps=EPS_BOUNDARY):
    """Classify one point, see :func:`classify_points`.

    Returns
    -------
    :class:`PointSide`
    """
    return PointSide(int(classify_points(extension, [point], eps)[0]))


def write_extension(extension, path):
    """Write the extension in the surface file format.

    The crack vertices are followed by the apexes, the oriented crack
    triangles by the cone facets.
    """
    nv = len(extension.surface.vertices)
    with open(path, "w", encoding="utf-8") as f:
        _write_vertices(f, extension.surface.vertices)
        f.write("# apex\n")
        _write_vertices(f, extension.apexes)
        _write_triangles(f, extension.oriented_triangles)
        f.write("# facets {} {}\n".format(nv, len(extension.apexes)))
        _write_triangles(f, extension.facets)
