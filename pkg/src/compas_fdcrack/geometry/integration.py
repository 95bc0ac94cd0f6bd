import logging
from enum import IntEnum

import numpy as np

from .cutcell import CellClass
from .quadrature import map_triangle_rule
from .quadrature import segment_rule
from .quadrature import triangle_rule


__all__ = [
    "InterfaceTag",
    "SubdomainQuadrature",
    "InterfaceQuadrature",
    "subdomain_quadrature",
    "interface_quadrature",
]


logger = logging.getLogger(__name__)


class InterfaceTag(IntEnum):
    """Part of the interface a quadrature point belongs to."""

    GAMMA_0 = 0
    GAMMA_T = 1


class SubdomainQuadrature(object):
    """Quadrature over the plus and minus parts of the domain.

    Every uncut cell contributes one entry with the standard rule; every
    sub-triangle of a cut cell contributes its own entry, attached to the
    parent cell.

    Parameters
    ----------
    cells : array of int, shape (m,)
        Parent cell of each entry.
    sides : array of int, shape (m,)
        :class:`compas_fdcrack.geometry.CellClass` of each entry.
    cut : array of bool, shape (m,)
        True for the sub-triangles of cut cells.
    ref_points : array of shape (m, q, 2)
        Points in the reference coordinates of the parent cell.
    points : array of shape (m, q, 2)
        Physical points.
    weights : array of shape (m, q)
        Physical weights.
    """

    def __init__(self, cells, sides, cut, ref_points, points, weights):
        self.cells = cells
        self.sides = sides
        self.cut = cut
        self.ref_points = ref_points
        self.points = points
        self.weights = weights

    def __repr__(self):
        return "SubdomainQuadrature(entries={0}, points={1})".format(len(self.cells), self.weights.size)

    def __len__(self):
        return len(self.cells)

    def select(self, mask):
        """Sub-rule of the entries flagged by a boolean mask."""
        return SubdomainQuadrature(
            self.cells[mask],
            self.sides[mask],
            self.cut[mask],
            self.ref_points[mask],
            self.points[mask],
            self.weights[mask],
        )

    def side(self, side):
        """Sub-rule of one side."""
        return self.select(self.sides == side)

    def measure(self, side=None):
        """Sum of the weights of one side, or of both."""
        if side is None:
            return float(self.weights.sum())
        return float(self.weights[self.sides == side].sum())


class InterfaceQuadrature(object):
    """Quadrature over the interface pieces of the cut cells.

    Parameters
    ----------
    cells : array of int, shape (m,)
        Cell carrying each point.
    points : array of shape (m, 2)
    ref_points : array of shape (m, 2)
        Points in the reference coordinates of their cell.
    weights : array of shape (m,)
        Positive length weights.
    normals : array of shape (m, 2)
        Unit normal ``n+``, pointing from the plus into the minus side.
    tags : array of int, shape (m,)
        :class:`InterfaceTag` of each point.
    """

    def __init__(self, cells, points, ref_points, weights, normals, tags):
        self.cells = cells
        self.points = points
        self.ref_points = ref_points
        self.weights = weights
        self.normals = normals
        self.tags = tags

    def __repr__(self):
        return "InterfaceQuadrature(points={0}, length={1:.6g})".format(len(self.weights), self.length())

    def __len__(self):
        return len(self.weights)

    def select(self, mask):
        return InterfaceQuadrature(
            self.cells[mask],
            self.points[mask],
            self.ref_points[mask],
            self.weights[mask],
            self.normals[mask],
            self.tags[mask],
        )

    def tagged(self, tag):
        """Sub-rule of the points of one part of the interface."""
        return self.select(self.tags == tag)

    @property
    def gamma0(self):
        return self.tagged(InterfaceTag.GAMMA_0)

    @property
    def gammat(self):
        return self.tagged(InterfaceTag.GAMMA_T)

    def length(self, tag=None):
        if tag is None:
            return float(self.weights.sum())
        return float(self.weights[self.tags == tag].sum())


def subdomain_quadrature(cutmesh, degree):
    """Build the quadrature over both sides of a cut mesh.

    Parameters
    ----------
    cutmesh : :class:`compas_fdcrack.geometry.CutMesh`
    degree : int
        Polynomial degree integrated exactly on every (sub-)triangle.

    Returns
    -------
    :class:`SubdomainQuadrature`

    Examples
    --------
    >>> from compas_fdcrack.mesh import RectDomain, build_mesh
    >>> from compas_fdcrack.geometry import CrackDescription, cut_mesh
    >>> mesh = build_mesh(RectDomain(), 10, 10)
    >>> cutmesh = cut_mesh(mesh, CrackDescription.from_line(0.317, 0.47, 0.52))
    >>> round(subdomain_quadrature(cutmesh, 2).measure(), 12)
    1.0

    """
    mesh = cutmesh.mesh
    ref_rule, ref_weights = triangle_rule(degree)
    q = len(ref_weights)

    uncut = np.flatnonzero(cutmesh.classes != CellClass.CUT)
    n = len(uncut)
    cells = [uncut]
    sides = [cutmesh.classes[uncut]]
    cut = [np.zeros(n, dtype=bool)]
    ref_points = [np.broadcast_to(ref_rule, (n, q, 2))]
    weights = [np.abs(mesh.determinants[uncut])[:, None] * ref_weights[None, :]]
    points = [mesh.to_physical(uncut, ref_points[0])]

    if cutmesh.partitions:
        parents = []
        triangles = []
        tri_sides = []
        for cell in sorted(cutmesh.partitions):
            partition = cutmesh.partitions[cell]
            for triangle, side in zip(partition.triangles, partition.sides):
                parents.append(cell)
                triangles.append(triangle)
                tri_sides.append(int(side))
        parents = np.array(parents, dtype=np.int64)
        sub_points, sub_weights = map_triangle_rule(np.array(triangles), degree)
        cells.append(parents)
        sides.append(np.array(tri_sides, dtype=np.int64))
        cut.append(np.ones(len(parents), dtype=bool))
        ref_points.append(mesh.to_reference(parents, sub_points))
        weights.append(sub_weights)
        points.append(sub_points)

    quadrature = SubdomainQuadrature(
        np.concatenate(cells),
        np.concatenate(sides),
        np.concatenate(cut),
        np.concatenate([np.asarray(r) for r in ref_points]),
        np.concatenate(points),
        np.concatenate(weights),
    )
    logger.debug("Subdomain quadrature: %r", quadrature)
    return quadrature


def _breakpoints(crack, segment):
    # zeros of the linear interpolants of ls2 and ls3 strictly inside the segment
    a, b = segment
    breaks = [0.0, 1.0]
    for ls in (crack.ls2, crack.ls3):
        va = float(ls(a[0], a[1]))
        vb = float(ls(b[0], b[1]))
        if va * vb < 0:
            breaks.append(va / (va - vb))
    return sorted(breaks)


def interface_quadrature(cutmesh, degree):
    """Build the quadrature over the interface pieces of a cut mesh.

    Each piece is split at the zeros of ``ls2`` and ``ls3`` along it before
    the Gauss rule is applied, so the crack tips fall on sub-segment ends.
    Every point is tagged ``GAMMA_T`` if ``ls2 < 0`` and ``ls3 < 0`` there,
    ``GAMMA_0`` otherwise.

    Parameters
    ----------
    cutmesh : :class:`compas_fdcrack.geometry.CutMesh`
    degree : int
        Polynomial degree integrated exactly on every sub-segment.

    Returns
    -------
    :class:`InterfaceQuadrature`

    Examples
    --------
    >>> from compas_fdcrack.mesh import RectDomain, build_mesh
    >>> from compas_fdcrack.geometry import CrackDescription, cut_mesh
    >>> mesh = build_mesh(RectDomain(), 10, 10)
    >>> cutmesh = cut_mesh(mesh, CrackDescription.from_line(0.317, 0.47, 0.52))
    >>> quadrature = interface_quadrature(cutmesh, 3)
    >>> round(quadrature.length(), 10), round(quadrature.length(InterfaceTag.GAMMA_T), 10)
    (1.1180339887, 0.1118033989)

    """
    mesh = cutmesh.mesh
    crack = cutmesh.crack
    s, w = segment_rule(degree)

    cells = []
    points = []
    weights = []
    normals = []
    for cell in sorted(cutmesh.partitions):
        partition = cutmesh.partitions[cell]
        a, b = partition.segment
        breaks = _breakpoints(crack, partition.segment)
        length = np.linalg.norm(b - a)
        for t0, t1 in zip(breaks[:-1], breaks[1:]):
            if t1 - t0 <= 0.0:
                continue
            t = t0 + (t1 - t0) * s
            points.append(a[None, :] + t[:, None] * (b - a)[None, :])
            weights.append((t1 - t0) * length * w)
            cells.append(np.full(len(s), cell, dtype=np.int64))
            normals.append(np.tile(partition.normal, (len(s), 1)))

    if cells:
        cells = np.concatenate(cells)
        points = np.concatenate(points)
        weights = np.concatenate(weights)
        normals = np.concatenate(normals)
        ref_points = mesh.to_reference(cells, points)
    else:
        cells = np.zeros(0, dtype=np.int64)
        points = np.zeros((0, 2))
        weights = np.zeros(0)
        normals = np.zeros((0, 2))
        ref_points = np.zeros((0, 2))

    tags = np.where(crack.on_crack(points), int(InterfaceTag.GAMMA_T), int(InterfaceTag.GAMMA_0)).astype(np.int64)
    quadrature = InterfaceQuadrature(cells, points, ref_points, weights, normals, tags)
    logger.debug(
        "Interface quadrature: %d points, length %.12g, crack %.12g",
        len(quadrature),
        quadrature.length(),
        quadrature.length(InterfaceTag.GAMMA_T),
    )
    return quadrature
