import logging
from enum import IntEnum

import numpy as np


__all__ = [
    "CellClass",
    "CutCellPartition",
    "CutMesh",
    "classify_cell",
    "cut_cell",
    "cut_mesh",
    "vertex_levels",
    "EPS_SNAP",
    "EPS_AREA",
]


logger = logging.getLogger(__name__)


EPS_SNAP = 1e-12
EPS_AREA = 1e-10


class CellClass(IntEnum):
    """Position of a cell with respect to the interface."""

    MINUS = -1
    CUT = 0
    PLUS = 1


def _snap(values, scale=None):
    values = np.array(values, dtype=float)
    if scale is None:
        scale = np.abs(values).max(axis=-1, keepdims=True) if values.size else 0.0
    scale = np.where(np.asarray(scale) > 0, scale, 1.0)
    small = np.abs(values) <= EPS_SNAP * scale
    return np.where(small, EPS_SNAP * scale, values)


def _signed_area(p):
    u = p[1] - p[0]
    v = p[2] - p[0]
    return 0.5 * (u[0] * v[1] - u[1] * v[0])


def _side(value):
    return CellClass.PLUS if value > 0 else CellClass.MINUS


class CutCellPartition(object):
    """Tessellation of one cell by the straight interface segment.

    Parameters
    ----------
    cell : int or None
        Index of the parent cell, if known.
    classification : :class:`CellClass`
        Final class of the cell after snapping and sliver removal.
    triangles : array of shape (m, 3, 2)
        Counter-clockwise sub-triangles covering the cell.
    sides : list of :class:`CellClass`
        The side of each sub-triangle, ``PLUS`` or ``MINUS``.
    segment : array of shape (2, 2), optional
        End points of the interface piece, for cut cells only.
    normal : array of shape (2,), optional
        Unit normal ``n+`` of the piece, pointing from the plus into the minus side.
    """

    def __init__(self, cell, classification, triangles, sides, segment=None, normal=None):
        self.cell = cell
        self.classification = classification
        self.triangles = np.asarray(triangles, dtype=float)
        self.sides = list(sides)
        self.segment = segment
        self.normal = normal

    def __repr__(self):
        return "CutCellPartition(cell={0}, {1}, {2} sub-triangles)".format(
            self.cell, self.classification.name, len(self.triangles)
        )

    @property
    def is_cut(self):
        return self.classification == CellClass.CUT

    def area(self, side=None):
        """Total area of the sub-triangles of one side, or of all of them."""
        total = 0.0
        for triangle, s in zip(self.triangles, self.sides):
            if side is None or s == side:
                total += abs(_signed_area(triangle))
        return float(total)

    @property
    def length(self):
        if self.segment is None:
            return 0.0
        return float(np.linalg.norm(self.segment[1] - self.segment[0]))


def classify_cell(crack, cell, scale=None):
    """Classify a triangle with respect to the zero level of ``ls1``.

    Parameters
    ----------
    crack : :class:`compas_fdcrack.geometry.CrackDescription`
    cell : array of shape (3, 2)
        Vertex coordinates.
    scale : float, optional
        Reference magnitude for the snapping of vertex zeros.
        Default is the largest vertex value of the cell.

    Returns
    -------
    :class:`CellClass`

    Examples
    --------
    >>> from compas_fdcrack.geometry import CrackDescription
    >>> crack = CrackDescription.from_line(0.317, 0.47, 0.52)
    >>> classify_cell(crack, [[0.3, 0.0], [0.4, 0.0], [0.4, 0.1]]).name
    'CUT'
    >>> classify_cell(CrackDescription.constant(1.0), [[0.3, 0.0], [0.4, 0.0], [0.4, 0.1]]).name
    'PLUS'

    """
    points = np.asarray(cell, dtype=float)
    values = _snap(crack.values(points), scale)
    if np.all(values > 0):
        return CellClass.PLUS
    if np.all(values < 0):
        return CellClass.MINUS
    return CellClass.CUT


def cut_cell(crack, cell, index=None, scale=None):
    """Split a triangle along the zero segment of the linear interpolant of ``ls1``.

    The vertex whose sign differs from the two others keeps a triangle,
    the remaining quadrilateral is split into two triangles.
    A piece whose area does not exceed ``EPS_AREA`` times the cell area is
    dropped and the cell falls back to the side of the larger piece.

    Parameters
    ----------
    crack : :class:`compas_fdcrack.geometry.CrackDescription`
    cell : array of shape (3, 2)
        Counter-clockwise vertex coordinates.
    index : int, optional
        Index of the cell in its mesh.
    scale : float, optional
        See :func:`classify_cell`.

    Returns
    -------
    :class:`CutCellPartition`

    Examples
    --------
    >>> from compas_fdcrack.geometry import CrackDescription
    >>> crack = CrackDescription(lambda x, y: x - 0.5)
    >>> part = cut_cell(crack, [[0.0, 0.0], [1.0, 0.0], [0.0, 1.0]])
    >>> part.segment.tolist()
    [[0.5, 0.5], [0.5, 0.0]]
    >>> part.area(CellClass.MINUS), part.area(CellClass.PLUS)
    (0.375, 0.125)

    """
    points = np.asarray(cell, dtype=float)
    values = _snap(crack.values(points), scale)
    signs = values > 0

    if signs.all() or not signs.any():
        side = _side(values[0])
        return CutCellPartition(index, side, points[None, :, :], [side])

    if signs.sum() == 1:
        a = int(np.flatnonzero(signs)[0])
    else:
        a = int(np.flatnonzero(~signs)[0])
    b = (a + 1) % 3
    c = (a + 2) % 3

    pa, pb, pc = points[a], points[b], points[c]
    va, vb, vc = values[a], values[b], values[c]
    tb = va / (va - vb)
    tc = va / (va - vc)
    p1 = pa + tb * (pb - pa)
    p2 = pa + tc * (pc - pa)

    total = abs(_signed_area(points))
    lone = tb * tc * total
    if min(lone, total - lone) <= EPS_AREA * total:
        side = _side(va) if lone > total - lone else _side(vb)
        return CutCellPartition(index, side, points[None, :, :], [side])

    lone_side = _side(va)
    quad_side = _side(vb)
    triangles = np.array([[pa, p1, p2], [p1, pb, pc], [p1, pc, p2]])
    sides = [lone_side, quad_side, quad_side]

    J = np.column_stack([points[1] - points[0], points[2] - points[0]])
    gradient = np.linalg.solve(J.T, np.array([values[1] - values[0], values[2] - values[0]]))
    normal = -gradient / np.linalg.norm(gradient)

    return CutCellPartition(index, CellClass.CUT, triangles, sides, segment=np.array([p1, p2]), normal=normal)


class CutMesh(object):
    """Background mesh annotated with the classification and the tessellation of its cells.

    Parameters
    ----------
    mesh : :class:`compas_fdcrack.mesh.BackgroundMesh`
    crack : :class:`compas_fdcrack.geometry.CrackDescription`
    classes : array of int, shape (nc,)
        :class:`CellClass` values.
    partitions : dict
        :class:`CutCellPartition` of every cut cell, by cell index.
    """

    def __init__(self, mesh, crack, classes, partitions):
        self.mesh = mesh
        self.crack = crack
        self.classes = classes
        self.partitions = partitions

    def __repr__(self):
        return "CutMesh(plus={0}, minus={1}, cut={2})".format(
            len(self.plus_cells), len(self.minus_cells), len(self.cut_cells)
        )

    @property
    def cut_cells(self):
        return np.flatnonzero(self.classes == CellClass.CUT)

    @property
    def plus_cells(self):
        return np.flatnonzero(self.classes == CellClass.PLUS)

    @property
    def minus_cells(self):
        return np.flatnonzero(self.classes == CellClass.MINUS)

    def cells_on(self, side):
        """Cells whose closure meets the side with positive area: the side's own cells and the cut cells."""
        return np.flatnonzero((self.classes == side) | (self.classes == CellClass.CUT))

    def splits_domain(self):
        """True if both sides carry at least one cell or piece of cell."""
        has_plus = np.any(self.classes == CellClass.PLUS) or len(self.partitions) > 0
        has_minus = np.any(self.classes == CellClass.MINUS) or len(self.partitions) > 0
        return bool(has_plus and has_minus)

    def side_area(self, side):
        areas = np.abs(self.mesh.areas)
        total = areas[self.classes == side].sum()
        for partition in self.partitions.values():
            total += partition.area(side)
        return float(total)

    def interface_length(self):
        return float(sum(partition.length for partition in self.partitions.values()))


def _vertex_levels(mesh, crack):
    values = crack.values(mesh.vertices)
    scale = float(np.abs(values).max()) if len(values) else 0.0
    return _snap(values, scale), scale


def vertex_levels(mesh, crack):
    """Snapped values of ``ls1`` at the vertices of a mesh.

    Values within ``EPS_SNAP`` of zero, relative to the largest magnitude over
    the mesh, become positive. These are the signs used to classify cells.

    Parameters
    ----------
    mesh : :class:`compas_fdcrack.mesh.BackgroundMesh`
    crack : :class:`compas_fdcrack.geometry.CrackDescription`

    Returns
    -------
    array of shape (mesh.vertex_count,)
    """
    return _vertex_levels(mesh, crack)[0]


def cut_mesh(mesh, crack):
    """Classify and tessellate every cell of a mesh.

    Vertex values of ``ls1`` are sampled once and snapped relative to their
    largest magnitude over the mesh, so that neighbouring cells agree on the
    sign of a shared vertex.

    Parameters
    ----------
    mesh : :class:`compas_fdcrack.mesh.BackgroundMesh`
    crack : :class:`compas_fdcrack.geometry.CrackDescription`

    Returns
    -------
    :class:`CutMesh`
    """
    snapped, scale = _vertex_levels(mesh, crack)
    cell_values = snapped[mesh.cells]

    classes = np.full(mesh.cell_count, int(CellClass.CUT), dtype=np.int64)
    classes[np.all(cell_values > 0, axis=1)] = int(CellClass.PLUS)
    classes[np.all(cell_values < 0, axis=1)] = int(CellClass.MINUS)

    partitions = {}
    for cell in np.flatnonzero(classes == CellClass.CUT):
        partition = cut_cell(crack, mesh.cell_points(cell), index=int(cell), scale=scale)
        if partition.is_cut:
            partitions[int(cell)] = partition
        else:
            classes[cell] = int(partition.classification)

    cutmesh = CutMesh(mesh, crack, classes, partitions)
    logger.debug("Classified cells: %r", cutmesh)
    return cutmesh
