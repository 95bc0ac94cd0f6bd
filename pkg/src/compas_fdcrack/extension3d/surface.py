import logging

from compas.datastructures import Mesh
from compas.geometry import area_triangle

from ..exceptions import SurfaceError


__all__ = ["TriSurface", "read_surface", "write_surface", "EPS_DEGENERATE"]


logger = logging.getLogger(__name__)


EPS_DEGENERATE = 1e-14


class TriSurface(object):
    """A crack surface given as a set of triangles.

    Parameters
    ----------
    vertices : list of list of float
        XYZ coordinates.
    triangles : list of list of int
        Vertex index triples.

    Raises
    ------
    SurfaceError
        If an index is out of range, a triangle is degenerate, or an edge is
        shared by more than two triangles.

    Examples
    --------
    >>> surface = TriSurface([[0, 0, 0], [1, 0, 0], [0, 1, 0]], [[0, 1, 2]])
    >>> surface.area(0)
    0.5

    """

    def __init__(self, vertices, triangles):
        self.vertices = [[float(x) for x in xyz] for xyz in vertices]
        self.triangles = [[int(i) for i in tri] for tri in triangles]
        self._edges = None
        self.validate()

    def __repr__(self):
        return "TriSurface(vertices={0}, triangles={1})".format(len(self.vertices), len(self.triangles))

    def __len__(self):
        return len(self.triangles)

    @classmethod
    def from_mesh(cls, mesh):
        """Construct a surface from a triangulated :class:`compas.datastructures.Mesh`."""
        vertices, faces = mesh.to_vertices_and_faces()
        if any(len(face) != 3 for face in faces):
            raise SurfaceError("The mesh should only have triangular faces.")
        return cls(vertices, faces)

    def to_mesh(self):
        return Mesh.from_vertices_and_faces(self.vertices, self.triangles)

    def points(self, index):
        """Corner coordinates of one triangle."""
        return [self.vertices[i] for i in self.triangles[index]]

    def area(self, index):
        return area_triangle(self.points(index))

    def validate(self):
        nv = len(self.vertices)
        if not self.triangles:
            raise SurfaceError("The surface has no triangles.")
        for index, tri in enumerate(self.triangles):
            if len(tri) != 3:
                raise SurfaceError("Triangle {} should have three vertices.".format(index))
            if any(i < 0 or i >= nv for i in tri):
                raise SurfaceError("Triangle {} has a vertex index out of range: {}".format(index, tri))
            if len(set(tri)) != 3 or not self.area(index) > EPS_DEGENERATE:
                raise SurfaceError("Triangle {} is degenerate: {}".format(index, tri))
        for edge, faces in self.edges.items():
            if len(faces) > 2:
                raise SurfaceError("Edge {} is shared by {} triangles.".format(edge, len(faces)))

    @property
    def edges(self):
        """Triangles per undirected edge, keyed by the sorted vertex pair."""
        if self._edges is None:
            edges = {}
            for index, (a, b, c) in enumerate(self.triangles):
                for u, v in ((a, b), (b, c), (c, a)):
                    edges.setdefault((min(u, v), max(u, v)), []).append(index)
            self._edges = edges
        return self._edges

    def neighbors(self, index):
        """Triangles sharing an edge with a triangle, with the shared edge."""
        a, b, c = self.triangles[index]
        for u, v in ((a, b), (b, c), (c, a)):
            for other in self.edges[(min(u, v), max(u, v))]:
                if other != index:
                    yield other, (u, v)


def read_surface(path):
    """Read a surface from ``v x y z`` and ``t i j k`` lines (0-based indices).

    Blank lines and lines starting with ``#`` are skipped.

    Raises
    ------
    SurfaceError
        With the line number of a malformed line, or if the surface is invalid.
    """
    vertices = []
    triangles = []
    origin = []
    with open(path, "r", encoding="utf-8") as f:
        for number, line in enumerate(f, start=1):
            parts = line.split()
            if not parts or parts[0].startswith("#"):
                continue
            try:
                if parts[0] == "v" and len(parts) == 4:
                    vertices.append([float(x) for x in parts[1:]])
                elif parts[0] == "t" and len(parts) == 4:
                    triangles.append([int(i) for i in parts[1:]])
                    origin.append(number)
                else:
                    raise ValueError
            except ValueError:
                raise SurfaceError("Cannot parse {!r}".format(line.strip()), line=number)
    nv = len(vertices)
    for tri, number in zip(triangles, origin):
        if any(i < 0 or i >= nv for i in tri):
            raise SurfaceError("Vertex index out of range: {}".format(tri), line=number)
    surface = TriSurface(vertices, triangles)
    logger.info("Read %r from %s", surface, path)
    return surface


def _write_vertices(f, vertices):
    for x, y, z in vertices:
        f.write("v %.17g %.17g %.17g\n" % (x, y, z))


def _write_triangles(f, triangles):
    for i, j, k in triangles:
        f.write("t %d %d %d\n" % (i, j, k))


def write_surface(surface, path):
    """Write a surface in the format of :func:`read_surface`, coordinates at 17 significant digits."""
    with open(path, "w", encoding="utf-8") as f:
        _write_vertices(f, surface.vertices)
        _write_triangles(f, surface.triangles)
