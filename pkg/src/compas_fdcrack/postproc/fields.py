import numpy as np

from ..geometry import CellClass
from ..geometry import vertex_levels


__all__ = ["vertex_displacements", "write_vertex_displacements"]


def vertex_displacements(solution, crack):
    """Displacement at the vertices of the background mesh.

    A vertex takes the plus value where its snapped ``ls1`` value is
    positive and the minus value elsewhere, so vertices on the crack line
    follow the cell classification.

    Parameters
    ----------
    solution : :class:`compas_fdcrack.solvers.Solution`
    crack : :class:`compas_fdcrack.geometry.CrackDescription`

    Returns
    -------
    array of shape (n, 4)
        Rows ``x, y, ux, uy``.
    """
    space = solution.system.plus.space
    mesh = space.mesh
    nv = mesh.vertex_count
    ns = space.dofmap.scalar_count
    rows = np.empty((nv, 4))
    rows[:, :2] = mesh.vertices
    plus = solution.displacement(CellClass.PLUS)
    minus = solution.displacement(CellClass.MINUS)
    on_plus = vertex_levels(mesh, crack) > 0
    for c in range(2):
        rows[:, 2 + c] = np.where(on_plus, plus[c * ns:c * ns + nv], minus[c * ns:c * ns + nv])
    return rows


def write_vertex_displacements(rows, path):
    """Write ``x y ux uy`` lines."""
    with open(path, "w", encoding="utf-8") as f:
        for x, y, ux, uy in rows:
            f.write("{!r} {!r} {!r} {!r}\n".format(float(x), float(y), float(ux), float(uy)))
