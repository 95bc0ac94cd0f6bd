"""
********************************************************************************
compas_fdcrack.geometry
********************************************************************************

.. currentmodule:: compas_fdcrack.geometry

Level-set description of the crack, cut cells and quadrature.

Level sets
==========

.. autosummary::
    :toctree: generated/

    CrackDescription

Cut cells
=========

.. autosummary::
    :toctree: generated/

    CellClass
    CutCellPartition
    CutMesh
    classify_cell
    cut_cell
    cut_mesh
    vertex_levels

Quadrature
==========

.. autosummary::
    :toctree: generated/

    InterfaceTag
    SubdomainQuadrature
    InterfaceQuadrature
    subdomain_quadrature
    interface_quadrature
    segment_rule
    triangle_rule
    map_triangle_rule

"""
from .levelset import CrackDescription  # noqa: F401
from .cutcell import CellClass  # noqa: F401
from .cutcell import CutCellPartition  # noqa: F401
from .cutcell import CutMesh  # noqa: F401
from .cutcell import classify_cell  # noqa: F401
from .cutcell import cut_cell  # noqa: F401
from .cutcell import cut_mesh  # noqa: F401
from .cutcell import vertex_levels  # noqa: F401
from .cutcell import EPS_SNAP  # noqa: F401
from .cutcell import EPS_AREA  # noqa: F401
from .quadrature import segment_rule  # noqa: F401
from .quadrature import triangle_rule  # noqa: F401
from .quadrature import map_triangle_rule  # noqa: F401
from .integration import InterfaceTag  # noqa: F401
from .integration import SubdomainQuadrature  # noqa: F401
from .integration import InterfaceQuadrature  # noqa: F401
from .integration import subdomain_quadrature  # noqa: F401
from .integration import interface_quadrature  # noqa: F401


__all__ = [
    "CrackDescription",
    "CellClass",
    "CutCellPartition",
    "CutMesh",
    "classify_cell",
    "cut_cell",
    "cut_mesh",
    "vertex_levels",
    "EPS_SNAP",
    "EPS_AREA",
    "segment_rule",
    "triangle_rule",
    "map_triangle_rule",
    "InterfaceTag",
    "SubdomainQuadrature",
    "InterfaceQuadrature",
    "subdomain_quadrature",
    "interface_quadrature",
]
