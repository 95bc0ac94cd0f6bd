"""
********************************************************************************
compas_fdcrack.extension3d
********************************************************************************

.. currentmodule:: compas_fdcrack.extension3d

Apex-cone extension of a 3D crack given as a set of triangles, splitting
space into a plus and a minus side.

.. autosummary::
    :toctree: generated/

    TriSurface
    ExtendedCrack
    PointSide
    read_surface
    write_surface
    triangle_apex
    orient_surface
    build_extension
    classify_point
    classify_points
    write_extension

"""
from .surface import TriSurface  # noqa: F401
from .surface import read_surface  # noqa: F401
from .surface import write_surface  # noqa: F401
from .extension import PointSide  # noqa: F401
from .extension import ExtendedCrack  # noqa: F401
from .extension import triangle_apex  # noqa: F401
from .extension import orient_surface  # noqa: F401
from .extension import build_extension  # noqa: F401
from .extension import classify_point  # noqa: F401
from .extension import classify_points  # noqa: F401
from .extension import write_extension  # noqa: F401


__all__ = [
    "TriSurface",
    "read_surface",
    "write_surface",
    "PointSide",
    "ExtendedCrack",
    "triangle_apex",
    "orient_surface",
    "build_extension",
    "classify_point",
    "classify_points",
    "write_extension",
]
