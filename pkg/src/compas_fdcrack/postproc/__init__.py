"""
********************************************************************************
compas_fdcrack.postproc
********************************************************************************

.. currentmodule:: compas_fdcrack.postproc

Error norms, multiplier metrics and convergence rates.

Errors
======

.. autosummary::
    :toctree: generated/

    displacement_errors
    field_errors
    multiplier_error
    multiplier_error_quadrature
    jump_compatibility

Rates
=====

.. autosummary::
    :toctree: generated/

    fit_rate
    rate_table

Fields
======

.. autosummary::
    :toctree: generated/

    evaluate_field
    vertex_displacements
    write_vertex_displacements

"""
from .norms import evaluate_field  # noqa: F401
from .norms import field_errors  # noqa: F401
from .norms import displacement_errors  # noqa: F401
from .metrics import EPS_NEGATIVE  # noqa: F401
from .metrics import exact_interpolants  # noqa: F401
from .metrics import multiplier_error  # noqa: F401
from .metrics import multiplier_error_quadrature  # noqa: F401
from .metrics import jump_compatibility  # noqa: F401
from .rates import fit_rate  # noqa: F401
from .rates import rate_table  # noqa: F401
from .fields import vertex_displacements  # noqa: F401
from .fields import write_vertex_displacements  # noqa: F401


__all__ = [
    "evaluate_field",
    "field_errors",
    "displacement_errors",
    "EPS_NEGATIVE",
    "exact_interpolants",
    "multiplier_error",
    "multiplier_error_quadrature",
    "jump_compatibility",
    "fit_rate",
    "rate_table",
    "vertex_displacements",
    "write_vertex_displacements",
]
