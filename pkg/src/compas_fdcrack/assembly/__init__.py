"""
********************************************************************************
compas_fdcrack.assembly
********************************************************************************

.. currentmodule:: compas_fdcrack.assembly

Material, problem data and the assembly of the block system.

Data
====

.. autosummary::
    :toctree: generated/

    Material
    ProblemData
    SaddleSystem
    ErrorMatrices
    InterfaceOperators

Assembly
========

.. autosummary::
    :toctree: generated/

    assemble_base_stiffness
    assemble_subdomain_stiffness
    assemble_interface_operators
    assemble_coupling
    assemble_stabilized
    assemble_rhs
    assemble_error_matrices
    dump_triplets

Crack updates
=============

.. autosummary::
    :toctree: generated/

    StiffnessCache
    Discretization
    FictitiousDomainModel

"""
from .material import Material  # noqa: F401
from .problem import ProblemData  # noqa: F401
from .system import SaddleSystem  # noqa: F401
from .system import ErrorMatrices  # noqa: F401
from .kernels import StiffnessCache  # noqa: F401
from .kernels import physical_gradients  # noqa: F401
from .kernels import vector_values  # noqa: F401
from .kernels import traction_operator  # noqa: F401
from .operators import InterfaceOperators  # noqa: F401
from .operators import volume_degree  # noqa: F401
from .operators import interface_degree  # noqa: F401
from .operators import assemble_base_stiffness  # noqa: F401
from .operators import assemble_subdomain_stiffness  # noqa: F401
from .operators import assemble_interface_operators  # noqa: F401
from .operators import assemble_coupling  # noqa: F401
from .operators import assemble_stabilized  # noqa: F401
from .operators import assemble_rhs  # noqa: F401
from .operators import assemble_error_matrices  # noqa: F401
from .operators import dump_triplets  # noqa: F401
from .model import Discretization  # noqa: F401
from .model import FictitiousDomainModel  # noqa: F401


__all__ = [
    "Material",
    "ProblemData",
    "SaddleSystem",
    "ErrorMatrices",
    "StiffnessCache",
    "physical_gradients",
    "vector_values",
    "traction_operator",
    "InterfaceOperators",
    "volume_degree",
    "interface_degree",
    "assemble_base_stiffness",
    "assemble_subdomain_stiffness",
    "assemble_interface_operators",
    "assemble_coupling",
    "assemble_stabilized",
    "assemble_rhs",
    "assemble_error_matrices",
    "dump_triplets",
    "Discretization",
    "FictitiousDomainModel",
]
