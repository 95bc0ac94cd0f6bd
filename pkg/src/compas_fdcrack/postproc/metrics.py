import logging

import numpy as np

from ..assembly import physical_gradients
from ..assembly import traction_operator
from ..exceptions import MetricError
from ..manufactured import interpolate_branch


__all__ = [
    "EPS_NEGATIVE",
    "exact_interpolants",
    "multiplier_error",
    "multiplier_error_quadrature",
    "jump_compatibility",
]


logger = logging.getLogger(__name__)


EPS_NEGATIVE = 1e-12


def exact_interpolants(case, spaces):
    """Interpolants of the exact plus and minus branches on the restricted spaces."""
    return interpolate_branch(case, spaces.plus), interpolate_branch(case, spaces.minus)


def _ratio(numerator, denominator):
    if not denominator > 0:
        raise MetricError("The exact tractions vanish on the crack extension.")
    if numerator < -EPS_NEGATIVE * denominator:
        raise MetricError("Negative squared multiplier error: {:.6e}".format(numerator))
    return 100.0 * np.sqrt(max(numerator, 0.0) / denominator)


def multiplier_error(solution, case, errors=None):
    """Relative distance between the multiplier and the interpolated exact tractions, in percent.

    The squared error is
    ``||sigma(U+) n+ + lambda||^2 + ||sigma(U-) n- - lambda||^2`` on the
    crack extension, with ``U+`` and ``U-`` the interpolants of the exact
    branches, relative to ``||sigma(U+) n+||^2 + ||sigma(U-) n-||^2``. It is
    evaluated through the error matrices of the system.

    Parameters
    ----------
    solution : :class:`compas_fdcrack.solvers.Solution`
    case : :class:`compas_fdcrack.manufactured.ManufacturedCase`
    errors : :class:`compas_fdcrack.assembly.ErrorMatrices`, optional
        Default is the error matrices of the solved system.

    Returns
    -------
    float

    Raises
    ------
    MetricError
        If the squared error is negative beyond rounding or the reference vanishes.
    """
    if errors is None:
        errors = solution.system.errors
    system = solution.system
    u_plus = interpolate_branch(case, system.plus)
    u_minus = interpolate_branch(case, system.minus)
    numerator = errors.numerator(u_plus, u_minus, solution.lam)
    denominator = errors.denominator(u_plus, u_minus)
    value = _ratio(numerator, denominator)
    logger.debug("Multiplier error %.6e %%", value)
    return value


def multiplier_error_quadrature(solution, case, material):
    """The multiplier error of :func:`multiplier_error`, integrated point by point."""
    system = solution.system
    multiplier = system.multiplier
    q = multiplier.quadrature
    uncut = system.plus.space

    grads = physical_gradients(uncut.element, uncut.mesh, q.cells, q.ref_points)
    sigma = traction_operator(material, grads, q.normals)
    udofs = uncut.dofmap.vector_dofs(q.cells)
    t_plus = np.einsum("mai,ma->mi", sigma, system.plus.extend(interpolate_branch(case, system.plus))[udofs])
    t_minus = -np.einsum("mai,ma->mi", sigma, system.minus.extend(interpolate_branch(case, system.minus))[udofs])

    lam = (multiplier.P.T @ solution.lam)[multiplier.dofmap.vector_dofs(q.cells)]
    nb = multiplier.element.ndofs
    lam = np.einsum("mb,mcb->mc", multiplier.values, lam.reshape(len(q.cells), 2, nb))

    w = q.weights
    numerator = float(w @ np.sum((t_plus + lam) ** 2, axis=1) + w @ np.sum((t_minus - lam) ** 2, axis=1))
    denominator = float(w @ np.sum(t_plus ** 2, axis=1) + w @ np.sum(t_minus ** 2, axis=1))
    return _ratio(numerator, denominator)


def jump_compatibility(case, spaces, errors):
    """Squared norm of ``sigma(U+) n+ + sigma(U-) n-`` relative to the sum of both squared norms.

    ``U+`` and ``U-`` are the interpolants of the exact branches; the exact
    fields themselves give zero.

    Parameters
    ----------
    case : :class:`compas_fdcrack.manufactured.ManufacturedCase`
    spaces : :class:`compas_fdcrack.spaces.FdSpaces`
    errors : :class:`compas_fdcrack.assembly.ErrorMatrices`

    Returns
    -------
    float
    """
    u_plus, u_minus = exact_interpolants(case, spaces)
    denominator = errors.denominator(u_plus, u_minus)
    if not denominator > 0:
        return 0.0
    return max(errors.compatibility(u_plus, u_minus), 0.0) / denominator
