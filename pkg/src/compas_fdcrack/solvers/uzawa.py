import logging

import numpy as np

from ..exceptions import SolverError
from .direct import factorize
from .solution import Solution


__all__ = ["UzawaConfig", "uzawa_cg"]


logger = logging.getLogger(__name__)


class UzawaConfig(object):
    """Settings of the Uzawa conjugate gradient.

    Parameters
    ----------
    eps : float, optional
        Stop when ``(g, g) < eps (g0, g0)``. Default is ``1e-8``.
    k_max : int, optional
        Iteration cap. Default is ``500``.
    lambda0 : array, optional
        Initial multiplier. Default is zero.

    Raises
    ------
    ValueError
        If ``eps <= 0`` or ``k_max < 1``.
    """

    def __init__(self, eps=1e-8, k_max=500, lambda0=None):
        if not eps > 0:
            raise ValueError("The tolerance should be positive: {}".format(eps))
        if int(k_max) < 1:
            raise ValueError("The iteration cap should be at least one: {}".format(k_max))
        self.eps = float(eps)
        self.k_max = int(k_max)
        self.lambda0 = lambda0

    def __repr__(self):
        return "UzawaConfig(eps={0}, k_max={1})".format(self.eps, self.k_max)


def uzawa_cg(system, config=None):
    """Maximize the dual functional with a Fletcher-Reeves conjugate gradient.

    Every iteration solves one uncoupled problem per side with the factors
    computed once. Inner products of multipliers are taken in the mass
    matrix of the crack extension, and the gradient of the dual functional
    is the weak jump ``[u] - d``.

    Parameters
    ----------
    system : :class:`compas_fdcrack.assembly.SaddleSystem`
        An unstabilized system.
    config : :class:`UzawaConfig`, optional

    Returns
    -------
    :class:`compas_fdcrack.solvers.Solution`
        Flagged as not converged if the iteration cap is reached.

    Raises
    ------
    ValueError
        If the system is stabilized.
    SolverError
        If a block cannot be factorized or a search direction lies in the
        kernel of the coupling.
    """
    if system.gamma > 0:
        raise ValueError("The Uzawa algorithm runs on the unstabilized system, got gamma={}".format(system.gamma))
    if config is None:
        config = UzawaConfig()

    A_plus = factorize(system.A_plus, "A+")
    A_minus = factorize(system.A_minus, "A-")
    mass = factorize(system.mass, "multiplier")
    B_plus = system.B_plus
    B_minus = system.B_minus

    def primal(lam):
        u_plus = A_plus.solve(system.F_plus - B_plus.T @ lam)
        u_minus = A_minus.solve(system.F_minus + B_minus.T @ lam)
        return u_plus, u_minus

    nm = system.multiplier.count
    lam = np.zeros(nm) if config.lambda0 is None else np.array(config.lambda0, dtype=float)

    u_plus, u_minus = primal(lam)
    r = system.jump(u_plus, u_minus)
    g = mass.solve(r)
    gg = float(g @ r)
    gg0 = gg
    reference = gg0
    if np.any(lam != 0):
        z_plus, z_minus = primal(np.zeros(nm))
        r_zero = system.jump(z_plus, z_minus)
        reference = max(gg0, float(mass.solve(r_zero) @ r_zero))

    trace = [(0, 1.0, system.dual_value(u_plus, u_minus, lam))]
    direction = g.copy()
    k = 0
    while gg > 0 and not gg < config.eps * reference and k < config.k_max:
        omega_plus = -A_plus.solve(B_plus.T @ direction)
        omega_minus = A_minus.solve(B_minus.T @ direction)
        jump = B_plus @ omega_plus - B_minus @ omega_minus
        denominator = float(direction @ jump)
        if denominator == 0.0 or not np.isfinite(denominator):
            raise SolverError("The search direction lies in the kernel of the coupling.", block="multiplier")
        t = -float(direction @ r) / denominator

        lam = lam + t * direction
        u_plus = u_plus + t * omega_plus
        u_minus = u_minus + t * omega_minus
        r = r + t * jump
        g = mass.solve(r)

        gg_next = float(g @ r)
        beta = gg_next / gg
        direction = g + beta * direction
        gg = gg_next
        k += 1

        value = system.dual_value(u_plus, u_minus, lam)
        trace.append((k, gg / gg0, value))
        logger.debug("Uzawa iteration %d: gradient ratio %.3e, dual value %.12g", k, gg / gg0, value)

    converged = gg == 0 or gg < config.eps * reference
    ratio = gg / gg0 if gg0 > 0 else 0.0
    if converged:
        logger.info("Uzawa converged in %d iterations, gradient ratio %.3e", k, ratio)
    else:
        logger.warning("Uzawa stopped at the iteration cap %d, gradient ratio %.3e", k, ratio)
    return Solution(system, u_plus, u_minus, lam, "uzawa", iterations=k, ratio=ratio, converged=converged, trace=trace)
