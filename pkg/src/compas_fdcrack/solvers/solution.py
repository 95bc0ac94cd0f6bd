import csv

import numpy as np

from ..geometry import CellClass


__all__ = ["Solution", "write_trace"]


class Solution(object):
    """Solution of a block system.

    Parameters
    ----------
    system : :class:`compas_fdcrack.assembly.SaddleSystem`
    u_plus_free : array
        Free DOFs of the plus displacement.
    u_minus_free : array
        Free DOFs of the minus displacement.
    lam : array
        Active multiplier DOFs.
    solver : str
        ``'monolithic'`` or ``'uzawa'``.
    iterations : int, optional
    ratio : float, optional
        Final ratio ``(g, g) / (g0, g0)`` of the Uzawa gradients.
    converged : bool, optional
    trace : list of tuple, optional
        ``(iteration, gradient ratio, dual value)`` per Uzawa iteration.

    Attributes
    ----------
    u_plus : array
        Plus displacement on the full restricted space, Dirichlet values included.
    u_minus : array
        Minus displacement on the full restricted space, Dirichlet values included.
    """

    def __init__(self, system, u_plus_free, u_minus_free, lam, solver, iterations=0, ratio=0.0, converged=True, trace=None):
        self.system = system
        self.u_plus_free = u_plus_free
        self.u_minus_free = u_minus_free
        self.lam = lam
        self.solver = solver
        self.iterations = iterations
        self.ratio = ratio
        self.converged = converged
        self.trace = trace or []
        self.u_plus, self.u_minus = system.expand(u_plus_free, u_minus_free)

    def __repr__(self):
        return "Solution({0}, iterations={1}, converged={2})".format(self.solver, self.iterations, self.converged)

    @property
    def residual(self):
        return self.system.residual(self.u_plus_free, self.u_minus_free, self.lam)

    def is_finite(self):
        return bool(np.all(np.isfinite(self.u_plus)) and np.all(np.isfinite(self.u_minus)) and np.all(np.isfinite(self.lam)))

    def displacement(self, side):
        """Uncut DOF vector of one side, zero outside its kept DOFs."""
        if side == CellClass.PLUS:
            return self.system.plus.extend(self.u_plus)
        return self.system.minus.extend(self.u_minus)


def write_trace(solution, path):
    """Write the Uzawa convergence trace of a solution as CSV.

    The columns are ``iteration``, ``gradient_ratio`` and ``dual_value``.
    """
    with open(path, "w", newline="", encoding="utf-8") as f:
        writer = csv.writer(f)
        writer.writerow(["iteration", "gradient_ratio", "dual_value"])
        for iteration, ratio, value in solution.trace:
            writer.writerow([iteration, repr(float(ratio)), repr(float(value))])
