import logging

import numpy as np
from scipy.sparse.linalg import splu

from ..exceptions import SolverError
from .solution import Solution


__all__ = ["solve_monolithic", "factorize"]


logger = logging.getLogger(__name__)


def factorize(matrix, block):
    """Sparse LU factorization of a block, raising :class:`SolverError` when it is singular."""
    try:
        return splu(matrix.tocsc())
    except RuntimeError as e:
        raise SolverError("The {} block is singular: {}".format(block, e), block=block)


def _singular_block(system):
    for matrix, block in ((system.A_plus, "A+"), (system.A_minus, "A-")):
        try:
            splu(matrix.tocsc())
        except RuntimeError:
            return block
    return "multiplier"


def solve_monolithic(system):
    """Solve the full block system with a sparse direct factorization.

    Parameters
    ----------
    system : :class:`compas_fdcrack.assembly.SaddleSystem`

    Returns
    -------
    :class:`compas_fdcrack.solvers.Solution`

    Raises
    ------
    SolverError
        If the multiplier space is empty or the factorization breaks down.
        The error names the failing block: ``'A+'``, ``'A-'`` or
        ``'multiplier'``, the latter meaning that the multipliers are not
        controlled by the displacements.
    """
    if system.multiplier.count == 0:
        raise SolverError("The multiplier space is empty.", block="multiplier")
    matrix = system.matrix()
    rhs = system.rhs()
    try:
        lu = splu(matrix.tocsc())
    except RuntimeError as e:
        block = _singular_block(system)
        raise SolverError("The block system is singular ({}): {}".format(block, e), block=block)
    x = lu.solve(rhs)
    if not np.all(np.isfinite(x)):
        block = _singular_block(system)
        raise SolverError("The block system has no finite solution ({}).".format(block), block=block)
    u_plus, u_minus, lam = system.split(x)
    solution = Solution(system, u_plus, u_minus, lam, "monolithic")
    logger.info("Monolithic solve: %d unknowns, relative residual %.3e", len(x), solution.residual)
    return solution
