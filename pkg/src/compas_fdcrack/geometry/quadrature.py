from math import ceil

import numpy as np
from scipy.special import roots_jacobi


__all__ = ["segment_rule", "triangle_rule", "map_triangle_rule"]


_TRIANGLE_RULES = {}
_SEGMENT_RULES = {}


def segment_rule(degree):
    """Gauss-Legendre rule on ``[0, 1]`` exact for polynomials of the given degree.

    Parameters
    ----------
    degree : int

    Returns
    -------
    points : array of shape (q,)
    weights : array of shape (q,)
        Sum to one.

    Examples
    --------
    >>> points, weights = segment_rule(3)
    >>> len(points), round(float(weights.sum()), 12)
    (2, 1.0)

    """
    degree = max(int(degree), 1)
    if degree not in _SEGMENT_RULES:
        n = int(ceil((degree + 1) / 2.0))
        x, w = np.polynomial.legendre.leggauss(n)
        _SEGMENT_RULES[degree] = (0.5 * (x + 1.0), 0.5 * w)
    return _SEGMENT_RULES[degree]


def triangle_rule(degree):
    """Collapsed Gauss rule on the reference triangle exact for polynomials of the given degree.

    The square ``[0, 1]^2`` is collapsed onto the triangle by
    ``xi = u, eta = (1 - u) v``; the Jacobian ``1 - u`` is absorbed by a
    Gauss-Jacobi rule in ``u``, so all weights are positive.

    Parameters
    ----------
    degree : int

    Returns
    -------
    points : array of shape (q, 2)
    weights : array of shape (q,)
        Sum to the reference area ``1/2``.

    Examples
    --------
    >>> points, weights = triangle_rule(2)
    >>> round(float(weights @ points.sum(axis=1)), 12)
    0.333333333333

    """
    degree = max(int(degree), 1)
    if degree not in _TRIANGLE_RULES:
        n = int(ceil((degree + 1) / 2.0))
        xu, wu = roots_jacobi(n, 1.0, 0.0)
        u = 0.5 * (xu + 1.0)
        wu = 0.25 * wu
        v, wv = segment_rule(2 * n - 1)
        U, V = np.meshgrid(u, v, indexing="ij")
        points = np.column_stack([U.ravel(), ((1.0 - U) * V).ravel()])
        weights = np.outer(wu, wv).ravel()
        _TRIANGLE_RULES[degree] = (points, weights)
    return _TRIANGLE_RULES[degree]


def map_triangle_rule(triangles, degree):
    """Map the reference rule onto physical triangles.

    Parameters
    ----------
    triangles : array of shape (m, 3, 2)
    degree : int

    Returns
    -------
    points : array of shape (m, q, 2)
    weights : array of shape (m, q)
        Physical weights, summing to the triangle areas.
    """
    triangles = np.asarray(triangles, dtype=float)
    ref_points, ref_weights = triangle_rule(degree)
    p0 = triangles[:, 0, :]
    J = np.stack([triangles[:, 1] - p0, triangles[:, 2] - p0], axis=2)
    det = np.abs(np.linalg.det(J))
    points = p0[:, None, :] + np.einsum("mij,qj->mqi", J, ref_points)
    weights = det[:, None] * ref_weights[None, :]
    return points, weights
