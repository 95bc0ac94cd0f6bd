import numpy as np

from ..exceptions import ElementError


__all__ = ["ElementType", "reference_basis", "parse_couple"]


SUPPORTED_DEGREES = (0, 1, 2, 3)

REFERENCE_VERTICES = np.array([[0.0, 0.0], [1.0, 0.0], [0.0, 1.0]])
REFERENCE_EDGES = ((0, 1), (1, 2), (2, 0))


class ElementType(object):
    """Lagrange element of degree ``k`` on the reference triangle.

    The reference triangle has vertices ``(0, 0)``, ``(1, 0)`` and ``(0, 1)``.
    Nodes are numbered vertices first, then the ``k - 1`` interior nodes of
    the edges 01, 12 and 20 (each walked from its first to its second vertex),
    then the interior nodes of the cell.
    The shape functions are the Lagrange basis of the complete polynomial
    space of degree ``k`` on this node lattice.

    Parameters
    ----------
    degree : {0, 1, 2, 3}
    family : str, optional
        Only ``'simplex'`` is available.

    Raises
    ------
    ElementError
        If the degree or the family is not supported.

    Examples
    --------
    >>> ElementType(2).ndofs
    6
    >>> ElementType(0).continuous
    False

    """

    def __init__(self, degree, family="simplex"):
        if family != "simplex":
            raise ElementError("Only simplex elements are available, not {!r}.".format(family))
        if degree not in SUPPORTED_DEGREES:
            raise ElementError("Unsupported element degree: {}. Choose one of {}.".format(degree, SUPPORTED_DEGREES))
        self.degree = int(degree)
        self.family = family
        self._exponents = [(a, n - a) for n in range(self.degree + 1) for a in range(n, -1, -1)]
        self._nodes = self._make_nodes()
        vandermonde = self._monomials(self._nodes)
        self._coefficients = np.linalg.inv(vandermonde)

    def __repr__(self):
        return "ElementType(P{})".format(self.degree)

    def __eq__(self, other):
        return isinstance(other, ElementType) and other.degree == self.degree and other.family == self.family

    def __hash__(self):
        return hash((self.family, self.degree))

    @property
    def name(self):
        return "P{}".format(self.degree)

    @property
    def continuous(self):
        return self.degree >= 1

    @property
    def ndofs(self):
        return (self.degree + 1) * (self.degree + 2) // 2

    @property
    def nodes(self):
        """Reference coordinates of the nodes, shape (ndofs, 2)."""
        return self._nodes

    @property
    def edge_nodes(self):
        """Number of nodes strictly inside each edge."""
        return max(self.degree - 1, 0)

    @property
    def interior_nodes(self):
        """Number of nodes strictly inside the cell."""
        if self.degree == 0:
            return 1
        return (self.degree - 1) * (self.degree - 2) // 2

    def _make_nodes(self):
        k = self.degree
        if k == 0:
            return np.array([[1.0 / 3.0, 1.0 / 3.0]])
        nodes = [p for p in REFERENCE_VERTICES]
        for a, b in REFERENCE_EDGES:
            pa = REFERENCE_VERTICES[a]
            pb = REFERENCE_VERTICES[b]
            for j in range(1, k):
                nodes.append(pa + j / k * (pb - pa))
        for j in range(1, k):
            for i in range(1, k - j):
                nodes.append(np.array([i / k, j / k]))
        return np.array(nodes)

    def _monomials(self, points):
        x = points[..., 0, None]
        y = points[..., 1, None]
        a = np.array([e[0] for e in self._exponents])
        b = np.array([e[1] for e in self._exponents])
        return x ** a * y ** b

    def _monomial_gradients(self, points):
        x = points[..., 0, None]
        y = points[..., 1, None]
        a = np.array([e[0] for e in self._exponents])
        b = np.array([e[1] for e in self._exponents])
        dx = a * x ** np.maximum(a - 1, 0) * y ** b
        dy = b * x ** a * y ** np.maximum(b - 1, 0)
        return np.stack([dx, dy], axis=-1)

    def values(self, points):
        """Shape function values at reference points.

        Parameters
        ----------
        points : array of shape (..., 2)

        Returns
        -------
        array of shape (..., ndofs)
        """
        points = np.asarray(points, dtype=float)
        return self._monomials(points) @ self._coefficients

    def gradients(self, points):
        """Reference gradients of the shape functions.

        Parameters
        ----------
        points : array of shape (..., 2)

        Returns
        -------
        array of shape (..., ndofs, 2)
        """
        points = np.asarray(points, dtype=float)
        grads = self._monomial_gradients(points)
        return np.einsum("...mk,mi->...ik", grads, self._coefficients)


def reference_basis(element, barycentric):
    """Evaluate the shape functions of an element at barycentric coordinates.

    Parameters
    ----------
    element : :class:`ElementType`
    barycentric : array of shape (3,) or (n, 3)
        Barycentric coordinates with respect to the reference vertices.

    Returns
    -------
    values : array of shape (ndofs,) or (n, ndofs)
    gradients : array of shape (ndofs, 2) or (n, ndofs, 2)
        Gradients with respect to the reference coordinates.

    Raises
    ------
    ValueError
        If the point lies outside the reference triangle.

    Examples
    --------
    >>> values, _ = reference_basis(ElementType(1), [1.0, 0.0, 0.0])
    >>> values.round(12).tolist()
    [1.0, 0.0, 0.0]

    """
    barycentric = np.asarray(barycentric, dtype=float)
    if np.any(barycentric < -1e-12) or np.any(np.abs(barycentric.sum(axis=-1) - 1.0) > 1e-12):
        raise ValueError("Barycentric coordinates should be non-negative and sum to one.")
    points = barycentric[..., 1:]
    return element.values(points), element.gradients(points)


def parse_couple(token):
    """Parse an element couple token such as ``'P2/P0'``.

    Parameters
    ----------
    token : str

    Returns
    -------
    tuple of :class:`ElementType`
        The displacement element and the multiplier element.

    Raises
    ------
    ElementError
        If the token is malformed, the displacement degree is zero,
        or the multiplier degree exceeds the displacement degree.

    Examples
    --------
    >>> parse_couple("P2/P0")
    (ElementType(P2), ElementType(P0))

    """
    try:
        left, right = token.strip().upper().split("/")
        if left[0] != "P" or right[0] != "P":
            raise ValueError
        k_u = int(left[1:])
        k_l = int(right[1:])
    except (ValueError, IndexError, AttributeError):
        raise ElementError("Invalid element couple {!r}, expected something like 'P2/P0'.".format(token))
    if k_u < 1:
        raise ElementError("The displacement element should be continuous: {!r}.".format(token))
    if k_l > k_u:
        raise ElementError("The multiplier degree should not exceed the displacement degree: {!r}.".format(token))
    return ElementType(k_u), ElementType(k_l)
