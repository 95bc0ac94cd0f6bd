import numpy as np


__all__ = ["ProblemData"]


def _zero_field(points):
    return np.zeros(np.shape(points)[:-1] + (2,))


def _as_field(value):
    if value is None:
        return _zero_field
    if callable(value):
        return value
    vector = np.asarray(value, dtype=float).reshape(2)

    def field(points):
        return np.broadcast_to(vector, np.shape(points)[:-1] + (2,)).copy()

    return field


class ProblemData(object):
    """Loads and boundary data of a cracked elastic body.

    Every field maps points of shape (n, 2) to vectors of shape (n, 2).

    Parameters
    ----------
    body_force : callable or vector, optional
        Volume load ``f``. Default is zero.
    pressure : float, optional
        Constant pressure on the crack, giving the traction ``p n`` on both faces.
    traction : callable, optional
        General crack data ``g(points, normals)``, giving ``+g`` on the plus face
        and ``-g`` on the minus face. ``normals`` are the plus normals.
        Added to the pressure traction.
    jump : callable or vector, optional
        Prescribed jump ``u+ - u-`` on the crack extension. Default is zero.
    dirichlet_plus : callable or vector, optional
        Boundary values of the plus displacement. Default is zero.
    dirichlet_minus : callable or vector, optional
        Boundary values of the minus displacement. Default is zero.

    Examples
    --------
    >>> data = ProblemData(pressure=5.0)
    >>> data.crack_traction([[0.0, 0.0]], [[0.0, 1.0]], plus=False).tolist()
    [[-0.0, -5.0]]

    """

    def __init__(self, body_force=None, pressure=0.0, traction=None, jump=None, dirichlet_plus=None, dirichlet_minus=None):
        self.body_force = _as_field(body_force)
        self.pressure = float(pressure)
        self.traction = traction
        self.jump = _as_field(jump)
        self.dirichlet_plus = _as_field(dirichlet_plus)
        self.dirichlet_minus = _as_field(dirichlet_minus)

    def __repr__(self):
        return "ProblemData(pressure={0})".format(self.pressure)

    def crack_traction(self, points, normals, plus=True):
        """Traction applied on one face of the crack.

        Parameters
        ----------
        points : array of shape (n, 2)
        normals : array of shape (n, 2)
            Plus normals at the points.
        plus : bool, optional
            The face, ``True`` for the plus face.

        Returns
        -------
        array of shape (n, 2)
        """
        points = np.asarray(points, dtype=float)
        normals = np.asarray(normals, dtype=float)
        sign = 1.0 if plus else -1.0
        traction = sign * self.pressure * normals
        if self.traction is not None:
            traction = traction + sign * np.asarray(self.traction(points, normals), dtype=float)
        return traction
