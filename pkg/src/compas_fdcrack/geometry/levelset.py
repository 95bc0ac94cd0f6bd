import numpy as np


__all__ = ["CrackDescription"]


class CrackDescription(object):
    """Level-set description of a crack and its extension.

    ``ls1 = 0`` is the whole interface, the crack itself is the part of it where
    ``ls2 < 0`` and ``ls3 < 0``, and the rest is the artificial extension.
    ``ls1 > 0`` is the plus side.

    Parameters
    ----------
    ls1 : callable
        ``ls1(x, y)`` on numpy arrays.
    ls2 : callable, optional
        Default is a constant ``+1``, i.e. no crack, only extension.
    ls3 : callable, optional
        Default is a constant ``+1``.

    Examples
    --------
    >>> crack = CrackDescription.from_line(0.317, 0.47, 0.52)
    >>> round(float(crack.ls1(0.5, 0.9)), 12)
    0.534

    """

    def __init__(self, ls1, ls2=None, ls3=None):
        self.ls1 = ls1
        self.ls2 = ls2 or _constant(1.0)
        self.ls3 = ls3 or _constant(1.0)
        self.parameters = {}

    def __repr__(self):
        if self.parameters:
            items = ", ".join("{}={}".format(key, value) for key, value in sorted(self.parameters.items()))
            return "CrackDescription({})".format(items)
        return "CrackDescription()"

    @classmethod
    def from_line(cls, x0, x_a, x_b, slope=2.0, y0=0.0):
        """Straight crack along ``y = y0 + slope * (x - x0)``, between the abscissas ``x_a`` and ``x_b``.

        Parameters
        ----------
        x0 : float
        x_a : float
        x_b : float
        slope : float, optional
            Default is ``2.0``.
        y0 : float, optional
            Default is ``0.0``.

        Returns
        -------
        :class:`CrackDescription`
        """
        if not x_a < x_b:
            raise ValueError("The crack should satisfy x_a < x_b: {} >= {}".format(x_a, x_b))

        def ls1(x, y):
            return np.asarray(y, dtype=float) - y0 - slope * (np.asarray(x, dtype=float) - x0)

        def ls2(x, y):
            return x_a - np.asarray(x, dtype=float) + 0.0 * np.asarray(y, dtype=float)

        def ls3(x, y):
            return np.asarray(x, dtype=float) - x_b + 0.0 * np.asarray(y, dtype=float)

        crack = cls(ls1, ls2, ls3)
        crack.parameters = {"x0": x0, "x_a": x_a, "x_b": x_b, "slope": slope, "y0": y0}
        return crack

    @classmethod
    def constant(cls, value):
        """A level set without zero crossing, e.g. to test unsplit domains."""
        crack = cls(_constant(value))
        crack.parameters = {"ls1": value}
        return crack

    def on_crack(self, points):
        """Flag points of the interface that belong to the crack rather than its extension.

        Parameters
        ----------
        points : array of shape (n, 2)

        Returns
        -------
        array of bool, shape (n,)
        """
        points = np.asarray(points, dtype=float)
        x = points[..., 0]
        y = points[..., 1]
        return (self.ls2(x, y) < 0) & (self.ls3(x, y) < 0)

    def values(self, points):
        """``ls1`` at points of shape (..., 2)."""
        points = np.asarray(points, dtype=float)
        return np.asarray(self.ls1(points[..., 0], points[..., 1]), dtype=float) * np.ones(points.shape[:-1])


def _constant(value):
    def ls(x, y):
        return value + 0.0 * np.asarray(x, dtype=float)
    return ls
