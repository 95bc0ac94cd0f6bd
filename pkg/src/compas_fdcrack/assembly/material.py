import numpy as np


__all__ = ["Material"]


class Material(object):
    """Isotropic linear elastic material.

    Parameters
    ----------
    lambda_l : float
        First Lamé coefficient.
    mu_l : float
        Shear modulus.

    Raises
    ------
    ValueError
        If ``mu_l <= 0`` or ``lambda_l < 0``.

    Examples
    --------
    >>> material = Material.from_young_poisson(5000.0, 0.25)
    >>> material.lambda_l, material.mu_l
    (2000.0, 2000.0)

    """

    def __init__(self, lambda_l=1.0, mu_l=1.0):
        if not mu_l > 0:
            raise ValueError("The shear modulus should be positive: {}".format(mu_l))
        if lambda_l < 0:
            raise ValueError("The first Lame coefficient should not be negative: {}".format(lambda_l))
        self.lambda_l = float(lambda_l)
        self.mu_l = float(mu_l)

    def __repr__(self):
        return "Material(lambda_l={0}, mu_l={1})".format(self.lambda_l, self.mu_l)

    @classmethod
    def from_young_poisson(cls, young, poisson):
        """Construct a material from a Young modulus and a Poisson ratio."""
        if not young > 0:
            raise ValueError("The Young modulus should be positive: {}".format(young))
        if not 0 <= poisson < 0.5:
            raise ValueError("The Poisson ratio should lie in [0, 0.5): {}".format(poisson))
        lambda_l = young * poisson / ((1.0 + poisson) * (1.0 - 2.0 * poisson))
        mu_l = young / (2.0 * (1.0 + poisson))
        return cls(lambda_l, mu_l)

    @property
    def young(self):
        return self.mu_l * (3.0 * self.lambda_l + 2.0 * self.mu_l) / (self.lambda_l + self.mu_l)

    @property
    def poisson(self):
        return self.lambda_l / (2.0 * (self.lambda_l + self.mu_l))

    @property
    def voigt(self):
        """Plane strain elasticity matrix acting on ``(e_xx, e_yy, 2 e_xy)``."""
        lam = self.lambda_l
        mu = self.mu_l
        return np.array([[lam + 2 * mu, lam, 0.0], [lam, lam + 2 * mu, 0.0], [0.0, 0.0, mu]])

    def stress(self, gradient):
        """Lamé stress of displacement gradients.

        Parameters
        ----------
        gradient : array of shape (..., 2, 2)
            ``gradient[..., i, j]`` is the derivative of component ``i`` along ``j``.

        Returns
        -------
        array of shape (..., 2, 2)
        """
        gradient = np.asarray(gradient, dtype=float)
        strain = 0.5 * (gradient + np.swapaxes(gradient, -1, -2))
        trace = strain[..., 0, 0] + strain[..., 1, 1]
        return 2.0 * self.mu_l * strain + self.lambda_l * trace[..., None, None] * np.eye(2)

    def traction(self, gradient, normal):
        """Lamé traction ``sigma(u) n``."""
        return np.einsum("...ij,...j->...i", self.stress(gradient), normal)
