import numpy as np
from scipy.sparse import bmat


__all__ = ["SaddleSystem", "ErrorMatrices"]


class ErrorMatrices(object):
    """Matrices of the multiplier error metric on the crack extension.

    All displacement blocks act on the full restricted spaces,
    Dirichlet DOFs included.

    Parameters
    ----------
    uu_plus : sparse matrix
        Gram matrix of the plus tractions ``sigma(phi) n+``.
    uu_minus : sparse matrix
        Gram matrix of the minus tractions ``sigma(phi) n-``.
    ul_plus : sparse matrix
        Pairing of the plus tractions with the multipliers.
    ul_minus : sparse matrix
        Pairing of the minus tractions with the multipliers.
    ll : sparse matrix
        Mass matrix of the multipliers.
    cross : sparse matrix
        Pairing of the plus tractions with the minus tractions.
    """

    def __init__(self, uu_plus, uu_minus, ul_plus, ul_minus, ll, cross):
        self.uu_plus = uu_plus
        self.uu_minus = uu_minus
        self.ul_plus = ul_plus
        self.ul_minus = ul_minus
        self.ll = ll
        self.cross = cross

    def denominator(self, u_plus, u_minus):
        return float(u_plus @ (self.uu_plus @ u_plus) + u_minus @ (self.uu_minus @ u_minus))

    def numerator(self, u_plus, u_minus, lam):
        """Squared distance between the multiplier and the tractions of both sides."""
        return float(
            self.denominator(u_plus, u_minus)
            + 2.0 * u_plus @ (self.ul_plus @ lam)
            - 2.0 * u_minus @ (self.ul_minus @ lam)
            + 2.0 * lam @ (self.ll @ lam)
        )

    def compatibility(self, u_plus, u_minus):
        """Squared norm of ``sigma(u+) n+ + sigma(u-) n-``."""
        return float(self.denominator(u_plus, u_minus) + 2.0 * u_plus @ (self.cross @ u_minus))


class SaddleSystem(object):
    """Block system of a fictitious domain problem, reduced to the free DOFs.

    The unknowns are the free plus and minus displacements and the active
    multipliers, and the system reads::

        [ A+   0   B+^T ] [ U+ ]   [ F+ ]
        [ 0    A-  -B-^T] [ U- ] = [ F- ]
        [ B+  -B-  -C   ] [ L  ]   [ G  ]

    Parameters
    ----------
    plus : :class:`compas_fdcrack.spaces.RestrictedSpace`
    minus : :class:`compas_fdcrack.spaces.RestrictedSpace`
    multiplier : :class:`compas_fdcrack.spaces.MultiplierSpace`
    A_plus, A_minus, B_plus, B_minus, C : sparse matrices
    F_plus, F_minus, G : arrays
    gamma : float
        Stabilization weight ``gamma0 * h``.
    lift_plus, lift_minus : arrays
        Full restricted vectors carrying the Dirichlet values.
    mass : sparse matrix
        Mass matrix of the multipliers.
    errors : :class:`ErrorMatrices`, optional
    """

    def __init__(
        self,
        plus,
        minus,
        multiplier,
        A_plus,
        A_minus,
        B_plus,
        B_minus,
        C,
        F_plus,
        F_minus,
        G,
        gamma,
        lift_plus,
        lift_minus,
        mass,
        errors=None,
    ):
        self.plus = plus
        self.minus = minus
        self.multiplier = multiplier
        self.A_plus = A_plus
        self.A_minus = A_minus
        self.B_plus = B_plus
        self.B_minus = B_minus
        self.C = C
        self.F_plus = F_plus
        self.F_minus = F_minus
        self.G = G
        self.gamma = gamma
        self.lift_plus = lift_plus
        self.lift_minus = lift_minus
        self.mass = mass
        self.errors = errors

    def __repr__(self):
        return "SaddleSystem(sizes={0}, gamma={1:.3g})".format(self.sizes, self.gamma)

    @classmethod
    def from_blocks(cls, plus, minus, multiplier, blocks, rhs, gamma, lifts, mass, errors=None):
        """Eliminate the Dirichlet DOFs of full restricted blocks.

        Parameters
        ----------
        plus : :class:`compas_fdcrack.spaces.RestrictedSpace`
        minus : :class:`compas_fdcrack.spaces.RestrictedSpace`
        multiplier : :class:`compas_fdcrack.spaces.MultiplierSpace`
        blocks : tuple
            ``(A+, A-, B+, B-, C)`` on the full restricted spaces.
        rhs : tuple
            ``(F+, F-, G)`` on the full restricted spaces.
        gamma : float
        lifts : tuple
            Dirichlet values ``(g+, g-)`` as full restricted vectors.
        mass : sparse matrix
        errors : :class:`ErrorMatrices`, optional

        Returns
        -------
        :class:`SaddleSystem`
        """
        A_plus, A_minus, B_plus, B_minus, C = blocks
        F_plus, F_minus, G = rhs
        lift_plus, lift_minus = lifts
        fp, dp = plus.free, plus.dirichlet
        fm, dm = minus.free, minus.dirichlet
        A_plus = A_plus.tocsr()
        A_minus = A_minus.tocsr()
        B_plus = B_plus.tocsc()
        B_minus = B_minus.tocsc()
        gp = lift_plus[dp]
        gm = lift_minus[dm]
        F_plus = F_plus[fp] - A_plus[fp][:, dp] @ gp
        F_minus = F_minus[fm] - A_minus[fm][:, dm] @ gm
        G = G - B_plus[:, dp] @ gp + B_minus[:, dm] @ gm
        return cls(
            plus,
            minus,
            multiplier,
            A_plus[fp][:, fp].tocsr(),
            A_minus[fm][:, fm].tocsr(),
            B_plus[:, fp].tocsr(),
            B_minus[:, fm].tocsr(),
            C.tocsr(),
            F_plus,
            F_minus,
            G,
            gamma,
            lift_plus,
            lift_minus,
            mass,
            errors,
        )

    @property
    def sizes(self):
        return (self.A_plus.shape[0], self.A_minus.shape[0], self.C.shape[0])

    def matrix(self):
        """The assembled block matrix."""
        return bmat(
            [
                [self.A_plus, None, self.B_plus.T],
                [None, self.A_minus, -self.B_minus.T],
                [self.B_plus, -self.B_minus, -self.C],
            ],
            format="csc",
        )

    def rhs(self):
        return np.concatenate([self.F_plus, self.F_minus, self.G])

    def split(self, x):
        """Split a block vector into its plus, minus and multiplier parts."""
        n_plus, n_minus, _ = self.sizes
        return x[:n_plus], x[n_plus:n_plus + n_minus], x[n_plus + n_minus:]

    def expand(self, u_plus, u_minus):
        """Full restricted displacements from free ones, Dirichlet values included."""
        full_plus = np.array(self.lift_plus, dtype=float)
        full_minus = np.array(self.lift_minus, dtype=float)
        full_plus[self.plus.free] = u_plus
        full_minus[self.minus.free] = u_minus
        return full_plus, full_minus

    def residual(self, u_plus, u_minus, lam):
        """Norm of the block residual relative to the norm of the right-hand side."""
        x = np.concatenate([u_plus, u_minus, lam])
        b = self.rhs()
        r = self.matrix() @ x - b
        scale = np.linalg.norm(b)
        return float(np.linalg.norm(r) / scale) if scale > 0 else float(np.linalg.norm(r))

    def jump(self, u_plus, u_minus):
        """Weak jump residual ``B+ U+ - B- U- - G`` on the multiplier rows."""
        return self.B_plus @ u_plus - self.B_minus @ u_minus - self.G

    def dual_value(self, u_plus, u_minus, lam):
        """Lagrangian value at displacements minimizing it for the multiplier ``lam``."""
        energy = 0.5 * u_plus @ (self.A_plus @ u_plus) + 0.5 * u_minus @ (self.A_minus @ u_minus)
        load = self.F_plus @ u_plus + self.F_minus @ u_minus
        return float(energy - load + lam @ self.jump(u_plus, u_minus) - 0.5 * lam @ (self.C @ lam))
