import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse import csr_matrix

from ..geometry import triangle_rule


__all__ = [
    "physical_gradients",
    "vector_values",
    "strain_operator",
    "traction_operator",
    "element_stiffness",
    "scatter_matrix",
    "scatter_vector",
    "StiffnessCache",
]


CHUNK = 4096


def physical_gradients(element, mesh, cells, ref_points):
    """Physical gradients of the scalar shape functions.

    Parameters
    ----------
    element : :class:`compas_fdcrack.mesh.ElementType`
    mesh : :class:`compas_fdcrack.mesh.BackgroundMesh`
    cells : array of int, shape (m,)
    ref_points : array of shape (m, ..., 2)

    Returns
    -------
    array of shape (m, ..., nb, 2)
    """
    grads = element.gradients(ref_points)
    inv = mesh.inverse_jacobians[np.asarray(cells)]
    extra = grads.ndim - 3
    inv = inv.reshape(inv.shape[:1] + (1,) * extra + (2, 2))
    return np.einsum("...bk,...ki->...bi", grads, inv)


def vector_values(values):
    """Values of the component-blocked vector shape functions, shape (..., 2 nb, 2)."""
    values = np.asarray(values, dtype=float)
    nb = values.shape[-1]
    out = np.zeros(values.shape[:-1] + (2, nb, 2))
    out[..., 0, :, 0] = values
    out[..., 1, :, 1] = values
    return out.reshape(values.shape[:-1] + (2 * nb, 2))


def strain_operator(grads):
    """Voigt strain of the vector shape functions, shape (..., 3, 2 nb)."""
    nb = grads.shape[-2]
    B = np.zeros(grads.shape[:-2] + (3, 2 * nb))
    B[..., 0, :nb] = grads[..., 0]
    B[..., 1, nb:] = grads[..., 1]
    B[..., 2, :nb] = grads[..., 1]
    B[..., 2, nb:] = grads[..., 0]
    return B


def traction_operator(material, grads, normals):
    """Tractions ``sigma(phi) n`` of the vector shape functions.

    Parameters
    ----------
    material : :class:`compas_fdcrack.assembly.Material`
    grads : array of shape (m, nb, 2)
        Physical gradients of the scalar shape functions.
    normals : array of shape (m, 2)

    Returns
    -------
    array of shape (m, 2 nb, 2)
    """
    m, nb, _ = grads.shape
    gn = np.einsum("mbi,mi->mb", grads, normals)
    eye = np.eye(2)
    shear = eye[None, :, None, :] * gn[:, None, :, None] + normals[:, :, None, None] * grads[:, None, :, :]
    volumetric = grads.transpose(0, 2, 1)[:, :, :, None] * normals[:, None, None, :]
    T = material.mu_l * shear + material.lambda_l * volumetric
    return T.reshape(m, 2 * nb, 2)


def element_stiffness(material, grads, weights):
    """Stiffness matrices of quadrature entries.

    Parameters
    ----------
    material : :class:`compas_fdcrack.assembly.Material`
    grads : array of shape (m, q, nb, 2)
    weights : array of shape (m, q)

    Returns
    -------
    array of shape (m, 2 nb, 2 nb)
    """
    B = strain_operator(grads)
    DB = np.einsum("ij,mqjb->mqib", material.voigt, B)
    return np.einsum("mq,mqia,mqib->mab", weights, B, DB)


def scatter_matrix(local, rows, cols, shape):
    """Sum local matrices into a sparse matrix.

    Parameters
    ----------
    local : array of shape (m, a, b)
    rows : array of int, shape (m, a)
    cols : array of int, shape (m, b)
    shape : tuple of int

    Returns
    -------
    :class:`scipy.sparse.csr_matrix`
    """
    matrix = csr_matrix(shape)
    for start in range(0, len(local), CHUNK):
        block = local[start:start + CHUNK]
        r = np.broadcast_to(rows[start:start + CHUNK, :, None], block.shape)
        c = np.broadcast_to(cols[start:start + CHUNK, None, :], block.shape)
        matrix = matrix + coo_matrix((block.ravel(), (r.ravel(), c.ravel())), shape=shape).tocsr()
    return matrix


def scatter_vector(local, rows, size):
    """Sum local vectors of shape (m, a) into a vector of the given size."""
    return np.bincount(np.asarray(rows).ravel(), weights=np.asarray(local).ravel(), minlength=size)


class StiffnessCache(object):
    """Element stiffness matrices of the whole cells of a mesh.

    Cells with the same Jacobian share their element matrix, so a structured
    mesh only needs two of them.

    Parameters
    ----------
    mesh : :class:`compas_fdcrack.mesh.BackgroundMesh`
    element : :class:`compas_fdcrack.mesh.ElementType`
    material : :class:`compas_fdcrack.assembly.Material`
    degree : int
        Degree of the triangle rule.
    """

    def __init__(self, mesh, element, material, degree):
        self.mesh = mesh
        self.element = element
        self.material = material
        self.degree = degree
        keys = np.round(mesh.jacobians.reshape(-1, 4) / mesh.h, 10)
        unique, first, inverse = np.unique(keys, axis=0, return_index=True, return_inverse=True)
        self.shape_index = np.asarray(inverse).reshape(-1)
        points, weights = triangle_rule(degree)
        cells = first
        q = len(weights)
        ref = np.broadcast_to(points, (len(cells), q, 2))
        grads = physical_gradients(element, mesh, cells, ref)
        w = np.abs(mesh.determinants[cells])[:, None] * weights[None, :]
        self.shapes = element_stiffness(material, grads, w)

    def __repr__(self):
        return "StiffnessCache({0}, shapes={1})".format(self.element.name, len(self.shapes))

    def matrices(self, cells):
        """Element matrices of cells, shape (m, 2 nb, 2 nb)."""
        return self.shapes[self.shape_index[np.asarray(cells)]]
