"""
Nearby and vanishing cycles, the three extensions across the puncture and
duality, on monodromy pairs and disk quads.

With a quad written (V, V', can, var)::

    psi(q)          = (V,  var·can + id)
    phi(q)          = (V', can·var + id)
    j_star(V, rho)  = (V, V, id, rho - id)
    j_shriek(V, rho)= (V, V, rho - id, id)
    j_mid(V, rho)   = (V, (rho - id)V, rho - id, inclusion)
    D(V, rho)       = (V*, (rho^T)^-1)
    D(q)            = (V*, V'*, -var^T, can^T (var^T can^T + id)^-1)
"""
from sympy import Matrix, eye, zeros

from ..utils.linalg import column_basis, coordinates, inverse, nullspace
from .objects import DiskQuad, MonodromyPair, QuadMorphism

__all__ = [
    'psi',
    'phi',
    'j_star',
    'j_shriek',
    'j_mid',
    'dual_pair',
    'dual_quad',
    'canonical_morphism',
    'image_quad',
    'horizontal_quotient',
]


def psi(q):
    """ nearby cycles (V, var·can + id) """
    return MonodromyPair(q.var * q.can + eye(q.dim_v))


def phi(q):
    """ vanishing cycles (V', can·var + id) """
    return MonodromyPair(q.can * q.var + eye(q.dim_vp))


def j_star(p):
    n = p.dim
    return DiskQuad(eye(n), p.rho - eye(n), dim_v=n, dim_vp=n)


def j_shriek(p):
    n = p.dim
    return DiskQuad(p.rho - eye(n), eye(n), dim_v=n, dim_vp=n)


def j_mid(p):
    """
    Middle extension: V' is the image of rho - id, with the basis given by
    its leftmost pivot columns; can is the corestriction of rho - id and
    var the inclusion.
    """
    n = p.dim
    basis, coords = column_basis(p.rho - eye(n))
    return DiskQuad(coords, basis, dim_v=n, dim_vp=basis.cols)


def dual_pair(p):
    return MonodromyPair(inverse(p.rho.T), dim=p.dim)


def dual_quad(q):
    can_t = q.can.T
    var_t = q.var.T
    return DiskQuad(
        -var_t,
        can_t * inverse(var_t * can_t + eye(q.dim_vp)),
        dim_v=q.dim_v,
        dim_vp=q.dim_vp,
    )


def canonical_morphism(p):
    """
    The morphism (id, rho - id) from j_star(p) to j_shriek(p).

    It is the identity on nearby cycles and its image is j_mid(p).
    """
    n = p.dim
    return QuadMorphism(eye(n), p.rho - eye(n))


def image_quad(morphism, source, target):
    """
    The image of `morphism` as a sub-quad of `target`.

    Both image spaces get the leftmost-pivot column bases of phi_v and
    phi_vp, so the result is reproducible.
    """
    morphism.validate(source, target)
    basis_v, _ = column_basis(morphism.phi_v)
    basis_vp, _ = column_basis(morphism.phi_vp)
    can = coordinates(basis_vp, target.can * basis_v)
    var = coordinates(basis_v, target.var * basis_vp)
    return DiskQuad(can, var, dim_v=basis_v.cols, dim_vp=basis_vp.cols)


def horizontal_quotient(p):
    """
    The pair (V/ker(rho - id), induced rho): the quotient by the
    horizontal sections.
    """
    n = p.dim
    kernel = nullspace(p.rho - eye(n))
    k = len(kernel)
    if k == 0:
        return p
    if k == n:
        return MonodromyPair(zeros(0, 0), dim=0)

    # complete a kernel basis to a basis of V with unit vectors
    columns = list(kernel)
    for i in range(n):
        candidate = Matrix.hstack(*columns, eye(n)[:, i])
        if candidate.rank() == len(columns) + 1:
            columns.append(eye(n)[:, i])
        if len(columns) == n:
            break
    change = Matrix.hstack(*columns)
    block = inverse(change) * p.rho * change
    return MonodromyPair(block[k:, k:])
