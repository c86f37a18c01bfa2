"""
Linear-algebra data for regular unipotent modules on the disk.
"""
from sympy import eye

from ..core.errors import InvalidQuiverData
from ..utils.linalg import as_matrix, is_invertible

__all__ = ['MonodromyPair', 'DiskQuad', 'QuadMorphism']


class MonodromyPair:
    """
    A vector space V = Q^dim with an automorphism rho (the monodromy).

    Parameters
    ----------
    rho: sympy.Matrix or nested list
        square invertible matrix
    """
    __slots__ = ('rho',)

    def __init__(self, rho, dim=None):
        rho = as_matrix(rho, shape=None if dim is None else (dim, dim))
        if rho.rows != rho.cols:
            raise InvalidQuiverData("monodromy must be square, got {}x{}"
                                    .format(rho.rows, rho.cols))
        if not is_invertible(rho):
            raise InvalidQuiverData("monodromy must be invertible")
        self.rho = rho

    @property
    def dim(self):
        return self.rho.rows

    def __eq__(self, other):
        if not isinstance(other, MonodromyPair):
            return NotImplemented
        return self.rho.shape == other.rho.shape and self.rho == other.rho

    def __repr__(self):
        return "MonodromyPair(dim={}, rho={})".format(self.dim,
                                                      self.rho.tolist())


class DiskQuad:
    """
    (V, V', can, var) with can: V -> V', var: V' -> V and
    id + can·var invertible.

    The dimensions are read from the shape of `can` (dim V' x dim V);
    pass them explicitly when a matrix is given as an empty list.
    """
    __slots__ = ('can', 'var')

    def __init__(self, can, var, dim_v=None, dim_vp=None):
        known = dim_v is not None and dim_vp is not None
        can = as_matrix(can, shape=(dim_vp, dim_v) if known else None)
        var = as_matrix(var, shape=(dim_v, dim_vp) if known else None)
        if var.shape != (can.cols, can.rows):
            raise InvalidQuiverData(
                "var must be {}x{} for can of shape {}x{}, got {}x{}".format(
                    can.cols, can.rows, can.rows, can.cols, *var.shape))
        if not is_invertible(eye(can.rows) + can * var):
            raise InvalidQuiverData("id + can·var is not invertible")
        self.can = can
        self.var = var

    @property
    def dim_v(self):
        return self.can.cols

    @property
    def dim_vp(self):
        return self.can.rows

    @property
    def dims(self):
        return self.dim_v, self.dim_vp

    def __eq__(self, other):
        if not isinstance(other, DiskQuad):
            return NotImplemented
        return (self.dims == other.dims and self.can == other.can
                and self.var == other.var)

    def __repr__(self):
        return "DiskQuad(dims={}, can={}, var={})".format(
            self.dims, self.can.tolist(), self.var.tolist())


class QuadMorphism:
    """
    A pair (phi_v, phi_vp) of linear maps between two quads.

    It is a morphism q1 -> q2 when both squares commute:
    ``phi_vp·can1 = can2·phi_v`` and ``phi_v·var1 = var2·phi_vp``.
    """
    __slots__ = ('phi_v', 'phi_vp')

    def __init__(self, phi_v, phi_vp):
        self.phi_v = as_matrix(phi_v)
        self.phi_vp = as_matrix(phi_vp)

    def is_morphism(self, source, target):
        if self.phi_v.shape != (target.dim_v, source.dim_v):
            return False
        if self.phi_vp.shape != (target.dim_vp, source.dim_vp):
            return False
        return (self.phi_vp * source.can == target.can * self.phi_v
                and self.phi_v * source.var == target.var * self.phi_vp)

    def validate(self, source, target):
        if not self.is_morphism(source, target):
            raise InvalidQuiverData("maps do not commute with can and var")
        return self

    def __eq__(self, other):
        if not isinstance(other, QuadMorphism):
            return NotImplemented
        return (self.phi_v.shape == other.phi_v.shape
                and self.phi_vp.shape == other.phi_vp.shape
                and self.phi_v == other.phi_v and self.phi_vp == other.phi_vp)

    def __repr__(self):
        return "QuadMorphism(phi_v={}, phi_vp={})".format(
            self.phi_v.tolist(), self.phi_vp.tolist())
