"""
Seeded random objects (matrices, quiver data, series, formal modules and
formal types) for property tests and the selftest tool.

Example:

.. code-block:: python

    >>> gen = RandomObjectGenerator(seed=3, max_dim=4)
    >>> pair = gen.random_pair()
    >>> pair.dim <= 4
    True
"""
from fractions import Fraction

import numpy as np
from sympy import Matrix, eye, zeros

from ..core import Component
from ..core.traits import Int
from .linalg import inverse, is_invertible

__all__ = ['RandomObjectGenerator']


class RandomObjectGenerator(Component):
    """
    Draws random exact objects from a numpy `RandomState`, so that every
    run with the same seed produces the same objects.
    """
    seed = Int(0, help='seed of the random generator').tag(config=True)
    max_dim = Int(5, help='maximal dimension of quiver vector spaces').tag(config=True)
    max_rank = Int(4, help='maximal rank of formal modules').tag(config=True)
    max_denominator = Int(6, help='maximal denominator of residues').tag(config=True)

    def __init__(self, config=None, tool=None, **kwargs):
        super().__init__(config=config, parent=tool, **kwargs)
        self.rng = np.random.RandomState(self.seed)

    def integer(self, low, high):
        """ uniform integer in [low, high] """
        return int(self.rng.randint(low, high + 1))

    def rational(self, max_abs=5, nonzero=False):
        while True:
            den = self.integer(1, self.max_denominator)
            value = Fraction(self.integer(-max_abs * den, max_abs * den), den)
            if value or not nonzero:
                return value

    def residue(self, non_integral=False):
        """ a residue in [0, 1) """
        while True:
            den = self.integer(1, self.max_denominator)
            value = Fraction(self.integer(0, den - 1), den)
            if value or not non_integral:
                return value

    # linear algebra

    def integer_matrix(self, rows, cols, bound=3):
        if rows == 0 or cols == 0:
            return zeros(rows, cols)
        return Matrix(self.rng.randint(-bound, bound + 1, size=(rows, cols)).tolist())

    def invertible_matrix(self, n, bound=3):
        while True:
            m = self.integer_matrix(n, n, bound)
            if is_invertible(m):
                return m

    def monodromy(self, dim):
        """
        ρ = S·J·S⁻¹ with J a block diagonal of Jordan blocks with small
        nonzero integer eigenvalues, so that unipotent parts and repeated
        eigenvalues are common.
        """
        jordan = zeros(dim, dim)
        start = 0
        while start < dim:
            size = self.integer(1, dim - start)
            value = self.integer(1, 3) * (1 if self.integer(0, 3) else -1)
            for i in range(start, start + size):
                jordan[i, i] = value
                if i + 1 < start + size:
                    jordan[i, i + 1] = 1
            start += size
        change = self.invertible_matrix(dim)
        return change * jordan * inverse(change) if dim else jordan

    def random_pair(self, dim=None):
        from ..quiver import MonodromyPair

        if dim is None:
            dim = self.integer(1, self.max_dim)
        return MonodromyPair(self.monodromy(dim), dim=dim)

    def random_quad(self, dim_v=None, dim_vp=None):
        from ..quiver import DiskQuad

        if dim_v is None:
            dim_v = self.integer(0, self.max_dim)
        if dim_vp is None:
            dim_vp = self.integer(0, self.max_dim)
        while True:
            can = self.integer_matrix(dim_vp, dim_v, bound=2)
            var = self.integer_matrix(dim_v, dim_vp, bound=2)
            if is_invertible(eye(dim_vp) + can * var):
                return DiskQuad(can, var, dim_v=dim_v, dim_vp=dim_vp)

    # series and formal modules

    def random_series(self, trunc=30, min_exp=-3, n_terms=6):
        from ..exact import TruncatedPuiseuxSeries

        terms = {}
        for _ in range(self.integer(1, n_terms)):
            terms[self.integer(min_exp, trunc - 1)] = self.rational(nonzero=True)
        return TruncatedPuiseuxSeries(terms, trunc=trunc)

    def random_component(self, unip=None, regular=False, max_pole=4):
        from ..formal import exponential

        if unip is None:
            unip = self.integer(1, 2)
        polar = {}
        if not regular and self.integer(0, 1):
            pole = self.integer(2, max_pole)
            polar[-pole] = self.integer(1, 3) * (1 if self.integer(0, 1) else -1)
            for e in range(-pole + 1, -1):
                if self.integer(0, 1):
                    polar[e] = self.integer(-2, 2)
        return exponential(polar, residue=self.residue(), unip=unip)

    def random_module(self, rank=None, regular=False):
        """ unramified module of the given (or a random) rank """
        from ..formal import FormalModule

        if rank is None:
            rank = self.integer(1, self.max_rank)
        components = []
        remaining = rank
        while remaining:
            unip = self.integer(1, min(remaining, 3))
            components.append(self.random_component(unip=unip, regular=regular))
            remaining -= unip
        return FormalModule(components)

    def random_formal_type(self, rank=None, n_points=None, regular=False,
                           genus=0):
        """ formal type on a curve of the given genus with unramified data """
        from ..globalcalc import FormalPoint, FormalType

        if rank is None:
            rank = self.integer(1, min(self.max_rank, 3))
        if n_points is None:
            n_points = self.integer(1, 4)
        points = [
            FormalPoint(str(i), self.random_module(rank, regular=regular))
            for i in range(n_points)
        ]
        return FormalType(rank=rank, points=points, genus=genus)
