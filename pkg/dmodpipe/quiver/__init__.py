"""
Quiver model of regular unipotent modules on the formal disk:
monodromy pairs (V, rho), quads (V, V', can, var) and the functors
between them.
"""
from .functors import (canonical_morphism, dual_pair, dual_quad,
                       horizontal_quotient, image_quad, j_mid, j_shriek,
                       j_star, phi, psi)
from .homs import hom_space, pairs_isomorphic, quads_isomorphic
from .objects import DiskQuad, MonodromyPair, QuadMorphism

__all__ = [
    'MonodromyPair',
    'DiskQuad',
    'QuadMorphism',
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
    'hom_space',
    'pairs_isomorphic',
    'quads_isomorphic',
]
