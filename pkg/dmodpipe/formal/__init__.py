"""
Classification-level model of modules on the punctured formal disk:
elementary components, their direct sums, and differential operators
with their Newton polygon slopes.
"""
from .elementary import ElementaryModule, exponential, kummer
from .module import (FormalModule, canonicalize, dual, end_of, hor_rank,
                     irregularity, is_isomorphic, phi_mid_rank, phi_to_psi,
                     psi_to_phi, rank, slope, slope_part, tensor_kummer)
from .operators import (DifferentialOperator, determinant_exponent,
                        newton_polygon, newton_slopes, twist_operator)
from .unipotent import clebsch_gordan, jordan_block_sizes, tensor_block_sizes

__all__ = [
    'ElementaryModule',
    'exponential',
    'kummer',
    'FormalModule',
    'canonicalize',
    'dual',
    'end_of',
    'hor_rank',
    'irregularity',
    'is_isomorphic',
    'phi_mid_rank',
    'phi_to_psi',
    'psi_to_phi',
    'rank',
    'slope',
    'slope_part',
    'tensor_kummer',
    'DifferentialOperator',
    'determinant_exponent',
    'newton_polygon',
    'newton_slopes',
    'twist_operator',
    'clebsch_gordan',
    'jordan_block_sizes',
    'tensor_block_sizes',
]
