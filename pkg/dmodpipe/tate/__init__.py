"""
First-principles computation of local Fourier transforms on truncated
realizations of rank-one connections.
"""
from .growth import GrowthClassifier, GrowthOperator, classify_growth
from .oracle import (LocalFourierOracle, annihilator, fourier_relation,
                     local_fourier_invariants, topology_compare)
from .realization import (Realization, dzeta_action, solve_derivation,
                          zeta_action)

__all__ = [
    'Realization',
    'solve_derivation',
    'zeta_action',
    'dzeta_action',
    'GrowthOperator',
    'GrowthClassifier',
    'classify_growth',
    'LocalFourierOracle',
    'annihilator',
    'local_fourier_invariants',
    'fourier_relation',
    'topology_compare',
]
