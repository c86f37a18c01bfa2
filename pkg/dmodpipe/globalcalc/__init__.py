"""
Global formulas on formal types: Euler characteristic, rigidity index and
the formal types of Fourier and Radon transforms.
"""
from .formal_type import (INFINITY, FormalPoint, FormalType, direct_sum,
                          end_type, finite_location, trivial_module)
from .formulas import (euler_char, fourier_rank, infinity_module,
                       local_contribution, radon_rank, rigidity_index,
                       rigidity_report)
from .transformed import (BOOKKEEPING_NOTE, MIDDLE_EXTENSION_NOTE,
                          fourier_formal_type, radon_formal_type,
                          to_formal_type)

__all__ = [
    'INFINITY',
    'FormalPoint',
    'FormalType',
    'direct_sum',
    'end_type',
    'finite_location',
    'trivial_module',
    'local_contribution',
    'euler_char',
    'rigidity_index',
    'rigidity_report',
    'infinity_module',
    'fourier_rank',
    'radon_rank',
    'MIDDLE_EXTENSION_NOTE',
    'BOOKKEEPING_NOTE',
    'fourier_formal_type',
    'radon_formal_type',
    'to_formal_type',
]
