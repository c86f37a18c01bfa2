"""
Local Fourier and Radon transforms on formal modules.
"""
from .decomposition import (class_label, ell, infinity_decompose, twist_class,
                            untwist_class)
from .fourier import (INFINITY_INFINITY, INFINITY_ZERO, ZERO_INFINITY,
                      FourierFlavor, FourierFlavorFactory,
                      FourierInfinityInfinity, FourierInfinityZero,
                      FourierZeroInfinity, fourier_bookkeeping,
                      fourier_local_regular, fourier_local_regular_inverse,
                      representative_module)
from .radon import check_lambda, radon_local, radon_local_crosscheck

__all__ = [
    'ell',
    'twist_class',
    'untwist_class',
    'class_label',
    'infinity_decompose',
    'ZERO_INFINITY',
    'INFINITY_ZERO',
    'INFINITY_INFINITY',
    'fourier_local_regular',
    'fourier_local_regular_inverse',
    'fourier_bookkeeping',
    'representative_module',
    'FourierFlavor',
    'FourierZeroInfinity',
    'FourierInfinityZero',
    'FourierInfinityInfinity',
    'FourierFlavorFactory',
    'check_lambda',
    'radon_local',
    'radon_local_crosscheck',
]
