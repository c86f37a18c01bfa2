from .generators import RandomObjectGenerator
from .linalg import (as_matrix, column_basis, coordinates, inverse,
                     is_invertible, is_similar, matrix_entries, nullspace,
                     rank, rref)

__all__ = [
    'RandomObjectGenerator',
    'as_matrix',
    'column_basis',
    'coordinates',
    'inverse',
    'is_invertible',
    'is_similar',
    'matrix_entries',
    'nullspace',
    'rank',
    'rref',
]
