"""
Tensor products of unipotent Jordan blocks.
"""
from sympy import eye, kronecker_product, zeros

from ..utils.linalg import rank

__all__ = ['clebsch_gordan', 'jordan_block_sizes', 'tensor_block_sizes']


def clebsch_gordan(a, b):
    """
    U_a ⊗ U_b = ⊕_{k=1..min(a,b)} U_{a+b+1-2k}

    Returns
    -------
    list of int
        block sizes, largest first
    """
    return [a + b + 1 - 2 * k for k in range(1, min(a, b) + 1)]


def _nilpotent_block(m):
    block = zeros(m, m)
    for i in range(m - 1):
        block[i, i + 1] = 1
    return block


def jordan_block_sizes(nilpotent):
    """
    Jordan block sizes of a nilpotent matrix from the ranks of its powers:
    the number of blocks of size ≥ k is rank(N^(k-1)) - rank(N^k).
    """
    n = nilpotent.rows
    ranks = [n]
    power = eye(n)
    while ranks[-1] > 0:
        power = power * nilpotent
        ranks.append(rank(power))
    at_least = [ranks[k - 1] - ranks[k] for k in range(1, len(ranks))]
    sizes = []
    for k, count in enumerate(at_least, start=1):
        exactly = count - (at_least[k] if k < len(at_least) else 0)
        sizes.extend([k] * exactly)
    return sorted(sizes, reverse=True)


def tensor_block_sizes(a, b):
    """ block sizes of N⊗1 + 1⊗N on U_a ⊗ U_b, computed directly """
    n_a = _nilpotent_block(a)
    n_b = _nilpotent_block(b)
    total = kronecker_product(n_a, eye(b)) + kronecker_product(eye(a), n_b)
    return jordan_block_sizes(total)
