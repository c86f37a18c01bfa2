"""
Rational powers of P = (1/C)(d/dz + f) for irregular connections, their
power tables and the identities that make P^a intertwine the Fourier
structures of M and M ⊗ K^(-(1+s)a).
"""
from .powers import (FractionalPowerEngine, apply_power, check_heisenberg,
                     check_radon_intertwiner, required_depth)
from .symbol import OperatorSymbol, apply_symbol, symbol_from_connection
from .table import PowerTable, check_addition, power_table, validate_table

__all__ = [
    'OperatorSymbol',
    'symbol_from_connection',
    'apply_symbol',
    'PowerTable',
    'power_table',
    'validate_table',
    'check_addition',
    'apply_power',
    'required_depth',
    'check_heisenberg',
    'check_radon_intertwiner',
    'FractionalPowerEngine',
]
