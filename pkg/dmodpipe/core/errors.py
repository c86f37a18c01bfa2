"""
Typed errors raised by the dmodpipe algorithms.

Every error a caller can provoke with valid-looking but mathematically
unsuitable input derives from `DModError`. Tools map these to exit code 2,
anything else escaping a tool is an internal error (exit code 1).
"""

__all__ = [
    'DModError',
    'NotAUnit',
    'IntegerResidue',
    'InsufficientPrecision',
    'InsufficientDepth',
    'Resonance',
    'NoRelationFound',
    'InvalidRamifiedData',
    'UnsupportedRamification',
    'InconsistentRank',
    'UseBookkeeping',
    'WrongSlopeSector',
    'IntegralLambda',
    'RegularConnection',
    'InconsistentType',
    'NoSingularities',
    'InvalidQuiverData',
    'InvalidInput',
]


class DModError(RuntimeError):
    """base class of all domain errors"""
    pass


class NotAUnit(DModError):
    """a series with no known term below its truncation was inverted"""
    pass


class IntegerResidue(DModError):
    pass


class InsufficientPrecision(DModError):
    """the requested result needs coefficients beyond a truncation bound"""
    pass


class InsufficientDepth(DModError):
    """a power table is too shallow for the requested truncation"""
    pass


class Resonance(DModError):
    """the derivation is not invertible (horizontal sections)"""
    pass


class NoRelationFound(DModError):
    pass


class InvalidRamifiedData(DModError):
    pass


class UnsupportedRamification(DModError):
    pass


class InconsistentRank(DModError):
    pass


class UseBookkeeping(DModError):
    """an exact symbolic rule was asked for an irregular component"""
    pass


class WrongSlopeSector(DModError):
    pass


class IntegralLambda(DModError):
    pass


class RegularConnection(DModError):
    pass


class InconsistentType(DModError):
    pass


class NoSingularities(DModError):
    pass


class InvalidQuiverData(DModError):
    pass


class InvalidInput(DModError):
    """malformed input document"""
    pass
