from fractions import Fraction
import os

from traitlets import (Int, Integer, Float, Unicode, Enum, List,
                       Bool, CRegExp, Dict, TraitError, observe,
                       CaselessStrEnum, TraitType)
from traitlets.config import boolean_flag as flag

__all__ = ['Path', 'Rational', 'Int', 'Integer', 'Float', 'Unicode', 'Enum',
           'List', 'Bool', 'CRegExp', 'Dict', 'flag', 'TraitError', 'observe',
           'CaselessStrEnum']


class Path(TraitType):
    def __init__(self, default_value=None, exists=None, directory_ok=True,
                 file_ok=True, **kwargs):
        """
        A file system path, stored absolute; used for the input documents.

        Parameters
        ----------
        exists: bool or None
            True: the path must exist. False: it must not. None: no check.
        directory_ok: bool
            accept an existing directory
        file_ok: bool
            accept an existing file
        """
        kwargs.setdefault('allow_none', True)
        super().__init__(default_value=default_value, **kwargs)
        self.exists = exists
        self.directory_ok = directory_ok
        self.file_ok = file_ok

    def validate(self, obj, value):

        if isinstance(value, str):
            value = os.path.abspath(value)
            if self.exists is not None:
                if os.path.exists(value) != self.exists:
                    raise TraitError('Path "{}" {} exist'.format(
                        value,
                        'does not' if self.exists else 'must'
                    ))
            if os.path.exists(value):
                if os.path.isdir(value) and not self.directory_ok:
                    raise TraitError(
                        'Path "{}" must not be a directory'.format(value)
                    )
                if os.path.isfile(value) and not self.file_ok:
                    raise TraitError(
                        'Path "{}" must not be a file'.format(value)
                    )

            return value

        return self.error(obj, value)


class Rational(TraitType):
    """
    An exact rational number, given as a `fractions.Fraction`, an int,
    or a string ``"p/q"`` (as typed on the command line).
    """
    info_text = 'a rational number "p/q"'

    def __init__(self, default_value=Fraction(0), **kwargs):
        super().__init__(default_value=default_value, **kwargs)

    def validate(self, obj, value):
        if isinstance(value, bool) or isinstance(value, float):
            return self.error(obj, value)
        if isinstance(value, (int, Fraction)):
            return Fraction(value)
        if isinstance(value, str):
            try:
                return Fraction(value.strip())
            except ValueError:
                pass
        return self.error(obj, value)
