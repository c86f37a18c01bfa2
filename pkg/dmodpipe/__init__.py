# Licensed under a 3-clause BSD style license - see LICENSE.rst
"""
dmodpipe - exact local invariants and transforms of formal D-modules
"""

from . import version
__version__ = version.get_version(pep440=False)
