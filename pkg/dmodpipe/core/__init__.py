# Licensed under a 3-clause BSD style license - see LICENSE.rst
"""
Framework pieces shared by every dmodpipe subpackage: configurable
components, tools, result containers, provenance and the domain errors.
"""
from .component import Component
from .container import Container, Field, Map
from .errors import DModError, InvalidInput
from .factory import Factory
from .provenance import Provenance
from .tool import Tool, ToolConfigurationError
from .traits import Rational

__all__ = ['Component', 'Container', 'DModError', 'Field', 'Factory',
           'InvalidInput', 'Map', 'Provenance', 'Rational', 'Tool',
           'ToolConfigurationError']
