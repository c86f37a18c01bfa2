"""Utils shared by the subcommands of the ``dmod`` tool"""
import importlib
import re
from collections import OrderedDict

from ..core import Provenance, Tool, ToolConfigurationError
from ..core.traits import Path
from ..io import encode, load_json

__all__ = ['DModTool', 'SUBCOMMANDS', 'get_subcommand', 'get_all_descriptions']

#: subcommand name -> (module, tool class)
SUBCOMMANDS = OrderedDict([
    ('analyze', ('dmodpipe.tools.analyze', 'AnalyzeTool')),
    ('fourier', ('dmodpipe.tools.fourier', 'FourierTool')),
    ('radon', ('dmodpipe.tools.radon', 'RadonTool')),
    ('fracpow', ('dmodpipe.tools.fracpow', 'FracPowTool')),
    ('rigidity', ('dmodpipe.tools.rigidity', 'RigidityTool')),
    ('formal-type', ('dmodpipe.tools.formal_type', 'FormalTypeTool')),
    ('classify', ('dmodpipe.tools.classify', 'ClassifyTool')),
    ('selftest', ('dmodpipe.tools.selftest', 'SelfTestTool')),
    ('info', ('dmodpipe.tools.info', 'InfoTool')),
])


def get_subcommand(name):
    """ the tool class of a subcommand, None if unknown """
    if name not in SUBCOMMANDS:
        return None
    module_name, class_name = SUBCOMMANDS[name]
    return getattr(importlib.import_module(module_name), class_name)


def get_all_descriptions():
    """ first sentence of the module docstring of every subcommand """
    descriptions = OrderedDict()
    for name, (module_name, _) in SUBCOMMANDS.items():
        module = importlib.import_module(module_name)
        if module.__doc__:
            match = re.match(r'\s*([^.]+\.)', module.__doc__)
            text = match.group(1) if match else module.__doc__
            descriptions[name] = ' '.join(text.split())
        else:
            descriptions[name] = "[no documentation]"
    return descriptions


class DModTool(Tool):
    """
    A `Tool` reading one JSON document (named by ``--input`` or given as
    the first positional argument) and writing one JSON report.
    """
    infile = Path(exists=True, directory_ok=False,
                  help='input JSON document').tag(config=True)

    def __init__(self, **kwargs):
        aliases = dict(self.aliases)
        aliases.setdefault('input', '{}.infile'.format(type(self).__name__))
        self.aliases = aliases
        super().__init__(**kwargs)

    def read_input(self, role='input'):
        """ the parsed input document, registered with the provenance """
        if not self.infile and self.extra_args:
            self.infile = self.extra_args[0]
        if not self.infile:
            raise ToolConfigurationError(
                "{} needs an input document".format(self.name))
        path = self.infile
        Provenance().add_input_file(path, role=role)
        self.log.debug("reading %s", path)
        return load_json(path)

    def write_report(self, report, precision=None):
        """
        Encode `report` and write it; a ``precision`` entry is always
        present.
        """
        document = encode(report)
        if not isinstance(document, dict):
            document = {'result': document}
        document.setdefault('precision', precision)
        Provenance().add_precision(document['precision'])
        self.write_result(document)
