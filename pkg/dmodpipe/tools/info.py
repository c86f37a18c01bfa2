"""
Version, dependencies and subcommands of dmodpipe.

Without flags everything is reported.
"""
import importlib
import sys

from ..core import Provenance, Tool
from ..core.traits import Bool, Dict
from .utils import get_all_descriptions

__all__ = ['InfoTool', 'DEPENDENCIES']

DEPENDENCIES = sorted(['traitlets', 'sympy', 'numpy', 'psutil', 'tqdm'])
TEST_DEPENDENCIES = sorted(['pytest', 'hypothesis'])


def _versions(names):
    versions = {}
    for name in names:
        try:
            module = importlib.import_module(name)
            versions[name] = module.__version__
        except ImportError:
            versions[name] = 'not installed'
        except AttributeError:
            versions[name] = "installed, but __version__ doesn't exist"
    return versions


class InfoTool(Tool):
    description = __doc__
    name = 'dmod info'

    show_version = Bool(False, help='report the version').tag(config=True)
    show_tools = Bool(False, help='report the subcommands').tag(config=True)
    show_dependencies = Bool(False, help='report dependency versions'
                             ).tag(config=True)
    show_system = Bool(False, help='report the system environment'
                       ).tag(config=True)

    flags = Dict({
        'version': ({'InfoTool': {'show_version': True}}, 'report the version'),
        'tools': ({'InfoTool': {'show_tools': True}}, 'report the subcommands'),
        'dependencies': ({'InfoTool': {'show_dependencies': True}},
                         'report dependency versions'),
        'system': ({'InfoTool': {'show_system': True}},
                   'report the system environment'),
    })
    examples = 'dmod info --dependencies'

    def setup(self):
        if not (self.show_version or self.show_tools
                or self.show_dependencies or self.show_system):
            self.show_version = self.show_tools = True
            self.show_dependencies = self.show_system = True

    def start(self):
        self.report = {}
        if self.show_version:
            self.report['version'] = self.version_string
        if self.show_tools:
            self.report['tools'] = get_all_descriptions()
        if self.show_dependencies:
            self.report['dependencies'] = _versions(DEPENDENCIES)
            self.report['test_dependencies'] = _versions(TEST_DEPENDENCIES)
        if self.show_system:
            system = Provenance().current_activity.provenance['system']
            self.report['system'] = {
                section: {k: str(v) for k, v in system[section].items()}
                for section in ('platform', 'python') if section in system
            }

    def finish(self):
        self.report['precision'] = None
        self.write_result(self.report)


def main():
    sys.exit(InfoTool().run())
