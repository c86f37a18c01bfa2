"""
Local Fourier transform of a formal module.

The flavor is chosen with ``--flavor 0-infty|infty-0|infty-infty``;
``--oracle`` runs the realization oracle on rank one inputs that have no
exact rule.
"""
import sys

from ..core.traits import Dict, List
from ..io import decode_module
from ..transforms import FourierFlavor, FourierFlavorFactory
from .utils import DModTool

__all__ = ['FourierTool']


class FourierTool(DModTool):
    description = __doc__
    name = 'dmod fourier'

    aliases = Dict({
        'flavor': 'FourierFlavorFactory.product',
        'point': 'FourierFlavor.point',
        'trunc': 'FourierFlavor.truncation',
    })
    flags = Dict({
        'oracle': ({'FourierFlavor': {'use_oracle': True}},
                   'run the realization oracle where no exact rule exists'),
    })
    classes = List([FourierFlavorFactory, FourierFlavor])
    examples = 'dmod fourier --flavor 0-infty --oracle module.json'

    def setup(self):
        self.module = decode_module(self.read_input())
        self.flavor = FourierFlavorFactory.produce(config=self.config, tool=self)

    def start(self):
        self.report = self.flavor.transform(self.module)

    def finish(self):
        self.write_report(self.report)


def main():
    sys.exit(FourierTool().run())
