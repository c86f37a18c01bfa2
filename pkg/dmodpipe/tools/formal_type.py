"""
Formal type of the Fourier or Katz-Radon transform of a local system.
"""
import sys

from ..core import ToolConfigurationError
from ..core.traits import CaselessStrEnum, Dict, Rational
from ..globalcalc import fourier_formal_type, radon_formal_type
from ..io import decode_formal_type
from .utils import DModTool

__all__ = ['FormalTypeTool']


class FormalTypeTool(DModTool):
    description = __doc__
    name = 'dmod formal-type'

    transform = CaselessStrEnum(['fourier', 'radon'], 'fourier',
                                help='the global transform').tag(config=True)
    lam = Rational(None, allow_none=True,
                   help='λ of the Radon transform').tag(config=True)

    aliases = Dict({
        'transform': 'FormalTypeTool.transform',
        'lambda': 'FormalTypeTool.lam',
    })
    examples = 'dmod formal-type --transform radon --lambda=1/2 formaltype.json'

    def setup(self):
        if self.transform == 'radon' and self.lam is None:
            raise ToolConfigurationError("the Radon transform needs --lambda")
        self.formal_type = decode_formal_type(self.read_input(role='formal type'))

    def start(self):
        if self.transform == 'fourier':
            self.report = fourier_formal_type(self.formal_type)
        else:
            self.report = radon_formal_type(self.formal_type, self.lam)

    def finish(self):
        self.write_report(self.report)


def main():
    sys.exit(FormalTypeTool().run())
