"""
Contraction or expansion of z^a·d/dz on every component of a module.

Each component is realized with the window ``--trunc`` and z^a·d/dz is
iterated on its lattice generators.
"""
import sys

from ..core import ToolConfigurationError
from ..core.traits import Dict, Int, List, Rational
from ..io import decode_module
from ..io.containers import INCONCLUSIVE
from ..tate import GrowthClassifier, GrowthOperator, LocalFourierOracle
from .utils import DModTool

__all__ = ['ClassifyTool']


class ClassifyTool(DModTool):
    description = __doc__
    name = 'dmod classify'

    power = Rational(None, allow_none=True,
                     help='the exponent a of z^a·d/dz').tag(config=True)
    trunc = Int(40, help='window of the realizations').tag(config=True)

    aliases = Dict({
        'power': 'ClassifyTool.power',
        'trunc': 'ClassifyTool.trunc',
        'iterations': 'GrowthClassifier.iterations',
    })
    classes = List([GrowthClassifier])
    examples = 'dmod classify --power 3 module.json'

    def setup(self):
        if self.power is None:
            raise ToolConfigurationError("dmod classify needs --power")
        self.module = decode_module(self.read_input())
        self.oracle = LocalFourierOracle(parent=self, truncation=self.trunc)
        self.classifier = GrowthClassifier(parent=self)

    def start(self):
        operator = GrowthOperator.z_power_derivation(self.power)
        self.verdicts = []
        for c in self.module:
            real = self.oracle.realize(c.f, c.residue)
            self.verdicts.append(self.classifier.classify(operator, real))

    def finish(self):
        found = {v.verdict for v in self.verdicts}
        verdict = found.pop() if len(found) == 1 else INCONCLUSIVE
        self.write_report({'verdict': verdict, 'components': self.verdicts},
                          precision=self.trunc)


def main():
    sys.exit(ClassifyTool().run())
