"""
Local Katz-Radon transform of a formal module.

Every slope-s part is tensored with K^(λ(s+1)); ``--crosscheck`` compares
both sides on the realization oracle for every rank one irregular
component.
"""
import sys

from ..core import ToolConfigurationError
from ..core.traits import Bool, Dict, Int, List, Rational
from ..io import decode_module
from ..io.containers import TransformContainer
from ..tate import LocalFourierOracle
from ..transforms import radon_local, radon_local_crosscheck
from .utils import DModTool

__all__ = ['RadonTool']


class RadonTool(DModTool):
    description = __doc__
    name = 'dmod radon'

    lam = Rational(None, allow_none=True,
                   help='the twisting parameter λ, not an integer').tag(config=True)
    crosscheck = Bool(False, help='compare with the oracle').tag(config=True)
    trunc = Int(40, help='window of the oracle cross-check').tag(config=True)

    aliases = Dict({'lambda': 'RadonTool.lam', 'trunc': 'RadonTool.trunc'})
    flags = Dict({
        'crosscheck': ({'RadonTool': {'crosscheck': True}},
                       'cross-check rank one irregular components'),
    })
    classes = List([LocalFourierOracle])
    examples = 'dmod radon --lambda=1/3 --crosscheck module.json'

    def setup(self):
        if self.lam is None:
            raise ToolConfigurationError("dmod radon needs --lambda")
        self.module = decode_module(self.read_input())
        self.oracle = LocalFourierOracle(parent=self, truncation=self.trunc)

    def start(self):
        result = radon_local(self.module, self.lam)
        self.report = TransformContainer(
            mode='exact',
            module=result,
            rank=result.rank,
            slopes=result.slopes(),
        )
        if not self.crosscheck:
            return
        for c in self.module:
            if c.rank == 1 and not c.is_regular:
                self.report.checks.append(radon_local_crosscheck(
                    c.f, c.residue, self.lam, oracle=self.oracle))
            else:
                self.log.info("no cross-check for %r", c)
        self.report.precision = self.trunc

    def finish(self):
        self.write_report(self.report)


def main():
    sys.exit(RadonTool().run())
