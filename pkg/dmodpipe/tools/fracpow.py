"""
Power table of P = (1/C)(d/dz + f) for an irregular connection.

The table p_0, ..., p_I comes with its structural checks; with
``--alpha`` the Heisenberg relations and the intertwining relation are
checked at that power.
"""
import sys

from ..core.traits import Dict, List, Rational
from ..fracpow import FractionalPowerEngine
from ..io import decode_series
from .utils import DModTool

__all__ = ['FracPowTool']


class FracPowTool(DModTool):
    description = __doc__
    name = 'dmod fracpow'

    alpha = Rational(None, allow_none=True,
                     help='power checked against the table').tag(config=True)

    aliases = Dict({
        'alpha': 'FracPowTool.alpha',
        'depth': 'FractionalPowerEngine.depth',
        'trunc': 'FractionalPowerEngine.truncation',
    })
    classes = List([FractionalPowerEngine])
    examples = 'dmod fracpow --alpha=1/2 --depth 8 connection.json'

    def setup(self):
        self.connection = decode_series(self.read_input(role='connection'))
        self.engine = FractionalPowerEngine(config=self.config, tool=self)

    def start(self):
        sym = self.engine.symbol(self.connection)
        self.report = self.engine.table_report(sym, alpha=self.alpha)
        if self.alpha is not None:
            self.report.checks.append(self.engine.check_radon_intertwiner(
                self.connection, self.alpha))

    def finish(self):
        self.write_report(self.report)


def main():
    sys.exit(FracPowTool().run())
