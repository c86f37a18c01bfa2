"""
Slopes, rank, irregularity and canonical form of a formal module.

With ``--trunc N`` every unramified rank-one component is also run through
the local Fourier oracle at window N, whose rank must be 1 + slope.
"""
import sys

from ..core.traits import Dict, Int, List

from ..formal import hor_rank, phi_mid_rank
from ..io import decode_module
from ..io.containers import AnalysisContainer
from ..tate import LocalFourierOracle
from .utils import DModTool

__all__ = ['AnalyzeTool', 'analyze_module']


def analyze_module(module):
    """
    Returns
    -------
    AnalysisContainer
    """
    return AnalysisContainer(
        module=module,
        rank=module.rank,
        irregularity=module.irregularity,
        slopes=module.slopes(),
        hor_rank=hor_rank(module),
        phi_mid_rank=phi_mid_rank(module),
    )


class AnalyzeTool(DModTool):
    description = __doc__
    name = 'dmod analyze'

    trunc = Int(0, help='oracle window; 0 skips the oracle').tag(config=True)

    aliases = Dict({'trunc': 'AnalyzeTool.trunc'})
    classes = List([LocalFourierOracle])
    examples = 'dmod analyze module.json --trunc 40'

    def setup(self):
        self.module = decode_module(self.read_input())
        self.oracle = None
        if self.trunc:
            self.oracle = LocalFourierOracle(parent=self, truncation=self.trunc)

    def start(self):
        self.report = analyze_module(self.module)
        if self.oracle is None:
            return
        for c in self.module:
            if c.rank != 1:
                continue
            result = self.oracle.local_fourier_invariants(c.f, c.residue)
            if result.rank_out != 1 + c.slope:
                self.log.warning("oracle rank %d for %r, expected %s",
                                 result.rank_out, c, 1 + c.slope)
            self.report.oracle_ranks.append(result.rank_out)
        self.report.precision = self.trunc

    def finish(self):
        self.write_report(self.report)


def main():
    sys.exit(AnalyzeTool().run())
