"""
Euler characteristic and rigidity index of a formal type.
"""
import sys

from ..globalcalc import rigidity_report
from ..io import decode_formal_type
from .utils import DModTool

__all__ = ['RigidityTool']


class RigidityTool(DModTool):
    description = __doc__
    name = 'dmod rigidity'
    examples = 'dmod rigidity formaltype.json'

    def setup(self):
        self.formal_type = decode_formal_type(self.read_input(role='formal type'))

    def start(self):
        self.report = rigidity_report(self.formal_type)
        self.log.debug("rigidity index %d", self.report.rigidity_index)

    def finish(self):
        self.write_report(self.report)


def main():
    sys.exit(RigidityTool().run())
