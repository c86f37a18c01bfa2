import json

import pytest

from dmodpipe.core.errors import NoSingularities
from dmodpipe.tools import dmod
from dmodpipe.tools.analyze import AnalyzeTool
from dmodpipe.tools.classify import ClassifyTool
from dmodpipe.tools.formal_type import FormalTypeTool
from dmodpipe.tools.fourier import FourierTool
from dmodpipe.tools.fracpow import FracPowTool
from dmodpipe.tools.info import InfoTool
from dmodpipe.tools.radon import RadonTool
from dmodpipe.tools.rigidity import RigidityTool
from dmodpipe.tools.selftest import SelfTestTool
from dmodpipe.tools.utils import SUBCOMMANDS, get_all_descriptions, get_subcommand


def component(residue='0', exp=()):
    return {'ram': 1, 'exp': [list(e) for e in exp], 'residue': residue, 'unip': 1}


def kummers(*residues):
    return {'components': [component(r) for r in residues]}


KUMMER = kummers('1/3')
EXPONENTIAL = {'components': [component(exp=[(-2, 1, -1, 1)])]}
HYPERGEOMETRIC = {
    'genus': 0,
    'rank': 2,
    'points': [
        {'label': '0', 'psi': kummers('1/2', '1/3')},
        {'label': '1', 'psi': kummers('1/4', '1/5')},
        {'label': 'inf', 'psi': kummers('1/6', '11/20')},
    ],
}
KUMMER_TYPE = {
    'rank': 1,
    'points': [{'label': '0', 'psi': kummers('1/3')},
               {'label': 'inf', 'psi': kummers('2/3')}],
}


@pytest.fixture
def write(tmpdir):
    def write(doc, name='input.json'):
        path = tmpdir.join(name)
        path.write(json.dumps(doc))
        return str(path)
    return write


def run(tool, argv, capsys):
    code = tool.run(argv)
    out = capsys.readouterr().out
    return code, json.loads(out) if code == 0 else None


def test_subcommands():
    assert list(SUBCOMMANDS) == ['analyze', 'fourier', 'radon', 'fracpow',
                                 'rigidity', 'formal-type', 'classify',
                                 'selftest', 'info']
    assert get_subcommand('radon') is RadonTool
    assert get_subcommand('nope') is None
    descriptions = get_all_descriptions()
    assert descriptions['rigidity'] == \
        "Euler characteristic and rigidity index of a formal type."


def test_missing_input(write, tmpdir, capsys):
    assert AnalyzeTool().run([]) == 2
    assert AnalyzeTool().run(['/no/such/module.json']) == 2
    assert AnalyzeTool().run(['--input', '/no/such/module.json']) == 2
    assert AnalyzeTool().run([str(tmpdir)]) == 2
    assert AnalyzeTool().run([write({'components': 'x'})]) == 2


def test_analyze(write, capsys):
    doc = {'components': [component('1/3'), component(exp=[(-2, 1, 1, 1)])]}
    code, result = run(AnalyzeTool(), [write(doc)], capsys)
    assert code == 0
    assert result['rank'] == 2
    assert result['irregularity'] == 1
    assert result['slopes'] == [['0', '1', 1], ['1', '1', 1]]
    assert result['hor_rank'] == 0
    assert result['precision'] is None


def test_analyze_input_alias(write, capsys):
    code, result = run(AnalyzeTool(), ['--input', write(kummers('0', '1/2'))],
                       capsys)
    assert code == 0
    assert result['hor_rank'] == 1
    assert result['phi_mid_rank'] == 1


def test_analyze_oracle(write, capsys):
    code, result = run(AnalyzeTool(), [write(EXPONENTIAL), '--trunc', '40'],
                       capsys)
    assert code == 0
    assert result['oracle_ranks'] == [2]
    assert result['precision'] == 40


def test_fourier(write, capsys):
    code, result = run(FourierTool(), ['--flavor', '0-infty', write(KUMMER)],
                       capsys)
    assert code == 0
    assert result['mode'] == 'exact'
    assert result['rank'] == 1
    assert result['slopes'] == [['0', '1', 1]]


def test_fourier_bookkeeping_and_oracle(write, capsys):
    path = write(EXPONENTIAL)
    code, result = run(FourierTool(), [path], capsys)
    assert code == 0
    assert result['mode'] == 'bookkeeping'
    assert result['slopes'] == [['1', '2', 2]]

    code, result = run(FourierTool(), ['--oracle', '--trunc', '40', path], capsys)
    assert code == 0
    assert result['mode'] == 'oracle'
    assert result['rank'] == 2
    assert result['precision'] == 40


def test_fourier_bad_flavor(write):
    assert FourierTool().run(['--flavor', 'sideways', write(KUMMER)]) == 2


def test_radon(write, capsys):
    code, result = run(RadonTool(), ['--lambda=1/4', write(KUMMER)], capsys)
    assert code == 0
    assert result['mode'] == 'exact'
    assert result['module']['components'][0]['residue'] == '7/12'
    assert result['checks'] == []


def test_radon_crosscheck(write, capsys):
    code, result = run(RadonTool(), ['--lambda=1/3', '--crosscheck',
                                     write(EXPONENTIAL)], capsys)
    assert code == 0
    (check,) = result['checks']
    assert check['agree']
    assert result['precision'] == 40


@pytest.mark.parametrize('argv', [[], ['--lambda', '2']])
def test_radon_errors(write, argv):
    assert RadonTool().run(argv + [write(KUMMER)]) == 2


def test_fracpow(write, capsys):
    series = {'ram': 1, 'trunc': None, 'exp': [[-2, 1, -1, 1]]}
    path = write(series)
    code, result = run(FracPowTool(), ['--depth', '4', path], capsys)
    assert code == 0
    assert result['depth'] == 4
    assert len(result['entries']) == 5
    assert all(check['passed'] for check in result['checks'])
    assert result['precision'] is None

    code, result = run(FracPowTool(), ['--alpha=1/2', '--trunc', '4', path],
                       capsys)
    assert code == 0
    identities = [check['identity'] for check in result['checks']]
    assert identities[-1] == 'radon intertwiner'
    assert all(check['passed'] for check in result['checks'])
    assert result['precision'] == 4


def test_fracpow_regular_connection(write):
    assert FracPowTool().run([write({'ram': 1, 'exp': [[-1, 1, 1, 2]]})]) == 2


def test_rigidity(write, capsys):
    code, result = run(RigidityTool(), [write(HYPERGEOMETRIC)], capsys)
    assert code == 0
    assert result['rank'] == 2
    assert result['euler_char'] == -2
    assert result['rigidity_index'] == 2


def test_formal_type_fourier(write, capsys):
    code, result = run(FormalTypeTool(), [write(KUMMER_TYPE)], capsys)
    assert code == 0
    assert result['transform'] == 'fourier'
    assert result['mode'] == 'exact'
    assert result['rank_out'] == 1
    assert [p['label'] for p in result['points_out']] == ['0', 'inf']


def test_formal_type_radon(write, capsys):
    path = write(HYPERGEOMETRIC)
    assert FormalTypeTool().run(['--transform', 'radon', path]) == 2

    code, result = run(FormalTypeTool(), ['--transform', 'radon',
                                          '--lambda=1/2', path], capsys)
    assert code == 0
    assert result['rank_out'] == 4
    assert all(p['psi'] is not None for p in result['points_out'])


def test_classify(write, capsys):
    code, result = run(ClassifyTool(), ['--power', '2', write(kummers('1/2'))],
                       capsys)
    assert code == 0
    assert result['verdict'] == 'contracting'
    assert result['precision'] == 40

    mixed = {'components': [component('1/2'),
                            component('1/2', exp=[(-3, 1, 1, 1)])]}
    code, result = run(ClassifyTool(), ['--power', '2', write(mixed)], capsys)
    assert code == 0
    assert sorted(c['verdict'] for c in result['components']) == \
        ['contracting', 'expanding']
    assert result['verdict'] == 'inconclusive'


def test_classify_needs_power(write):
    assert ClassifyTool().run([write(KUMMER)]) == 2


class QuickSelfTest(SelfTestTool):

    def setup(self):
        super().setup()
        self.checks = [c for c in self.checks
                       if c[0] in ('gamma ratio', 'rigidity', 'rank formulas')]


def test_selftest(capsys):
    code, result = run(QuickSelfTest(), [], capsys)
    assert code == 0
    assert result['passed']
    assert [c['identity'] for c in result['checks']] == \
        ['gamma ratio', 'rigidity', 'rank formulas']
    assert all(c['n_checked'] > 0 for c in result['checks'])


def test_selftest_reports_failures(capsys):

    class Broken(QuickSelfTest):
        def check_gamma_ratio(self):
            raise NoSingularities("nothing to check")

    code, result = run(Broken(), [], capsys)
    assert code == 0
    assert not result['passed']
    assert result['checks'][0]['first_failure'] == \
        'NoSingularities: nothing to check'


def test_selftest_continues_after_unexpected_error(capsys):

    class Crashing(QuickSelfTest):
        def check_gamma_ratio(self):
            raise ValueError("the zero operator has no order")

    code, result = run(Crashing(), [], capsys)
    assert code == 0
    assert not result['passed']
    first, *rest = result['checks']
    assert first['first_failure'] == \
        'ValueError: the zero operator has no order'
    assert [c['identity'] for c in rest] == ['rigidity', 'rank formulas']
    assert all(c['passed'] for c in rest)


def test_info(capsys):
    code, result = run(InfoTool(), ['--dependencies'], capsys)
    assert code == 0
    assert set(result['dependencies']) == {'numpy', 'psutil', 'sympy',
                                          'tqdm', 'traitlets'}
    assert 'tools' not in result

    code, result = run(InfoTool(), [], capsys)
    assert code == 0
    assert list(result['tools']) == list(SUBCOMMANDS)


def test_dispatcher(write, capsys):
    with pytest.raises(SystemExit) as exit_info:
        dmod.main([])
    assert exit_info.value.code == 2
    assert 'formal-type' in capsys.readouterr().err

    with pytest.raises(SystemExit) as exit_info:
        dmod.main(['sideways'])
    assert exit_info.value.code == 2

    with pytest.raises(SystemExit) as exit_info:
        dmod.main(['rigidity', write(HYPERGEOMETRIC)])
    assert exit_info.value.code == 0
    assert json.loads(capsys.readouterr().out)['rigidity_index'] == 2
