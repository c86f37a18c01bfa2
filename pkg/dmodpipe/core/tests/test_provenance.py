import json

import pytest

from dmodpipe.core import Provenance
from dmodpipe.core.provenance import _ActivityProvenance


@pytest.fixture
def prov():
    provenance = Provenance()
    provenance.clear()
    yield provenance
    provenance.clear()


def test_provenance(prov):
    prov.start_activity("test1")
    prov.add_input_file("module.json")
    prov.add_output_file("result.json")
    prov.start_activity("test2")
    prov.add_input_file("input_a.json")
    prov.add_input_file("input_b.json")
    prov.finish_activity("test2")
    prov.finish_activity("test1")

    assert set(prov.finished_activity_names) == {'test2', 'test1'}
    assert len(json.loads(prov.as_json())) == 2


def test_wrong_activity_name(prov):
    prov.start_activity("outer")
    with pytest.raises(ValueError):
        prov.finish_activity(activity_name="inner")


def test_activity_provenance():
    prov = _ActivityProvenance("radon")
    prov.start()
    prov.register_input('module.json', role='module')
    prov.register_output('out.json')
    prov.finish()

    record = prov.provenance
    assert record['status'] == 'completed'
    assert record['duration_min'] >= 0
    assert record['input'][0]['role'] == 'module'
    assert 'num_cpus' in record['system']['platform']


def test_provenence_contextmanager(prov):

    with prov.activity("myactivity"):
        assert 'myactivity' in prov.active_activity_names

    assert 'myactivity' in prov.finished_activity_names
    assert 'myactivity' not in prov.active_activity_names


def test_contextmanager_error_status(prov):
    with pytest.raises(KeyError):
        with prov.activity("failing"):
            raise KeyError("x")

    assert prov.provenance[-1]['status'] == 'error'


def test_precision_and_arithmetic_versions(prov):
    with prov.activity("oracle"):
        prov.add_precision(40)

    record = prov.provenance[-1]
    assert record['precision'] == 40
    assert set(record['system']['arithmetic']) == {'sympy', 'numpy',
                                                   'traitlets'}
