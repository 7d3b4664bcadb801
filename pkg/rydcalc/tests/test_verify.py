"""
@author: rydcalc contributors
"""
import json
import pytest

from rydcalc.helper.utils import load_setup, get_threads, parallel_map
from rydcalc.experiments.verify_utils import SUITES, run_suite, run_setup, _expand_runs, _run_one
from rydcalc.experiments.container import StructTable
from rydcalc.rules.variety import variety

# (suite, family, n) that must pass without failures
SUITE_CASES = [('counts', 'LG', 3), ('counts', 'OGeven', 4), ('counts', 'OGeven', 6), ('counts', 'G2P1', None),
               ('values', 'Flag', 4), ('values', 'OGeven', 4),
               ('assoc', 'LG', 3), ('assoc', 'G2P2', None),
               ('oracle', 'OGodd', 3),
               ('polytope', 'ChainC', 4),
               ('coadjoint', 'LG', 3), ('coadjoint', 'G2P1', None),
               ('witness', 'OGeven', 4),
               ('generate', 'LG', 3), ('generate', 'OGeven', 4),
               ('monk', 'Flag', 4)]


def template_suite(suite, family, n):
    info = run_suite(suite, family, n)
    assert info['failures'] == [], (suite, family, n)
    assert info['checked'] > 0
    assert info['suite'] == suite
    return info

def test_suites():
    for suite, family, n in SUITE_CASES:
        template_suite(suite, family, n)
    return

def test_suite_names():
    assert set(SUITES) == set(c[0] for c in SUITE_CASES)
    with pytest.raises(ValueError):
        run_suite('nothing', 'LG', 3)
    with pytest.raises(ValueError):
        run_suite('witness', 'LG', 3)
    with pytest.raises(ValueError):
        run_suite('monk', 'LG', 3)
    with pytest.raises(ValueError):
        run_suite('coadjoint', 'Flag', 4)
    return

def test_values_observed():
    info = run_suite('values', 'OGodd', 5)
    assert info['observed'] == [0, 1, 2, 4, 8]
    return

#%% setups

def test_expand_runs(tmp_path):
    setup = {'suites': {'counts': [{'family': 'LG', 'n': [2, 3]}, {'family': 'G2P1'}],
                        'values': [{'family': 'Flag', 'n': 4}]}}
    with open(tmp_path / 'tiny.json', 'w') as f:
        json.dump(setup, f)

    loaded = load_setup('tiny', setup_dir = str(tmp_path))
    assert _expand_runs(loaded) == [('counts', 'LG', 2), ('counts', 'LG', 3), ('counts', 'G2P1', None),
                                    ('values', 'Flag', 4)]
    return

def test_run_setup():
    report = run_setup('quick', threads = 1)
    assert list(report.columns) == ['suite', 'family', 'n', 'checked', 'failures', 'runtime']
    assert len(report) > 0
    assert (report['failures'] == 0).all()
    return

# (suite, family, n) that the acceptance setup must run
ACCEPTANCE_RUNS = [('assoc', 'OGeven', 5), ('assoc', 'Flag', 5), ('assoc', 'OGodd', 5),
                   ('assoc', 'ChainC', 6), ('assoc', 'ChainB', 6), ('assoc', 'G2P1', 2),
                   ('oracle', 'LG', 5), ('oracle', 'OGodd', 5), ('oracle', 'OGeven', 5),
                   ('oracle', 'Flag', 6), ('oracle', 'ChainC', 6), ('oracle', 'ChainB', 6),
                   ('coadjoint', 'LG', 5), ('coadjoint', 'ChainB', 6)]

def test_acceptance_setup():
    report = run_setup('acceptance', threads = 2)
    assert (report['failures'] == 0).all(), report[report['failures'] > 0]

    ran = set(zip(report['suite'], report['family'], report['n'].astype(int)))
    for run in ACCEPTANCE_RUNS:
        assert run in ran, run
    assert set(report['suite']) == set(SUITES)
    return

#%% threads

def test_threads(monkeypatch):
    monkeypatch.delenv('RYD_THREADS', raising = False)
    assert get_threads() == 1
    assert get_threads(default = 3) == 3

    monkeypatch.setenv('RYD_THREADS', '1')
    assert get_threads() == 1

    for raw in ['zero', '0', '-2', '1.5']:
        monkeypatch.setenv('RYD_THREADS', raw)
        with pytest.raises(ValueError):
            get_threads()
    return

def test_parallel_map():
    args = [('counts', 'LG', 2), ('counts', 'LG', 3), ('counts', 'ChainB', 3)]
    serial = [run_suite(*a)['observed'] for a in args]
    pooled = [i['observed'] for i in parallel_map(_run_one, args, threads = 2)]
    assert serial == pooled
    return

#%% container

def test_struct_table(tmp_path):
    V = variety('LG', 3)
    T = V.table(threads = 1)
    assert len(T) == len(T.to_frame())
    assert T.to_csv().splitlines()[0] == 'lambda,mu,nu,coeff'

    T.store_by_key({'runtime': 1.0})
    with pytest.raises(AssertionError):
        T.store_by_key({'runtime': 2.0})
    with pytest.raises(AssertionError):
        T.store('1,0|off', '1,0|off', '2,0|off', 3/2)

    T.save_to_disk(path = str(tmp_path) + '/')
    S = StructTable(name = T.name)
    S.load_from_disk(path = str(tmp_path) + '/')
    assert S == T
    assert S.params['runtime'] == 1.0
    return
