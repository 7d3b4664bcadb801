"""
@author: rydcalc contributors
"""
import io
import json
import pandas as pd
from pathlib import Path

from rydcalc.cli import main

GOLDEN_DIR = Path(__file__).parent / "golden"

# (argv, golden file)
GOLDEN_CASES = [(['multiply', '--family', 'LG', '--n', '4', '3,1|off', '3,2|off'], 'multiply_lg4.json'),
                (['multiply', '--family', 'D', '--n', '6', '4,1|off|up', '4,2|off|down'], 'multiply_ogeven6.json'),
                (['multiply', '--family', 'OGodd', '--n', '4', '0,0|off', '2,1|off'], 'multiply_ogodd4.json')]


def template_golden(capsys, argv, fname):
    code = main(argv + ['--format', 'json'])
    out = capsys.readouterr().out
    assert code == 0

    with open(GOLDEN_DIR / fname) as f:
        expected = json.load(f)
    assert json.loads(out) == expected
    return

def test_multiply_golden(capsys):
    for argv, fname in GOLDEN_CASES:
        template_golden(capsys, argv, fname)
    return

def test_multiply_text(capsys):
    code = main(['multiply', '--family', 'LG', '--n', '4', '3,1|off', '3,2|off'])
    lines = capsys.readouterr().out.strip().splitlines()
    assert code == 0
    assert sorted(lines) == ['1 * 4,4|on', '2 * 5,3|on']
    return

def test_csv(capsys):
    assert main(['multiply', '--family', 'LG', '--n', '4', '3,1|off', '3,2|off', '--format', 'csv']) == 0
    df = pd.read_csv(io.StringIO(capsys.readouterr().out))
    assert list(df.columns) == ['shape', 'coeff']
    assert dict(zip(df['shape'], df['coeff'])) == {'4,4|on': 1, '5,3|on': 2}

    assert main(['enumerate', '--family', 'LG', '--n', '3', '--format', 'csv']) == 0
    df = pd.read_csv(io.StringIO(capsys.readouterr().out))
    assert list(df.columns) == ['shape'] and len(df) == 12
    return

def test_errors(capsys):
    assert main(['multiply', '--family', 'LG', '--n', '4', '3,1|of', '3,2|off']) == 2
    assert 'error' in capsys.readouterr().err

    assert main(['multiply', '--family', 'E8', '--n', '4', '1,0|off', '1,0|off']) == 2
    assert main(['verify', 'everything', '--family', 'LG', '--n', '3']) == 2
    return

def test_verify(capsys):
    assert main(['verify', 'counts', '--family', 'D', '--n', '5']) == 0
    assert main(['verify', 'values', '--family', 'OGodd', '--n', '5']) == 0
    assert main(['verify', 'assoc', '--family', 'OGeven', '--n', '4']) == 0
    out = capsys.readouterr().out
    assert 'FAIL' not in out
    return

def test_enumerate(capsys):
    assert main(['enumerate', '--family', 'LG', '--n', '3', '--format', 'json']) == 0
    res = json.loads(capsys.readouterr().out)
    assert res['family'] == 'LG' and len(res['shapes']) == 12

    # every listed shape parses back
    for s in res['shapes']:
        assert main(['multiply', '--family', 'LG', '--n', '3', '0,0|off', s]) == 0
        assert capsys.readouterr().out.strip() == f"1 * {s}"
    return

def test_nonzero(capsys):
    assert main(['nonzero', '--family', 'OGodd', '--n', '4', '2,1|off', '3,2|off', '4,3|on', '--format', 'json']) == 0
    res = json.loads(capsys.readouterr().out)
    assert res['predicted'] and res['coeff'] == 4
    return

def test_table(capsys, tmp_path):
    assert main(['table', '--family', 'C', '--n', '3', '--threads', '1']) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[0] == 'lambda,mu,nu,coeff'
    assert len(lines) > 1

    out = tmp_path / 'lg3.json'
    assert main(['table', '--family', 'LG', '--n', '3', '--threads', '1', '--format', 'json', '--out', str(out)]) == 0
    with open(out) as f:
        res = json.load(f)
    assert all(r['coeff'] in [1, 2] for r in res['constants'])
    return

def test_render(capsys):
    assert main(['render', '--family', 'Flag', '--n', '5']) == 0
    assert 'adjoint' in capsys.readouterr().out

    assert main(['render', '--family', 'Flag', '--n', '5', '2,1|on']) == 0
    pic = capsys.readouterr().out
    assert '[*]' in pic
    return

def test_render_charged(capsys):
    assert main(['render', '--family', 'OGeven', '--n', '6', '4,1|off|up']) == 0
    pic = capsys.readouterr().out
    assert pic.split().count('*') == 5
    assert 'top' in pic and 'bottom' in pic and '[o]' in pic

    assert main(['render', '--family', 'OGeven', '--n', '6', '4,1|of']) == 2
    assert 'error' in capsys.readouterr().err
    return
