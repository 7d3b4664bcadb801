"""
@author: rydcalc contributors

Command line front end. Exit codes: 0 success, 1 verification failures, 2 usage or parse errors.

    rydcalc multiply --family LG --n 4 "3,1|off" "3,2|off"
    rydcalc verify counts --family D --n 5
"""
import sys
import json
import argparse
import pandas as pd

from .helper.shapes import render
from .rules.variety import variety
from .rules.nonzero import nonzero_predicate
from .experiments.verify_utils import SUITES, run_suite

FORMATS = ('text', 'json', 'csv')


def _expansion_json(fam, combo):
    terms = [{'shape': s.text, 'coeff': c} for s, c in sorted(combo.to_int_dict().items(), key = lambda sc: sc[0].text)]
    return {'family': fam.variant, 'n': fam.n, 'terms': terms}

def run_multiply(args):
    V = variety(args.family, args.n)
    lam, mu = V.parse(args.lam), V.parse(args.mu)
    res = V.multiply(lam, mu)

    if args.format == 'json':
        print(json.dumps(_expansion_json(V.family, res), indent = 2))
    elif args.format == 'csv':
        rows = [(s.text, c) for s, c in res.to_int_dict().items()]
        sys.stdout.write(pd.DataFrame(rows, columns = ['shape', 'coeff']).to_csv(index = False))
    else:
        for s, c in res.to_int_dict().items():
            print(f"{c} * {s.text}")
    return 0

def run_enumerate(args):
    V = variety(args.family, args.n)
    shapes = V.shapes
    if args.format == 'json':
        print(json.dumps({'family': V.family.variant, 'n': V.n, 'shapes': [s.text for s in shapes]}, indent = 2))
    elif args.format == 'csv':
        sys.stdout.write(pd.DataFrame({'shape': [s.text for s in shapes]}).to_csv(index = False))
    else:
        for s in shapes:
            print(s.text)
    return 0

def run_nonzero(args):
    V = variety(args.family, args.n)
    lam, mu, nu = (V.parse(t) for t in (args.lam, args.mu, args.nu))
    pred = nonzero_predicate(V.family, lam, mu, nu)
    coeff = int(V.constant(lam, mu, nu))

    if args.format == 'json':
        print(json.dumps({'family': V.family.variant, 'n': V.n, 'lambda': lam.text, 'mu': mu.text, 'nu': nu.text,
                          'predicted': bool(pred), 'coeff': coeff}, indent = 2))
    else:
        print(f"predicted nonzero: {bool(pred)}")
        print(f"coefficient: {coeff}")
    return 0

def run_table(args):
    V = variety(args.family, args.n, verbose = args.verbose)
    T = V.table(threads = args.threads)

    if args.format == 'csv':
        out = T.to_csv(args.out)
        if out is not None:
            sys.stdout.write(out)
    elif args.format == 'json':
        rows = [{'lambda': l, 'mu': m, 'nu': k, 'coeff': c} for (l, m, k), c in sorted(T.results.items())]
        txt = json.dumps({'family': V.family.variant, 'n': V.n, 'constants': rows}, indent = 2)
        if args.out is None:
            print(txt)
        else:
            with open(args.out, 'w') as f:
                f.write(txt)
    else:
        for (l, m, k), c in sorted(T.results.items()):
            print(f"{l}  *  {m}  ->  {c} * {k}")
    return 0

def run_verify(args):
    info = run_suite(args.suite, args.family, args.n, verbose = True)
    print(f"observed: {info['observed']}")
    for f in info['failures']:
        print(f"FAIL {f}")
    return 0 if len(info['failures']) == 0 else 1

def run_render(args):
    V = variety(args.family, args.n)
    s = V.parse(args.shape) if args.shape is not None else None
    print(render(V.family, s))
    return 0

#%% parser

def _family_args(p):
    p.add_argument('--family', required = True, help = 'Flag, LG, OGodd, OGeven, ChainB, ChainC, G2P1, G2P2 (or A, B, C, D, G2)')
    p.add_argument('--n', type = int, default = None, help = 'rank parameter n (ignored for G2)')
    return

def build_parser():
    parser = argparse.ArgumentParser(prog = 'rydcalc', description = 'Schubert structure constants of (co)adjoint varieties.')
    sub = parser.add_subparsers(dest = 'command', required = True)

    p = sub.add_parser('multiply', help = 'expand the product of two Schubert classes')
    _family_args(p)
    p.add_argument('lam')
    p.add_argument('mu')
    p.add_argument('--format', choices = FORMATS, default = 'text')
    p.set_defaults(func = run_multiply)

    p = sub.add_parser('enumerate', help = 'list all shapes of a family')
    _family_args(p)
    p.add_argument('--format', choices = FORMATS, default = 'text')
    p.set_defaults(func = run_enumerate)

    p = sub.add_parser('nonzero', help = 'nonvanishing predicate and coefficient of a triple')
    _family_args(p)
    p.add_argument('lam')
    p.add_argument('mu')
    p.add_argument('nu')
    p.add_argument('--format', choices = ['text', 'json'], default = 'text')
    p.set_defaults(func = run_nonzero)

    p = sub.add_parser('table', help = 'all nonzero structure constants')
    _family_args(p)
    p.add_argument('--format', choices = FORMATS, default = 'csv')
    p.add_argument('--out', default = None, help = 'output file (default stdout)')
    p.add_argument('--threads', type = int, default = None, help = 'worker processes (default RYD_THREADS)')
    p.add_argument('--verbose', action = 'store_true')
    p.set_defaults(func = run_table)

    p = sub.add_parser('verify', help = 'run an exhaustive verification suite')
    p.add_argument('suite', help = ', '.join(SUITES))
    _family_args(p)
    p.set_defaults(func = run_verify)

    p = sub.add_parser('render', help = 'ASCII picture of the root poset, optionally with a shape')
    _family_args(p)
    p.add_argument('shape', nargs = '?', default = None)
    p.set_defaults(func = run_render)

    return parser

def main(argv = None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, KeyError) as e:
        print(f"error: {e}", file = sys.stderr)
        return 2

if __name__ == '__main__':
    sys.exit(main())
