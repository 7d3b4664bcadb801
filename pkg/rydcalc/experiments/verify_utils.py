"""
@author: rydcalc contributors

Exhaustive verification suites. Every suite returns an ``info`` dict with the keys ``checked``,
``failures``, ``runtime`` and ``observed`` (plus suite specific keys).
"""
import time
import numpy as np
import pandas as pd

from ..helper.shapes import Shape, FlatShape, make_family, enumerate_shapes, shape_to_coset, coset_to_shape, \
                            is_ambiguous, COADJOINT_PAIRS
from ..helper.rootsys import lambda_poset
from ..helper.weyl import cached_coset_reps
from ..helper.utils import load_setup, parallel_map
from ..rules.variety import cached_multiply
from ..rules.amult import mult_flag, verify_coadjoint_relation
from ..rules.dmult import is_balanced
from ..rules.nonzero import verify_polytope_description, find_nonconvexity_witness, find_zero_set_witness, \
                            find_encoding_witnesses
from ..oracle.billey import oracle_table
from ..oracle.monk import monk_multiply
from .polytope_utils import generation_check

SUITES = ('counts', 'values', 'assoc', 'oracle', 'polytope', 'coadjoint', 'witness', 'generate', 'monk')

# nonzero values a structure constant may take
VALUE_SETS = {'Flag': {1}, 'LG': {1, 2}, 'OGodd': {1, 2, 4, 8}, 'OGeven': {1, 2, 4, 8},
              'ChainB': {1, 2}, 'ChainC': {1}, 'G2P1': {1, 2}, 'G2P2': {1, 2, 3}}

hdr_fmt = "%10s\t%10s\t%4s\t%10s\t%8s\t%8s"
out_fmt = "%10s\t%10s\t%4d\t%10d\t%8d\t%8.2f"

def _report(suite, fam, info, verbose):
    info.update({'suite': suite, 'family': fam.variant, 'n': fam.n})
    if verbose:
        print(hdr_fmt % ('suite', 'family', 'n', 'checked', 'failures', 'seconds'))
        print(out_fmt % (suite, fam.variant, fam.n, info['checked'], len(info['failures']), info['runtime']))
    return info

def _products(shapes):
    return {(a, b): cached_multiply(a, b) for a in shapes for b in shapes}

#%% suites

def check_counts(family, n = None, verbose = False):
    """
    Number of shapes, of minimal coset representatives and of roots above the marked node(s);
    for OGeven also one ambiguous flattened shape per size n-2..3n-5.
    """
    fam = make_family(family, n)
    start = time.time()
    failures = list()

    shapes = enumerate_shapes(fam)
    reps = cached_coset_reps(fam.compute_system.family, fam.compute_system.n, fam.compute_nodes)
    lam = lambda_poset(fam.index_system, fam.index_nodes)

    if len(shapes) != fam.expected_count:
        failures.append(('shapes', len(shapes), fam.expected_count))
    if len(reps) != len(shapes):
        failures.append(('cosets', len(reps), len(shapes)))
    if len(lam) != fam.N:
        failures.append(('roots', len(lam), fam.N))

    if fam.kind == 'even':
        N = fam.n
        amb = dict()
        for r1 in range(2*N-3):
            for r2 in range(r1+1):
                for on in [False, True]:
                    f = FlatShape(N, (r1, r2), on)
                    if f.is_valid() and is_ambiguous(f):
                        amb[f.size] = amb.get(f.size, 0) + 1
        if sorted(amb.keys()) != list(range(N-2, 3*N-4)) or set(amb.values()) != {1}:
            failures.append(('ambiguous', amb))

    info = {'checked': 4, 'failures': failures, 'runtime': time.time() - start, 'observed': len(shapes)}
    return _report('counts', fam, info, verbose)

def check_values(family, n = None, verbose = False):
    """
    Integrality, nonnegativity, grading, commutativity and the value set of all structure constants.
    For OGeven also balancedness of products of neutral shapes.
    """
    fam = make_family(family, n)
    start = time.time()
    shapes = enumerate_shapes(fam)
    failures = list()
    values = set()
    checked = 0

    for lam in shapes:
        for mu in shapes:
            p = cached_multiply(lam, mu)
            checked += 1
            if not p.is_integral() or any(c < 0 for c in p.terms.values()):
                failures.append((lam.text, mu.text, 'integrality'))
            if any(nu.size != lam.size + mu.size for nu in p.terms.keys()):
                failures.append((lam.text, mu.text, 'grading'))
            if p != cached_multiply(mu, lam):
                failures.append((lam.text, mu.text, 'commutativity'))
            if fam.kind == 'even' and not lam.is_charged and not mu.is_charged and not is_balanced(p):
                failures.append((lam.text, mu.text, 'balance'))
            values |= set(int(c) for c in p.terms.values() if c.denominator == 1)

    if not values <= VALUE_SETS[fam.variant]:
        failures.append(('values', sorted(values)))

    info = {'checked': checked, 'failures': failures, 'runtime': time.time() - start,
            'observed': sorted(values | {0})}
    return _report('values', fam, info, verbose)

def _expand(P, combo, other, left):
    acc = dict()
    for k, c in combo.terms.items():
        prod = P[(k, other)] if left else P[(other, k)]
        for x, d in prod.terms.items():
            acc[x] = acc.get(x, 0) + c*d
    return {x: v for x, v in acc.items() if v != 0}

def check_assoc(family, n = None, verbose = False):
    """
    (lam * mu) * nu = lam * (mu * nu) for all triples.
    """
    fam = make_family(family, n)
    start = time.time()
    shapes = enumerate_shapes(fam)
    P = _products(shapes)

    failures = list()
    checked = 0
    for lam in shapes:
        for mu in shapes:
            for nu in shapes:
                checked += 1
                if _expand(P, P[(lam, mu)], nu, True) != _expand(P, P[(mu, nu)], lam, False):
                    failures.append((lam.text, mu.text, nu.text))

    info = {'checked': checked, 'failures': failures, 'runtime': time.time() - start, 'observed': len(P)}
    return _report('assoc', fam, info, verbose)

def check_oracle(family, n = None, verbose = False, params = dict()):
    """
    Rule tables against the localization oracle.
    """
    fam = make_family(family, n)
    start = time.time()
    shapes = enumerate_shapes(fam)

    oracle = oracle_table(fam, params = params)
    rules = dict()
    for lam in shapes:
        for mu in shapes:
            for nu, c in cached_multiply(lam, mu).to_int_dict().items():
                rules[(lam.text, mu.text, nu.text)] = c

    failures = sorted(k for k in set(oracle) | set(rules) if oracle.get(k, 0) != rules.get(k, 0))
    info = {'checked': len(shapes)**2, 'failures': failures, 'runtime': time.time() - start,
            'observed': len(oracle)}
    return _report('oracle', fam, info, verbose)

def check_polytope(family, n = None, verbose = False):
    fam = make_family(family, n)
    info = verify_polytope_description(fam)
    return _report('polytope', fam, info, verbose)

def check_coadjoint(family, n = None, verbose = False):
    fam = make_family(family, n)
    pair = [p for p in COADJOINT_PAIRS if fam.variant in p]
    if len(pair) == 0:
        raise ValueError(f"{fam.variant} has no coadjoint partner")
    info = verify_coadjoint_relation(pair[0], fam.n)
    return _report('coadjoint', fam, info, verbose)

def check_witness(family, n = None, verbose = False):
    fam = make_family(family, n)
    if fam.kind != 'even':
        raise ValueError("Witnesses exist for OGeven only")
    start = time.time()
    witnesses = [find_nonconvexity_witness(fam.n)]
    if fam.n == 4:
        witnesses.append(find_zero_set_witness())
    elif fam.n == 5:
        witnesses += list(find_encoding_witnesses().values())

    failures = list()
    for W in witnesses:
        if not (W['collinear'] and W['alternating']):
            failures.append(tuple(nu.text for nu in W['nus']))
    info = {'checked': sum(len(W['nus']) for W in witnesses), 'failures': failures, 'runtime': time.time() - start,
            'observed': [W['values'] for W in witnesses]}
    return _report('witness', fam, info, verbose)

def check_generate(family, n = None, verbose = False):
    fam = make_family(family, n)
    info = generation_check(fam)
    return _report('generate', fam, info, verbose)

def check_monk(family, n = None, verbose = False):
    """
    Products with the two divisor classes of the flag variety against Monk's rule.
    """
    fam = make_family(family, n)
    if fam.variant != 'Flag':
        raise ValueError("Monk's rule applies to the Flag family only")
    start = time.time()
    shapes = enumerate_shapes(fam)
    boxes = {1: Shape(fam, (1, 0), False), fam.n - 1: Shape(fam, (0, 1), False)}

    failures = list()
    checked = 0
    for r, box in boxes.items():
        for s in shapes:
            checked += 1
            expected = mult_flag(box, s).to_int_dict()
            try:
                got = {coset_to_shape(fam, v): c for v, c in monk_multiply(shape_to_coset(s), r).items()}
            except KeyError:
                got = None
            if got != expected:
                failures.append((box.text, s.text))

    info = {'checked': checked, 'failures': failures, 'runtime': time.time() - start, 'observed': len(shapes)}
    return _report('monk', fam, info, verbose)

_SUITE_FUNCS = {'counts': check_counts, 'values': check_values, 'assoc': check_assoc, 'oracle': check_oracle,
                'polytope': check_polytope, 'coadjoint': check_coadjoint, 'witness': check_witness,
                'generate': check_generate, 'monk': check_monk}

def run_suite(suite, family, n = None, verbose = False):
    if suite not in _SUITE_FUNCS:
        raise ValueError("Not a known suite option")
    return _SUITE_FUNCS[suite](family, n, verbose = verbose)

def _run_one(args):
    suite, family, n = args
    return run_suite(suite, family, n)

#%% setups

def _expand_runs(setup):
    runs = list()
    for suite, entries in setup['suites'].items():
        for e in entries:
            ns = e.get('n', [None])
            if not isinstance(ns, list):
                ns = [ns]
            runs += [(suite, e['family'], n) for n in ns]
    return runs

def run_setup(setup_id, verbose = False, threads = None):
    """
    Runs all suites of ``data/setups/<setup_id>.json`` and returns a report with one row per run.
    """
    setup = load_setup(setup_id)
    runs = _expand_runs(setup)
    infos = parallel_map(_run_one, runs, threads)

    report = pd.DataFrame([{'suite': i['suite'], 'family': i['family'], 'n': i['n'], 'checked': i['checked'],
                            'failures': len(i['failures']), 'runtime': np.round(i['runtime'], 2)} for i in infos])
    if verbose:
        print(report.to_string(index = False))
    return report
