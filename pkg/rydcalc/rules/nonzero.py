"""
@author: rydcalc contributors

Horn-type nonvanishing predicates, their exhaustive comparison with the product rules, and probes of
(non-)polytopality of the set of nonzero structure constants.
"""
import time
import numpy as np
import pandas as pd
import sympy
from scipy.optimize import linprog

from ..helper.shapes import Shape, TwoLayerShape, make_family, enumerate_shapes, check_shape, check_same_family, \
                            to_two_layer, from_two_layer, UP, DOWN, NEUTRAL
from ..helper.utils import FamilyMismatch
from .dmult import star, eta, is_pieri
from .variety import cached_multiply

#%% encodings

ENCODINGS = ('flat', 'layered', 'columns', 'charged')

def shape_vector(s, encoding = 'flat'):
    """
    Integer vector of a shape.

    * ``flat``: (r1, r2, on), for every family,
    * ``layered``: (b1, b2, t1, t2, on), OGeven only,
    * ``columns``: column heights of the bottom layer, then of the top layer, then on; OGeven only,
    * ``charged``: (r1, r2, on, c) with c = 1, -1, 0 for up, down, neutral; OGeven only.
    """
    if encoding == 'flat':
        return np.array([s.rows[0], s.rows[1], int(s.on)])

    if s.family.kind != 'even':
        raise ValueError(f"Encoding {encoding} only exists for OGeven")
    n = s.family.n

    if encoding == 'layered':
        t = to_two_layer(s)
        return np.array([t.bottom[0], t.bottom[1], t.top[0], t.top[1], int(s.on)])
    elif encoding == 'columns':
        t = to_two_layer(s)
        bottom = [int(t.bottom[0] >= c) + int(t.bottom[1] >= c) for c in range(1, n-1)]
        top = [int(t.top[0] >= c) + int(t.top[1] >= c) for c in range(1, n-1)]
        return np.array(bottom + top + [int(s.on)])
    elif encoding == 'charged':
        c = {UP: 1, DOWN: -1, NEUTRAL: 0}[s.charge]
        return np.array([s.rows[0], s.rows[1], int(s.on), c])
    else:
        raise ValueError("Not a known encoding option")

def shape_from_vector(family, v, encoding = 'flat'):
    """
    Inverse of ``shape_vector``.
    """
    family = make_family(family)
    v = [int(x) for x in v]
    n = family.n

    if encoding == 'flat':
        s = Shape(family, (v[0], v[1]), bool(v[2]))
    elif encoding == 'layered':
        s = from_two_layer(TwoLayerShape(n, (v[0], v[1]), (v[2], v[3]), bool(v[4])))
    elif encoding == 'columns':
        bottom, top = v[:n-2], v[n-2:2*n-4]
        b = (sum(h >= 1 for h in bottom), sum(h >= 2 for h in bottom))
        t = (sum(h >= 1 for h in top), sum(h >= 2 for h in top))
        s = from_two_layer(TwoLayerShape(n, b, t, bool(v[-1])))
    elif encoding == 'charged':
        s = Shape(family, (v[0], v[1]), bool(v[2]), {1: UP, -1: DOWN, 0: NEUTRAL}[v[3]])
    else:
        raise ValueError("Not a known encoding option")

    return check_shape(s, family)

def triple_vector(lam, mu, nu, encoding = 'flat'):
    return np.concatenate([shape_vector(s, encoding) for s in (lam, mu, nu)])

#%% predicates

def _horn(l, m, k):
    """
    The inequalities on (r1, r2, on) triples.
    """
    deg = (sum(k) == sum(l) + sum(m))
    return deg and k[0] <= l[0] + m[0] and k[1] <= l[0] + m[1] and k[1] <= l[1] + m[0] and l[2] + m[2] <= k[2]

def nonzero_predicate(family, lam, mu, nu):
    """
    Predicts whether the structure constant of (lam, mu, nu) is nonzero.

    * ``LG``, ``OGodd``: |nu| = |lam|+|mu|, nu1 <= lam1+mu1, nu2 <= lam1+mu2, nu2 <= lam2+mu1, lam3+mu3 <= nu3,
    * ``Flag``: |nu| = |lam|+|mu|, nu1 <= lam1+mu1, nu2 <= lam2+mu2, lam3+mu3 <= nu3,
    * ``OGeven``: single-row inputs are evaluated with the star product; if nu1 = 2n-4 the inequalities
      above together with eta != 0, otherwise the inequalities,
    * chains and G2: |nu| = |lam|+|mu|.

    Here the third coordinate is the on/off marker.
    """
    family = make_family(family, lam.family.n)
    fam = check_same_family(lam, mu, nu)
    if fam != family:
        raise FamilyMismatch(f"Shapes of {fam} passed for {family}")
    for s in (lam, mu, nu):
        check_shape(s)

    l, m, k = (tuple(shape_vector(s)) for s in (lam, mu, nu))

    if fam.kind == 'chain':
        return nu.size == lam.size + mu.size
    elif fam.kind == 'flag':
        return nu.size == lam.size + mu.size and k[0] <= l[0] + m[0] and k[1] <= l[1] + m[1] and l[2] + m[2] <= k[2]
    elif fam.kind == 'planar':
        return _horn(l, m, k)

    if is_pieri(lam) or is_pieri(mu):
        return star(lam, mu).coeff(nu) != 0
    if nu.rows[0] == 2*fam.n - 4:
        return eta(lam, mu) != 0 and _horn(l, m, k)
    return _horn(l, m, k)

#%% exhaustive comparison

def verify_polytope_description(family, n = None, verbose = False):
    """
    Compares ``nonzero_predicate`` with the product rule over all triples.

    Returns
    -------
    info : dict
        ``checked``, ``failures`` (triples where predicate and rule disagree), ``runtime`` and
        ``observed`` (number of nonzero constants).

    """
    family = make_family(family, n)
    shapes = enumerate_shapes(family)

    start = time.time()
    checked, nonzero = 0, 0
    failures = list()
    for lam in shapes:
        for mu in shapes:
            prod = cached_multiply(lam, mu)
            for nu in shapes:
                truth = prod.coeff(nu) != 0
                checked += 1
                nonzero += int(truth)
                if truth != nonzero_predicate(family, lam, mu, nu):
                    failures.append((lam.text, mu.text, nu.text))

    info = {'family': family.variant, 'n': family.n, 'checked': checked, 'failures': failures,
            'runtime': time.time() - start, 'observed': nonzero}

    if verbose:
        hdr_fmt = "%10s\t%4s\t%10s\t%10s\t%8s\t%8s"
        out_fmt = "%10s\t%4d\t%10d\t%10d\t%8d\t%8.2f"
        print(hdr_fmt % ('family', 'n', 'checked', 'nonzero', 'failures', 'seconds'))
        print(out_fmt % (family.variant, family.n, checked, nonzero, len(failures), info['runtime']))

    return info

#%% witnesses

def _is_collinear(vectors):
    V = sympy.Matrix([[int(x) for x in v - vectors[0]] for v in vectors[1:]])
    return V.rank() <= 1

def _alternates(flags):
    return all(flags[i] != flags[i+1] for i in range(len(flags) - 1))

def witness_from_vectors(n, lam_vec, mu_vec, nu_vecs, encoding = 'layered'):
    """
    Evaluates the star product on the triples (lam, mu, nu) given by vectors in ``encoding``.

    Returns
    -------
    witness : dict
        Shapes, triple vectors (in ``encoding``), values, the nonzero pattern, and whether the triple
        vectors are collinear and the pattern alternates along the line.

    """
    fam = make_family('OGeven', n)
    lam = shape_from_vector(fam, lam_vec, encoding)
    mu = shape_from_vector(fam, mu_vec, encoding)
    nus = [shape_from_vector(fam, v, encoding) for v in nu_vecs]

    prod = star(lam, mu)
    values = [int(prod.coeff(nu)) for nu in nus]
    vectors = [triple_vector(lam, mu, nu, encoding) for nu in nus]
    flags = [v != 0 for v in values]

    return {'n': n, 'encoding': encoding, 'lambda': lam, 'mu': mu, 'nus': nus,
            'vectors': vectors, 'values': values, 'nonzero': flags,
            'collinear': _is_collinear(vectors), 'alternating': _alternates(flags)}

def find_nonconvexity_witness(n):
    """
    Collinear triples whose nonzero/zero labels alternate, for OG(2,2n).

    For n >= 5: lam = mu = (n-2,0,0,0,0) and nu_k = (n-2,k,n-2-k,0,0), k = 0..3, in the layered encoding.
    For n = 4: the three points (2,0,2,0,0), (2,1,1,0,0), (2,2,0,0,0).
    """
    if n < 4:
        raise ValueError("OG(2,2n) requires n >= 4")

    base = (n-2, 0, 0, 0, 0)
    if n == 4:
        nus = [(2, 0, 2, 0, 0), (2, 1, 1, 0, 0), (2, 2, 0, 0, 0)]
    else:
        nus = [(n-2, k, n-2-k, 0, 0) for k in range(4)]

    W = witness_from_vectors(n, base, base, nus, 'layered')
    assert W['collinear'], "witness points are not collinear"
    return W

def find_zero_set_witness():
    """
    For OG(2,8), lam = (2,0,0,0,0) and mu = (1,0,1,0,0) in the layered encoding: along the points
    (2,0,2,0,0), (2,1,1,0,0), (2,2,0,0,0) only the middle constant is nonzero, so the zero set is not
    convex either.
    """
    nus = [(2, 0, 2, 0, 0), (2, 1, 1, 0, 0), (2, 2, 0, 0, 0)]
    W = witness_from_vectors(4, (2, 0, 0, 0, 0), (1, 0, 1, 0, 0), nus, 'layered')
    assert W['collinear'], "witness points are not collinear"
    return W

def find_encoding_witnesses():
    """
    Witnesses for OG(2,10) in the two alternative encodings.

    * ``columns``: lam = (2,0,0,0,0,0,0), mu = (2,2,0,0,0,0,0), nu from (2,2,2,0,0,0,0) to (2,2,0,2,0,0,0),
    * ``charged``: lam = (3,0,0,1), mu = (3,0,0,-1), nu from (6,0,0,0) to (4,2,0,0).

    In both, the middle point is a zero constant between two nonzero ones.
    """
    res = dict()
    res['columns'] = witness_from_vectors(5, (2, 0, 0, 0, 0, 0, 0), (2, 2, 0, 0, 0, 0, 0),
                                          [(2, 2, 2, 0, 0, 0, 0), (2, 2, 1, 1, 0, 0, 0), (2, 2, 0, 2, 0, 0, 0)], 'columns')
    res['charged'] = witness_from_vectors(5, (3, 0, 0, 1), (3, 0, 0, -1),
                                          [(6, 0, 0, 0), (5, 1, 0, 0), (4, 2, 0, 0)], 'charged')
    for W in res.values():
        assert W['collinear'], "witness points are not collinear"
    return res

#%% convex hull screen

def hull_probe(family, n = None, candidates = None, encoding = None):
    """
    Lists zero triples lying in the convex hull of the nonzero triples (floating point LP screen).

    Parameters
    ----------
    family : str or Family
    n : int, optional
    candidates : list of (Shape, Shape, Shape), optional
        Zero triples to test. The default is every zero triple of matching degree.
    encoding : str, optional
        ``flat`` for all families except OGeven, where the default is ``layered``.

    Returns
    -------
    pd.DataFrame
        Columns ``lambda, mu, nu, in_hull``.

    """
    family = make_family(family, n)
    if encoding is None:
        encoding = 'layered' if family.kind == 'even' else 'flat'
    shapes = enumerate_shapes(family)

    points, zeros = list(), list()
    for lam in shapes:
        for mu in shapes:
            prod = cached_multiply(lam, mu)
            for nu in shapes:
                if prod.coeff(nu) != 0:
                    points.append(triple_vector(lam, mu, nu, encoding))
                elif nu.size == lam.size + mu.size:
                    zeros.append((lam, mu, nu))

    if candidates is None:
        candidates = zeros

    P = np.vstack(points).astype(float)
    A_eq = np.vstack([P.T, np.ones((1, P.shape[0]))])
    c = np.zeros(P.shape[0])

    rows = list()
    for lam, mu, nu in candidates:
        x = triple_vector(lam, mu, nu, encoding).astype(float)
        b_eq = np.append(x, 1.)
        res = linprog(c, A_eq = A_eq, b_eq = b_eq, bounds = (0, None), method = 'highs')
        rows.append({'lambda': lam.text, 'mu': mu.text, 'nu': nu.text, 'in_hull': res.status == 0})

    df = pd.DataFrame(rows, columns = ['lambda', 'mu', 'nu', 'in_hull'])
    return df
