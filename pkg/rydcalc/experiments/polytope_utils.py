"""
@author: rydcalc contributors

Structural checks on the rule rings: generation by small classes, and the convex hull screen of the
nonzero structure constants.
"""
import time
import sympy

from ..helper.shapes import Shape, make_family, enumerate_shapes, chain_shape, UP
from ..helper.combo import ClassCombo
from ..rules.variety import cached_multiply
from ..rules.nonzero import hull_probe

#%% generators

def generators(family):
    """
    Classes generating the rule ring over Q.
    """
    fam = make_family(family)
    if fam.kind == 'chain':
        return [chain_shape(fam, 1)]
    elif fam.kind == 'flag':
        return [Shape(fam, (1, 0), False), Shape(fam, (0, 1), False)]
    elif fam.kind == 'planar':
        return [Shape(fam, (1, 0), False), Shape(fam, (1, 1), False)]

    return [Shape(fam, (1, 0), False), Shape(fam, (1, 1), False), Shape(fam, (fam.n-2, 0), False, UP)]

def multiply_combos(a, b):
    res = ClassCombo(a.family)
    for x, cx in a.terms.items():
        for y, cy in b.terms.items():
            res = res + cached_multiply(x, y).scale(cx * cy)
    return res

def generation_check(family, n = None, verbose = False):
    """
    Builds, degree by degree, the Q-span of products of generators with lower degree elements and
    compares its rank with the number of classes of that degree.

    Returns
    -------
    info : dict
        ``checked`` (degrees), ``failures`` (degrees with rank deficit), ``runtime`` and
        ``observed`` (rank per degree).

    """
    fam = make_family(family, n)
    shapes = enumerate_shapes(fam)
    top = max(s.size for s in shapes)
    by_deg = {d: [s for s in shapes if s.size == d] for d in range(top + 1)}
    gens = generators(fam)

    start = time.time()
    span = {0: [ClassCombo(fam, {by_deg[0][0]: 1})]}
    ranks = {0: 1}
    failures = list()

    for d in range(1, top + 1):
        vecs = list()
        for g in gens:
            e = g.size
            if e == d:
                vecs.append(ClassCombo(fam, {g: 1}))
            elif e < d:
                vecs += [multiply_combos(ClassCombo(fam, {g: 1}), x) for x in span[d-e]]

        if len(vecs) == 0:
            ranks[d] = 0
            span[d] = list()
        else:
            M = sympy.Matrix([[sympy.Rational(c.coeff(s).numerator, c.coeff(s).denominator) for s in by_deg[d]] for c in vecs])
            _, pivots = M.T.rref()
            span[d] = [vecs[i] for i in pivots]
            ranks[d] = len(pivots)

        if ranks[d] != len(by_deg[d]):
            failures.append(d)

    info = {'family': fam.variant, 'n': fam.n, 'checked': top + 1, 'failures': failures,
            'runtime': time.time() - start, 'observed': ranks}

    if verbose:
        hdr_fmt = "%6s\t%8s\t%8s"
        out_fmt = "%6d\t%8d\t%8d"
        print(hdr_fmt % ('degree', 'classes', 'rank'))
        for d in range(top + 1):
            print(out_fmt % (d, len(by_deg[d]), ranks[d]))

    return info

#%% hull screen

def hull_summary(family, n = None, candidates = None):
    """
    Runs ``hull_probe`` and returns the info dict of the screen: ``failures`` are the zero triples
    inside the convex hull of the nonzero triples.
    """
    fam = make_family(family, n)
    start = time.time()
    df = hull_probe(fam, candidates = candidates)
    inside = df[df['in_hull']]

    info = {'family': fam.variant, 'n': fam.n, 'checked': len(df),
            'failures': [tuple(r) for r in inside[['lambda', 'mu', 'nu']].itertuples(index = False)],
            'runtime': time.time() - start, 'observed': len(inside)}
    return info
