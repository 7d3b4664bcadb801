"""
@author: rydcalc contributors

Product rules built on the A-operator: the flag variety Fl(1,n-1;n), LG(2,2n), OG(2,2n+1),
the two chains B_n/P_1 and C_n/P_1 and both G2 cases, plus the (co)adjoint rescaling relation.
"""
import time
from fractions import Fraction

from ..helper.shapes import Shape, make_family, enumerate_shapes, check_same_family, \
                            chain_shape, relabel, sh, COADJOINT_PAIRS
from ..helper.lr2 import lr2_expand, lr1_coeff
from ..helper.combo import ClassCombo
from ..helper.utils import FamilyMismatch

#%% legality

def _legal(family, rows):
    r1, r2 = rows
    w = family.width
    if family.kind == 'flag':
        return 0 <= r1 <= w and 0 <= r2 <= w
    return w >= r1 >= r2 >= 0

def _add(combo, rows, on, coeff = 1):
    """
    Adds the term ``coeff * <rows|on>`` unless it is illegal.
    """
    fam = combo.family
    if _legal(fam, rows):
        s = Shape(fam, rows, on)
        assert (s.on and sum(rows) >= fam.width) or (not s.on and sum(rows) <= fam.width), f"term {s} breaks the size bounds"
        combo.add(s, coeff)
    return combo

#%% A-operator

def a_op(lam, mu, nu):
    """
    The A-operator for a target ``nu = (n1, n2)``:

    * 0 if both shapes are on,
    * ``<nu|on>`` if exactly one is on,
    * ``<nu|off>`` if |lam| + |mu| <= half,
    * ``<n1-1,n2|on> + <n1,n2-1|on>`` otherwise.

    Illegal terms are dropped.
    """
    fam = check_same_family(lam, mu)
    if fam.kind not in ['flag', 'planar']:
        raise ValueError(f"The A-operator is not defined for {fam}")

    res = ClassCombo(fam)
    n1, n2 = nu
    if lam.on and mu.on:
        return res
    elif lam.on or mu.on:
        return _add(res, (n1, n2), True)
    elif lam.size + mu.size <= fam.half:
        return _add(res, (n1, n2), False)

    _add(res, (n1-1, n2), True)
    _add(res, (n1, n2-1), True)
    return res

#%% flag

def mult_flag(lam, mu):
    """
    Product in Fl(1,n-1;n): the A-operator applied to the row-wise sum.
    """
    fam = check_same_family(lam, mu)
    if fam.variant != 'Flag':
        raise FamilyMismatch(f"mult_flag expects Flag shapes, got {fam}")

    return a_op(lam, mu, (lam.rows[0] + mu.rows[0], lam.rows[1] + mu.rows[1]))

#%% LG and OG(2,2n+1)

def _planar_closed_form(lam, mu):
    """
    Closed form of the planar rule with M = min(lam1 - lam2, mu1 - mu2).
    """
    fam = lam.family
    res = ClassCombo(fam)
    if lam.on and mu.on:
        return res

    s1 = lam.rows[0] + mu.rows[0]
    s2 = lam.rows[1] + mu.rows[1]
    M = min(lam.rows[0] - lam.rows[1], mu.rows[0] - mu.rows[1])

    for k in range(M+1):
        if lam.on or mu.on:
            _add(res, (s1-k, s2+k), True)
        elif lam.size + mu.size <= fam.half:
            _add(res, (s1-k, s2+k), False)
        else:
            _add(res, (s1-k, s2+k-1), True)
            _add(res, (s1-k-1, s2+k), True)

    return res

def _planar_lr_form(lam, mu):
    """
    Sum over nu of c_{lam,mu}^nu A(nu), nu inside (half+1, half).
    """
    fam = lam.family
    res = ClassCombo(fam)
    for nu, c in lr2_expand(lam.rows, mu.rows, (fam.half + 1, fam.half)):
        res += a_op(lam, mu, nu).scale(c)
    return res

def mult_lg(lam, mu, closed_form = True):
    """
    Product in LG(2,2n).

    Parameters
    ----------
    lam, mu : Shape
        Shapes of an ``LG`` family.
    closed_form : bool, optional
        Use the closed form in M = min(lam1-lam2, mu1-mu2). Otherwise sum the A-operator over the
        two-row Littlewood-Richardson expansion. Both give the same result. The default is True.

    Returns
    -------
    ClassCombo

    """
    fam = check_same_family(lam, mu)
    if fam.variant != 'LG':
        raise FamilyMismatch(f"mult_lg expects LG shapes, got {fam}")

    if closed_form:
        return _planar_closed_form(lam, mu)
    return _planar_lr_form(lam, mu)

def mult_og_odd(lam, mu):
    """
    Product in OG(2,2n+1): the LG rule rescaled by 2^{sh(nu)-sh(lam)-sh(mu)}.
    """
    fam = check_same_family(lam, mu)
    if fam.variant != 'OGodd':
        raise FamilyMismatch(f"mult_og_odd expects OGodd shapes, got {fam}")

    base = _planar_closed_form(lam, mu)
    res = base.map_coeffs(lambda nu, c: c * Fraction(2)**(sh(nu) - sh(lam) - sh(mu)))

    assert res.is_integral(), f"non-integral product {lam} * {mu} = {res}"
    return res

#%% chains and G2

def _gr1_value(fam, lam, mu, nu):
    """
    Value of the coadjoint member of a chain pair, via lines in C^{2n-1} and C^{2n}.
    """
    if nu.size != lam.size + mu.size:
        return 0
    p = [s.size - int(s.on) for s in (lam, mu, nu)]
    m = fam.N - 1
    if not lam.on and not mu.on and nu.on:
        return 2 * lr1_coeff(p[0], p[1], p[2] + 1, m + 1)
    return lr1_coeff(p[0], p[1], p[2], m)

def _chain_product(lam, mu, coadjoint, m):
    fam = lam.family
    res = ClassCombo(fam)
    k = lam.size + mu.size
    if k > fam.N:
        return res

    nu = chain_shape(fam, k)
    val = Fraction(_gr1_value(fam, lam, mu, nu))
    if not coadjoint:
        val *= Fraction(m)**(sh(nu) - sh(lam) - sh(mu))

    assert val.denominator == 1, f"non-integral product {lam} * {mu}"
    if val != 0:
        res.add(nu, val)
    return res

def mult_chain(variant, lam, mu):
    """
    Product in B_n/P_1 (``ChainB``) or C_n/P_1 (``ChainC``).
    """
    fam = check_same_family(lam, mu)
    if variant not in ['ChainB', 'ChainC']:
        raise ValueError("Not a known chain option")
    if fam.variant != variant:
        raise FamilyMismatch(f"mult_chain({variant}) got shapes of {fam}")

    return _chain_product(lam, mu, coadjoint = (variant == 'ChainB'), m = 2)

def mult_g2(variant, lam, mu):
    """
    Product in G2/P1 (``G2P1``) or G2/P2 (``G2P2``).
    """
    fam = check_same_family(lam, mu)
    if variant not in ['G2P1', 'G2P2']:
        raise ValueError("Not a known G2 option")
    if fam.variant != variant:
        raise FamilyMismatch(f"mult_g2({variant}) got shapes of {fam}")

    return _chain_product(lam, mu, coadjoint = (variant == 'G2P1'), m = 3)

#%% coadjoint relation

_PAIR_ALIASES = {('LG', 'OGodd'): ('OGodd', 'LG'), ('ChainB', 'ChainC'): ('ChainC', 'ChainB'),
                 ('G2P1', 'G2P2'): ('G2P2', 'G2P1')}

def verify_coadjoint_relation(pair, n = None, verbose = False):
    """
    Checks C(coadjoint) = m^{sh(lam)+sh(mu)-sh(nu)} C(adjoint) for all triples of shapes.

    Parameters
    ----------
    pair : tuple of str
        ``(adjoint, coadjoint)``, one of ``(OGodd, LG)``, ``(ChainC, ChainB)``, ``(G2P2, G2P1)``.
        The reversed order is accepted as well.
    n : int
        Rank parameter (ignored for G2).
    verbose : bool, optional

    Returns
    -------
    info : dict
        Keys ``checked``, ``failures``, ``runtime`` and ``observed`` (the rescaling exponents seen).

    """
    from .variety import multiply

    pair = tuple(pair)
    pair = _PAIR_ALIASES.get(pair, pair)
    if pair not in COADJOINT_PAIRS:
        raise ValueError(f"Not a known adjoint/coadjoint pair: {pair}")
    m = COADJOINT_PAIRS[pair]

    adj = make_family(pair[0], n)
    co = make_family(pair[1], n)
    shapes = enumerate_shapes(adj)

    start = time.time()
    checked = 0
    failures = list()
    exponents = set()

    for i, lam in enumerate(shapes):
        for mu in shapes[i:]:
            p_adj = multiply(lam, mu)
            p_co = multiply(relabel(lam, co), relabel(mu, co))
            for nu in shapes:
                if nu.size != lam.size + mu.size:
                    continue
                e = sh(lam) + sh(mu) - sh(nu)
                exponents.add(e)
                lhs = p_co.coeff(relabel(nu, co))
                rhs = Fraction(m)**e * p_adj.coeff(nu)
                checked += 1
                if lhs != rhs:
                    failures.append((lam.text, mu.text, nu.text))

    info = {'pair': pair, 'n': adj.n, 'checked': checked, 'failures': failures,
            'runtime': time.time() - start, 'observed': sorted(exponents)}

    if verbose:
        hdr_fmt = "%10s\t%10s\t%4s\t%8s\t%8s\t%8s"
        out_fmt = "%10s\t%10s\t%4d\t%8d\t%8d\t%8.2f"
        print(hdr_fmt % ('adjoint', 'coadjoint', 'n', 'checked', 'failures', 'seconds'))
        print(out_fmt % (pair[0], pair[1], adj.n, checked, len(failures), info['runtime']))

    return info
