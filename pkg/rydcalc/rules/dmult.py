"""
@author: rydcalc contributors

Product rule for OG(2,2n): the diamond product on flattened shapes, the charge factor eta and
the star product with its rescaling and disambiguation steps.
"""
from fractions import Fraction

from ..helper.shapes import Shape, FlatShape, flatten, fsh, is_ambiguous, check_same_family, \
                            NEUTRAL, UP, DOWN
from ..helper.combo import FlatCombo, ChargedCombo
from ..helper.utils import FamilyMismatch

#%% helpers

def _opposite(charge):
    return {UP: DOWN, DOWN: UP}[charge]

def is_pieri(s):
    """
    Whether the flattened shape is a single row.
    """
    return flatten(s).rows[1] == 0

def _flat_add(combo, n, rows, on, coeff = 1):
    f = FlatShape(n, rows, on)
    if f.is_valid():
        combo.add(f, coeff)
    return combo

#%% diamond

def diamond(alpha, beta, n = None):
    """
    Product of two flattened shapes inside the 2 x (2n-4) rectangle, with M = min(a1-a2, b1-b2).

    * both off, |a|+|b| <= 2n-4: sum_k <a1+b1-k, a2+b2+k|off>,
    * both off, |a|+|b| > 2n-4: <s1, s2-1|on> + 2 sum_{k=1..M} <s1-k, s2+k-1|on> + <s1-M-1, s2+M|on>,
    * exactly one on: sum_k <s1-k, s2+k|on>,
    * both on: 0.

    Illegal terms are dropped.
    """
    if n is None:
        n = alpha.n
    if alpha.n != n or beta.n != n:
        raise FamilyMismatch("flattened shapes of different n")

    res = FlatCombo(None)
    if alpha.on and beta.on:
        return res

    a1, a2 = alpha.rows
    b1, b2 = beta.rows
    s1, s2 = a1 + b1, a2 + b2
    M = min(a1 - a2, b1 - b2)

    if alpha.on or beta.on:
        for k in range(M+1):
            _flat_add(res, n, (s1-k, s2+k), True)
    elif alpha.weight + beta.weight <= 2*n - 4:
        for k in range(M+1):
            _flat_add(res, n, (s1-k, s2+k), False)
    else:
        _flat_add(res, n, (s1, s2-1), True)
        for k in range(1, M+1):
            _flat_add(res, n, (s1-k, s2+k-1), True, 2)
        _flat_add(res, n, (s1-M-1, s2+M), True)

    return res

#%% eta

def eta(lam, mu, n = None):
    """
    Charge factor: 2 if both shapes are charged and match (n even) or are opposite (n odd),
    1 if one of them is neutral, 0 otherwise.
    """
    if n is None:
        n = lam.family.n

    if lam.charge == NEUTRAL or mu.charge == NEUTRAL:
        return 1

    match = (lam.charge == mu.charge)
    if (match and n % 2 == 0) or (not match and n % 2 == 1):
        return 2
    return 0

#%% star

def _pieri_base(lam, mu, n):
    """
    Product of two charged copies of <n-2,0|off>.
    """
    fam = lam.family
    match = (lam.charge == mu.charge)
    if n % 2 == 0:
        if match:
            rows = [(2*n-4-2*k, 2*k) for k in range((n-2)//2 + 1)]
        else:
            rows = [(2*n-5-2*k, 2*k+1) for k in range((n-4)//2 + 1)]
    else:
        if match:
            rows = [(2*n-5-2*k, 2*k+1) for k in range((n-3)//2 + 1)]
        else:
            rows = [(2*n-4-2*k, 2*k) for k in range((n-3)//2 + 1)]

    res = ChargedCombo(fam)
    for r in rows:
        f = FlatShape(n, r, False)
        if is_ambiguous(f):
            assert match, "opposite charges produced an ambiguous term"
            res.add(Shape(fam, r, False, lam.charge))
        else:
            res.add(Shape(fam, r, False))
    return res

def _disambiguation(lam, mu):
    """
    How ambiguous terms are resolved: ``('split', None)`` or ``('assign', charge)`` or
    ``('parity', charge)`` for the single-row times full-weight case.
    """
    n = lam.family.n
    pl, pm = is_pieri(lam), is_pieri(mu)

    if not pl and not pm:
        return 'split', None

    if (pl and not lam.is_charged) or (pm and not mu.is_charged):
        other = mu if (pl and not lam.is_charged) else lam
        if other.is_charged:
            return 'assign', other.charge
        return 'split', None

    # one charged single-row shape times a shape with two rows
    P, other = (lam, mu) if pl else (mu, lam)
    if other.on and not other.is_charged and other.rows[0] + other.rows[1] == 2*n - 4:
        return 'parity', P.charge if other.rows[0] % 2 == 0 else _opposite(P.charge)
    if other.is_charged:
        return 'assign', other.charge
    return 'split', None

def star_steps(lam, mu):
    """
    The star product with all intermediate stages.

    Returns
    -------
    info : dict
        ``diamond`` (FlatCombo), ``eta``, ``after_eta`` and ``after_fsh`` (FlatCombo after the first
        two steps), ``mode`` (disambiguation) and ``result`` (ChargedCombo). For two charged copies of
        <n-2,0|off> only ``base`` and ``result`` are set.

    """
    fam = check_same_family(lam, mu)
    if fam.variant != 'OGeven':
        raise FamilyMismatch(f"star expects OGeven shapes, got {fam}")
    n = fam.n
    fl, fm = flatten(lam), flatten(mu)
    base = FlatShape(n, (n-2, 0), False)

    info = dict()
    if fl == base and fm == base:
        info['base'] = True
        info['result'] = _pieri_base(lam, mu, n)
        return info

    D = diamond(fl, fm, n)
    e = eta(lam, mu, n)
    # (i)
    F1 = D.map_coeffs(lambda k, c: c * e if k.rows[0] == 2*n-4 else c)
    # (ii)
    F2 = F1.map_coeffs(lambda k, c: c * Fraction(2)**(fsh(k) - fsh(fl) - fsh(fm)))
    # (iii)
    mode, charge = _disambiguation(lam, mu)
    res = ChargedCombo(fam)
    for k, c in F2.terms.items():
        if not is_ambiguous(k):
            res.add(Shape(fam, k.rows, k.on), c)
        elif mode == 'split' or (mode == 'parity' and k.rows != (2*n-4, n-2)):
            # in parity mode only <2n-4,n-2|on> is assigned, the partner shape being neutral
            res.add(Shape(fam, k.rows, k.on, UP), c/2)
            res.add(Shape(fam, k.rows, k.on, DOWN), c/2)
        else:
            res.add(Shape(fam, k.rows, k.on, charge), c)

    info.update({'base': False, 'diamond': D, 'eta': e, 'after_eta': F1, 'after_fsh': F2, 'mode': mode, 'result': res})
    return info

def star(lam, mu, n = None):
    """
    Product in OG(2,2n).

    Parameters
    ----------
    lam, mu : Shape
        Shapes of an ``OGeven`` family.
    n : int, optional
        Checked against the family if given.

    Returns
    -------
    ChargedCombo
        Integral, nonnegative expansion.

    """
    if n is not None and lam.family.n != n:
        raise FamilyMismatch(f"star called with n={n} on shapes of {lam.family}")

    res = star_steps(lam, mu)['result']
    assert res.is_integral(), f"non-integral product {lam} * {mu} = {res}"
    return res

def is_balanced(combo):
    """
    True iff the up-charged and the down-charged terms carry the same total coefficient.
    """
    up = sum(c for k, c in combo.terms.items() if k.charge == UP)
    down = sum(c for k, c in combo.terms.items() if k.charge == DOWN)
    return up == down
