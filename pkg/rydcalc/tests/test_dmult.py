"""
@author: rydcalc contributors
"""
import pytest
from fractions import Fraction

from rydcalc.helper.shapes import FlatShape, make_family, enumerate_shapes
from rydcalc.helper.combo import FlatCombo, ChargedCombo
from rydcalc.helper.utils import FamilyMismatch
from rydcalc.rules.dmult import diamond, eta, star, star_steps, is_balanced, is_pieri
from rydcalc.rules.variety import variety, cached_multiply


def flat(n, r1, r2, on):
    return FlatShape(n, (r1, r2), on)

def expansion(V, *terms):
    return ChargedCombo(V.family, {V.parse(t): c for c, t in terms})

#%% diamond and eta

def test_diamond():
    n = 6
    D = diamond(flat(n, 4, 1, False), flat(n, 4, 2, False))
    expected = FlatCombo(None, {flat(n, 8, 2, True): 1, flat(n, 7, 3, True): 2, flat(n, 6, 4, True): 2, flat(n, 5, 5, True): 1})
    assert D == expected

    assert diamond(flat(n, 0, 0, False), flat(n, 4, 2, False)) == FlatCombo(None, {flat(n, 4, 2, False): 1})
    assert len(diamond(flat(n, 6, 2, True), flat(n, 5, 3, True))) == 0

    with pytest.raises(FamilyMismatch):
        diamond(flat(5, 1, 0, False), flat(6, 1, 0, False))
    return

def test_eta():
    V = variety('OGeven', 6)
    up, down, neutral = V.parse('4,0|off|up'), V.parse('4,1|off|down'), V.parse('3,1|off')
    assert eta(up, V.parse('4,2|off|up')) == 2
    assert eta(up, down) == 0
    assert eta(neutral, down) == 1

    W = variety('OGeven', 5)
    assert eta(W.parse('3,0|off|up'), W.parse('3,1|off|down')) == 2
    assert eta(W.parse('3,0|off|up'), W.parse('3,1|off|up')) == 0
    return

#%% star

def test_example_star():
    V = variety('OGeven', 6)
    lam, mu = V.parse('4,1|off|up'), V.parse('4,2|off|down')
    info = star_steps(lam, mu)
    assert info['eta'] == 0
    assert info['mode'] == 'split'
    # the eta factor kills the full-width row
    assert info['after_eta'].coeff(flat(6, 8, 2, True)) == 0
    assert info['after_fsh'].coeff(flat(6, 7, 3, True)) == 1
    assert info['after_fsh'].coeff(flat(6, 6, 4, True)) == 2

    assert star(lam, mu) == expansion(V, (1, '7,3|on'), (1, '6,4|on|up'), (1, '6,4|on|down'), (1, '5,5|on'))
    return

def test_single_row_base():
    V = variety('OGeven', 5)
    a_up, a_down = V.parse('3,0|off|up'), V.parse('3,0|off|down')
    assert star(a_down, a_down) == expansion(V, (1, '5,1|off'), (1, '3,3|off|down'))
    assert star(a_up, a_down) == expansion(V, (1, '6,0|off'), (1, '4,2|off'))
    assert star_steps(a_up, a_down)['base']
    return

def test_single_row_base_even():
    V = variety('OGeven', 6)
    a_up, a_down = V.parse('4,0|off|up'), V.parse('4,0|off|down')
    # matching charges: the shape <n-2,n-2|off> inherits the charge
    assert star(a_up, a_up) == expansion(V, (1, '8,0|off'), (1, '6,2|off'), (1, '4,4|off|up'))
    assert star(a_up, a_down) == expansion(V, (1, '7,1|off'), (1, '5,3|off'))
    return

def test_eta_kills_full_row():
    V = variety('OGeven', 6)
    res = star(V.parse('4,0|off|down'), V.parse('4,2|off|up'))
    assert res == expansion(V, (1, '7,2|on'), (1, '6,3|on'), (1, '5,4|on|up'))
    return

def test_star_errors():
    with pytest.raises(FamilyMismatch):
        star(variety('OGodd', 4).parse('1,0|off'), variety('OGodd', 4).parse('1,0|off'))
    with pytest.raises(FamilyMismatch):
        star(variety('OGeven', 4).parse('1,0|off'), variety('OGeven', 4).parse('1,0|off'), n = 5)
    return

def test_is_pieri():
    V = variety('OGeven', 5)
    assert is_pieri(V.parse('3,0|off|up'))
    assert not is_pieri(V.parse('2,1|off'))
    return

#%% exhaustive properties

def template_star_table(n):
    fam = make_family('OGeven', n)
    shapes = enumerate_shapes(fam)
    seen = set()
    for lam in shapes:
        for mu in shapes:
            p = cached_multiply(lam, mu)
            assert p == cached_multiply(mu, lam)
            for nu, c in p.to_int_dict().items():
                assert nu.size == lam.size + mu.size
                seen.add(c)
            if not lam.is_charged and not mu.is_charged:
                assert is_balanced(p)
    return seen

def test_star_table():
    assert template_star_table(4) == {1, 2}
    assert template_star_table(5) == {1, 2}
    assert template_star_table(6) == {1, 2, 4}
    # 8 first appears for OG(2,14)
    assert template_star_table(7) == {1, 2, 4, 8}
    return

def test_opposite_base_has_no_ambiguous_term():
    for n in [4, 5, 6, 7]:
        V = variety('OGeven', n)
        base = f"{n-2},0|off"
        res = star(V.parse(base + '|up'), V.parse(base + '|down'))
        assert all(not s.is_charged for s in res.keys())
    return

def test_balanced():
    V = variety('OGeven', 6)
    assert is_balanced(expansion(V, (1, '6,4|on|up'), (1, '6,4|on|down')))
    assert not is_balanced(expansion(V, (1, '6,4|on|up')))
    assert is_balanced(expansion(V, (Fraction(3), '7,3|on')))
    return
