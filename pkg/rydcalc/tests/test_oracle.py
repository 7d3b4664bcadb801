"""
@author: rydcalc contributors
"""
import pytest

from rydcalc.helper.rootsys import get_root_system
from rydcalc.helper.weyl import WeylElement, minimal_coset_reps, reduced_words
from rydcalc.helper.shapes import make_family, enumerate_shapes, shape_to_coset
from rydcalc.rules.variety import cached_multiply
from rydcalc.oracle.billey import Oracle, RootEvaluator, billey_restriction, oracle_constant, oracle_table
from rydcalc.oracle.monk import monk_multiply, monk_product
from rydcalc.experiments.verify_utils import check_monk

# families checked against the oracle at desk scale
TABLE_CASES = [('Flag', 4), ('Flag', 5), ('LG', 3), ('OGodd', 3), ('OGodd', 4), ('OGeven', 4),
               ('ChainB', 3), ('ChainC', 3), ('ChainB', 4), ('G2P1', None), ('G2P2', None)]


def full_group(family, rank):
    rs = get_root_system(family, rank)
    return rs, minimal_coset_reps(rs, range(1, rs.rank + 1))

#%% restrictions

def test_restriction_basics():
    rs, W = full_group('A', 3)
    e = WeylElement.identity(rs)
    s1 = WeylElement.simple(1, rs)
    for w in W:
        assert billey_restriction(e, w, mode = 'numeric') == 1

    ev = RootEvaluator(rs, 'poly')
    assert billey_restriction(s1, s1, mode = 'poly') == ev.gens[0]
    assert billey_restriction(s1, e, mode = 'poly') == ev.zero

    w0 = W[-1]
    assert billey_restriction(w0, s1, mode = 'numeric') == 0
    return

def test_default_mode():
    """function and class evaluate in the same mode unless told otherwise"""
    rs, W = full_group('A', 3)
    O = Oracle(rs, (1, 2))
    assert O.params['mode'] == 'numeric'
    for u in W:
        for w in W:
            assert billey_restriction(u, w) == O.restriction(u, w)

    s1 = WeylElement.simple(1, rs)
    assert billey_restriction(s1, s1) == 1
    return

def template_word_independence(family, rank, max_length):
    rs, W = full_group(family, rank)
    O = Oracle(rs, range(1, rs.rank + 1), {'mode': 'poly'})
    for w in W:
        if w.length > max_length:
            continue
        for u in W:
            vals = [billey_restriction(u, w, word = word, mode = 'poly') for word in reduced_words(w)]
            assert all(v == vals[0] for v in vals)
            assert vals[0] == O.restriction(u, w)
    return

def test_word_independence():
    template_word_independence('A', 4, 6)
    template_word_independence('B', 3, 4)
    template_word_independence('G2', 2, 6)
    return

def test_bruhat_support():
    """restriction is nonzero iff u <= w"""
    rs, W = full_group('B', 2)
    O = Oracle(rs, (1, 2))
    for w in W:
        below = [u for u in W if O.bruhat_leq(u, w)]
        assert WeylElement.identity(rs) in below and w in below
        assert all(u.length <= w.length for u in below)
        assert sum(u.length == w.length for u in below) == 1
    return

def test_bad_word():
    rs, W = full_group('A', 3)
    with pytest.raises(AssertionError):
        billey_restriction(W[0], W[-1], word = (1, 2))
    with pytest.raises(ValueError):
        RootEvaluator(rs, 'float')
    return

#%% structure constants

def test_oracle_constant():
    rs, W = full_group('A', 4)
    e = WeylElement.identity(rs)
    for u in W[:10]:
        assert oracle_constant(u, e, u) == 1

    s1, s2 = WeylElement.simple(1, rs), WeylElement.simple(2, rs)
    # sigma_{s1}^2 = sigma_{s2 s1} in the full flag variety
    assert oracle_constant(s1, s1, s2 * s1) == 1
    assert oracle_constant(s1, s1, s1 * s2) == 0
    return

def test_poly_mode_product():
    fam = make_family('LG', 3)
    On = Oracle(fam.compute_system, fam.compute_nodes, {'mode': 'numeric'})
    Op = Oracle(fam.compute_system, fam.compute_nodes, {'mode': 'poly'})
    shapes = enumerate_shapes(fam)
    for lam in shapes[:4]:
        for mu in shapes[:6]:
            u, v = shape_to_coset(lam), shape_to_coset(mu)
            assert On.product(u, v) == Op.product(u, v)
    return

def template_table(variant, n):
    fam = make_family(variant, n)
    shapes = enumerate_shapes(fam)
    oracle = oracle_table(fam)
    rules = dict()
    for lam in shapes:
        for mu in shapes:
            for nu, c in cached_multiply(lam, mu).to_int_dict().items():
                rules[(lam.text, mu.text, nu.text)] = c
    assert oracle == rules
    return oracle

def test_tables_against_rules():
    for variant, n in TABLE_CASES:
        template_table(variant, n)
    return

def test_desk_scale_warning():
    rs = get_root_system('A', 9)
    O = Oracle(rs, (1, 8))
    with pytest.warns(UserWarning):
        assert len(O.cosets) == 72
    return

#%% Monk

def test_monk():
    assert monk_multiply((1, 2, 3, 4), 1) == {(2, 1, 3, 4): 1}
    assert monk_multiply((4, 3, 2, 1), 2) == dict()
    assert monk_multiply((1, 3, 2, 4), 2) == {(2, 3, 1, 4): 1, (1, 4, 2, 3): 1}

    rs = get_root_system('A', 4)
    res = monk_product(WeylElement.identity(rs), 3)
    assert res == {WeylElement((1, 2, 4, 3), rs): 1}

    with pytest.raises(ValueError):
        monk_multiply((1, 1, 2), 1)
    with pytest.raises(ValueError):
        monk_multiply((1, 2, 3), 3)
    return

def test_monk_against_flag_rule():
    for n in [3, 4, 5, 6]:
        assert check_monk('Flag', n)['failures'] == []
    return
