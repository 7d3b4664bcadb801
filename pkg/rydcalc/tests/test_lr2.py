"""
@author: rydcalc contributors
"""
import itertools

from rydcalc.helper.lr2 import lr2_tableaux, lr2_coeff, lr2_expand, lr1_coeff, is_partition2

BOX = 12

def partitions(bound):
    return [(a, b) for a in range(bound+1) for b in range(a+1)]


def test_lr2_examples():
    assert lr2_coeff((1, 0), (1, 0), (2, 0)) == 1
    assert lr2_coeff((1, 0), (1, 0), (1, 1)) == 1
    assert lr2_coeff((3, 1), (3, 2), (6, 3)) == 1
    assert lr2_coeff((3, 1), (3, 2), (5, 4)) == 1
    assert lr2_coeff((3, 1), (3, 2), (7, 2)) == 0

    nus = [nu for nu in partitions(11) if lr2_coeff((4, 1), (4, 2), nu) == 1]
    assert sorted(nus) == [(6, 5), (7, 4), (8, 3)]
    return

def test_tableaux_match_closed_form():
    """brute force tableau count equals the Horn inequalities inside 2 x BOX"""
    P = partitions(BOX // 2)
    for lam, mu in itertools.product(P, P):
        for nu in partitions(BOX):
            if sum(nu) != sum(lam) + sum(mu):
                continue
            assert lr2_tableaux(lam, mu, nu) == lr2_coeff(lam, mu, nu), (lam, mu, nu)
    return

def test_symmetry_and_degree():
    P = partitions(5)
    for lam, mu, nu in itertools.product(P, P, partitions(10)):
        c = lr2_coeff(lam, mu, nu)
        assert c == lr2_coeff(mu, lam, nu)
        if c != 0:
            assert sum(nu) == sum(lam) + sum(mu)
    return

def test_associativity():
    """sum_kappa c_{lam,mu}^kappa c_{kappa,nu}^rho is symmetric in lam, mu, nu"""
    P = partitions(3)
    big = partitions(9)
    for lam, mu, nu in itertools.combinations_with_replacement(P, 3):
        for rho in big:
            if sum(rho) != sum(lam) + sum(mu) + sum(nu):
                continue
            vals = set()
            for a, b, c in itertools.permutations([lam, mu, nu]):
                vals.add(sum(lr2_coeff(a, b, k) * lr2_coeff(k, c, rho) for k in partitions(6)))
            assert len(vals) == 1
    return

def test_expand():
    assert lr2_expand((2, 1), (3, 2), (6, 5)) == [((5, 3), 1), ((4, 4), 1)]
    assert lr2_expand((0, 0), (3, 1), (9, 9)) == [((3, 1), 1)]
    assert lr2_expand((4, 1), (4, 2), (9, 8)) == [((8, 3), 1), ((7, 4), 1), ((6, 5), 1)]
    # the box cuts (8,3) away
    assert lr2_expand((4, 1), (4, 2), (7, 7)) == [((7, 4), 1), ((6, 5), 1)]
    return

def test_lr1():
    assert lr1_coeff(1, 2, 3, 5) == 1
    assert lr1_coeff(1, 2, 4, 5) == 0
    assert lr1_coeff(3, 3, 6, 4) == 0
    return

def test_is_partition():
    assert is_partition2((3, 1))
    assert not is_partition2((1, 3))
    assert lr2_coeff((1, 3), (1, 0), (2, 3)) == 0
    return
