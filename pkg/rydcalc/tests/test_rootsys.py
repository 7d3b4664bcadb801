"""
@author: rydcalc contributors
"""
import pytest
import numpy as np
from numpy.testing import assert_array_equal

from rydcalc.helper.rootsys import build_root_system, get_root_system, lambda_poset, is_short
from rydcalc.helper.weyl import WeylElement, minimal_coset_reps, reduced_words

# (family, rank parameter, marked nodes, |Lambda|, number of coset representatives)
ADJOINT_CASES = [('A', 5, (1, 4), 7, 20),
                 ('B', 4, (2,), 11, 24),
                 ('C', 4, (2,), 11, 24),
                 ('D', 4, (2,), 9, 24),
                 ('D', 5, (2,), 13, 40),
                 ('G2', 2, (2,), 5, 6)]


def test_root_counts():
    assert len(build_root_system('G2', 2).positive_roots) == 6
    assert len(build_root_system('B', 4).positive_roots) == 16
    assert len(build_root_system('D', 5).positive_roots) == 20
    assert len(build_root_system('A', 5).positive_roots) == 10
    return

def test_g2_lengths():
    rs = build_root_system('G2', 2)
    classes = [r.length_class for r in rs.positive_roots]
    assert classes.count('short') == 3 and classes.count('long') == 3
    assert not is_short(rs, rs.highest_root)
    return

def test_nonnegative_coefficients():
    for fam, rank in [('A', 4), ('B', 3), ('C', 3), ('D', 4), ('G2', 2)]:
        rs = get_root_system(fam, rank)
        for r in rs.positive_roots:
            assert min(r.coeffs) >= 0
            assert_array_equal(np.array(r.coeffs) @ rs.simple_roots, np.array(r.vec))
    return

def test_bad_rank():
    with pytest.raises(ValueError):
        build_root_system('D', 3)
    with pytest.raises(ValueError):
        build_root_system('E', 6)
    return

def test_is_short():
    rs = get_root_system('B', 3)
    assert is_short(rs, (1, 0, 0))
    assert not is_short(rs, (1, 1, 0))

    rs = get_root_system('C', 3)
    assert is_short(rs, (1, 1, 0))
    assert not is_short(rs, (2, 0, 0))

    rs = get_root_system('D', 4)
    assert not any(is_short(rs, r) for r in rs.positive_roots)

    with pytest.raises(KeyError):
        is_short(rs, (1, 0, 0, 0))
    return

def test_lambda_poset():
    for fam, rank, nodes, size, _ in ADJOINT_CASES:
        lam = lambda_poset(get_root_system(fam, rank), nodes)
        assert len(lam) == size
        assert len(lam) % 2 == 1
        # unique maximum, the highest root
        assert lam.maximal() == [get_root_system(fam, rank).highest_root]

    with pytest.raises(ValueError):
        lambda_poset(get_root_system('B', 3), ())
    return

def test_bc_duality():
    """B_n/P_2 and C_n/P_2 posets have the same grading; short roots of one match long roots of the other"""
    for n in [3, 4]:
        LB = lambda_poset(get_root_system('B', n), (2,))
        LC = lambda_poset(get_root_system('C', n), (2,))
        assert len(LB) == len(LC)
        assert len(LB.covers()) == len(LC.covers())
        assert sorted(r.height for r in LB) == sorted(r.height for r in LC)

        short_b = [r for r in LB if r.length_class == 'short']
        long_c = [r for r in LC if r.length_class == 'long']
        assert len(short_b) == len(long_c) == 2
    return

def test_coset_reps():
    for fam, rank, nodes, _, count in ADJOINT_CASES:
        rs = get_root_system(fam, rank)
        reps = minimal_coset_reps(rs, nodes)
        assert len(reps) == count
        # inversion sets determine the representative
        assert len(set(w.inversion_set for w in reps)) == count
    return

def test_all_nodes_marked():
    """all nodes marked: W_P is trivial and every element is a representative"""
    rs = get_root_system('A', 3)
    assert len(minimal_coset_reps(rs, (1, 2))) == 6
    rs = get_root_system('B', 2)
    assert len(minimal_coset_reps(rs, (1, 2))) == 8
    return

def test_type_d_parity():
    rs = get_root_system('D', 4)
    with pytest.raises(AssertionError):
        WeylElement((-1, 2, 3, 4), rs)
    return

def test_reduced_words():
    rs = get_root_system('B', 3)
    for w in minimal_coset_reps(rs, (1, 2, 3)):
        words = reduced_words(w)
        assert w.reduced_word() == words[0]
        for word in words:
            assert len(word) == w.length
            assert WeylElement.from_word(word, rs) == w
    return

def test_inverse():
    rs = get_root_system('G2', 2)
    for w in minimal_coset_reps(rs, (1, 2)):
        assert w * w.inverse() == WeylElement.identity(rs)
    return
