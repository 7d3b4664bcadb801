"""
@author: rydcalc contributors

Littlewood-Richardson coefficients for partitions with at most two rows, and the one-row case.
"""
import itertools


def is_partition2(p):
    return len(p) == 2 and p[0] >= p[1] >= 0


def _weak_rows(length):
    """
    Weakly increasing fillings of a row with the letters 1 and 2.
    """
    return [tuple([1]*a + [2]*(length - a)) for a in range(length + 1)]

def lr2_tableaux(lam, mu, nu):
    """
    Number of Littlewood-Richardson skew tableaux of shape nu/lam and content mu, by enumeration.
    """
    if not (is_partition2(lam) and is_partition2(mu) and is_partition2(nu)):
        return 0
    if lam[0] > nu[0] or lam[1] > nu[1]:
        return 0
    if sum(nu) != sum(lam) + sum(mu):
        return 0

    count = 0
    for top, bottom in itertools.product(_weak_rows(nu[0] - lam[0]), _weak_rows(nu[1] - lam[1])):

        if top.count(1) + bottom.count(1) != mu[0] or top.count(2) + bottom.count(2) != mu[1]:
            continue

        # columns strictly increase: cell (2, j) sits below (1, j)
        ok = True
        for k, x in enumerate(bottom):
            j = lam[1] + k
            if j >= lam[0] and x <= top[j - lam[0]]:
                ok = False
                break
        if not ok:
            continue

        # reverse reading word is a lattice word
        ones, twos = 0, 0
        for x in list(reversed(top)) + list(reversed(bottom)):
            if x == 1:
                ones += 1
            else:
                twos += 1
            if twos > ones:
                ok = False
                break
        if ok:
            count += 1

    return count

def lr2_coeff(lam, mu, nu):
    """
    The Littlewood-Richardson coefficient c_{lam,mu}^nu for two-row partitions, via the Horn inequalities.

    Returns 1 iff |nu| = |lam| + |mu|, nu1 <= lam1 + mu1, nu2 <= lam1 + mu2 and nu2 <= lam2 + mu1; else 0.
    """
    if not (is_partition2(lam) and is_partition2(mu) and is_partition2(nu)):
        return 0
    if sum(nu) != sum(lam) + sum(mu):
        return 0
    if nu[0] > lam[0] + mu[0] or nu[1] > lam[0] + mu[1] or nu[1] > lam[1] + mu[0]:
        return 0
    return 1

def lr2_expand(lam, mu, box):
    """
    All nu inside ``box`` with c_{lam,mu}^nu = 1, as a list of ``(nu, 1)``, largest first row first.
    """
    total = sum(lam) + sum(mu)
    res = list()
    for nu1 in range(min(box[0], total), -1, -1):
        nu2 = total - nu1
        if nu2 > nu1 or nu2 > box[1]:
            continue
        if lr2_coeff(lam, mu, (nu1, nu2)) == 1:
            res.append(((nu1, nu2), 1))
    return res

def lr1_coeff(a, b, c, m):
    """
    Structure constant of the Grassmannian of lines in C^{m+1}: 1 iff c = a + b and c <= m.
    """
    return int(c == a + b and c <= m)
