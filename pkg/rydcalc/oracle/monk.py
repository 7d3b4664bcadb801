"""
@author: rydcalc contributors

Monk's rule for type A: the product of the divisor class of node r with an arbitrary Schubert class.
"""
from ..helper.weyl import WeylElement
from ..helper.rootsys import get_root_system


def _covers_by_transposition(window, p, q):
    """
    Whether swapping positions p < q (1-based) raises the length by exactly one.
    """
    a, b = window[p-1], window[q-1]
    if a > b:
        return False
    return not any(a < window[i-1] < b for i in range(p+1, q))

def monk_multiply(w, r, n = None):
    """
    sigma_{s_r} * sigma_w = sum of sigma_{w t_pq} over p <= r < q with l(w t_pq) = l(w) + 1.

    Parameters
    ----------
    w : WeylElement or tuple
        A permutation of 1..n in one-line notation.
    r : int
        Node, 1 <= r <= n-1.
    n : int, optional
        Inferred from ``w`` if not given.

    Returns
    -------
    dict
        {window: 1}

    """
    window = tuple(w.window) if isinstance(w, WeylElement) else tuple(w)
    if n is None:
        n = len(window)
    if len(window) != n or sorted(window) != list(range(1, n+1)):
        raise ValueError(f"{window} is not a permutation of 1..{n}")
    if not 1 <= r <= n-1:
        raise ValueError(f"Node {r} is not a node of A_{n-1}")

    res = dict()
    for p in range(1, r+1):
        for q in range(r+1, n+1):
            if _covers_by_transposition(window, p, q):
                v = list(window)
                v[p-1], v[q-1] = v[q-1], v[p-1]
                res[tuple(v)] = res.get(tuple(v), 0) + 1

    return res

def monk_product(w, r):
    """
    Same as ``monk_multiply`` with ``WeylElement`` output.
    """
    rs = w.rs if isinstance(w, WeylElement) else get_root_system('A', len(w))
    return {WeylElement(v, rs): c for v, c in monk_multiply(w, r).items()}
