"""
@author: rydcalc contributors

Independent oracle for structure constants: restrictions of equivariant Schubert classes to torus
fixed points (sum over reduced subwords), and the triangular solve for the structure constants on
minimal coset representatives.
"""
import time
import warnings
from fractions import Fraction

from sympy import QQ
from sympy.polys.rings import ring

from ..helper.weyl import WeylElement, cached_coset_reps
from ..helper.shapes import make_family, enumerate_shapes, shape_to_coset, coset_to_shape

ORACLE_MODES = ('numeric', 'poly')

# beyond this many coset representatives a full table takes minutes
DESK_SCALE = 60

#%% root values

class RootEvaluator:
    """
    Evaluates roots either as polynomials in the simple roots (``poly``, sympy ring over QQ) or by
    setting every simple root to one (``numeric``, exact integers).
    """
    def __init__(self, rs, mode = 'numeric'):
        if mode not in ORACLE_MODES:
            raise ValueError("Not a known oracle mode option")
        self.rs = rs
        self.mode = mode
        if mode == 'poly':
            names = ','.join(f"a{i}" for i in range(1, rs.rank + 1))
            self.R, *self.gens = ring(names, QQ)
            self.one, self.zero = self.R.one, self.R.zero
        else:
            self.R, self.gens = None, None
            self.one, self.zero = 1, 0

    def value(self, vec):
        coeffs = self.rs.coeffs_of(vec)
        if self.mode == 'numeric':
            return sum(coeffs)
        res = self.zero
        for c, g in zip(coeffs, self.gens):
            if c != 0:
                res += c * g
        return res

    def divide(self, a, b):
        if self.mode == 'numeric':
            return Fraction(a) / Fraction(b)
        return a.exquo(b)

#%% restrictions

def _subword_sum(w_word, rs, ev):
    """
    Restrictions sigma_x|_w for all x, reading the word of w from left to right.
    """
    res = {WeylElement.identity(rs).key: ev.one}
    prefix = WeylElement.identity(rs)
    for i in w_word:
        alpha = rs.simple_root(i).vec
        beta = ev.value(prefix.act(alpha))
        s = WeylElement.simple(i, rs)
        new = dict(res)
        for key, val in res.items():
            u = WeylElement(key, rs)
            if u.maps_positive(alpha):
                us = (u * s).key
                new[us] = new.get(us, ev.zero) + beta * val
        res = new
        prefix = prefix * s
    return res

def billey_restriction(u, w, rs = None, word = None, mode = 'numeric'):
    """
    The restriction of the Schubert class of ``u`` to the fixed point ``w``.

    Parameters
    ----------
    u, w : WeylElement
    rs : RootSystem, optional
        Defaults to the root system of ``w``.
    word : tuple of int, optional
        Reduced word of ``w``. The default is the lexicographically least one.
    mode : str, optional
        ``numeric`` (all simple roots set to one, the default as for ``Oracle``) or ``poly`` (sympy
        polynomial in a1..ar).

    Returns
    -------
    Polynomial or int

    """
    if rs is None:
        rs = w.rs
    ev = RootEvaluator(rs, mode)
    if word is None:
        word = w.reduced_word()
    assert WeylElement.from_word(word, rs) == w and len(word) == w.length, f"{word} is not a reduced word of {w}"

    return _subword_sum(word, rs, ev).get(u.key, ev.zero)


class Oracle:
    """
    Structure constants of G/P from localization.

    Parameters
    ----------
    rs : RootSystem
    marked_nodes : tuple of int
        Nodes not in the Levi of P.
    params : dict, optional
        ``mode`` (``numeric`` or ``poly``, default ``numeric``).

    """
    def __init__(self, rs, marked_nodes, params = dict()):

        defaults = {'mode': 'numeric'}
        params = dict(params)
        params.update({k: v for k, v in defaults.items() if k not in params})

        self.rs = rs
        self.marked = tuple(sorted(marked_nodes))
        self.params = params
        self.ev = RootEvaluator(rs, params['mode'])

        self._cosets = None
        self._cache = dict()

    @property
    def cosets(self):
        if self._cosets is None:
            self._cosets = cached_coset_reps(self.rs.family, self.rs.n, self.marked)
            if len(self._cosets) > DESK_SCALE:
                warnings.warn(f"{len(self._cosets)} coset representatives: full tables will be slow.")
        return self._cosets

    def restrictions(self, w):
        """
        All nonzero restrictions at ``w`` as a dict {u.window: value}, by the recursion over the
        smallest right descent of ``w``.
        """
        key = w.key
        if key in self._cache:
            return self._cache[key]

        d = w.right_descents()
        if len(d) == 0:
            res = {key: self.ev.one}
        else:
            i = min(d)
            s = WeylElement.simple(i, self.rs)
            wp = w * s
            alpha = self.rs.simple_root(i).vec
            beta = self.ev.value(wp.act(alpha))
            prev = self.restrictions(wp)
            res = dict(prev)
            for ukey, val in prev.items():
                u = WeylElement(ukey, self.rs)
                if u.maps_positive(alpha):
                    us = (u * s).key
                    res[us] = res.get(us, self.ev.zero) + beta * val

        self._cache[key] = res
        return res

    def restriction(self, u, w):
        return self.restrictions(w).get(u.key, self.ev.zero)

    def bruhat_leq(self, u, w):
        return self.restriction(u, w) != 0

    def constants(self, u, v, max_length = None):
        """
        Equivariant structure constants c_{u,v}^w for all w up to length ``max_length``
        (default l(u) + l(v)), as a dict {w.window: value}.
        """
        if max_length is None:
            max_length = u.length + v.length

        res = dict()
        done = list()
        for w in self.cosets:
            if w.length > max_length:
                break
            R = self.restrictions(w)
            su, sv = R.get(u.key, 0), R.get(v.key, 0)
            if su == 0 or sv == 0:
                # c^w vanishes unless u <= w and v <= w
                continue
            num = su * sv
            for x in done:
                sx = R.get(x.key, 0)
                if sx != 0:
                    num = num - res[x.key] * sx
            c = self.ev.divide(num, R[w.key])
            if c != 0:
                res[w.key] = c
                done.append(w)
        return res

    def constant(self, u, v, w):
        return self.constants(u, v, max_length = w.length).get(w.key, 0)

    def product(self, u, v):
        """
        Ordinary (degree-preserving) structure constants as {w.window: int}.
        """
        deg = u.length + v.length
        res = dict()
        for key, c in self.constants(u, v).items():
            if len(WeylElement(key, self.rs).inversion_set) == deg:
                if self.ev.mode == 'poly':
                    assert c.is_ground, f"non-constant coefficient {c}"
                    c = Fraction(int(c.LC.numerator), int(c.LC.denominator))
                assert Fraction(c).denominator == 1 and c > 0, f"structure constant {c} is not a positive integer"
                res[key] = int(c)
        return res


def oracle_bruhat_leq(u, w):
    return Oracle(w.rs, range(1, w.rs.rank + 1)).bruhat_leq(u, w)

def oracle_constant(u, v, w, cosets = None, restrictions = None, mode = 'numeric'):
    """
    c_{u,v}^w by the triangular recursion c^w = (s_u|_w s_v|_w - sum_{x<w} c^x s_x|_w) / s_w|_w.

    Parameters
    ----------
    u, v, w : WeylElement
    cosets : list of WeylElement, optional
        Minimal coset representatives. Defaults to all elements below ``w`` in Bruhat order
        (the structure constants of the full flag variety).
    restrictions : Oracle, optional
        Provides cached restrictions.

    """
    rs = w.rs
    if restrictions is None:
        restrictions = Oracle(rs, range(1, rs.rank + 1), {'mode': mode})
    if cosets is None:
        cosets = [WeylElement(key, rs) for key in restrictions.restrictions(w).keys()]

    res = dict()
    for x in sorted(cosets, key = lambda y: (y.length, y.window)):
        if x.length > w.length:
            break
        R = restrictions.restrictions(x)
        su, sv = R.get(u.key, 0), R.get(v.key, 0)
        if su == 0 or sv == 0:
            continue
        num = su * sv
        for y, c in res.items():
            sy = R.get(y, 0)
            if sy != 0:
                num = num - c * sy
        c = restrictions.ev.divide(num, R[x.key])
        if c != 0:
            res[x.key] = c

    return res.get(w.key, 0)

#%% tables

def oracle_table(family, n = None, params = dict(), verbose = False):
    """
    All structure constants of a family from localization, as {(lam, mu, nu): int} keyed by shape text.
    """
    family = make_family(family, n)
    O = Oracle(family.compute_system, family.compute_nodes, params)
    shapes = enumerate_shapes(family)

    start = time.time()
    table = dict()
    for i, lam in enumerate(shapes):
        u = shape_to_coset(lam)
        for mu in shapes[i:]:
            v = shape_to_coset(mu)
            for key, c in O.product(u, v).items():
                nu = coset_to_shape(family, key)
                table[(lam.text, mu.text, nu.text)] = c
                table[(mu.text, lam.text, nu.text)] = c

    if verbose:
        hdr_fmt = "%10s\t%4s\t%8s\t%10s\t%8s"
        out_fmt = "%10s\t%4d\t%8d\t%10d\t%8.2f"
        print(hdr_fmt % ('family', 'n', 'cosets', 'nonzero', 'seconds'))
        print(out_fmt % (family.variant, family.n, len(O.cosets), len(table), time.time() - start))

    return table
