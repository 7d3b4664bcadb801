"""
@author: rydcalc contributors

Weyl group elements as signed permutations of the ambient coordinates, and minimal coset representatives.
"""
from functools import lru_cache

from .rootsys import lambda_poset, get_root_system


def _simple_windows(rs):
    """
    Windows of the simple reflections. For G2 the reflections act on the sum-zero plane of R^3.
    """
    if rs.family == 'G2':
        return {1: (2, 1, 3), 2: (-1, -3, -2)}

    n = rs.dim
    res = dict()
    for i in range(1, rs.rank + 1):
        w = list(range(1, n+1))
        if rs.family == 'A' or i < n:
            w[i-1], w[i] = w[i], w[i-1]
        elif rs.family in ['B', 'C']:
            w[n-1] = -n
        else:
            w[n-2], w[n-1] = -n, -(n-1)
        res[i] = tuple(w)

    return res


class WeylElement:
    """
    A signed permutation ``window`` acting by w(e_i) = sign(w_i) e_{|w_i|}.
    """
    def __init__(self, window, rs):
        window = tuple(int(v) for v in window)
        assert sorted(abs(v) for v in window) == list(range(1, len(window) + 1)), "not a signed permutation"
        if rs.family == 'A':
            assert min(window) > 0, "type A elements are permutations"
        elif rs.family == 'D':
            assert sum(v < 0 for v in window) % 2 == 0, "type D elements have an even number of sign changes"

        self.window = window
        self.rs = rs
        self._inversions = None

    @classmethod
    def identity(cls, rs):
        return cls(range(1, rs.dim + 1), rs)

    @classmethod
    def simple(cls, i, rs):
        return cls(_simple_windows(rs)[i], rs)

    @classmethod
    def from_word(cls, word, rs):
        w = cls.identity(rs)
        for i in word:
            w = w * cls.simple(i, rs)
        return w

    @property
    def key(self):
        return self.window

    def __mul__(self, other):
        x = self.window
        return WeylElement([(1 if y > 0 else -1) * x[abs(y)-1] for y in other.window], self.rs)

    def inverse(self):
        inv = [0]*len(self.window)
        for i, v in enumerate(self.window):
            inv[abs(v)-1] = (i+1) if v > 0 else -(i+1)
        return WeylElement(inv, self.rs)

    def act(self, vec):
        out = [0]*len(vec)
        for i, v in enumerate(self.window):
            out[abs(v)-1] = vec[i] if v > 0 else -vec[i]
        return tuple(out)

    def maps_positive(self, vec):
        return self.rs.is_positive(self.act(vec))

    @property
    def inversion_set(self):
        if self._inversions is None:
            self._inversions = frozenset(r.vec for r in self.rs.positive_roots if not self.maps_positive(r.vec))
        return self._inversions

    @property
    def length(self):
        return len(self.inversion_set)

    def right_descents(self):
        return [i for i in range(1, self.rs.rank + 1) if not self.maps_positive(self.rs.simple_root(i).vec)]

    def left_descents(self):
        return self.inverse().right_descents()

    def reduced_word(self):
        """
        The lexicographically least reduced word, built by peeling off the smallest left descent.
        """
        word = list()
        w = self
        while True:
            d = w.left_descents()
            if len(d) == 0:
                break
            i = min(d)
            word.append(i)
            w = WeylElement.simple(i, self.rs) * w
        return tuple(word)

    def is_min_coset_rep(self, marked_nodes):
        return all(self.maps_positive(self.rs.simple_root(j).vec) for j in range(1, self.rs.rank + 1) if j not in marked_nodes)

    def __eq__(self, other):
        return isinstance(other, WeylElement) and self.window == other.window

    def __hash__(self):
        return hash(self.window)

    def __repr__(self):
        return f"WeylElement({self.window})"


def reduced_words(w):
    """
    All reduced words of ``w``.
    """
    return sorted(_reduced_words(w.window, w.rs))

def _reduced_words(window, rs):
    w = WeylElement(window, rs)
    d = w.left_descents()
    if len(d) == 0:
        return [()]
    res = list()
    for i in d:
        v = WeylElement.simple(i, rs) * w
        res += [(i,) + word for word in _reduced_words(v.window, rs)]
    return res


def minimal_coset_reps(rs, marked_nodes):
    """
    Minimal length representatives of W/W_P, where W_P is generated by the unmarked nodes.
    Returned sorted by length, then by window.
    """
    nodes = rs.check_nodes(marked_nodes)

    e = WeylElement.identity(rs)
    found = {e.key: e}
    frontier = [e]

    while len(frontier) > 0:
        new = list()
        for w in frontier:
            for i in range(1, rs.rank + 1):
                v = WeylElement.simple(i, rs) * w
                if v.key in found:
                    continue
                if v.length == w.length + 1 and v.is_min_coset_rep(nodes):
                    found[v.key] = v
                    new.append(v)
        frontier = new

    reps = sorted(found.values(), key = lambda w: (w.length, w.window))

    if len(nodes) > 0:
        lam = set(r.vec for r in lambda_poset(rs, nodes))
        assert all(w.inversion_set <= lam for w in reps), "inversion set outside the marked subposet"

    return reps

@lru_cache(maxsize = None)
def cached_coset_reps(family, rank, marked_nodes):
    """
    Memoized ``minimal_coset_reps`` for ``get_root_system(family, rank)``; ``marked_nodes`` is a tuple.
    """
    return minimal_coset_reps(get_root_system(family, rank), set(marked_nodes))
