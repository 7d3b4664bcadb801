"""
@author: rydcalc contributors

Root systems of type A, B, C, D and G2 in integer ambient coordinates, root posets and
the subposets of roots lying above a set of marked nodes.
"""
import numpy as np
from functools import lru_cache

ROOT_TYPES = ('A', 'B', 'C', 'D', 'G2')

#%% roots

class Root:
    """
    A root stored both in ambient coordinates (``vec``) and in the simple root basis (``coeffs``).
    """
    def __init__(self, vec, coeffs, length_class = 'long'):
        self.vec = tuple(int(v) for v in vec)
        self.coeffs = tuple(int(c) for c in coeffs)
        self.length_class = length_class

    @property
    def height(self):
        return sum(self.coeffs)

    def is_positive(self):
        return all(c >= 0 for c in self.coeffs)

    def __eq__(self, other):
        return isinstance(other, Root) and self.vec == other.vec

    def __hash__(self):
        return hash(self.vec)

    def __repr__(self):
        return f"Root({self.coeffs}, {self.length_class})"


def _unit(i, dim):
    e = np.zeros(dim, dtype = int)
    e[i-1] = 1
    return e

def _simple_roots(family, rank):
    """
    Simple roots as rows of an integer matrix. For type A, ``rank`` is the rank parameter n
    of A_{n-1}, i.e. the ambient dimension.
    """
    if family == 'A':
        n = rank
        return np.vstack([_unit(i, n) - _unit(i+1, n) for i in range(1, n)])

    if family == 'G2':
        return np.array([[1, -1, 0], [-2, 1, 1]], dtype = int)

    n = rank
    rows = [_unit(i, n) - _unit(i+1, n) for i in range(1, n)]
    if family == 'B':
        rows.append(_unit(n, n))
    elif family == 'C':
        rows.append(2*_unit(n, n))
    elif family == 'D':
        rows.append(_unit(n-1, n) + _unit(n, n))

    return np.vstack(rows)

#%% root system

class RootSystem:
    """
    A finite crystallographic root system given by its simple roots in ambient coordinates.

    Nodes (simple roots) are numbered ``1, ..., rank``. Positive roots are generated by closing the
    simple roots under simple reflections, tracking coefficients in the simple root basis.

    Parameters
    ----------
    family : str
        One of ``'A', 'B', 'C', 'D', 'G2'``.
    rank : int
        For ``'A'`` this is the rank parameter n of A_{n-1} (so the rank is n-1). For ``'G2'`` it must be 2.

    """
    def __init__(self, family, rank):

        if family not in ROOT_TYPES:
            raise ValueError("Not a known root system option")

        min_rank = {'A': 3, 'B': 2, 'C': 2, 'D': 4, 'G2': 2}
        if family == 'G2':
            if rank != 2:
                raise ValueError("G2 has rank 2")
        elif rank < min_rank[family]:
            raise ValueError(f"Type {family} requires rank parameter at least {min_rank[family]}, got {rank}")

        self.family = family
        self.n = rank
        self.rank = rank - 1 if family == 'A' else rank

        self.simple_roots = _simple_roots(family, rank)
        self.dim = self.simple_roots.shape[1]
        self._norms = np.array([a @ a for a in self.simple_roots])

        self.positive_roots = self._generate_positive_roots()
        self._index = {r.vec: r for r in self.positive_roots}

        assert len(self.positive_roots) == self.classical_count(), "positive root count does not match the classical count"

    def classical_count(self):
        n = self.n
        if self.family == 'A':
            return n*(n-1)//2
        elif self.family in ['B', 'C']:
            return n**2
        elif self.family == 'D':
            return n*(n-1)
        else:
            return 6

    def pairing(self, vec, i):
        """
        The Cartan integer <vec, alpha_i^vee>.
        """
        a = self.simple_roots[i-1]
        num = 2 * int(np.dot(vec, a))
        assert num % self._norms[i-1] == 0, "non-integral pairing"
        return num // int(self._norms[i-1])

    def reflect(self, vec, i):
        return tuple(np.array(vec) - self.pairing(vec, i) * self.simple_roots[i-1])

    def _generate_positive_roots(self):

        r = self.rank
        found = dict()
        frontier = list()
        for i in range(1, r+1):
            c = tuple(int(j == i) for j in range(1, r+1))
            found[c] = None
            frontier.append(c)

        while len(frontier) > 0:
            new = list()
            for c in frontier:
                vec = np.array(c) @ self.simple_roots
                for i in range(1, r+1):
                    k = self.pairing(vec, i)
                    c2 = list(c)
                    c2[i-1] -= k
                    c2 = tuple(c2)
                    if min(c2) >= 0 and sum(c2) > 0 and c2 not in found:
                        found[c2] = None
                        new.append(c2)
            frontier = new

        vecs = {c: tuple(int(v) for v in np.array(c) @ self.simple_roots) for c in found.keys()}
        norms = {c: sum(v**2 for v in vecs[c]) for c in found.keys()}
        max_norm = max(norms.values())

        roots = list()
        for c in found.keys():
            lc = 'long' if norms[c] == max_norm else 'short'
            roots.append(Root(vecs[c], c, lc))

        roots.sort(key = lambda rt: (rt.height, rt.coeffs[::-1]))
        return roots

    def simple_root(self, i):
        if i < 1 or i > self.rank:
            raise ValueError(f"Node {i} is not a node of {self}")
        return self._index[tuple(int(v) for v in self.simple_roots[i-1])]

    @property
    def highest_root(self):
        return self.positive_roots[-1]

    def root(self, vec):
        """
        The positive root with ambient coordinates ``vec`` (``KeyError`` if there is none).
        """
        return self._index[tuple(int(v) for v in vec)]

    def is_positive(self, vec):
        """
        Sign of a root given by ambient coordinates.
        """
        vec = tuple(int(v) for v in vec)
        if vec in self._index:
            return True
        elif tuple(-v for v in vec) in self._index:
            return False
        else:
            raise KeyError(f"{vec} is not a root of {self}")

    def coeffs_of(self, vec):
        """
        Simple root coefficients of a (positive or negative) root.
        """
        if self.is_positive(vec):
            return self.root(vec).coeffs
        return tuple(-c for c in self.root(tuple(-v for v in vec)).coeffs)

    def check_nodes(self, nodes):
        nodes = set(nodes)
        bad = [j for j in nodes if j < 1 or j > self.rank]
        if len(bad) > 0:
            raise ValueError(f"Invalid nodes {bad} for {self}")
        return nodes

    def __repr__(self):
        if self.family == 'A':
            return f"RootSystem(A_{self.rank})"
        return f"RootSystem({self.family}_{self.rank})"

#%% posets

class RootPoset:
    """
    A set of positive roots, ordered by alpha <= beta iff beta - alpha is a nonnegative
    combination of simple roots.
    """
    def __init__(self, ground):
        self.ground = sorted(ground, key = lambda rt: (rt.height, rt.coeffs[::-1]))

    def leq(self, a, b):
        return all(cb - ca >= 0 for ca, cb in zip(a.coeffs, b.coeffs))

    def maximal(self):
        return [a for a in self.ground if not any(a != b and self.leq(a, b) for b in self.ground)]

    def minimal(self):
        return [a for a in self.ground if not any(a != b and self.leq(b, a) for b in self.ground)]

    def is_lower_ideal(self, subset):
        subset = set(subset)
        for b in subset:
            for a in self.ground:
                if self.leq(a, b) and a not in subset:
                    return False
        return True

    def covers(self):
        """
        Cover relations (a, b), i.e. a < b with height difference one.
        """
        return [(a, b) for a in self.ground for b in self.ground if b.height == a.height + 1 and self.leq(a, b)]

    def __len__(self):
        return len(self.ground)

    def __iter__(self):
        return iter(self.ground)

    def __contains__(self, r):
        return r in self.ground


def build_root_system(family, rank):
    return RootSystem(family, rank)

@lru_cache(maxsize = None)
def get_root_system(family, rank):
    """
    Shared (memoized) root system; instances are never mutated after construction.
    """
    return RootSystem(family, rank)

def lambda_poset(rs, marked_nodes):
    """
    The subposet of positive roots whose support contains a marked node.
    """
    if len(marked_nodes) == 0:
        raise ValueError("At least one node must be marked")

    nodes = rs.check_nodes(marked_nodes)
    ground = [r for r in rs.positive_roots if any(r.coeffs[j-1] > 0 for j in nodes)]

    return RootPoset(ground)

def is_short(rs, r):
    """
    Whether a positive root is short. In simply-laced systems every root counts as long.
    """
    if isinstance(r, Root):
        r = r.vec
    return rs.root(r).length_class == 'short'
