"""
@author: rydcalc contributors

Shapes indexing the Schubert classes of the (co)adjoint varieties.

A shape is a lower order ideal of the poset of roots above the marked node(s), possibly containing
the adjoint root (the shape is then "on", otherwise "off"). Shapes are stored by a pair of row lengths:

* ``Flag``: the two arms of the double-tailed diamond, each of length at most n-2,
* ``LG``, ``OGodd``: a partition in a 2 x (2n-3) rectangle,
* ``OGeven``: a flattened partition in a 2 x (2n-4) rectangle plus a charge ``up``/``down`` when the
  flattening is two-to-one,
* chains and G2: the total size k, stored as ``(k, 0)``.
"""
import re
from dataclasses import dataclass
from functools import lru_cache

from .rootsys import get_root_system
from .weyl import WeylElement, cached_coset_reps
from .utils import ShapeError, FamilyMismatch

FAMILY_NAMES = ('Flag', 'LG', 'OGodd', 'OGeven', 'ChainB', 'ChainC', 'G2P1', 'G2P2')
FAMILY_ALIASES = {'FlagAdj': 'Flag', 'A': 'Flag', 'B': 'OGodd', 'C': 'LG', 'D': 'OGeven', 'G2': 'G2P2'}

NEUTRAL, UP, DOWN = 'neutral', 'up', 'down'

# root type the shapes are drawn in / root type the Schubert classes live in
_INDEX_TYPE = {'Flag': 'A', 'LG': 'B', 'OGodd': 'B', 'OGeven': 'D', 'ChainB': 'C', 'ChainC': 'C', 'G2P1': 'G2', 'G2P2': 'G2'}
_COMPUTE_TYPE = {'Flag': 'A', 'LG': 'C', 'OGodd': 'B', 'OGeven': 'D', 'ChainB': 'B', 'ChainC': 'C', 'G2P1': 'G2', 'G2P2': 'G2'}

# (adjoint, coadjoint) pairs with the multiplicity of the longest Dynkin edge
COADJOINT_PAIRS = {('OGodd', 'LG'): 2, ('ChainC', 'ChainB'): 2, ('G2P2', 'G2P1'): 3}

_MIN_N = {'Flag': 3, 'LG': 2, 'OGodd': 2, 'OGeven': 4, 'ChainB': 2, 'ChainC': 2}

#%% families

@dataclass(frozen = True)
class Family:
    """
    One of the supported (co)adjoint varieties. ``n`` is the rank parameter of the variety
    (for G2 it is fixed to 2).
    """
    variant: str
    n: int = 2

    def __post_init__(self):
        variant = FAMILY_ALIASES.get(self.variant, self.variant)
        if variant not in FAMILY_NAMES:
            raise ValueError(f"Not a known family option: {self.variant}")
        object.__setattr__(self, 'variant', variant)

        if variant in ['G2P1', 'G2P2']:
            object.__setattr__(self, 'n', 2)
        else:
            if self.n is None or int(self.n) != self.n or self.n < _MIN_N[variant]:
                raise ValueError(f"{variant} requires n >= {_MIN_N[variant]}, got {self.n}")
            object.__setattr__(self, 'n', int(self.n))

    @property
    def kind(self):
        if self.variant == 'Flag':
            return 'flag'
        elif self.variant in ['LG', 'OGodd']:
            return 'planar'
        elif self.variant == 'OGeven':
            return 'even'
        return 'chain'

    @property
    def is_g2(self):
        return self.variant in ['G2P1', 'G2P2']

    @property
    def N(self):
        """
        Number of roots above the marked node(s).
        """
        n = self.n
        if self.is_g2:
            return 5
        return {'flag': 2*n-3, 'planar': 4*n-5, 'even': 4*n-7, 'chain': 2*n-1}[self.kind]

    @property
    def half(self):
        return (self.N - 1)//2

    @property
    def width(self):
        """
        Maximal row length.
        """
        if self.kind == 'chain':
            return self.N
        return {'flag': self.n-2, 'planar': 2*self.n-3, 'even': 2*self.n-4}[self.kind]

    def _rank(self):
        return 2 if self.is_g2 else self.n

    @property
    def index_system(self):
        return get_root_system(_INDEX_TYPE[self.variant], self._rank())

    @property
    def compute_system(self):
        return get_root_system(_COMPUTE_TYPE[self.variant], self._rank())

    @property
    def index_nodes(self):
        if self.kind == 'flag':
            return (1, self.n-1)
        elif self.kind in ['planar', 'even'] or self.is_g2:
            return (2,)
        return (1,)

    @property
    def compute_nodes(self):
        if self.variant == 'G2P1':
            return (1,)
        return self.index_nodes

    @property
    def expected_count(self):
        n = self.n
        if self.is_g2:
            return 6
        return {'flag': n*(n-1), 'planar': 2*n*(n-1), 'even': 2*n*(n-1), 'chain': 2*n}[self.kind]

    def __str__(self):
        if self.is_g2:
            return self.variant
        return f"{self.variant}(n={self.n})"


def make_family(variant, n = None):
    if isinstance(variant, Family):
        return variant
    return Family(variant, n)

#%% shapes

@dataclass(frozen = True)
class Shape:
    family: Family
    rows: tuple
    on: bool
    charge: str = NEUTRAL

    def __post_init__(self):
        object.__setattr__(self, 'rows', tuple(int(r) for r in self.rows))
        object.__setattr__(self, 'on', bool(self.on))

    @property
    def size(self):
        """
        Number of roots of the shape, including the adjoint root if on.
        """
        if self.family.kind == 'chain':
            return self.rows[0]
        return self.rows[0] + self.rows[1] + int(self.on)

    @property
    def is_charged(self):
        return self.charge != NEUTRAL

    @property
    def text(self):
        return format_shape(self)

    def sort_key(self):
        return (self.size, self.text)

    def __str__(self):
        return self.text


@dataclass(frozen = True)
class FlatShape:
    """
    A partition in the 2 x (2n-4) rectangle plus the on/off marker.
    """
    n: int
    rows: tuple
    on: bool

    def __post_init__(self):
        object.__setattr__(self, 'rows', tuple(int(r) for r in self.rows))
        object.__setattr__(self, 'on', bool(self.on))

    @property
    def weight(self):
        return self.rows[0] + self.rows[1]

    @property
    def size(self):
        return self.weight + int(self.on)

    @property
    def text(self):
        return f"{self.rows[0]},{self.rows[1]}|{'on' if self.on else 'off'}"

    def is_valid(self):
        r1, r2 = self.rows
        b = 2*self.n - 4
        if not (b >= r1 >= r2 >= 0):
            return False
        if self.on:
            return r1 + r2 >= b
        return r1 + r2 <= b

    def __str__(self):
        return self.text


@dataclass(frozen = True)
class TwoLayerShape:
    """
    Unflattened OGeven shape: ``bottom`` and ``top`` are partitions in a 2 x (n-2) rectangle.
    """
    n: int
    bottom: tuple
    top: tuple
    on: bool

    def __post_init__(self):
        object.__setattr__(self, 'bottom', tuple(int(r) for r in self.bottom))
        object.__setattr__(self, 'top', tuple(int(r) for r in self.top))
        object.__setattr__(self, 'on', bool(self.on))

    @property
    def text(self):
        b, t = self.bottom, self.top
        return f"[{b[0]},{b[1]}/{t[0]},{t[1]}]|{'on' if self.on else 'off'}"

    def __str__(self):
        return self.text


def chain_shape(family, k):
    """
    The chain (or G2) shape of total size ``k``.
    """
    family = make_family(family)
    return Shape(family, (k, 0), k >= family.half + 1)

#%% text format

_SHAPE_RE = re.compile(r"^\s*(\d+)\s*,\s*(\d+)\s*\|\s*(on|off)\s*(?:\|\s*(up|down)\s*)?$")
_LAYER_RE = re.compile(r"^\s*\[\s*(\d+)\s*,\s*(\d+)\s*/\s*(\d+)\s*,\s*(\d+)\s*\]\s*\|\s*(on|off)\s*$")

def format_shape(s):
    txt = f"{s.rows[0]},{s.rows[1]}|{'on' if s.on else 'off'}"
    if s.charge != NEUTRAL:
        txt += '|' + s.charge
    return txt

def parse_shape(text, family):
    """
    Parses ``r1,r2|on|off[|up|down]`` or the two-layer form ``[b1,b2/t1,t2]|on|off`` (OGeven only).
    Raises ``ShapeError`` if the text does not parse or the shape is not valid for the family.
    """
    family = make_family(family)

    m = _LAYER_RE.match(text)
    if m is not None:
        if family.kind != 'even':
            raise ShapeError(f"Two-layer shapes only exist for OGeven, got {text!r} for {family}")
        b1, b2, t1, t2 = (int(m.group(i)) for i in range(1, 5))
        return from_two_layer(TwoLayerShape(family.n, (b1, b2), (t1, t2), m.group(5) == 'on'))

    m = _SHAPE_RE.match(text)
    if m is None:
        raise ShapeError(f"Could not parse shape {text!r}; expected 'r1,r2|on|off[|up|down]'")

    charge = m.group(4) if m.group(4) is not None else NEUTRAL
    s = Shape(family, (int(m.group(1)), int(m.group(2))), m.group(3) == 'on', charge)

    if not validate_shape(s):
        raise ShapeError(f"{text!r} is not a valid shape for {family}")

    return s

#%% validity and enumeration

def validate_shape(s):
    """
    True iff ``s`` is a shape of its family, including the on/off size bounds.
    """
    if not isinstance(s, Shape) or len(s.rows) != 2:
        return False

    f = s.family
    r1, r2 = s.rows
    if min(r1, r2) < 0 or s.charge not in [NEUTRAL, UP, DOWN]:
        return False

    if f.kind == 'chain':
        return r2 == 0 and r1 <= f.N and s.on == (r1 >= f.half + 1) and s.charge == NEUTRAL

    if f.kind == 'flag':
        if max(r1, r2) > f.width or s.charge != NEUTRAL:
            return False
    else:
        if not (f.width >= r1 >= r2):
            return False

    # off shapes fill at most half of the poset, on shapes at least half plus the adjoint root
    if s.on and r1 + r2 < f.width:
        return False
    if not s.on and r1 + r2 > f.width:
        return False

    if f.kind == 'even':
        return (s.charge != NEUTRAL) == is_ambiguous(flatten(s))

    return s.charge == NEUTRAL

def check_shape(s, family = None):
    if not validate_shape(s):
        raise ShapeError(f"{s} is not a valid shape for {s.family}")
    if family is not None and s.family != family:
        raise FamilyMismatch(f"Expected a shape of {family}, got one of {s.family}")
    return s

def check_same_family(*shapes):
    fam = shapes[0].family
    for s in shapes[1:]:
        if s.family != fam:
            raise FamilyMismatch(f"Cannot combine shapes of {fam} and {s.family}")
    return fam

@lru_cache(maxsize = None)
def _enumerate(family):

    res = list()
    if family.kind == 'chain':
        res = [chain_shape(family, k) for k in range(family.N + 1)]
    elif family.kind == 'flag':
        w = family.width
        for r1 in range(w+1):
            for r2 in range(w+1):
                if r1 + r2 <= w:
                    res.append(Shape(family, (r1, r2), False))
                if r1 + r2 >= w:
                    res.append(Shape(family, (r1, r2), True))
    else:
        w = family.width
        for r1 in range(w+1):
            for r2 in range(r1+1):
                for on in [False, True]:
                    if (on and r1 + r2 < w) or (not on and r1 + r2 > w):
                        continue
                    if family.kind == 'even':
                        res += unflatten(FlatShape(family.n, (r1, r2), on))
                    else:
                        res.append(Shape(family, (r1, r2), on))

    res.sort(key = lambda s: s.sort_key())
    return tuple(res)

def enumerate_shapes(family):
    """
    All shapes of the family, sorted by size and text.
    """
    family = make_family(family)
    res = list(_enumerate(family))
    assert len(res) == family.expected_count, f"{family} has {len(res)} shapes, expected {family.expected_count}"
    return res

def relabel(s, family):
    """
    The shape with the same rows and marker in another family with the same shape set.
    """
    t = Shape(make_family(family), s.rows, s.on, s.charge)
    return check_shape(t)

#%% short roots

_G2_SH = (0, 0, 1, 1, 2, 2)

def sh(s):
    """
    Number of short roots of the shape, counted in the poset of the adjoint member of the pair.
    Zero for simply-laced families.
    """
    f = s.family
    if f.kind == 'planar':
        return int(s.rows[0] >= f.n-1) + int(s.rows[1] >= f.n-1)
    elif f.is_g2:
        return _G2_SH[s.size]
    elif f.kind == 'chain':
        return s.size - int(s.on)
    return 0

def fsh(f):
    """
    Number of fake short roots of an OGeven shape: the boxes in column n-2 of the flattened rectangle.
    """
    if isinstance(f, (Shape, TwoLayerShape)):
        f = flatten(f)
    n = f.n
    if f.rows == (n-2, n-2) and not f.on:
        return 1
    return int(f.rows[0] >= n-2) + int(f.rows[1] >= n-2)

#%% flattening

def is_ambiguous(f):
    n = f.n
    if f.on:
        return f.rows[1] == n-2
    return f.rows[0] == n-2

def flatten(s):
    if isinstance(s, TwoLayerShape):
        return FlatShape(s.n, (s.bottom[0] + s.top[0], s.bottom[1] + s.top[1]), s.on)
    if s.family.kind != 'even':
        raise ValueError(f"Flattening is only defined for OGeven shapes, got {s.family}")
    return FlatShape(s.family.n, s.rows, s.on)

def unflatten(f, family = None):
    """
    The one (neutral) or two (``up``, ``down``) shapes flattening to ``f``.
    """
    if not f.is_valid():
        raise ShapeError(f"{f} is not a flattened shape for n={f.n}")
    if family is None:
        family = Family('OGeven', f.n)
    if is_ambiguous(f):
        return [Shape(family, f.rows, f.on, UP), Shape(family, f.rows, f.on, DOWN)]
    return [Shape(family, f.rows, f.on, NEUTRAL)]

def _split_row(v, n, charge):
    if v < n-2:
        return (v, 0)
    elif v > n-2:
        return (n-2, v-n+2)
    assert charge != NEUTRAL, "row of length n-2 in a neutral shape"
    return (n-2, 0) if charge == DOWN else (n-3, 1)

def to_two_layer(s):
    n = s.family.n
    b1, t1 = _split_row(s.rows[0], n, s.charge)
    b2, t2 = _split_row(s.rows[1], n, s.charge)
    return TwoLayerShape(n, (b1, b2), (t1, t2), s.on)

def from_two_layer(t):
    n = t.n
    b, tp = t.bottom, t.top
    ok = (n-2 >= b[0] >= b[1] >= 0) and (n-2 >= tp[0] >= tp[1] >= 0)
    for a in range(2):
        if tp[a] >= 1 and b[a] < n-3:
            ok = False
        if tp[a] >= 2 and b[a] < n-2:
            ok = False
    f = flatten(t)
    if not ok or not f.is_valid():
        raise ShapeError(f"{t} is not a two-layer shape for n={n}")

    charge = NEUTRAL
    if is_ambiguous(f):
        if f.on:
            charge = DOWN if tp[1] == 0 else UP
        else:
            charge = DOWN if tp[0] == 0 else UP

    s = Shape(Family('OGeven', n), f.rows, f.on, charge)
    if to_two_layer(s) != t:
        raise ShapeError(f"{t} is not a two-layer shape for n={n}")
    return s

#%% roots of a shape

def _ev(dim, *terms):
    v = [0]*dim
    for i, c in terms:
        v[i-1] += c
    return tuple(v)

def adjoint_root(family):
    family = make_family(family)
    n = family.n
    if family.kind == 'flag':
        return _ev(n, (1, 1), (n, -1))
    elif family.kind in ['planar', 'even']:
        return _ev(n, (1, 1), (2, 1))
    elif family.is_g2:
        return (-1, -1, 2)
    return _ev(n, (1, 2))

def _row_cell(family, a, c, layer = 'bottom'):
    n = family.n
    if family.kind == 'planar':
        if c <= n-2:
            return _ev(n, (a, 1), (c+2, -1))
        elif c == n-1:
            return _ev(n, (a, 1))
        return _ev(n, (a, 1), (2*n-c, 1))
    # OGeven
    if layer == 'bottom':
        return _ev(n, (a, 1), (c+2, -1))
    if c == 1:
        return _ev(n, (a, 1), (n, 1))
    return _ev(n, (a, 1), (n+1-c, 1))

def chain_roots(family):
    """
    The non-adjoint roots of a chain family in increasing order.
    """
    family = make_family(family)
    if family.is_g2:
        return [(-2, 1, 1), (-1, 0, 1), (0, -1, 1), (1, -2, 1)]
    n = family.n
    return [_ev(n, (1, 1), (j+1, -1)) for j in range(1, n)] + [_ev(n, (1, 1), (j, 1)) for j in range(n, 1, -1)]

@lru_cache(maxsize = None)
def shape_roots(s):
    """
    The set of roots (ambient coordinates of the indexing root system) of a shape.
    """
    f = s.family
    n = f.n
    roots = set()

    if f.kind == 'flag':
        roots |= {_ev(n, (1, 1), (c+1, -1)) for c in range(1, s.rows[0]+1)}
        roots |= {_ev(n, (n-c, 1), (n, -1)) for c in range(1, s.rows[1]+1)}
    elif f.kind == 'planar':
        for a, r in [(2, s.rows[0]), (1, s.rows[1])]:
            roots |= {_row_cell(f, a, c) for c in range(1, r+1)}
    elif f.kind == 'even':
        t = to_two_layer(s)
        for a, i in [(2, 0), (1, 1)]:
            roots |= {_row_cell(f, a, c, 'bottom') for c in range(1, t.bottom[i]+1)}
            roots |= {_row_cell(f, a, c, 'top') for c in range(1, t.top[i]+1)}
    else:
        k = s.size - int(s.on)
        roots |= set(chain_roots(f)[:k])

    if s.on:
        roots.add(adjoint_root(f))

    return frozenset(roots)

#%% Bruhat order

def bruhat_leq(a, b):
    """
    Bruhat order on shapes: two shapes with the same marker compare by containment; an off shape lies
    below an on shape iff it has at most one root outside of it; an on shape never lies below an off shape.
    """
    check_same_family(a, b)
    theta = adjoint_root(a.family)
    A = shape_roots(a) - {theta}
    B = shape_roots(b) - {theta}

    if a.on == b.on:
        return A <= B
    elif b.on:
        return len(A - B) <= 1 and a.size < b.size
    return False

#%% coset representatives

@lru_cache(maxsize = None)
def _coset_tables(family):
    """
    Maps shape -> window of the minimal coset representative and back.
    """
    rs = family.index_system
    shapes = _enumerate(family)

    if family.variant == 'G2P1':
        reps = cached_coset_reps('G2', 2, family.compute_nodes)
        by_length = {w.length: w.window for w in reps}
        assert len(by_length) == len(reps), "G2/P1 representatives are not determined by length"
        fwd = {s: by_length[s.size] for s in shapes}
    else:
        reps = cached_coset_reps(rs.family, rs.n, family.index_nodes)
        by_inv = {w.inversion_set: w.window for w in reps}
        assert len(by_inv) == len(reps), "inversion sets are not injective"
        fwd = dict()
        for s in shapes:
            key = shape_roots(s)
            if key not in by_inv:
                raise KeyError(f"No minimal coset representative has the roots of {s}")
            fwd[s] = by_inv[key]

    bwd = {w: s for s, w in fwd.items()}
    assert len(bwd) == len(fwd) == len(reps), "shapes and coset representatives are not in bijection"
    return fwd, bwd

def shape_to_coset(s):
    """
    The minimal coset representative (in the root system the classes live in) indexed by ``s``.
    """
    fwd, _ = _coset_tables(s.family)
    return WeylElement(fwd[s], s.family.compute_system)

def coset_to_shape(family, w):
    family = make_family(family)
    _, bwd = _coset_tables(family)
    window = w.window if isinstance(w, WeylElement) else tuple(w)
    return bwd[window]

#%% rendering

def _marks(cells, used):
    return ' '.join('*' if c in used else 'o' for c in cells)

def render(family, s = None):
    """
    ASCII picture of the roots above the marked node(s); roots of ``s`` are drawn as ``*``, the others as ``o``.
    The adjoint root is drawn in brackets.
    """
    family = make_family(family)
    if s is not None:
        check_shape(s, family)
    used = shape_roots(s) if s is not None else frozenset()
    theta = '[*]' if adjoint_root(family) in used else '[o]'
    n = family.n
    lines = list()

    if family.kind == 'flag':
        arm1 = [_ev(n, (1, 1), (c+1, -1)) for c in range(1, n-1)]
        arm2 = [_ev(n, (n-c, 1), (n, -1)) for c in range(1, n-1)]
        lines.append('arm 2  ' + _marks(arm2, used))
        lines.append('arm 1  ' + _marks(arm1, used))
        lines.append('adjoint ' + theta)
    elif family.kind == 'planar':
        w = family.width
        lines.append('row 2  ' + _marks([_row_cell(family, 1, c) for c in range(1, w+1)], used) + '  ' + theta)
        lines.append('row 1  ' + _marks([_row_cell(family, 2, c) for c in range(1, w+1)], used))
    elif family.kind == 'even':
        for layer in ['top', 'bottom']:
            lines.append(f"{layer:<7}" + 'row 2  ' + _marks([_row_cell(family, 1, c, layer) for c in range(1, n-1)], used))
            lines.append(' '*7 + 'row 1  ' + _marks([_row_cell(family, 2, c, layer) for c in range(1, n-1)], used))
        lines.append('adjoint ' + theta)
    else:
        lines.append('chain  ' + _marks(chain_roots(family), used) + '  ' + theta)

    return '\n'.join(lines)
