"""
@author: rydcalc contributors
"""
import time
from functools import lru_cache

from ..helper.shapes import make_family, enumerate_shapes, parse_shape, check_same_family, check_shape
from ..helper.utils import parallel_map
from .amult import mult_flag, mult_lg, mult_og_odd, mult_chain, mult_g2
from .dmult import star


def multiply(lam, mu):
    """
    Product of two Schubert classes of the same family, dispatched on the family.
    """
    fam = check_same_family(lam, mu)
    check_shape(lam)
    check_shape(mu)

    if fam.variant == 'Flag':
        return mult_flag(lam, mu)
    elif fam.variant == 'LG':
        return mult_lg(lam, mu)
    elif fam.variant == 'OGodd':
        return mult_og_odd(lam, mu)
    elif fam.variant == 'OGeven':
        return star(lam, mu)
    elif fam.variant in ['ChainB', 'ChainC']:
        return mult_chain(fam.variant, lam, mu)
    elif fam.variant in ['G2P1', 'G2P2']:
        return mult_g2(fam.variant, lam, mu)
    else:
        raise ValueError("Not a known family option")

@lru_cache(maxsize = 2**16)
def cached_multiply(lam, mu):
    return multiply(lam, mu)

def _row_of_table(args):
    # top level for pickling in worker processes
    variant, n, i = args
    shapes = enumerate_shapes(make_family(variant, n))
    lam = shapes[i]
    res = dict()
    for mu in shapes[i:]:
        for nu, c in multiply(lam, mu).to_int_dict().items():
            res[(lam.text, mu.text, nu.text)] = c
    return res


class variety:
    """
    A (co)adjoint variety together with its Schubert calculus. Supported families are

        * ``Flag``: the flag variety Fl(1,n-1;n),
        * ``LG``: the Lagrangian Grassmannian LG(2,2n),
        * ``OGodd``: the odd orthogonal Grassmannian OG(2,2n+1),
        * ``OGeven``: the even orthogonal Grassmannian OG(2,2n),
        * ``ChainB``, ``ChainC``: B_n/P_1 and C_n/P_1,
        * ``G2P1``, ``G2P2``: the two G2 cases.

    """
    def __init__(self, family, n = None, verbose = False):
        """

        Parameters
        ----------
        family : str or Family
            Name of the family. The aliases ``A, B, C, D, G2`` denote ``Flag, OGodd, LG, OGeven, G2P2``.
        n : int, optional
            Rank parameter; ignored for G2.
        verbose : boolean, optional
            Verbosity. The default is False.

        Returns
        -------
        None.

        """
        self.family = make_family(family, n)
        self.n = self.family.n
        self.verbose = verbose
        self._shapes = None

    @property
    def shapes(self):
        if self._shapes is None:
            self._shapes = enumerate_shapes(self.family)
        return self._shapes

    def parse(self, text):
        return parse_shape(text, self.family)

    def multiply(self, lam, mu):
        if isinstance(lam, str):
            lam = self.parse(lam)
        if isinstance(mu, str):
            mu = self.parse(mu)
        check_shape(lam, self.family)
        check_shape(mu, self.family)
        return cached_multiply(lam, mu)

    def constant(self, lam, mu, nu):
        if isinstance(nu, str):
            nu = self.parse(nu)
        return self.multiply(lam, mu).coeff(nu)

    def table(self, threads = None):
        """
        All nonzero structure constants as a ``StructTable``. Rows of the table are computed in parallel
        if ``RYD_THREADS`` (or ``threads``) is larger than one.
        """
        from ..experiments.container import StructTable

        start = time.time()
        args = [(self.family.variant, self.n, i) for i in range(len(self.shapes))]
        rows = parallel_map(_row_of_table, args, threads)

        T = StructTable(self.family)
        for r in rows:
            for (l, m, k), c in r.items():
                T.store(l, m, k, c)
                T.store(m, l, k, c)

        if self.verbose:
            hdr_fmt = "%10s\t%4s\t%8s\t%10s\t%8s"
            out_fmt = "%10s\t%4d\t%8d\t%10d\t%8.2f"
            print(hdr_fmt % ('family', 'n', 'shapes', 'nonzero', 'seconds'))
            print(out_fmt % (self.family.variant, self.n, len(self.shapes), len(T), time.time() - start))

        return T
