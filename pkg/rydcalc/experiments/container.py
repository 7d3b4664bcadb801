"""
@author: rydcalc contributors
"""

import numpy as np
import pandas as pd

from ..helper.shapes import make_family


class StructTable:
    """
    A container for the structure constants of one family. ``self.results`` maps
    ``(lambda, mu, nu)`` (shape texts) to the nonzero integer constant.

    Additional info (e.g. runtime or the oracle used) can be stored in ``self.params``.
    """
    def __init__(self, family = None, name = ''):

        self.family = make_family(family) if family is not None else None
        self.name = name if name != '' else (str(self.family.variant) + str(self.family.n) if family is not None else '')
        self.params = dict()
        self.results = dict()

    def store(self, lam, mu, nu, coeff):
        key = (str(lam), str(mu), str(nu))
        if coeff == 0:
            self.results.pop(key, None)
            return
        assert int(coeff) == coeff and coeff > 0, f"structure constant {coeff} of {key} is not a positive integer"
        self.results[key] = int(coeff)
        return

    def store_by_key(self, res = dict()):
        """
        stores additional information, e.g. runtimes
        """
        for key, val in res.items():
            assert key not in self.params.keys()
            self.params[key] = val
        return

    def get(self, lam, mu, nu):
        return self.results.get((str(lam), str(mu), str(nu)), 0)

    def value_set(self):
        return sorted(set(self.results.values()))

    def to_frame(self):
        rows = [(l, m, k, c) for (l, m, k), c in sorted(self.results.items())]
        return pd.DataFrame(rows, columns = ['lambda', 'mu', 'nu', 'coeff'])

    def to_csv(self, path = None):
        """
        Writes (or returns, if ``path`` is None) the table as CSV with columns ``lambda,mu,nu,coeff``.
        """
        return self.to_frame().to_csv(path, index = False)

    def save_to_disk(self, path = '', path_suffix = ''):

        to_save = dict()
        to_save['family'] = (self.family.variant, self.family.n)
        to_save['params'] = self.params
        to_save['results'] = self.results

        np.save(path + self.name + path_suffix + '.npy', to_save)
        return

    def load_from_disk(self, path = '', path_suffix = ''):
        from_save = np.load(path + self.name + path_suffix + '.npy', allow_pickle = True)[()]

        self.family = make_family(*from_save['family'])
        self.params = from_save['params']
        self.results = from_save['results']
        return

    def __eq__(self, other):
        return isinstance(other, StructTable) and self.family == other.family and self.results == other.results

    def __len__(self):
        return len(self.results)
