"""
@author: rydcalc contributors

Formal linear combinations of shapes with exact rational coefficients.
"""
from fractions import Fraction


class Combo:
    """
    A map ``key -> Fraction`` with no stored zeros. Keys are ``Shape`` or ``FlatShape`` objects.
    """
    def __init__(self, family = None, terms = None):
        self.family = family
        self.terms = dict()
        if terms is not None:
            for k, c in dict(terms).items():
                self.add(k, c)

    def add(self, key, coeff = 1):
        c = self.terms.get(key, Fraction(0)) + Fraction(coeff)
        if c == 0:
            self.terms.pop(key, None)
        else:
            self.terms[key] = c
        return self

    def __iadd__(self, other):
        for k, c in other.terms.items():
            self.add(k, c)
        return self

    def __add__(self, other):
        res = self.copy()
        res += other
        return res

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, factor):
        return self.__class__(self.family, {k: Fraction(factor) * c for k, c in self.terms.items()})

    def map_coeffs(self, func):
        """
        New combination with coefficient ``func(key, coeff)`` for every term.
        """
        return self.__class__(self.family, {k: func(k, c) for k, c in self.terms.items()})

    def copy(self):
        return self.__class__(self.family, self.terms)

    def coeff(self, key):
        return self.terms.get(key, Fraction(0))

    def items(self):
        return sorted(self.terms.items(), key = lambda kc: kc[0].text)

    def keys(self):
        return [k for k, _ in self.items()]

    def is_integral(self):
        return all(c.denominator == 1 for c in self.terms.values())

    def to_int_dict(self):
        """
        Coefficients as positive integers; raises ValueError if some coefficient is fractional or negative.
        """
        if not self.is_integral():
            raise ValueError(f"non-integral coefficients in {self}")
        if not all(c > 0 for c in self.terms.values()):
            raise ValueError(f"nonpositive coefficients in {self}")
        return {k: int(c) for k, c in self.items()}

    def to_json(self):
        return [{'shape': k.text, 'coeff': int(c) if c.denominator == 1 else str(c)} for k, c in self.items()]

    def __eq__(self, other):
        return isinstance(other, Combo) and self.terms == other.terms

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.keys())

    def __repr__(self):
        if len(self.terms) == 0:
            return '0'
        return ' + '.join(f"{c} * {k.text}" for k, c in self.items())


class ClassCombo(Combo):
    """
    Linear combination of Schubert classes of one family.
    """
    pass

class FlatCombo(Combo):
    """
    Linear combination of flattened OGeven shapes.
    """
    pass

class ChargedCombo(ClassCombo):
    """
    Linear combination of OGeven shapes (with charges).
    """
    def charge_counts(self):
        up = sum(1 for k in self.terms.keys() if k.charge == 'up')
        down = sum(1 for k in self.terms.keys() if k.charge == 'down')
        return up, down
