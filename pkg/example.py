"""
@author: rydcalc contributors
"""

import numpy as np
import pandas as pd

from rydcalc.rules.variety import variety
from rydcalc.rules.dmult import star_steps
from rydcalc.rules.nonzero import nonzero_predicate, find_nonconvexity_witness
from rydcalc.helper.shapes import render
from rydcalc.oracle.billey import oracle_table

#%% products in LG(2,8) and OG(2,9)

LG = variety('LG', 4)
print(LG.multiply('3,1|off', '3,2|off'))

OG = variety('OGodd', 4)
print(OG.multiply('2,1|off', '3,2|off'))

# the largest value for OG(2,11)
print(variety('OGodd', 5).constant('3,2|off', '3,2|off', '5,4|on'))

#%% the star product in OG(2,12), step by step

D = variety('OGeven', 6, verbose = True)
lam, mu = D.parse('4,1|off|up'), D.parse('4,2|off|down')

info = star_steps(lam, mu)
for key in ['diamond', 'after_eta', 'after_fsh', 'result']:
    print(key, ':', info[key])

print(render(D.family, lam))

#%% full table and value set

T = D.table()
print("Nonzero constants:", len(T), "values:", T.value_set())

df = T.to_frame()
print(df.groupby('coeff').size())

#%% nonvanishing: predicate vs. rule, and a witness of non-convexity

lam, mu, nu = OG.parse('2,1|off'), OG.parse('3,2|off'), OG.parse('4,3|on')
print(nonzero_predicate(OG.family, lam, mu, nu), OG.constant(lam, mu, nu))

W = find_nonconvexity_witness(6)
print(W['nonzero'], np.array(W['vectors']))

#%% compare with localization

oracle = oracle_table('Flag', 4)
rules = variety('Flag', 4).table()
print(pd.Series({'oracle': len(oracle), 'rules': len(rules)}))
