"""
@author: rydcalc contributors

Dumps the structure constant tables of all families for a given n as CSV and reports the value sets.
Call with `python exp_tables.py <save> <n>`.
"""
import sys

if len(sys.argv) > 2:
    save = sys.argv[1] == 'True'
    n = int(sys.argv[2])
else:
    save = False
    n = 4

#%%
import pandas as pd

from rydcalc.rules.variety import variety
from rydcalc.helper.utils import get_threads

FAMILIES = ['Flag', 'LG', 'OGodd', 'OGeven', 'ChainB', 'ChainC', 'G2P1', 'G2P2']

tables = dict()
for fam in FAMILIES:
    V = variety(fam, n, verbose = True)
    tables[fam] = V.table(threads = get_threads())

#%% value sets

res = pd.DataFrame([{'family': fam, 'shapes': len(variety(fam, n).shapes), 'nonzero': len(T),
                     'values': T.value_set()} for fam, T in tables.items()])
print(res)

#%%
if save:
    for fam, T in tables.items():
        T.to_csv('../data/output/table_' + T.name + '.csv')
        T.save_to_disk(path = '../data/output/')
